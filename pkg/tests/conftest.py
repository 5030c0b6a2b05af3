"""Shared fixtures: material registry, stack factory, cached evaluations."""

import functools

import numpy as np

import casimir_films as cf

REG = cf.builtin_registry()

# the five stacks every cross-cutting check runs over
CONFIGS = {
    "free_Ni": ("vacuum", "Ni", "vacuum"),
    "sandwiched_Ni": ("sapphire", "Ni", "sapphire"),
    "Ni_on_Cu": ("vacuum", "Ni", "Cu"),
    "Ni_on_Al": ("vacuum", "Ni", "Al"),
    "Ni_on_Fe": ("vacuum", "Ni", "Fe"),
}


def make_stack(p1, film, p3, a, T=300.0):
    return cf.LayerStack(REG[p1], REG[film], REG[p3], a, T)


@functools.lru_cache(maxsize=None)
def evaluate(p1, film, p3, a, model, quantity):
    """Cached full Lifshitz evaluation (tests reuse many of these)."""
    fn = cf.free_energy if quantity == "free_energy" else cf.pressure
    return fn(make_stack(p1, film, p3, a), model)


def total(p1, film, p3, a, model, quantity):
    return evaluate(p1, film, p3, a, model, quantity).total


# fixed regression set for the term-level quadrature oracle: every stack
# family, both quantities, low and high Matsubara orders
ORACLE_CASES = [
    ("vacuum", "Ni", "vacuum", 100.0, 1, "free_energy", None),
    ("vacuum", "Ni", "vacuum", 50.0, 5, "pressure", None),
    ("vacuum", "Ni", "vacuum", 100.0, 40, "free_energy", None),
    ("sapphire", "Ni", "sapphire", 100.0, 1, "free_energy", None),
    ("sapphire", "Ni", "sapphire", 100.0, 7, "pressure", None),
    ("vacuum", "Ni", "Cu", 30.0, 1, "free_energy", None),
    ("vacuum", "Ni", "Cu", 30.0, 13, "free_energy", None),
    ("vacuum", "Ni", "Al", 60.0, 3, "pressure", None),
    ("vacuum", "Ni", "Fe", 30.0, 1, "free_energy", None),
    ("vacuum", "Ni", "Fe", 30.0, 25, "pressure", None),
    ("vacuum", "Pt", "vacuum", 50.0, 2, "free_energy", None),
    ("Ni", "sapphire", "Ni", 100.0, 4, "free_energy", None),
]


def brute_force_term(stack, l, quantity, n_points=100_001):
    """One l >= 1 Matsubara term by plain trapezoid in k_perp space.

    Deliberately shares nothing with the production integrand: physical
    wavenumber variable, direct Fresnel quotients, no log1p/expm1 and no
    adaptive panels.  Non-magnetic only (mu = 1 for l >= 1 anyway).
    """
    a = stack.thickness_a
    temp = stack.temperature_T
    xi = cf.matsubara_energy(temp, l)
    eps = [cf.permittivity(m, xi) for m in (stack.plate1, stack.film, stack.plate3)]
    k = np.linspace(0.0, 60.0 / (2.0 * a), n_points)
    k1, k2, k3 = (np.sqrt(k * k + e * (xi / cf.HBARC) ** 2) for e in eps)
    e1, e2, e3 = eps

    def pair(en, kn):
        r_tm = (en * k2 - e2 * kn) / (en * k2 + e2 * kn)
        r_te = (k2 - kn) / (k2 + kn)
        return r_tm, r_te

    r_tm1, r_te1 = pair(e1, k1)
    r_tm3, r_te3 = pair(e3, k3)
    decay = np.exp(-2.0 * a * k2)
    x_tm = r_tm3 * r_tm1 * decay
    x_te = r_te3 * r_te1 * decay
    if quantity == "free_energy":
        integrand = k * (np.log(1.0 - x_tm) + np.log(1.0 - x_te))
        prefactor = cf.K_B * temp / (2.0 * np.pi)
    else:
        integrand = k * k2 * (x_tm / (1.0 - x_tm) + x_te / (1.0 - x_te))
        prefactor = -cf.K_B * temp / np.pi
    return prefactor * np.trapezoid(integrand, k)
