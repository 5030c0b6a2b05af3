"""Zero-frequency Matsubara terms in closed or semi-analytic form.

Both permittivity models are singular at xi = 0 (first-order pole for Drude,
second-order for plasma) so the l = 0 term is never evaluated numerically
from eps(i xi). Instead the xi -> 0 limits of the reflection coefficients
are taken analytically. Under the Drude model every coefficient becomes a
constant and the k_perp integral is a trilogarithm; under the plasma model
the TM/TE coefficients stay functions of v = 2 a k_0^(2) and one quadrature
over v remains. The classification of each medium (free electrons or not,
magnetic or not) is structural, so arbitrary material triples work.

Sign conventions: negative free energy / pressure = attraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .constants import HBARC, K_B
from .materials import MaterialResponse, for_model
from .quadrature import integrate

ZETA3 = 1.2020569031595942854  # Apery's constant, Li3(1)

_COEFF = Union[float, Callable]


def polylog3(x: float) -> float:
    """Trilogarithm Li3(x) = sum_{n>=1} x^n / n^3 for real x in [-1, 1].

    Direct power series, summed in chunks until the next term falls below
    1e-16; the endpoints use the exact zeta identities. Convergence is
    worst near |x| = 1 (~1e5 terms), which is irrelevant here.
    """
    x = float(x)
    if abs(x) > 1.0:
        raise ValueError("polylog3 requires |x| <= 1")
    if x == 1.0:
        return ZETA3
    if x == -1.0:
        return -0.75 * ZETA3
    if x == 0.0:
        return 0.0
    total = 0.0
    k0 = 1
    chunk = 256
    while True:
        k = np.arange(k0, k0 + chunk, dtype=float)
        total += float(np.sum(x**k / k**3))
        k0 += chunk
        if abs(x) ** k0 / k0**3 < 1e-16:
            return total
        if k0 > 10**7:  # unreachable for |x| <= 0.9999
            raise RuntimeError("polylog3 series did not converge")


@dataclass(frozen=True)
class DimensionlessFilm:
    """Film quantities entering the plasma zero term after v = 2 a k^(2).

    omega_tilde = 2 a omega_p / (hbar c), zero for films without free
    electrons; v_min = sqrt(mu) * omega_tilde is the lower integration
    limit (k_perp = 0).
    """
    omega_tilde: float
    mu: float
    v_min: float

    def s(self, v):
        # (2 a k_perp)^2; clamp the roundoff negatives at v = v_min
        return np.maximum(v * v - self.mu * self.omega_tilde**2, 0.0)


@dataclass(frozen=True)
class ZeroFreqCoefficients:
    """xi -> 0 reflection coefficients for one stack and model.

    Fields are floats under the Drude model and for the degenerate plasma
    cases; v-dependent plasma coefficients are callables of v. Products
    r^(2,1) r^(2,3) are what the Lifshitz integrand consumes.
    """
    r_tm_23: _COEFF
    r_tm_21: _COEFF
    r_te_23: _COEFF
    r_te_21: _COEFF
    model: str
    description: str
    film: DimensionlessFilm | None = None  # plasma model only

    @staticmethod
    def _at(c: _COEFF, v):
        return c(v) if callable(c) else c

    def tm_product(self, v=None):
        return self._at(self.r_tm_21, v) * self._at(self.r_tm_23, v)

    def te_product(self, v=None):
        return self._at(self.r_te_21, v) * self._at(self.r_te_23, v)


@dataclass(frozen=True)
class _Medium:
    metal: bool
    wp: float      # eV; 0 for non-metals
    gamma: float   # eV; 0 under the plasma model
    mu: float
    eps0: float    # static permittivity; only meaningful for non-metals


def _classify(mat: MaterialResponse, model: str) -> _Medium:
    m = for_model(mat, model)
    kind = m.permittivity_kind
    mu = m.static_permeability
    if kind == "vacuum":
        return _Medium(False, 0.0, 0.0, mu, 1.0)
    if kind == "oscillator":
        return _Medium(False, 0.0, 0.0, mu,
                       1.0 + sum(m.oscillators.strengths))
    if kind in ("drude", "tabulated_with_drude_tail"):
        return _Medium(True, m.drude.plasma_frequency, m.drude.relaxation,
                       mu, math.inf)
    return _Medium(True, m.plasma.plasma_frequency, 0.0, mu, math.inf)


def _drude_tm(plate: _Medium, film: _Medium) -> float:
    # eps ~ wp^2/(gamma xi): metals diverge, ratio of residues survives
    if film.metal and plate.metal:
        x = plate.wp**2 * film.gamma
        y = film.wp**2 * plate.gamma
        return (x - y) / (x + y)
    if film.metal:
        return -1.0
    if plate.metal:
        return 1.0
    return (plate.eps0 - film.eps0) / (plate.eps0 + film.eps0)


def _mu_ratio(plate: _Medium, film: _Medium) -> float:
    return (plate.mu - film.mu) / (plate.mu + film.mu)


def _plasma_tm(plate: _Medium, film: _Medium, g: DimensionlessFilm,
               wt_plate: float) -> _COEFF:
    # eps xi^2 -> wp^2 for metals, -> 0 for dielectrics
    if film.metal and plate.metal:
        a2 = wt_plate**2
        b2 = g.omega_tilde**2
        rmu = math.sqrt(plate.mu) * wt_plate

        def r_tm(v):
            w = np.hypot(np.sqrt(g.s(v)), rmu)
            return (a2 * v - b2 * w) / (a2 * v + b2 * w)
        return r_tm
    if film.metal:
        return -1.0
    if plate.metal:
        return 1.0
    return (plate.eps0 - film.eps0) / (plate.eps0 + film.eps0)


def _plasma_te(plate: _Medium, film: _Medium, g: DimensionlessFilm,
               wt_plate: float) -> _COEFF:
    rmu = math.sqrt(plate.mu) * wt_plate if plate.metal else 0.0

    def r_te(v):
        w = np.hypot(np.sqrt(g.s(v)), rmu)
        num = plate.mu * np.asarray(v, dtype=float) - film.mu * w
        den = plate.mu * np.asarray(v, dtype=float) + film.mu * w
        # den = 0 only at the degenerate v = 0 grazing point
        out = np.where(den == 0.0, 0.0, num / np.where(den == 0.0, 1.0, den))
        return out if out.ndim else float(out)
    return r_te


def dimensionless_film(film: MaterialResponse, a: float,
                       model: str = "plasma") -> DimensionlessFilm:
    med = _classify(film, model)
    wt = 2.0 * a * med.wp / HBARC
    return DimensionlessFilm(omega_tilde=wt, mu=med.mu,
                             v_min=math.sqrt(med.mu) * wt)


def zero_coeffs(stack, model: str) -> ZeroFreqCoefficients:
    """xi = 0 reflection coefficient set for the stack under either model.

    Drude: all four coefficients are constants; in particular the TM
    metal-metal constant is (wp_n^2 g_2 - wp_2^2 g_n)/(wp_n^2 g_2 +
    wp_2^2 g_n) and TE is (mu_n - mu_2)/(mu_n + mu_2). Plasma: TM/TE are
    functions of v for metal plates, constants (+-1, dielectric contrast)
    otherwise.
    """
    film = _classify(stack.film, model)
    p1 = _classify(stack.plate1, model)
    p3 = _classify(stack.plate3, model)
    desc = (f"{stack.plate1.name}/{stack.film.name}/{stack.plate3.name}"
            f" a={stack.thickness_a}nm")
    if model == "drude":
        return ZeroFreqCoefficients(
            r_tm_23=_drude_tm(p3, film), r_tm_21=_drude_tm(p1, film),
            r_te_23=_mu_ratio(p3, film), r_te_21=_mu_ratio(p1, film),
            model=model, description=desc)
    if model != "plasma":
        raise ValueError(f"unknown model '{model}'")
    g = dimensionless_film(stack.film, stack.thickness_a, model)
    wt1 = 2.0 * stack.thickness_a * p1.wp / HBARC
    wt3 = 2.0 * stack.thickness_a * p3.wp / HBARC
    return ZeroFreqCoefficients(
        r_tm_23=_plasma_tm(p3, film, g, wt3),
        r_tm_21=_plasma_tm(p1, film, g, wt1),
        r_te_23=_plasma_te(p3, film, g, wt3),
        r_te_21=_plasma_te(p1, film, g, wt1),
        model=model, description=desc, film=g)


def _drude_bracket(stack) -> float:
    c = zero_coeffs(stack, "drude")
    return polylog3(c.tm_product()) + polylog3(c.te_product())


def drude_zero_free_energy(stack) -> float:
    """l = 0 free energy per area, Drude model: -(kT/16 pi a^2)[Li3 + Li3]."""
    a, T = stack.thickness_a, stack.temperature_T
    return -K_B * T / (16.0 * math.pi * a * a) * _drude_bracket(stack)


def drude_zero_pressure(stack) -> float:
    """l = 0 pressure, Drude model; exactly 2 F / a by the a^-2 power law."""
    a, T = stack.thickness_a, stack.temperature_T
    return -K_B * T / (8.0 * math.pi * a**3) * _drude_bracket(stack)


_PLASMA_SPAN = 80.0  # e^-80 ~ 1e-35: past any tolerance in use


def _plasma_quad(stack, power: int, rel_tol: float, abs_floor: float):
    c = zero_coeffs(stack, "plasma")

    if power == 1:
        def f(v):
            e = np.exp(-v)
            return v * (np.log1p(-c.tm_product(v) * e)
                        + np.log1p(-c.te_product(v) * e))
    else:
        def f(v):
            e = np.exp(-v)
            x_tm = c.tm_product(v) * e
            x_te = c.te_product(v) * e
            return v * v * (x_tm / (1.0 - x_tm) + x_te / (1.0 - x_te))

    val, _ = integrate(f, c.film.v_min, _PLASMA_SPAN, rel_tol, abs_floor)
    return val


def plasma_zero_free_energy(stack, rel_tol=1e-9, abs_floor=1e-30) -> float:
    """l = 0 free energy per area, plasma model.

    (kT/16 pi a^2) int_{v_min}^inf v dv sum_pol ln(1 - rho(v) e^-v); the
    integrand decays like e^-v_min so metallic films lose this term
    exponentially with thickness (nothing survives the ideal-metal limit).
    """
    a, T = stack.thickness_a, stack.temperature_T
    val = _plasma_quad(stack, 1, rel_tol, abs_floor)
    return K_B * T / (16.0 * math.pi * a * a) * val


def plasma_zero_pressure(stack, rel_tol=1e-9, abs_floor=1e-30) -> float:
    """l = 0 pressure, plasma model: -(kT/16 pi a^3) int v^2 {..} dv."""
    a, T = stack.thickness_a, stack.temperature_T
    val = _plasma_quad(stack, 2, rel_tol, abs_floor)
    return -K_B * T / (16.0 * math.pi * a**3) * val


def zero_term(stack, model: str, quantity: str) -> float:
    """The half-weighted l = 0 Matsubara term for either model/quantity."""
    if quantity not in ("free_energy", "pressure"):
        raise ValueError(f"unknown quantity '{quantity}'")
    if model == "drude":
        return (drude_zero_free_energy(stack) if quantity == "free_energy"
                else drude_zero_pressure(stack))
    if model == "plasma":
        return (plasma_zero_free_energy(stack) if quantity == "free_energy"
                else plasma_zero_pressure(stack))
    raise ValueError(f"unknown model '{model}'")


def ideal_metal_limit(stack, model: str) -> float:
    """Free energy of the stack when the film's wp -> infinity.

    Drude: every TM constant saturates at -1 so the TM trilogarithm becomes
    zeta(3) while TE keeps the actual permeability contrast; the classical
    value -(kT/16 pi a^2)[zeta(3) + Li3(rho_TE)] survives. Plasma: the
    remaining integral decays as e^-v_min with v_min -> infinity, so the
    limit is exactly zero: fluctuating fields cannot penetrate the film.
    """
    if model == "plasma":
        return 0.0
    if model != "drude":
        raise ValueError(f"unknown model '{model}'")
    a, T = stack.thickness_a, stack.temperature_T
    mu2 = stack.film.static_permeability
    rho_te = (_mu_ratio_plain(stack.plate1.static_permeability, mu2)
              * _mu_ratio_plain(stack.plate3.static_permeability, mu2))
    return (-K_B * T / (16.0 * math.pi * a * a)
            * (ZETA3 + polylog3(rho_te)))


def _mu_ratio_plain(mu_n: float, mu_2: float) -> float:
    return (mu_n - mu_2) / (mu_n + mu_2)
