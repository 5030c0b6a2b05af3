"""Finite-temperature Lifshitz free energy and pressure of a film.

The film (medium 2, thickness a) sits between two half-spaces (media 1 and
3). Free energy per unit area:

    F = (kT/2pi) sum'_l int_0^inf k dk sum_pol ln[1 - r^(2,3) r^(2,1) e^(-2 a k^(2)_l)]

with the prime = half weight on l = 0, handled analytically in
analytic_limits (both permittivity models are singular at xi = 0). The
l >= 1 integrals run in the dimensionless variable v = 2 a k^(2)_l with
lower limit v_min = 2 a xi_l sqrt(eps^(2)_l)/(hbar c); terms for a block of
l values are integrated together so the adaptive quadrature stays
vectorized. Matsubara summation truncates on a geometric tail estimate.

Units: eV, nm, K throughout. Negative values mean attraction.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import analytic_limits
from .constants import (EV_PER_NM2_TO_J_PER_M2, EV_PER_NM3_TO_PA, HBARC, K_B,
                        matsubara_energy)
from .materials import MaterialResponse, for_model, permittivity
from .quadrature import QuadratureError, integrate_rows

QUANTITIES = ("free_energy", "pressure")


class ConvergenceError(RuntimeError):
    """Quadrature refinement or Matsubara truncation failed to converge."""


@dataclass(frozen=True)
class LayerStack:
    """Plate / film / plate stack plus geometry and temperature."""
    plate1: MaterialResponse
    film: MaterialResponse
    plate3: MaterialResponse
    thickness_a: float       # nm
    temperature_T: float = 300.0

    def __post_init__(self):
        if self.thickness_a <= 0:
            raise ValueError("thickness must be positive")
        if self.thickness_a < 1.0:
            raise ValueError("film thinner than 1 nm is outside the "
                             "continuum description")
        if self.temperature_T <= 0:
            raise ValueError("temperature must be positive")


@dataclass(frozen=True)
class MatsubaraSettings:
    term_tail_rel_tol: float = 1e-8   # truncation: tail bound vs total
    quad_rel_tol: float = 1e-9        # per-term quadrature target
    quad_abs_floor: float = 1e-30     # relative to the natural kT/a^n scale
    max_terms: int = 5000

    def __post_init__(self):
        for name in ("term_tail_rel_tol", "quad_rel_tol", "quad_abs_floor"):
            val = getattr(self, name)
            if not 0.0 < val < 1.0:
                raise ValueError(f"{name} must lie in (0, 1)")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


@dataclass(frozen=True)
class SpectralResult:
    """One evaluated Matsubara sum, with the l = 0 term kept separate."""
    model: str
    quantity: str
    zero_term: float
    per_l_terms: tuple
    total: float
    l_used: int
    thickness_a: float
    temperature_T: float

    @property
    def si_value(self) -> float:
        """J/m^2 for free energy, Pa for pressure."""
        factor = (EV_PER_NM2_TO_J_PER_M2 if self.quantity == "free_energy"
                  else EV_PER_NM3_TO_PA)
        return self.total * factor

    @property
    def scaled_micro_ev(self) -> float:
        """a^2 F (or a^3 P) in micro-eV, the figure-friendly constant."""
        power = 2 if self.quantity == "free_energy" else 3
        return self.total * self.thickness_a**power * 1e6

    @property
    def zero_term_fraction(self) -> float:
        return self.zero_term / self.total if self.total != 0.0 else math.nan


def resolve_stack(stack: LayerStack, model: str) -> LayerStack:
    """Resolve all three materials for the requested model."""
    return dataclasses.replace(
        stack,
        plate1=for_model(stack.plate1, model),
        film=for_model(stack.film, model),
        plate3=for_model(stack.plate3, model))


def radial_wavenumber(k_perp, eps, mu, xi):
    """k^(n) = sqrt(k_perp^2 + mu eps xi^2/(hbar c)^2), all in nm/eV units."""
    return np.hypot(k_perp, np.sqrt(np.asarray(eps) * mu) * xi / HBARC)


def reflection(pol: str, film_side, other_side):
    """Reflection coefficient r^(2,n) at imaginary frequency.

    Each side is an (eps, mu, kz) triple; film_side is medium 2. The
    degenerate case with zero denominator (both kz = 0, matched media)
    returns 0 by convention.
    """
    e2, m2, k2 = film_side
    en, mn, kn = other_side
    if pol == "TM":
        num = en * k2 - e2 * kn
        den = en * k2 + e2 * kn
    elif pol == "TE":
        num = mn * k2 - m2 * kn
        den = mn * k2 + m2 * kn
    else:
        raise ValueError(f"unknown polarization '{pol}'")
    num = np.asarray(num, dtype=float)
    den = np.asarray(den, dtype=float)
    out = np.where(den == 0.0, 0.0, num / np.where(den == 0.0, 1.0, den))
    return float(out) if out.ndim == 0 else out


def _block_terms(stack: LayerStack, ls, quantity: str,
                 settings: MatsubaraSettings) -> np.ndarray:
    """Matsubara terms for a block of l >= 1 indices, one quadrature call.

    In v = 2 a k^(2) the plate wavenumbers are w_n = sqrt(v^2 + t_n) with
    t_n = (2 a xi_l / hbar c)^2 (eps_n - eps_2); t_n < 0 for plates
    optically thinner than the film, but v >= v_min keeps the radicand
    nonnegative. mu = 1 at every nonzero Matsubara frequency.
    """
    ls = np.asarray(ls, dtype=int)
    a, T = stack.thickness_a, stack.temperature_T
    xi = matsubara_energy(T, ls)
    e1 = np.atleast_1d(np.asarray(permittivity(stack.plate1, xi), dtype=float))
    e2 = np.atleast_1d(np.asarray(permittivity(stack.film, xi), dtype=float))
    e3 = np.atleast_1d(np.asarray(permittivity(stack.plate3, xi), dtype=float))
    q = 2.0 * a * xi / HBARC
    v_min = q * np.sqrt(e2)
    t1 = q * q * (e1 - e2)
    t3 = q * q * (e3 - e2)

    def integrand(rows, v):
        w1 = np.sqrt(np.maximum(v * v + t1[rows], 0.0))
        w3 = np.sqrt(np.maximum(v * v + t3[rows], 0.0))
        e2r = e2[rows]
        r_tm1 = (e1[rows] * v - e2r * w1) / (e1[rows] * v + e2r * w1)
        r_tm3 = (e3[rows] * v - e2r * w3) / (e3[rows] * v + e2r * w3)
        r_te1 = (v - w1) / (v + w1)
        r_te3 = (v - w3) / (v + w3)
        rho_tm = r_tm1 * r_tm3
        rho_te = r_te1 * r_te3
        assert np.all(np.abs(rho_tm) <= 1.0 + 1e-12)
        assert np.all(np.abs(rho_te) <= 1.0 + 1e-12)
        ev = np.exp(-v)
        if quantity == "free_energy":
            # log1p keeps the tiny tail terms free of cancellation
            return v * (np.log1p(-rho_tm * ev) + np.log1p(-rho_te * ev))
        x_tm = rho_tm * ev
        x_te = rho_te * ev
        return v * v * (x_tm / (1.0 - x_tm) + x_te / (1.0 - x_te))

    vals, _ = integrate_rows(integrand, v_min, 60.0,
                             settings.quad_rel_tol, settings.quad_abs_floor)
    if quantity == "free_energy":
        return K_B * T / (8.0 * math.pi * a * a) * vals
    return -K_B * T / (8.0 * math.pi * a**3) * vals


def matsubara_term(stack: LayerStack, l: int, quantity: str,
                   settings: MatsubaraSettings | None = None) -> float:
    """Single l >= 1 Matsubara term (the l = 0 term lives in analytic_limits)."""
    if l < 1:
        raise ValueError("matsubara_term handles l >= 1 only")
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity '{quantity}'")
    settings = settings or MatsubaraSettings()
    try:
        return float(_block_terms(stack, [l], quantity, settings)[0])
    except QuadratureError as exc:
        raise ConvergenceError(f"quadrature failed at l={l}: {exc}") from exc


def _natural_scale(stack: LayerStack, quantity: str) -> float:
    a, T = stack.thickness_a, stack.temperature_T
    power = 2 if quantity == "free_energy" else 3
    return K_B * T / (16.0 * math.pi * a**power)


def _spectral_sum(stack: LayerStack, model: str, quantity: str,
                  settings: MatsubaraSettings) -> SpectralResult:
    resolved = resolve_stack(stack, model)
    zero = analytic_limits.zero_term(resolved, model, quantity)

    knee_xi = 3.0 * HBARC / (2.0 * stack.thickness_a)
    floor = settings.quad_abs_floor * _natural_scale(stack, quantity)
    terms: list[float] = []
    block = 32
    l_next = 1
    while l_next <= settings.max_terms:
        l_stop = min(l_next + block - 1, settings.max_terms)
        ls = np.arange(l_next, l_stop + 1)
        try:
            block_vals = _block_terms(resolved, ls, quantity, settings)
        except QuadratureError as exc:
            raise ConvergenceError(
                f"quadrature failed in l block {l_next}..{l_stop}: {exc}"
            ) from exc
        for offset, t in enumerate(block_vals):
            terms.append(float(t))
            l = l_next + offset
            if len(terms) < 3:
                continue
            last3 = terms[-3:]
            if last3 == [0.0, 0.0, 0.0]:
                return _finish(stack, model, quantity, zero, terms, l)
            if matsubara_energy(stack.temperature_T, l) <= knee_xi:
                continue
            ratios = [abs(terms[-j]) / abs(terms[-j - 1])
                      if terms[-j - 1] != 0.0 else math.inf
                      for j in (1, 2)]
            ratios.append(abs(terms[-3]) / abs(terms[-4])
                          if len(terms) >= 4 and terms[-4] != 0.0 else math.inf)
            q = max(ratios)
            if q >= 1.0:
                continue
            tail = abs(terms[-1]) * q / (1.0 - q)
            partial = zero + math.fsum(terms)
            scale = max(abs(partial), abs(zero),
                        max(abs(t) for t in terms), floor)
            if tail <= settings.term_tail_rel_tol * scale:
                return _finish(stack, model, quantity, zero, terms, l)
        l_next = l_stop + 1
        block = min(block * 2, 256)

    tail_ratio = (abs(terms[-1]) / max(abs(zero + math.fsum(terms)), floor)
                  if terms else math.inf)
    raise ConvergenceError(
        f"Matsubara sum not converged within max_terms={settings.max_terms}"
        f" (last-term ratio {tail_ratio:.3e})")


def _finish(stack, model, quantity, zero, terms, l_used) -> SpectralResult:
    total = zero + math.fsum(terms)
    return SpectralResult(model=model, quantity=quantity, zero_term=zero,
                          per_l_terms=tuple(terms), total=total,
                          l_used=l_used, thickness_a=stack.thickness_a,
                          temperature_T=stack.temperature_T)


def free_energy(stack: LayerStack, model: str,
                settings: MatsubaraSettings | None = None) -> SpectralResult:
    """Full Matsubara-summed free energy per unit area (eV/nm^2)."""
    return _spectral_sum(stack, model, "free_energy",
                         settings or MatsubaraSettings())


def pressure(stack: LayerStack, model: str,
             settings: MatsubaraSettings | None = None) -> SpectralResult:
    """Full Matsubara-summed pressure (eV/nm^3); negative = attraction."""
    return _spectral_sum(stack, model, "pressure",
                         settings or MatsubaraSettings())
