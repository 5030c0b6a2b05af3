"""Thickness sweeps, model-ratio reports and sign-change localization.

Everything here drives lifshitz_core over a family of film thicknesses:
scans for the figure data, bisection for the thicknesses where a repulsive
configuration crosses zero, and the diagnostics comparing the full sum
against its classical (l = 0) limit.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from . import analytic_limits
from .lifshitz_core import (LayerStack, MatsubaraSettings, free_energy,
                            pressure, resolve_stack)

DEFAULT_SCAN_MIN_NM = 25.0
DEFAULT_SCAN_MAX_NM = 250.0
DEFAULT_SCAN_POINTS = 60


class NoCrossingError(RuntimeError):
    """The requested quantity has the same sign at both bracket endpoints."""


@dataclass(frozen=True)
class ScanRecord:
    """One thickness row; unrequested quantities hold NaN."""
    thickness_a: float
    F_drude: float = math.nan
    F_plasma: float = math.nan
    P_drude: float = math.nan
    P_plasma: float = math.nan
    F_classical: float = math.nan
    P_classical: float = math.nan
    zero_term_fraction_drude: float = math.nan


@dataclass(frozen=True)
class CrossingReport:
    quantity: str
    model: str
    bracket: tuple
    root: float          # nm
    residual: float      # quantity value at root
    iterations: int


def default_scan_grid() -> np.ndarray:
    """60 log-spaced thicknesses over 25-250 nm, the figures' visible range."""
    return np.geomspace(DEFAULT_SCAN_MIN_NM, DEFAULT_SCAN_MAX_NM,
                        DEFAULT_SCAN_POINTS)


def _at_thickness(stack: LayerStack, a: float) -> LayerStack:
    return dataclasses.replace(stack, thickness_a=float(a))


def _evaluate(stack, model, quantity, settings):
    fn = free_energy if quantity == "free_energy" else pressure
    return fn(stack, model, settings)


def thickness_scan(stack_template: LayerStack, a_values,
                   models=("drude", "plasma"),
                   quantities=("free_energy", "pressure"),
                   settings: MatsubaraSettings | None = None):
    """Evaluate the requested model/quantity grid at every thickness.

    a_values must be ascending and >= 1 nm. The Drude l = 0 closed forms
    ride along in every record (NaN when the materials cannot resolve a
    Drude model); they are the classical-limit reference curves.
    """
    a_values = np.asarray(a_values, dtype=float)
    if a_values.size == 0:
        raise ValueError("empty thickness scan")
    if np.any(a_values < 1.0):
        raise ValueError("scan thicknesses must be >= 1 nm")
    if a_values.size > 1 and not np.all(np.diff(a_values) > 0):
        raise ValueError("scan thicknesses must be strictly increasing")
    settings = settings or MatsubaraSettings()

    records = []
    for a in a_values:
        stack = _at_thickness(stack_template, a)
        fields = {"thickness_a": float(a)}
        try:
            drude_stack = resolve_stack(stack, "drude")
            fields["F_classical"] = analytic_limits.drude_zero_free_energy(
                drude_stack)
            fields["P_classical"] = analytic_limits.drude_zero_pressure(
                drude_stack)
        except ValueError:
            pass  # no Drude resolution for this stack; leave NaN
        for model in models:
            for quantity in quantities:
                res = _evaluate(stack, model, quantity, settings)
                key = ("F" if quantity == "free_energy" else "P") + "_" + model
                fields[key] = res.total
                if model == "drude" and quantity == "free_energy":
                    fields["zero_term_fraction_drude"] = res.zero_term_fraction
        records.append(ScanRecord(**fields))
    return records


def find_sign_change(stack_template: LayerStack, model: str, quantity: str,
                     bracket, tol: float = 0.01,
                     settings: MatsubaraSettings | None = None
                     ) -> CrossingReport:
    """Bisect the thickness where the quantity changes sign.

    Plain bisection: the crossings of interest sit next to steep
    exponentials where secant steps overshoot. tol is the final bracket
    width in nm (default 0.01).
    """
    settings = settings or MatsubaraSettings()
    a_lo, a_hi = float(bracket[0]), float(bracket[1])
    if not a_lo < a_hi:
        raise ValueError("bracket must satisfy a_lo < a_hi")

    def f(a):
        return _evaluate(_at_thickness(stack_template, a), model, quantity,
                         settings).total

    f_lo, f_hi = f(a_lo), f(a_hi)
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise NoCrossingError(
            f"{quantity} ({model}) has the same sign at both bracket ends: "
            f"{f_lo:.4e} at {a_lo} nm, {f_hi:.4e} at {a_hi} nm")
    iterations = 0
    while a_hi - a_lo > tol:
        mid = 0.5 * (a_lo + a_hi)
        f_mid = f(mid)
        iterations += 1
        if f_mid == 0.0:
            a_lo = a_hi = mid
            break
        if math.copysign(1.0, f_mid) == math.copysign(1.0, f_lo):
            a_lo, f_lo = mid, f_mid
        else:
            a_hi, f_hi = mid, f_mid
    root = 0.5 * (a_lo + a_hi)
    return CrossingReport(quantity=quantity, model=model,
                          bracket=(float(bracket[0]), float(bracket[1])),
                          root=root, residual=f(root), iterations=iterations)


def classical_limit_deviation(stack_template: LayerStack, model: str,
                              a: float,
                              settings: MatsubaraSettings | None = None
                              ) -> float:
    """Distance from the classical (Drude l = 0) plateau at thickness a.

    Drude: |F_full - F_l0| / |F_l0|. Plasma: |F_full| / |F_drude_l0|, an
    indicator that the plasma free energy has dropped below the classical
    scale (it vanishes exponentially instead of reaching a plateau).
    """
    settings = settings or MatsubaraSettings()
    stack = _at_thickness(stack_template, a)
    f_l0 = analytic_limits.drude_zero_free_energy(
        resolve_stack(stack, "drude"))
    full = free_energy(stack, model, settings).total
    if model == "drude":
        return abs(full - f_l0) / abs(f_l0)
    return abs(full) / abs(f_l0)


@dataclass(frozen=True)
class ModelRatio:
    """|drude| / |plasma| with the signs kept separately."""
    quantity: str
    thickness_a: float
    drude_value: float
    plasma_value: float
    ratio: float
    infinite: bool

    def __float__(self):
        return self.ratio


def model_ratio(stack_template: LayerStack, a: float, quantity: str,
                settings: MatsubaraSettings | None = None) -> ModelRatio:
    """Drude-to-plasma magnitude ratio at one thickness."""
    settings = settings or MatsubaraSettings()
    stack = _at_thickness(stack_template, a)
    vd = _evaluate(stack, "drude", quantity, settings).total
    vp = _evaluate(stack, "plasma", quantity, settings).total
    infinite = vp == 0.0
    ratio = math.inf if infinite else abs(vd) / abs(vp)
    return ModelRatio(quantity=quantity, thickness_a=float(a),
                      drude_value=vd, plasma_value=vp, ratio=ratio,
                      infinite=infinite)


def nonzero_terms_contribution(stack_template: LayerStack, model: str,
                               a: float,
                               settings: MatsubaraSettings | None = None
                               ) -> float:
    """a^2 (F_total - F_l0) in micro-eV, the l >= 1 share of the free energy."""
    settings = settings or MatsubaraSettings()
    res = free_energy(_at_thickness(stack_template, a), model, settings)
    return (res.total - res.zero_term) * float(a) ** 2 * 1e6
