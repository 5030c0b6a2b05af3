"""Dielectric permittivity and magnetic permeability of the layer materials.

Every material evaluates its permittivity on the imaginary frequency axis,
eps(i xi), either from an analytic model (Drude, plasma, oscillator) or from
an ingested optical-data table transformed with the Kramers-Kronig relation.
Static permeability mu(0) applies at the zero Matsubara frequency only;
mu = 1 at every nonzero one.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import math
import os
from dataclasses import dataclass

import numpy as np

from .constants import HBAR_EVS, K_B, matsubara_energy

KINDS = ("drude", "plasma", "oscillator",
         "tabulated_with_drude_tail", "tabulated_with_plasma_tail", "vacuum")

MODELS = ("drude", "plasma")


@dataclass(frozen=True)
class DrudeParams:
    """Free-electron parameters: eps(i xi) = 1 + wp^2 / (xi (xi + gamma))."""
    plasma_frequency: float  # eV
    relaxation: float        # eV

    def __post_init__(self):
        if self.plasma_frequency <= 0:
            raise ValueError("plasma_frequency must be > 0")
        if self.relaxation <= 0:
            raise ValueError("relaxation must be > 0")


@dataclass(frozen=True)
class PlasmaParams:
    """Dissipationless free electrons: eps(i xi) = 1 + wp^2 / xi^2."""
    plasma_frequency: float  # eV

    def __post_init__(self):
        if self.plasma_frequency <= 0:
            raise ValueError("plasma_frequency must be > 0")


@dataclass(frozen=True)
class OscillatorParams:
    """Core-electron oscillators: eps(i xi) = 1 + sum C_j w_j^2/(w_j^2 + xi^2).

    Frequencies are angular frequencies in rad/s, as optical handbooks quote
    them; evaluation converts the eV-valued xi internally.
    """
    strengths: tuple[float, ...]
    frequencies: tuple[float, ...]  # rad/s

    def __post_init__(self):
        object.__setattr__(self, "strengths", tuple(self.strengths))
        object.__setattr__(self, "frequencies", tuple(self.frequencies))
        if len(self.strengths) != len(self.frequencies):
            raise ValueError("strengths and frequencies must have equal length")
        if any(c < 0 for c in self.strengths):
            raise ValueError("oscillator strengths must be >= 0")
        if any(w <= 0 for w in self.frequencies):
            raise ValueError("oscillator frequencies must be > 0")


@dataclass(frozen=True)
class OpticalDataTable:
    """Measured complex refraction index vs photon energy; eps'' = 2 n k."""
    photon_energy: np.ndarray  # eV, strictly increasing
    n: np.ndarray
    k: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.photon_energy, dtype=float)
        n = np.asarray(self.n, dtype=float)
        k = np.asarray(self.k, dtype=float)
        object.__setattr__(self, "photon_energy", e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        if e.size == 0:
            raise ValueError("optical table is empty")
        if e.size != n.size or e.size != k.size:
            raise ValueError("optical table columns differ in length")
        if not np.all(np.isfinite(e)) or not np.all(np.isfinite(n)) \
                or not np.all(np.isfinite(k)):
            raise ValueError("optical table contains non-finite entries")
        if e.size > 1 and not np.all(np.diff(e) > 0):
            raise ValueError("photon energies must be strictly increasing")
        if np.any(n < 0) or np.any(k < 0):
            raise ValueError("n and k must be >= 0")

    @property
    def eps_imag(self) -> np.ndarray:
        return 2.0 * self.n * self.k

    @classmethod
    def from_csv(cls, path) -> "OpticalDataTable":
        """Read a table from CSV with header energy_ev,n,k (ascending energy)."""
        energies, ns, ks = [], [], []
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None:
                raise ValueError(f"{path}: empty file")
            if [c.strip().lower() for c in header] != ["energy_ev", "n", "k"]:
                raise ValueError(
                    f"{path}: line 1: expected header 'energy_ev,n,k'")
            for lineno, row in enumerate(reader, start=2):
                if not row or all(not c.strip() for c in row):
                    continue
                if len(row) != 3:
                    raise ValueError(f"{path}: line {lineno}: expected 3 columns")
                try:
                    vals = [float(c) for c in row]
                except ValueError:
                    raise ValueError(
                        f"{path}: line {lineno}: non-numeric value") from None
                energies.append(vals[0])
                ns.append(vals[1])
                ks.append(vals[2])
        if not energies:
            raise ValueError(f"{path}: no data rows")
        try:
            return cls(np.array(energies), np.array(ns), np.array(ks))
        except ValueError as exc:
            raise ValueError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class MaterialResponse:
    """A material's full response: permittivity model plus static permeability."""
    name: str
    permittivity_kind: str
    drude: DrudeParams | None = None
    plasma: PlasmaParams | None = None
    oscillators: OscillatorParams | None = None
    table: OpticalDataTable | None = None
    static_permeability: float = 1.0
    matching_energy_ev: float | None = None  # tabulated kinds; None = table min
    note: str = ""

    def __post_init__(self):
        if self.permittivity_kind not in KINDS:
            raise ValueError(f"unknown permittivity_kind "
                             f"'{self.permittivity_kind}'")
        if self.static_permeability < 1.0:
            raise ValueError("static_permeability must be >= 1")
        kind = self.permittivity_kind
        if kind == "drude" and self.drude is None:
            raise ValueError(f"material '{self.name}': drude kind needs DrudeParams")
        if kind == "plasma" and self.plasma is None:
            raise ValueError(f"material '{self.name}': plasma kind needs PlasmaParams")
        if kind == "oscillator" and self.oscillators is None:
            raise ValueError(f"material '{self.name}': oscillator kind needs "
                             "OscillatorParams")
        if kind.startswith("tabulated"):
            if self.table is None:
                raise ValueError(f"material '{self.name}': tabulated kind needs "
                                 "an OpticalDataTable")
            if kind.endswith("drude_tail") and self.drude is None:
                raise ValueError(f"material '{self.name}': drude tail needs "
                                 "DrudeParams")
            if kind.endswith("plasma_tail") and self.plasma is None:
                raise ValueError(f"material '{self.name}': plasma tail needs "
                                 "PlasmaParams")

    # -- constructors ------------------------------------------------------
    @classmethod
    def vacuum(cls) -> "MaterialResponse":
        return cls(name="vacuum", permittivity_kind="vacuum")

    @classmethod
    def drude_metal(cls, name, plasma_frequency, relaxation, mu=1.0, note=""):
        return cls(name=name, permittivity_kind="drude",
                   drude=DrudeParams(plasma_frequency, relaxation),
                   static_permeability=mu, note=note)

    @classmethod
    def plasma_metal(cls, name, plasma_frequency, mu=1.0, note=""):
        return cls(name=name, permittivity_kind="plasma",
                   plasma=PlasmaParams(plasma_frequency),
                   static_permeability=mu, note=note)

    @classmethod
    def oscillator(cls, name, strengths, frequencies_rad_s, mu=1.0, note=""):
        return cls(name=name, permittivity_kind="oscillator",
                   oscillators=OscillatorParams(tuple(strengths),
                                                tuple(frequencies_rad_s)),
                   static_permeability=mu, note=note)

    @classmethod
    def tabulated(cls, name, table, tail, mu=1.0, matching_energy_ev=None,
                  note=""):
        """Tabulated material with a Drude or plasma low-frequency tail."""
        if isinstance(tail, DrudeParams):
            kind, drude, plasma = "tabulated_with_drude_tail", tail, None
        elif isinstance(tail, PlasmaParams):
            kind, drude, plasma = "tabulated_with_plasma_tail", None, tail
        else:
            raise ValueError("tail must be DrudeParams or PlasmaParams")
        return cls(name=name, permittivity_kind=kind, drude=drude,
                   plasma=plasma, table=table, static_permeability=mu,
                   matching_energy_ev=matching_energy_ev, note=note)


def for_model(material: MaterialResponse, model: str) -> MaterialResponse:
    """Resolve a material for the requested low-frequency model.

    Drude-kind materials expose a plasma view by dropping the relaxation;
    a plasma-kind material cannot serve the drude model. Tabulated kinds swap
    their extrapolation tail. Vacuum and oscillator media are model-free.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model '{model}'")
    kind = material.permittivity_kind
    if kind in ("vacuum", "oscillator"):
        return material
    if kind == "drude":
        if model == "drude":
            return material
        return dataclasses.replace(
            material, permittivity_kind="plasma", drude=None,
            plasma=PlasmaParams(material.drude.plasma_frequency))
    if kind == "plasma":
        if model == "plasma":
            return material
        raise ValueError(f"material '{material.name}' lacks a relaxation "
                         "parameter required by the drude model")
    # tabulated kinds
    if model == "drude":
        if material.drude is None:
            raise ValueError(f"material '{material.name}' lacks a relaxation "
                             "parameter required by the drude model")
        return dataclasses.replace(material,
                                   permittivity_kind="tabulated_with_drude_tail")
    plasma = material.plasma
    if plasma is None:
        plasma = PlasmaParams(material.drude.plasma_frequency)
    return dataclasses.replace(material, plasma=plasma,
                               permittivity_kind="tabulated_with_plasma_tail")


def permittivity(material: MaterialResponse, xi):
    """Dielectric permittivity eps(i xi) at imaginary frequency.

    Parameters
    ----------
    material : MaterialResponse
    xi : float or ndarray
        Imaginary-axis energy in eV, xi >= 0. Plasma-kind materials reject
        xi = 0 (second-order pole, handled analytically elsewhere); the
        drude kind returns +inf there, its true limit.

    Returns
    -------
    float or ndarray, same shape as xi.
    """
    x = np.asarray(xi, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    if np.any(x < 0):
        raise ValueError("xi must be >= 0")
    kind = material.permittivity_kind

    if kind == "vacuum":
        out = np.ones_like(x)
    elif kind == "drude":
        p = material.drude
        with np.errstate(divide="ignore"):
            out = 1.0 + p.plasma_frequency**2 / (x * (x + p.relaxation))
    elif kind == "plasma":
        if np.any(x == 0):
            raise ValueError(f"material '{material.name}': zero-frequency pole")
        out = 1.0 + material.plasma.plasma_frequency**2 / x**2
    elif kind == "oscillator":
        osc = material.oscillators
        xr = x / HBAR_EVS  # rad/s
        out = np.ones_like(x)
        for c, w in zip(osc.strengths, osc.frequencies):
            out = out + c * w**2 / (w**2 + xr**2)
    else:  # tabulated kinds
        matching = material.matching_energy_ev
        if matching is None:
            matching = float(material.table.photon_energy[0])
        tail = material.drude if kind.endswith("drude_tail") else material.plasma
        out = np.empty_like(x)
        low = x < matching
        if np.any(low):
            analytic = dataclasses.replace(
                material,
                permittivity_kind="drude" if kind.endswith("drude_tail")
                else "plasma",
                table=None, matching_energy_ev=None)
            out[low] = permittivity(analytic, x[low])
        for i in np.nonzero(~low)[0]:
            out[i] = kramers_kronig(material.table, tail, float(x[i]))
    return float(out[0]) if scalar else out


def _drude_below_table(tail: DrudeParams, w0: float, xi: float) -> float:
    """Closed form of int_0^w0 w eps''_Drude(w) / (w^2 + xi^2) dw."""
    wp2g = tail.plasma_frequency**2 * tail.relaxation
    g = tail.relaxation
    if abs(xi - g) > 1e-12 * max(xi, g):
        j = (math.atan(w0 / g) / g - math.atan(w0 / xi) / xi) / (xi**2 - g**2)
    else:
        j = w0 / (2 * g**2 * (w0**2 + g**2)) + math.atan(w0 / g) / (2 * g**3)
    return wp2g * j


def _power_tail_above_table(e2_last: float, w_max: float, xi: float) -> float:
    """int_{w_max}^inf of the w^-3 continuation of eps'' times w/(w^2+xi^2)."""
    if xi < 1e-3 * w_max:
        r = (xi / w_max)**2
        integral = (1.0 - 0.6 * r + (3.0 / 7.0) * r * r) / (3.0 * w_max**3)
    else:
        integral = (1.0 / w_max
                    - (math.pi / 2 - math.atan(w_max / xi)) / xi) / xi**2
    return e2_last * w_max**3 * integral


def kramers_kronig(table: OpticalDataTable, tail, xi):
    """Permittivity on the imaginary axis from tabulated absorption data.

    eps(i xi) = 1 + (2/pi) int_0^inf w eps''(w) / (w^2 + xi^2) dw, with
    eps'' = 2nk inside the table, the tail model's eps'' below the lowest
    tabulated energy (Drude closed form; the plasma tail contributes its
    wp^2/xi^2 pole instead), and a w^-3 power-law continuation above the
    highest one. The table segment is integrated by the trapezoid rule on
    the native grid refined logarithmically around w = xi.

    Parameters
    ----------
    table : OpticalDataTable
    tail : DrudeParams, PlasmaParams or None
        None disables the below-table contribution entirely.
    xi : float or ndarray, > 0 (eV)
    """
    x = np.asarray(xi, dtype=float)
    if x.ndim > 0:
        return np.array([kramers_kronig(table, tail, float(v))
                         for v in x.ravel()]).reshape(x.shape)
    xi = float(x)
    if xi <= 0:
        raise ValueError("xi must be > 0")

    w = table.photon_energy
    e2 = table.eps_imag
    w0, w_max = float(w[0]), float(w[-1])

    grid = [w]
    if w_max > w0:
        decades = math.log10(w_max / w0)
        base = np.geomspace(w0, w_max, max(int(decades * 300), 8))
        grid.append(base)
        lo, hi = max(w0, xi / 3.0), min(w_max, xi * 3.0)
        if hi > lo:
            pts = max(int(math.log10(hi / lo) * 2500), 32)
            grid.append(np.geomspace(lo, hi, pts))
    wg = np.unique(np.concatenate(grid))
    if w.size > 1:
        e2g = np.interp(np.log(wg), np.log(w), e2)
    else:
        e2g = np.full_like(wg, e2[0])
    table_part = np.trapezoid(wg * e2g / (wg**2 + xi**2), wg)

    below = 0.0
    pole = 0.0
    if isinstance(tail, DrudeParams):
        below = _drude_below_table(tail, w0, xi)
    elif isinstance(tail, PlasmaParams):
        pole = tail.plasma_frequency**2 / xi**2
    elif tail is not None:
        raise ValueError("tail must be DrudeParams, PlasmaParams or None")
    above = _power_tail_above_table(float(e2[-1]), w_max, xi)

    return 1.0 + pole + (2.0 / math.pi) * (below + table_part + above)


def permeability(material: MaterialResponse, matsubara_index: int) -> float:
    """mu at Matsubara index l: static value at l = 0, exactly 1 for l >= 1."""
    if matsubara_index < 0:
        raise ValueError("matsubara_index must be >= 0")
    return material.static_permeability if matsubara_index == 0 else 1.0


def matsubara_grid(material: MaterialResponse, T: float, l_max: int):
    """eps(i xi_l) for l = 1..l_max; the l = 0 value is never produced here."""
    if T <= 0:
        raise ValueError("temperature must be > 0")
    if l_max < 1:
        raise ValueError("l_max must be >= 1")
    xi = matsubara_energy(T, np.arange(1, l_max + 1))
    return np.asarray(permittivity(material, xi), dtype=float)


# -- built-in registry -----------------------------------------------------
# Plasma frequencies and relaxation parameters in eV; static permeabilities
# are the zero-frequency values for the magnetic metals.

_SAPPHIRE_STRENGTHS = (7.03, 2.072)          # C_IR, C_UV
_SAPPHIRE_FREQUENCIES = (1.0e14, 2.0e16)     # rad/s


def builtin_registry() -> dict[str, MaterialResponse]:
    """The built-in material set; every configuration runs with no data files."""
    return {
        "vacuum": MaterialResponse.vacuum(),
        "Ni": MaterialResponse.drude_metal("Ni", 4.89, 0.0436, mu=110.0),
        "Pt": MaterialResponse.drude_metal(
            "Pt", 4.94, 0.13, mu=1.0,
            note="relaxation parameter approximate"),
        "Al": MaterialResponse.drude_metal("Al", 11.34, 0.041, mu=1.0),
        "Cu": MaterialResponse.drude_metal("Cu", 8.6, 0.0325, mu=1.0),
        "Fe": MaterialResponse.drude_metal("Fe", 4.09, 0.018, mu=1.0e4),
        "sapphire": MaterialResponse.oscillator(
            "sapphire", _SAPPHIRE_STRENGTHS, _SAPPHIRE_FREQUENCIES),
    }


def _entry_to_material(name: str, entry: dict, base_dir: str) -> MaterialResponse:
    kind = entry.get("kind")
    if kind not in KINDS:
        raise ValueError(f"registry entry '{name}': unknown kind '{kind}'")
    mu = float(entry.get("static_permeability", 1.0))
    note = entry.get("note", "")
    if kind == "vacuum":
        return MaterialResponse(name=name, permittivity_kind="vacuum",
                                static_permeability=mu, note=note)
    if kind == "drude":
        return MaterialResponse.drude_metal(
            name, float(entry["plasma_frequency_ev"]),
            float(entry["relaxation_ev"]), mu=mu, note=note)
    if kind == "plasma":
        return MaterialResponse.plasma_metal(
            name, float(entry["plasma_frequency_ev"]), mu=mu, note=note)
    if kind == "oscillator":
        osc = entry.get("oscillators", [])
        return MaterialResponse.oscillator(
            name, [float(o["strength"]) for o in osc],
            [float(o["frequency_rad_s"]) for o in osc], mu=mu, note=note)
    # tabulated kinds
    csv_path = entry["table_csv"]
    if not os.path.isabs(csv_path):
        csv_path = os.path.join(base_dir, csv_path)
    table = OpticalDataTable.from_csv(csv_path)
    if kind == "tabulated_with_drude_tail":
        tail = DrudeParams(float(entry["plasma_frequency_ev"]),
                           float(entry["relaxation_ev"]))
    else:
        tail = PlasmaParams(float(entry["plasma_frequency_ev"]))
    return MaterialResponse.tabulated(
        name, table, tail, mu=mu,
        matching_energy_ev=entry.get("matching_energy_ev"), note=note)


def load_registry(path=None) -> dict[str, MaterialResponse]:
    """Built-in materials, optionally merged with a user registry JSON file."""
    registry = builtin_registry()
    if path is None:
        return registry
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{path}: registry must be a JSON object")
    base_dir = os.path.dirname(os.path.abspath(path))
    for name, entry in data.items():
        if not isinstance(entry, dict):
            raise ValueError(f"{path}: entry '{name}' must be an object")
        try:
            registry[name] = _entry_to_material(name, entry, base_dir)
        except KeyError as exc:
            raise ValueError(
                f"{path}: entry '{name}' missing field {exc}") from None
    return registry
