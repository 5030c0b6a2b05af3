"""Command-line front end.

Subcommands: compute (single thickness), scan (thickness sweep), crossing
(sign-change bisection), compare (Drude/plasma ratio), materials
(list/show/import). Configuration comes from a flat JSON file and/or flags;
flags win. Every emitted file embeds the resolved configuration (minus the
output path) so it can be re-run verbatim, and contains no timestamps:
identical configuration gives byte-identical output.

Exit codes: 0 ok, 2 configuration error, 3 convergence failure,
4 no crossing in the bracket.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .constants import EV_PER_NM2_TO_J_PER_M2, EV_PER_NM3_TO_PA
from .lifshitz_core import (ConvergenceError, LayerStack, MatsubaraSettings,
                            free_energy, pressure)
from .materials import (MODELS, DrudeParams, OpticalDataTable, PlasmaParams,
                        load_registry)
from .quadrature import QuadratureError
from .scan_tools import (DEFAULT_SCAN_MAX_NM, DEFAULT_SCAN_MIN_NM,
                         DEFAULT_SCAN_POINTS, NoCrossingError, find_sign_change,
                         model_ratio, thickness_scan)

QUANTITIES = ("free_energy", "pressure")
UNIT_CHOICES = ("natural", "si", "both")


@dataclass(frozen=True)
class RunConfig:
    """Flat run configuration; mirrors the JSON schema one to one."""
    plate1: str = "vacuum"
    film: str = "Ni"
    plate3: str = "vacuum"
    thickness_nm: float | None = None
    scan_min_nm: float = DEFAULT_SCAN_MIN_NM
    scan_max_nm: float = DEFAULT_SCAN_MAX_NM
    scan_points: int = DEFAULT_SCAN_POINTS
    scan_spacing: str = "log"
    temperature_K: float = 300.0
    models: tuple = ("drude", "plasma")
    quantities: tuple = ("free_energy", "pressure")
    term_tail_rel_tol: float = 1e-8
    quad_rel_tol: float = 1e-9
    quad_abs_floor: float = 1e-30
    max_terms: int = 5000
    format: str = "csv"
    path: str | None = None
    units: str = "both"
    registry: str | None = None
    model: str | None = None          # single-model commands (crossing)
    quantity: str | None = None
    bracket_min_nm: float | None = None
    bracket_max_nm: float | None = None
    crossing_tol_nm: float = 0.01

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ValueError(f"unknown configuration keys: {', '.join(unknown)}")
        clean = dict(data)
        for key in ("models", "quantities"):
            if key in clean and clean[key] is not None:
                clean[key] = tuple(clean[key])
        return cls(**clean)

    def to_dict(self, embed: bool = False) -> dict:
        out = dataclasses.asdict(self)
        out["models"] = list(self.models)
        out["quantities"] = list(self.quantities)
        if embed:
            out["path"] = None
        return out

    def validate(self):
        if not self.models:
            raise ValueError("at least one model required")
        for m in self.models:
            if m not in MODELS:
                raise ValueError(f"unknown model '{m}'")
        if not self.quantities:
            raise ValueError("at least one quantity required")
        for q in self.quantities:
            if q not in QUANTITIES:
                raise ValueError(f"unknown quantity '{q}'")
        if self.units not in UNIT_CHOICES:
            raise ValueError(f"units must be one of {UNIT_CHOICES}")
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        if self.scan_spacing not in ("log", "linear"):
            raise ValueError("scan spacing must be log or linear")
        if self.temperature_K <= 0:
            raise ValueError("temperature must be positive")

    def settings(self) -> MatsubaraSettings:
        return MatsubaraSettings(term_tail_rel_tol=self.term_tail_rel_tol,
                                 quad_rel_tol=self.quad_rel_tol,
                                 quad_abs_floor=self.quad_abs_floor,
                                 max_terms=self.max_terms)

    def stack(self, registry, thickness_nm: float) -> LayerStack:
        mats = []
        for name in (self.plate1, self.film, self.plate3):
            if name not in registry:
                raise ValueError(
                    f"unknown material '{name}' (known: "
                    f"{', '.join(sorted(registry))})")
            mats.append(registry[name])
        if thickness_nm is None:
            raise ValueError("thickness must be set (--a or thickness_nm)")
        return LayerStack(plate1=mats[0], film=mats[1], plate3=mats[2],
                          thickness_a=float(thickness_nm),
                          temperature_T=self.temperature_K)


def _config_json(cfg: RunConfig) -> str:
    return json.dumps(cfg.to_dict(embed=True), sort_keys=True,
                      separators=(",", ":"))


def _config_sha(cfg: RunConfig) -> str:
    return hashlib.sha256(_config_json(cfg).encode()).hexdigest()


def read_config_file(path: str) -> dict:
    """Accept a plain JSON config, an emitted JSON file, or an emitted CSV."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        if isinstance(data.get("config"), dict):
            return data["config"]
        if not isinstance(data, dict):
            raise ValueError(f"{path}: config must be a JSON object")
        return data
    for line in text.splitlines():
        if line.startswith("# config: "):
            return json.loads(line[len("# config: "):])
    raise ValueError(f"{path}: no configuration found")


# -- output plumbing --------------------------------------------------------

def _meta_lines(cfg: RunConfig, kind: str) -> list[str]:
    return [
        f"# casimir-films {__version__} {kind}",
        f"# config_sha256: {_config_sha(cfg)}",
        f"# config: {_config_json(cfg)}",
        "# units: free energy eV/nm^2, J/m^2, a^2F in micro-eV; "
        "pressure eV/nm^3, Pa, a^3P in micro-eV; thickness nm",
    ]


def _scan_columns(cfg: RunConfig):
    """(header, value-function) pairs for the requested quantity/unit grid."""
    natural = cfg.units in ("natural", "both")
    si = cfg.units in ("si", "both")
    cols = [("thickness_nm", lambda r: r.thickness_a)]

    def add(prefix, attr, to_si, power):
        if natural:
            unit = "ev_nm2" if power == 2 else "ev_nm3"
            cols.append((f"{prefix}_{unit}",
                         lambda r, a=attr: getattr(r, a)))
            cols.append((f"a{power}{prefix}_uev",
                         lambda r, a=attr, p=power:
                         getattr(r, a) * r.thickness_a**p * 1e6))
        if si:
            unit = "J_m2" if power == 2 else "Pa"
            cols.append((f"{prefix}_{unit}",
                         lambda r, a=attr, f=to_si: getattr(r, a) * f))

    for model in cfg.models:
        if "free_energy" in cfg.quantities:
            add(f"F_{model}", f"F_{model}", EV_PER_NM2_TO_J_PER_M2, 2)
        if "pressure" in cfg.quantities:
            add(f"P_{model}", f"P_{model}", EV_PER_NM3_TO_PA, 3)
    add("F_classical", "F_classical", EV_PER_NM2_TO_J_PER_M2, 2)
    add("P_classical", "P_classical", EV_PER_NM3_TO_PA, 3)
    if "drude" in cfg.models and "free_energy" in cfg.quantities:
        cols.append(("zero_term_fraction_drude",
                     lambda r: r.zero_term_fraction_drude))
    return cols


def _records_csv(cfg: RunConfig, records, kind: str) -> str:
    cols = _scan_columns(cfg)
    lines = _meta_lines(cfg, kind)
    lines.append(",".join(h for h, _ in cols))
    for rec in records:
        lines.append(",".join(repr(float(fn(rec))) for _, fn in cols))
    return "\n".join(lines) + "\n"


def _records_json(cfg: RunConfig, records, kind: str) -> str:
    cols = _scan_columns(cfg)
    rows = [{h: float(fn(rec)) for h, fn in cols} for rec in records]
    doc = {"tool": f"casimir-films {__version__}", "kind": kind,
           "config": cfg.to_dict(embed=True),
           "config_sha256": _config_sha(cfg), "records": rows}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _table_csv(cfg: RunConfig, kind: str, header: list[str],
               rows: list[list]) -> str:
    lines = _meta_lines(cfg, kind)
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(repr(float(v)) if isinstance(v, float)
                              else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _table_json(cfg: RunConfig, kind: str, payload) -> str:
    doc = {"tool": f"casimir-films {__version__}", "kind": kind,
           "config": cfg.to_dict(embed=True),
           "config_sha256": _config_sha(cfg)}
    doc.update(payload)
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(cfg: RunConfig, text: str):
    if cfg.path:
        with open(cfg.path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_compute(cfg: RunConfig) -> int:
    cfg.validate()
    registry = load_registry(cfg.registry)
    stack = cfg.stack(registry, cfg.thickness_nm)
    settings = cfg.settings()

    results = {}
    for model in cfg.models:
        for quantity in cfg.quantities:
            fn = free_energy if quantity == "free_energy" else pressure
            results[(model, quantity)] = fn(stack, model, settings)

    print(f"{cfg.plate1}/{cfg.film}/{cfg.plate3}  a = {stack.thickness_a} nm"
          f"  T = {stack.temperature_T} K")
    for (model, quantity), res in results.items():
        unit, sunit = (("eV/nm^2", "J/m^2") if quantity == "free_energy"
                       else ("eV/nm^3", "Pa"))
        power = 2 if quantity == "free_energy" else 3
        print(f"  {quantity:<11s} {model:<6s} total = {res.total:.8e} {unit}"
              f"  ({res.si_value:.8e} {sunit})")
        print(f"    a^{power}-scaled = {res.scaled_micro_ev:.6f} micro-eV"
              f"  zero_term = {res.zero_term:.8e} {unit}"
              f"  l_used = {res.l_used}")
    if "drude" in cfg.models and "plasma" in cfg.models:
        for quantity in cfg.quantities:
            vd = results[("drude", quantity)].total
            vp = results[("plasma", quantity)].total
            ratio = "inf" if vp == 0.0 else f"{abs(vd) / abs(vp):.4f}"
            print(f"  |drude|/|plasma| ({quantity}) = {ratio}")

    if cfg.path:
        if cfg.format == "json":
            rows = [{"model": m, "quantity": q, "total": r.total,
                     "si_value": r.si_value,
                     "scaled_micro_ev": r.scaled_micro_ev,
                     "zero_term": r.zero_term, "l_used": r.l_used}
                    for (m, q), r in sorted(results.items())]
            _emit(cfg, _table_json(cfg, "compute", {"results": rows}))
        else:
            records = thickness_scan(
                stack, [stack.thickness_a], cfg.models, cfg.quantities,
                settings)
            _emit(cfg, _records_csv(cfg, records, "compute"))
    return 0


def _scan_grid(cfg: RunConfig) -> np.ndarray:
    lo, hi, n = cfg.scan_min_nm, cfg.scan_max_nm, cfg.scan_points
    if n is None or n < 1:
        raise ValueError("scan needs at least one point")
    if lo is None or hi is None or not lo < hi:
        raise ValueError("scan range must satisfy min < max")
    if n == 1:
        return np.array([lo], dtype=float)
    if cfg.scan_spacing == "linear":
        return np.linspace(lo, hi, n)
    if lo <= 0:
        raise ValueError("log spacing needs a positive scan minimum")
    return np.geomspace(lo, hi, n)


def cmd_scan(cfg: RunConfig) -> int:
    cfg.validate()
    registry = load_registry(cfg.registry)
    grid = _scan_grid(cfg)
    stack = cfg.stack(registry, grid[0])
    records = thickness_scan(stack, grid, cfg.models, cfg.quantities,
                             cfg.settings())
    text = (_records_json(cfg, records, "scan") if cfg.format == "json"
            else _records_csv(cfg, records, "scan"))
    _emit(cfg, text)
    if cfg.path:
        print(f"wrote {len(records)} rows to {cfg.path}")
    return 0


def cmd_crossing(cfg: RunConfig) -> int:
    cfg.validate()
    model = cfg.model or (cfg.models[0] if len(cfg.models) == 1 else None)
    if model is None:
        raise ValueError("crossing requires a single --model")
    quantity = cfg.quantity or (cfg.quantities[0]
                                if len(cfg.quantities) == 1 else None)
    if quantity is None:
        raise ValueError("crossing requires a single --quantity")
    if model not in MODELS:
        raise ValueError(f"unknown model '{model}'")
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity '{quantity}'")
    if cfg.bracket_min_nm is None or cfg.bracket_max_nm is None:
        raise ValueError("crossing requires --bracket-min and --bracket-max")
    registry = load_registry(cfg.registry)
    stack = cfg.stack(registry, cfg.bracket_min_nm)
    report = find_sign_change(stack, model, quantity,
                              (cfg.bracket_min_nm, cfg.bracket_max_nm),
                              tol=cfg.crossing_tol_nm,
                              settings=cfg.settings())
    print(f"{quantity} ({model}) changes sign at a = {report.root:.3f} nm")
    print(f"  bracket = {report.bracket} nm, residual = "
          f"{report.residual:.4e}, iterations = {report.iterations}")
    if cfg.path:
        payload = {"crossing": {"quantity": report.quantity,
                                "model": report.model,
                                "bracket_lo_nm": report.bracket[0],
                                "bracket_hi_nm": report.bracket[1],
                                "root_nm": report.root,
                                "residual": report.residual,
                                "iterations": report.iterations}}
        if cfg.format == "json":
            _emit(cfg, _table_json(cfg, "crossing", payload))
        else:
            c = payload["crossing"]
            _emit(cfg, _table_csv(cfg, "crossing", list(c), [list(c.values())]))
    return 0


def cmd_compare(cfg: RunConfig) -> int:
    cfg.validate()
    registry = load_registry(cfg.registry)
    stack = cfg.stack(registry, cfg.thickness_nm)
    rows = []
    for quantity in cfg.quantities:
        r = model_ratio(stack, stack.thickness_a, quantity, cfg.settings())
        rows.append(r)
        ratio = "inf" if r.infinite else f"{r.ratio:.6g}"
        print(f"{quantity} at a = {r.thickness_a} nm: drude = "
              f"{r.drude_value:.6e}, plasma = {r.plasma_value:.6e}, "
              f"|drude|/|plasma| = {ratio}")
    if cfg.path:
        payload = {"ratios": [{"quantity": r.quantity,
                               "thickness_nm": r.thickness_a,
                               "drude": r.drude_value,
                               "plasma": r.plasma_value,
                               "ratio": None if r.infinite else r.ratio,
                               "infinite": r.infinite} for r in rows]}
        if cfg.format == "json":
            _emit(cfg, _table_json(cfg, "compare", payload))
        else:
            header = ["quantity", "thickness_nm", "drude", "plasma",
                      "ratio", "infinite"]
            body = [[r.quantity, r.thickness_a, r.drude_value,
                     r.plasma_value,
                     math.inf if r.infinite else r.ratio,
                     str(r.infinite)] for r in rows]
            _emit(cfg, _table_csv(cfg, "compare", header, body))
    return 0


def _describe(material) -> list[str]:
    lines = [f"{material.name}: kind = {material.permittivity_kind}"]
    if material.drude:
        lines.append(f"  plasma frequency = {material.drude.plasma_frequency}"
                     f" eV, relaxation = {material.drude.relaxation} eV")
    if material.plasma:
        lines.append(f"  plasma frequency = "
                     f"{material.plasma.plasma_frequency} eV")
    if material.oscillators:
        for c, w in zip(material.oscillators.strengths,
                        material.oscillators.frequencies):
            lines.append(f"  oscillator: strength = {c}, "
                         f"frequency = {w:.4g} rad/s")
    if material.table is not None:
        e = material.table.photon_energy
        lines.append(f"  table: {e.size} points, "
                     f"{e[0]:.4g}..{e[-1]:.4g} eV")
        if material.matching_energy_ev is not None:
            lines.append(f"  matching energy = {material.matching_energy_ev}"
                         " eV")
    lines.append(f"  static permeability = {material.static_permeability}")
    if material.note:
        lines.append(f"  note: {material.note}")
    return lines


def cmd_materials(args) -> int:
    registry = load_registry(args.registry)
    if args.materials_cmd == "list":
        for name in sorted(registry):
            m = registry[name]
            print(f"{name:<12s} {m.permittivity_kind}")
        return 0
    if args.materials_cmd == "show":
        if args.name not in registry:
            raise ValueError(f"unknown material '{args.name}' (known: "
                             f"{', '.join(sorted(registry))})")
        print("\n".join(_describe(registry[args.name])))
        return 0
    # import
    table = OpticalDataTable.from_csv(args.csv)
    if args.tail == "drude":
        if args.relaxation is None:
            raise ValueError("--tail drude requires --relaxation")
        entry = {"kind": "tabulated_with_drude_tail",
                 "plasma_frequency_ev": args.plasma_frequency,
                 "relaxation_ev": args.relaxation}
        tail = DrudeParams(args.plasma_frequency, args.relaxation)
    else:
        entry = {"kind": "tabulated_with_plasma_tail",
                 "plasma_frequency_ev": args.plasma_frequency}
        tail = PlasmaParams(args.plasma_frequency)
    entry["static_permeability"] = args.mu
    entry["table_csv"] = os.path.abspath(args.csv)
    if args.matching_energy is not None:
        entry["matching_energy_ev"] = args.matching_energy
    if args.note:
        entry["note"] = args.note
    # validate before writing anything
    from .materials import MaterialResponse
    MaterialResponse.tabulated(args.name, table, tail, mu=args.mu,
                               matching_energy_ev=args.matching_energy)
    out = {}
    if os.path.exists(args.registry_out):
        with open(args.registry_out) as fh:
            out = json.load(fh)
        if not isinstance(out, dict):
            raise ValueError(f"{args.registry_out}: registry must be a "
                             "JSON object")
    out[args.name] = entry
    with open(args.registry_out, "w") as fh:
        json.dump(out, fh, sort_keys=True, indent=2)
        fh.write("\n")
    load_registry(args.registry_out)  # round-trip check
    print(f"imported '{args.name}' ({table.photon_energy.size} rows) into "
          f"{args.registry_out}")
    return 0


# -- argument parsing --------------------------------------------------------

def _csv_list(text: str) -> tuple:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--config", help="JSON config file or a previously "
                                    "emitted output file")
    p.add_argument("--plate1", help="material above the film")
    p.add_argument("--film", help="film material")
    p.add_argument("--plate3", help="material below the film")
    p.add_argument("--a", type=float, dest="thickness",
                   help="film thickness in nm")
    p.add_argument("--T", type=float, dest="temperature",
                   help="temperature in K (default 300)")
    p.add_argument("--model", help="comma list from: drude,plasma")
    p.add_argument("--quantity", help="comma list from: "
                                      "free_energy,pressure")
    p.add_argument("--registry", help="extra material registry JSON")
    p.add_argument("--output", help="write machine-readable output here")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--units", choices=UNIT_CHOICES)
    p.add_argument("--term-tail-rel-tol", type=float)
    p.add_argument("--quad-rel-tol", type=float)
    p.add_argument("--quad-abs-floor", type=float)
    p.add_argument("--max-terms", type=int)


def _config_from_args(args) -> RunConfig:
    base = read_config_file(args.config) if args.config else {}
    cfg = RunConfig.from_dict(base)
    over = {}
    direct = {"plate1": "plate1", "film": "film", "plate3": "plate3",
              "thickness": "thickness_nm", "temperature": "temperature_K",
              "registry": "registry", "output": "path", "format": "format",
              "units": "units", "term_tail_rel_tol": "term_tail_rel_tol",
              "quad_rel_tol": "quad_rel_tol",
              "quad_abs_floor": "quad_abs_floor", "max_terms": "max_terms"}
    for attr, key in direct.items():
        val = getattr(args, attr, None)
        if val is not None:
            over[key] = val
    if getattr(args, "model", None):
        models = _csv_list(args.model)
        over["models"] = models
        if len(models) == 1:
            over["model"] = models[0]
    if getattr(args, "quantity", None):
        quantities = _csv_list(args.quantity)
        over["quantities"] = quantities
        if len(quantities) == 1:
            over["quantity"] = quantities[0]
    for attr, key in (("scan_min", "scan_min_nm"), ("scan_max", "scan_max_nm"),
                      ("points", "scan_points"), ("spacing", "scan_spacing"),
                      ("bracket_min", "bracket_min_nm"),
                      ("bracket_max", "bracket_max_nm"),
                      ("tol", "crossing_tol_nm")):
        val = getattr(args, attr, None)
        if val is not None:
            over[key] = val
    return dataclasses.replace(cfg, **over)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-films",
        description="Casimir free energy and pressure of a metallic film "
                    "between arbitrary half-spaces (Lifshitz theory, "
                    "Drude and plasma models).")
    parser.add_argument("--version", action="version",
                        version=f"casimir-films {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="single-thickness evaluation")
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_compute(_config_from_args(a)))

    p = sub.add_parser("scan", help="thickness sweep")
    _add_common(p)
    p.add_argument("--scan-min", type=float, help="lowest thickness, nm")
    p.add_argument("--scan-max", type=float, help="highest thickness, nm")
    p.add_argument("--points", type=int, help="number of scan points")
    p.add_argument("--spacing", choices=("log", "linear"))
    p.set_defaults(func=lambda a: cmd_scan(_config_from_args(a)))

    p = sub.add_parser("crossing", help="locate a sign change in thickness")
    _add_common(p)
    p.add_argument("--bracket-min", type=float, help="bracket start, nm")
    p.add_argument("--bracket-max", type=float, help="bracket end, nm")
    p.add_argument("--tol", type=float, help="bisection width target, nm")
    p.set_defaults(func=lambda a: cmd_crossing(_config_from_args(a)))

    p = sub.add_parser("compare", help="Drude/plasma ratio at one thickness")
    _add_common(p)
    p.set_defaults(func=lambda a: cmd_compare(_config_from_args(a)))

    p = sub.add_parser("materials", help="registry operations")
    msub = p.add_subparsers(dest="materials_cmd", required=True)
    pl = msub.add_parser("list", help="list known materials")
    pl.add_argument("--registry")
    pl.set_defaults(func=cmd_materials)
    ps = msub.add_parser("show", help="show one material")
    ps.add_argument("name")
    ps.add_argument("--registry")
    ps.set_defaults(func=cmd_materials)
    pi = msub.add_parser("import", help="ingest an energy_ev,n,k CSV table")
    pi.add_argument("csv")
    pi.add_argument("--name", required=True)
    pi.add_argument("--tail", choices=("drude", "plasma"), required=True)
    pi.add_argument("--plasma-frequency", type=float, required=True,
                    help="eV, for the low-frequency tail")
    pi.add_argument("--relaxation", type=float,
                    help="eV, required for --tail drude")
    pi.add_argument("--mu", type=float, default=1.0,
                    help="static permeability")
    pi.add_argument("--matching-energy", type=float,
                    help="eV; tail applies below this (default: table "
                         "minimum)")
    pi.add_argument("--note")
    pi.add_argument("--registry-out", required=True,
                    help="registry JSON to create or update")
    pi.add_argument("--registry")
    pi.set_defaults(func=cmd_materials)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoCrossingError as exc:
        print(f"no crossing: {exc}", file=sys.stderr)
        return 4
    except (ConvergenceError, QuadratureError) as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
