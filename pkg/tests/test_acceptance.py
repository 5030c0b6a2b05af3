"""Acceptance battery: fourteen checks, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see every line.

Checks 1-6 and 14 are internal-consistency gates and must hold tightly.
Checks 7-13 compare against reference values that were produced with
measured (tabulated) optical data for the metals; the analytic Drude
parameters built into this package are known to shift the Drude/plasma
discrepancy factors and the sign-change thicknesses, so several of those
lines report the measured numbers and fail honestly rather than being
tuned to pass.
"""

import math
import time

import numpy as np
import pytest

import casimir_films as cf

from conftest import CONFIGS, ORACLE_CASES, brute_force_term, make_stack, total

ZETA3 = 1.2020569031595942854


def report(num, name, ok, detail=""):
    line = f"ACCEPTANCE {num:02d} {name:<40s} {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


def rel(x, ref):
    return abs(x - ref) / abs(ref)


# --------------------------------------------------------------------------


def test_01_polylog_reference_points():
    checks = [
        (cf.polylog3(1.0), 1.2020569, 1e-7),
        (cf.polylog3(0.9820**2), 1.1454, 1e-3),
        (cf.polylog3(-0.6116), -0.5716, 1e-3),
    ]
    ok = all(abs(got - want) < tol for got, want, tol in checks)
    detail = ", ".join(f"{got:.7f} vs {want}" for got, want, _ in checks)
    report(1, "polylog reference points", ok, detail)


def test_02_zero_frequency_coefficient_algebra():
    r0 = cf.zero_coeffs(make_stack("vacuum", "Ni", "vacuum", 50.0),
                        "drude").r_te_21
    big_r0 = cf.zero_coeffs(make_stack("vacuum", "Ni", "Cu", 50.0),
                            "drude").r_tm_23
    ok = abs(r0 - (-0.9820)) < 5e-5 and abs(big_r0 - 0.6116) < 5e-5
    report(2, "zero-frequency coefficient algebra", ok,
           f"r0 = {r0:.6f} (want -0.9820), R0 = {big_r0:.6f} (want 0.6116)")


def test_03_drude_zero_quadrature_vs_closed_form():
    worst = 0.0
    for name in ("free_Ni", "Ni_on_Cu", "Ni_on_Fe"):
        for a in (50.0, 100.0, 200.0):
            stack = make_stack(*CONFIGS[name], a)
            c = cf.zero_coeffs(stack, "drude")
            rho_tm, rho_te = c.tm_product(), c.te_product()

            def f(v):
                return v * (np.log1p(-rho_tm * np.exp(-v))
                            + np.log1p(-rho_te * np.exp(-v)))

            val, _ = cf.integrate(f, 0.0, 80.0, 1e-12, 1e-30)
            direct = cf.K_B * 300.0 / (16 * math.pi * a * a) * val
            worst = max(worst, rel(direct, cf.drude_zero_free_energy(stack)))
    report(3, "Drude l=0 quadrature vs closed form", worst < 1e-9,
           f"max rel dev {worst:.2e} (tol 1e-9)")


def test_04_magnetic_substrate_classical_constant():
    stack = make_stack("vacuum", "Ni", "Fe", 77.0)
    val = cf.drude_zero_free_energy(stack) * 77.0**2 * 1e6
    ok = rel(val, 575.6) < 5e-3
    report(4, "Ni-on-Fe classical constant", ok,
           f"a^2 F = {val:.3f} micro-eV vs 575.6 (tol 0.5%)")


def test_05_pressure_is_free_energy_derivative():
    worst = 0.0
    offsets = (-2, -1, 1, 2)
    weights = (1.0, -8.0, 8.0, -1.0)
    for p1, film, p3 in CONFIGS.values():
        for model in ("drude", "plasma"):
            for a in (30.0, 60.0, 120.0, 240.0):
                h = a / 2000.0
                deriv = math.fsum(
                    w * total(p1, film, p3, a + i * h, model, "free_energy")
                    for i, w in zip(offsets, weights)) / (12.0 * h)
                p = total(p1, film, p3, a, model, "pressure")
                worst = max(worst, rel(p, -deriv))
    report(5, "pressure = -dF/da (all configs, both models)", worst < 1e-3,
           f"max rel dev {worst:.2e} over 40 combinations (tol 1e-3)")


def test_06_plate_swap_symmetry_and_vacuum_zero():
    worst = 0.0
    for model in ("drude", "plasma"):
        fwd = cf.free_energy(make_stack("Cu", "Ni", "sapphire", 70.0), model)
        rev = cf.free_energy(make_stack("sapphire", "Ni", "Cu", 70.0), model)
        worst = max(worst, rel(fwd.total, rev.total))
        vac = cf.free_energy(make_stack("vacuum", "vacuum", "vacuum", 80.0),
                             model)
        scale = cf.K_B * 300.0 / (16 * math.pi * 80.0**2)
        worst = max(worst, abs(vac.total) / scale)
    report(6, "plate-swap symmetry and vacuum-film zero", worst < 1e-12,
           f"max deviation {worst:.2e} (tol 1e-12)")


def _ratio(name, a):
    return cf.model_ratio(make_stack(*CONFIGS[name], a), a, "free_energy").ratio


def test_07_free_standing_drude_plasma_ratios():
    r50, r100 = _ratio("free_Ni", 50.0), _ratio("free_Ni", 100.0)
    ok = rel(r50, 1.63) < 0.10 and rel(r100, 9.95) < 0.10
    report(7, "free-standing Ni |F_D|/|F_p|", ok,
           f"measured {r50:.4f} @50nm vs 1.63, {r100:.4f} @100nm vs 9.95 "
           "(+-10%; reference values use tabulated optical data)")


def test_08_sandwiched_drude_plasma_ratios():
    r50, r100 = _ratio("sandwiched_Ni", 50.0), _ratio("sandwiched_Ni", 100.0)
    ok = rel(r50, 1.84) < 0.10 and rel(r100, 11.47) < 0.10
    report(8, "sapphire-sandwiched Ni |F_D|/|F_p|", ok,
           f"measured {r50:.4f} @50nm vs 1.84, {r100:.4f} @100nm vs 11.47 "
           "(+-10%)")


def test_09_metal_substrate_drude_crossings():
    targets = [
        ("Ni_on_Cu", "free_energy", (40.0, 200.0), 61.1),
        ("Ni_on_Cu", "pressure", (40.0, 240.0), 83.3),
        ("Ni_on_Al", "free_energy", (40.0, 200.0), 77.9),
        ("Ni_on_Al", "pressure", (40.0, 240.0), 102.7),
    ]
    parts, ok = [], True
    for name, quantity, bracket, want in targets:
        root = cf.find_sign_change(make_stack(*CONFIGS[name], 100.0),
                                   "drude", quantity, bracket).root
        parts.append(f"{name}/{quantity[0].upper()} {root:.1f} vs {want}")
        ok = ok and abs(root - want) <= 3.0
    report(9, "Drude sign-change thicknesses", ok,
           "; ".join(parts) + " (+-3 nm)")


def test_10_metal_substrate_ratio_factors():
    r50, r60, r100 = (_ratio("Ni_on_Cu", a) for a in (50.0, 60.0, 100.0))
    ok = rel(r50, 2.44) < 0.15 and r60 > 50.0 and rel(r100, 6.88) < 0.15
    report(10, "Ni-on-Cu discrepancy factors", ok,
           f"measured {r50:.4f} @50nm vs 2.44, {r60:.4f} @60nm vs >50, "
           f"{r100:.4f} @100nm vs 6.88 (+-15%)")


def test_11_magnetic_substrate_plasma_behavior():
    stack = make_stack(*CONFIGS["Ni_on_Fe"], 100.0)
    parts, ok = [], True
    for quantity, bracket, want in (("free_energy", (35.0, 75.0), 46.95),
                                    ("pressure", (35.0, 90.0), 57.4)):
        try:
            root = cf.find_sign_change(stack, "plasma", quantity, bracket).root
            hit = abs(root - want) <= 3.0
            parts.append(f"{quantity[0].upper()}_p zero {root:.1f} vs {want}")
        except cf.NoCrossingError:
            hit = False
            parts.append(f"no {quantity[0].upper()}_p sign change in "
                         f"{bracket[0]:.0f}-{bracket[1]:.0f} nm (want {want})")
        ok = ok and hit
    r47, r50, r100 = (_ratio("Ni_on_Fe", a) for a in (47.0, 50.0, 100.0))
    ok = ok and rel(r50, 133.3) < 0.25 and rel(r100, 142.0) < 0.25 and r47 > 500
    parts.append(f"ratios {r50:.3f} @50nm vs 133.3, {r100:.3f} @100nm vs "
                 f"142.0, {r47:.3f} @47nm vs >500")
    report(11, "Ni-on-Fe plasma crossings and ratios", ok, "; ".join(parts))


def test_12_classical_plateau():
    dev_ni = cf.classical_limit_deviation(
        make_stack("vacuum", "Ni", "vacuum", 100.0), "drude", 200.0)
    dev_pt = cf.classical_limit_deviation(
        make_stack("vacuum", "Pt", "vacuum", 100.0), "drude", 200.0)
    plateau = (cf.drude_zero_free_energy(make_stack("vacuum", "Ni", "vacuum", 200.0))
               / cf.drude_zero_free_energy(make_stack("vacuum", "Pt", "vacuum", 200.0)))
    want = (ZETA3 + cf.polylog3(cf.zero_coeffs(
        make_stack("vacuum", "Ni", "vacuum", 200.0), "drude").r_te_21**2)) / ZETA3
    ok = dev_ni < 0.02 and dev_pt < 0.02 and abs(plateau - 1.953) < 1e-3 \
        and abs(plateau - want) < 1e-12
    report(12, "Drude classical plateau at 200 nm", ok,
           f"Ni dev {dev_ni:.2%}, Pt dev {dev_pt:.2%} (tol 2%); "
           f"Ni/Pt plateau ratio {plateau:.6f} vs 1.953+-0.001")


def test_13_plasma_model_vanishing():
    parts, ok = [], True
    for name, (p1, film, p3) in CONFIGS.items():
        dev = cf.classical_limit_deviation(make_stack(p1, film, p3, 100.0),
                                           "plasma", 250.0)
        if dev >= 1e-3:
            parts.append(f"{name} {dev:.2e} exceeds 1e-3")
        ok = ok and dev < 1e-3
    proxy = cf.MaterialResponse.drude_metal("proxy", 1.0e4, 0.0436)
    stack = cf.LayerStack(cf.builtin_registry()["vacuum"], proxy,
                          cf.builtin_registry()["vacuum"], 50.0, 300.0)
    f_p = cf.free_energy(stack, "plasma").total
    f_d = cf.free_energy(stack, "drude").total
    suppressed = abs(f_p) < 1e-30 * abs(f_d)
    ok = ok and suppressed
    parts.append(f"ideal-metal proxy |F_p/F_D| = "
                 f"{abs(f_p) / abs(f_d):.1e} (want <1e-30)")
    report(13, "plasma free energy vanishes at large a", ok, "; ".join(parts))


def test_14_oracle_equivalence_and_stability():
    worst = 0.0
    for p1, film, p3, a, l, quantity, _ in ORACLE_CASES:
        stack = make_stack(p1, film, p3, a)
        got = cf.matsubara_term(stack, l, quantity, cf.MatsubaraSettings())
        worst = max(worst, rel(got, brute_force_term(stack, l, quantity)))

    stack = make_stack("vacuum", "Ni", "vacuum", 50.0)
    base = cf.free_energy(stack, "drude").total
    doubled = cf.free_energy(
        stack, "drude", settings=cf.MatsubaraSettings(max_terms=10000)).total
    tight = cf.free_energy(
        stack, "drude",
        settings=cf.MatsubaraSettings(term_tail_rel_tol=1e-12)).total
    drift = max(rel(doubled, base), rel(tight, base))

    # reflection-bound asserts are live in every term; a full scan pair
    # exercises them across the whole (a, l, v) range
    t0 = time.perf_counter()
    grid = cf.default_scan_grid()[::3]
    n_evals = 0
    for name in ("free_Ni", "Ni_on_Fe"):
        cf.thickness_scan(make_stack(*CONFIGS[name], 100.0), grid)
        n_evals += 4 * grid.size
    per_eval = (time.perf_counter() - t0) / n_evals

    ok = worst < 1e-6 and drift < 1e-7
    report(14, "oracle equivalence and truncation stability", ok,
           f"12-case oracle max rel dev {worst:.2e} (tol 1e-6); "
           f"truncation drift {drift:.2e} (tol 1e-7); "
           f"bound asserts silent over {n_evals} evals, "
           f"{1e3 * per_eval:.0f} ms/eval")
