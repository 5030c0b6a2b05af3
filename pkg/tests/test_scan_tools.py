"""Thickness scans, bisection crossings, classical-limit diagnostics."""

import math

import numpy as np
import pytest

import casimir_films as cf

from conftest import make_stack

FREE_NI = make_stack("vacuum", "Ni", "vacuum", 100.0)
NI_ON_CU = make_stack("vacuum", "Ni", "Cu", 100.0)
NI_ON_FE = make_stack("vacuum", "Ni", "Fe", 100.0)


def test_default_grid_shape():
    grid = cf.default_scan_grid()
    assert grid.size == 60
    assert grid[0] == pytest.approx(25.0, rel=1e-15)
    assert grid[-1] == pytest.approx(250.0, rel=1e-15)
    ratios = grid[1:] / grid[:-1]
    assert np.allclose(ratios, ratios[0], rtol=1e-12)


@pytest.mark.parametrize(
    "bad",
    [[], [50.0, 40.0], [0.5, 10.0]],
    ids=["empty", "descending", "subnanometer"],
)
def test_scan_rejects_bad_grids(bad):
    with pytest.raises(ValueError):
        cf.thickness_scan(FREE_NI, bad)


def test_scan_unrequested_fields_are_nan():
    (rec,) = cf.thickness_scan(
        NI_ON_CU, [60.0], models=("drude",), quantities=("free_energy",)
    )
    assert math.isfinite(rec.F_drude)
    assert math.isnan(rec.F_plasma)
    assert math.isnan(rec.P_drude)
    assert math.isnan(rec.P_plasma)
    assert math.isfinite(rec.zero_term_fraction_drude)


def test_scan_classical_columns_match_closed_forms():
    records = cf.thickness_scan(
        NI_ON_CU, [40.0, 90.0], models=("drude",), quantities=("free_energy",)
    )
    for rec in records:
        stack = make_stack("vacuum", "Ni", "Cu", rec.thickness_a)
        assert rec.F_classical == cf.drude_zero_free_energy(stack)
        assert rec.P_classical == cf.drude_zero_pressure(stack)
        assert rec.P_classical == pytest.approx(2 * rec.F_classical / rec.thickness_a,
                                                rel=1e-14)


def test_scan_vacuum_film_rows_are_zero():
    records = cf.thickness_scan(
        make_stack("vacuum", "vacuum", "vacuum", 50.0), [50.0, 120.0]
    )
    for rec in records:
        assert rec.F_drude == 0.0
        assert rec.F_plasma == 0.0
        assert rec.P_drude == 0.0
        assert rec.P_plasma == 0.0
        assert rec.F_classical == 0.0


def test_metal_on_metal_free_energy_changes_sign_once():
    grid = np.geomspace(25.0, 250.0, 50)
    records = cf.thickness_scan(
        NI_ON_CU, grid, models=("drude",), quantities=("free_energy",)
    )
    signs = np.sign([rec.F_drude for rec in records])
    assert np.all(signs != 0)
    assert int(np.sum(signs[1:] != signs[:-1])) == 1
    # repulsive (positive) branch is the thin side
    assert signs[0] > 0 and signs[-1] < 0


def test_dissipationless_magnitude_decays_with_thickness():
    grid = np.geomspace(50.0, 300.0, 12)
    records = cf.thickness_scan(
        FREE_NI, grid, models=("plasma",), quantities=("free_energy",)
    )
    mags = np.abs([rec.F_plasma for rec in records])
    assert np.all(np.diff(mags) < 0.0)


def test_scan_row_consistent_with_model_ratio():
    (rec,) = cf.thickness_scan(FREE_NI, [100.0])
    ratio = cf.model_ratio(FREE_NI, 100.0, "free_energy")
    assert rec.F_drude == ratio.drude_value
    assert rec.F_plasma == ratio.plasma_value
    assert abs(rec.F_drude) / abs(rec.F_plasma) == pytest.approx(ratio.ratio,
                                                                 rel=1e-12)


# ------------------------------------------------------------ sign changes


def test_bisection_locates_metal_on_metal_crossing():
    report = cf.find_sign_change(NI_ON_CU, "drude", "free_energy", (60, 140))
    assert report.root == pytest.approx(94.85, abs=0.05)
    assert report.iterations <= 14
    assert report.quantity == "free_energy"
    assert report.model == "drude"
    assert report.bracket == (60.0, 140.0)
    # the sign really flips across the reported root
    lo = cf.free_energy(make_stack("vacuum", "Ni", "Cu", report.root - 0.05),
                        "drude").total
    hi = cf.free_energy(make_stack("vacuum", "Ni", "Cu", report.root + 0.05),
                        "drude").total
    assert lo * hi < 0.0
    assert abs(report.residual) < abs(lo - hi)


def test_bisection_pressure_crossing_sits_above_energy_crossing():
    f_cross = cf.find_sign_change(NI_ON_CU, "drude", "free_energy", (60, 140))
    p_cross = cf.find_sign_change(NI_ON_CU, "drude", "pressure", (90, 170))
    assert p_cross.root == pytest.approx(125.41, abs=0.05)
    assert p_cross.root > f_cross.root


def test_bisection_respects_tolerance_knob():
    coarse = cf.find_sign_change(NI_ON_CU, "drude", "free_energy", (60, 140),
                                 tol=1.0)
    assert abs(coarse.root - 94.85) < 1.0
    assert coarse.iterations <= 8


def test_no_crossing_for_free_standing_film():
    with pytest.raises(cf.NoCrossingError, match="same sign"):
        cf.find_sign_change(FREE_NI, "drude", "free_energy", (50, 150))


def test_invalid_bracket_rejected():
    with pytest.raises(ValueError):
        cf.find_sign_change(NI_ON_CU, "drude", "free_energy", (140, 60))


def test_magnetic_substrate_dissipative_crossings():
    f_cross = cf.find_sign_change(NI_ON_FE, "drude", "free_energy", (40, 60))
    assert f_cross.root == pytest.approx(48.89, abs=0.05)
    p_cross = cf.find_sign_change(NI_ON_FE, "drude", "pressure", (60, 90))
    assert p_cross.root == pytest.approx(70.94, abs=0.05)


def test_magnetic_substrate_dissipationless_stays_attractive():
    with pytest.raises(cf.NoCrossingError):
        cf.find_sign_change(NI_ON_FE, "plasma", "free_energy", (30, 70))


# ----------------------------------------------------- classical diagnostics


def test_classical_deviation_drude_reaches_plateau():
    far = cf.classical_limit_deviation(FREE_NI, "drude", 200.0)
    near = cf.classical_limit_deviation(FREE_NI, "drude", 30.0)
    assert far == pytest.approx(6.2277e-3, rel=1e-3)
    assert far < 0.02
    assert near > 0.5


def test_classical_deviation_plasma_vanishes():
    dev = cf.classical_limit_deviation(FREE_NI, "plasma", 250.0)
    assert dev == pytest.approx(4.1202e-4, rel=1e-3)
    assert dev < 1e-3


def test_model_ratio_free_film():
    ratio = cf.model_ratio(FREE_NI, 100.0, "free_energy")
    assert ratio.ratio == pytest.approx(3.7710, rel=1e-4)
    assert not ratio.infinite
    assert float(ratio) == ratio.ratio
    assert ratio.drude_value < 0.0 and ratio.plasma_value < 0.0


def test_model_ratio_flags_vanishing_denominator():
    ratio = cf.model_ratio(make_stack("vacuum", "vacuum", "vacuum", 50.0),
                           50.0, "free_energy")
    assert ratio.infinite
    assert math.isinf(ratio.ratio)


def test_nonzero_terms_contribution_decomposition():
    assert cf.nonzero_terms_contribution(
        make_stack("vacuum", "vacuum", "vacuum", 30.0), "drude", 30.0) == 0.0

    got = cf.nonzero_terms_contribution(NI_ON_CU, "drude", 30.0)
    assert got == pytest.approx(4194.69, rel=1e-4)

    res = cf.free_energy(make_stack("vacuum", "Ni", "Cu", 30.0), "drude")
    zero_scaled = res.zero_term * 30.0**2 * 1e6
    assert zero_scaled == pytest.approx(-295.103, rel=1e-4)
    assert got + zero_scaled == pytest.approx(res.scaled_micro_ev, rel=1e-12)
