"""Casimir free energy and pressure of thin metallic films.

Lifshitz theory at finite temperature for a film between two arbitrary
half-spaces, with the film metal described by either the Drude or the
plasma permittivity model. The two models differ qualitatively: under
Drude the large-thickness (classical) free energy saturates at a nonzero
l = 0 value, under plasma it decays exponentially; magnetic films on
magnetic substrates can even switch the interaction sign.
"""

from .analytic_limits import (ZETA3, DimensionlessFilm, ZeroFreqCoefficients,
                              drude_zero_free_energy, drude_zero_pressure,
                              ideal_metal_limit, plasma_zero_free_energy,
                              plasma_zero_pressure, polylog3, zero_coeffs,
                              zero_term)
from .constants import (EV_PER_NM2_TO_J_PER_M2, EV_PER_NM3_TO_PA, HBARC, K_B,
                        matsubara_energy)
from .lifshitz_core import (ConvergenceError, LayerStack, MatsubaraSettings,
                            SpectralResult, free_energy, matsubara_term,
                            pressure, radial_wavenumber, reflection,
                            resolve_stack)
from .materials import (DrudeParams, MaterialResponse, OpticalDataTable,
                        OscillatorParams, PlasmaParams, builtin_registry,
                        for_model, kramers_kronig, load_registry,
                        matsubara_grid, permeability, permittivity)
from .quadrature import QuadratureError, integrate, integrate_rows
from .scan_tools import (CrossingReport, ModelRatio, NoCrossingError,
                         ScanRecord, classical_limit_deviation,
                         default_scan_grid, find_sign_change, model_ratio,
                         nonzero_terms_contribution, thickness_scan)

__version__ = "0.1.0"

__all__ = [
    "ZETA3", "DimensionlessFilm", "ZeroFreqCoefficients",
    "drude_zero_free_energy", "drude_zero_pressure", "ideal_metal_limit",
    "plasma_zero_free_energy", "plasma_zero_pressure", "polylog3",
    "zero_coeffs", "zero_term",
    "EV_PER_NM2_TO_J_PER_M2", "EV_PER_NM3_TO_PA", "HBARC", "K_B",
    "matsubara_energy",
    "ConvergenceError", "LayerStack", "MatsubaraSettings", "SpectralResult",
    "free_energy", "matsubara_term", "pressure", "radial_wavenumber",
    "reflection", "resolve_stack",
    "DrudeParams", "MaterialResponse", "OpticalDataTable", "OscillatorParams",
    "PlasmaParams", "builtin_registry", "for_model", "kramers_kronig",
    "load_registry", "matsubara_grid", "permeability", "permittivity",
    "QuadratureError", "integrate", "integrate_rows",
    "CrossingReport", "ModelRatio", "NoCrossingError", "ScanRecord",
    "classical_limit_deviation", "default_scan_grid", "find_sign_change",
    "model_ratio", "nonzero_terms_contribution", "thickness_scan",
    "__version__",
]
