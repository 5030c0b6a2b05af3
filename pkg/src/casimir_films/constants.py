"""Physical constants and unit conversions.

Internal unit system: energies in eV, lengths in nm, temperatures in K.
This keeps Matsubara energies and the dimensionless integration variables
O(1) for every configuration of interest.
"""

from __future__ import annotations

import math

# Boltzmann constant [eV/K]
K_B = 8.617333e-5

# hbar * c [eV nm]
HBARC = 197.327

# hbar [eV s], used only to convert oscillator frequencies given in rad/s
HBAR_EVS = 6.582119569e-16

# 1 eV in J (exact since the 2019 SI)
EV_J = 1.602176634e-19

# free energy per area: 1 eV/nm^2 in J/m^2
EV_PER_NM2_TO_J_PER_M2 = EV_J * 1e18

# pressure: 1 eV/nm^3 in Pa
EV_PER_NM3_TO_PA = EV_J * 1e27


def matsubara_energy(temperature_K: float, l: int) -> float:
    """Matsubara energy xi_l = 2 pi k_B T l in eV (l = 1 gives 0.1624 eV at 300 K)."""
    return 2.0 * math.pi * K_B * temperature_K * l
