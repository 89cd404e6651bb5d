"""Thermal weights of the parity blocks.

Run with ``python3 demos/01_thermal_coefficients.py``.

At a temperature ``t_m = kT/mc^2`` the momentum of a free fermion follows a
Fermi-Dirac law. Averaging the spinor over that law leaves three numbers:
the weight ``M++`` of the positive-parity block, ``M--`` of the negative one,
and ``M+-`` coupling them.
"""

import numpy as np

from fermiparity import coefficients, kelvin_from_tm
from fermiparity.thermal import ASYMPTOTIC_MM_CONSTANT, ASYMPTOTIC_PM_CONSTANT

# %% A few temperatures, cold to hot
print(f"{'t_m':>8} {'kelvin (e-)':>12} {'M++':>10} {'M--':>12} {'M+-':>10}")
for t in (1e-10, 1e-5, 1e-2, 1e-1, 1.0, 10.0, 1e2, 1e5):
    c = coefficients(1, t)
    print(f"{t:8.0e} {kelvin_from_tm(t):12.3e} {c.m_pp:10.6f} {c.m_mm:12.5e} {c.m_pm:10.6f}")

# %% Cold limit: M-- ~ C2 t^2 and M+- ~ C1 t
for t in (1e-2, 1e-4, 1e-6):
    c = coefficients(1, t)
    print(f"t={t:g}: M--/t^2 = {c.m_mm / t**2:.8f} (-> {ASYMPTOTIC_MM_CONSTANT:.8f}), "
          f"M+-/t = {c.m_pm / t:.8f} (-> {ASYMPTOTIC_PM_CONSTANT:.8f})")

# %% The curve behind the usual log-temperature plot
grid = np.logspace(-3, 3, 13)
rows = np.array([coefficients(1, float(t)).as_tuple() for t in grid])
print("monotone M++ decreasing:", bool(np.all(np.diff(rows[:, 0]) <= 0)))
print("monotone M-- increasing:", bool(np.all(np.diff(rows[:, 1]) >= 0)))

# %% The antiparticle branch just swaps the diagonal weights
c1, c0 = coefficients(1, 1.0), coefficients(0, 1.0)
print("s=1:", c1.as_tuple())
print("s=0:", c0.as_tuple())
