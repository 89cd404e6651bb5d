"""Fermi-Dirac momentum weights and the parity-block coefficients.

All temperatures are ``t_m = kT / mc^2``. In terms of ``q = p / T`` the
coefficients are one-dimensional integrals over the normalised radial density
``q^2 / (e^q + 1)``:

* ``m_pp``, ``m_mm`` -- weights of the positive/negative parity blocks,
* ``m_pm`` -- weight of the parity-transition block.

For ``s = 1`` (particles) ``m_pp`` is the large one; ``s = 0`` swaps them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta

from .numerics import QuadratureError, fermi_occupation, integrate_semi_infinite

__all__ = [
    "ThermalCoefficients",
    "fermi_dirac_pdf",
    "stable_defect",
    "coefficients",
    "coefficients_asymptotic",
    "kelvin_from_tm",
    "ASYMPTOTIC_MM_CONSTANT",
    "ASYMPTOTIC_PM_CONSTANT",
    "ASYMPTOTIC_MAX_TM",
    "DEFAULT_COEFF_TOL",
    "REFERENCE_TABLE_I",
    "REFERENCE_TABLE_II",
]

ZETA3 = float(zeta(3))
_PDF_NORM = 2.0 / (3.0 * ZETA3)
_COEFF_NORM = 1.0 / (3.0 * ZETA3)

# Leading small-T behaviour: m_mm ~ C2 t^2, m_pm ~ C1 t (particle branch).
ASYMPTOTIC_MM_CONSTANT = 15.0 * float(zeta(5)) / (4.0 * ZETA3)
ASYMPTOTIC_PM_CONSTANT = 7.0 * math.pi**4 / (360.0 * ZETA3)
ASYMPTOTIC_MAX_TM = 1e-3

DEFAULT_COEFF_TOL = 1e-13

BOLTZMANN_EV_PER_K = 8.617e-5
ELECTRON_REST_ENERGY_EV = 5.11e5

# Reference coefficient tables, particle branch: t_m -> (M++, M--, M+-).
REFERENCE_TABLE_I = {
    1e5: (0.50000, 0.50000, 0.50000),
    1e2: (0.50228, 0.49772, 0.49999),
    1e1: (0.52264, 0.47736, 0.49912),
    1e0: (0.68587, 0.31413, 0.45246),
    1e-1: (0.97298, 2.7021e-2, 0.14465),
    1e-2: (0.99968, 3.2275e-4, 1.5741e-2),
    1e-5: (1.0000, 3.2349e-10, 1.5757e-5),
    1e-10: (1.0000, 3.2349e-20, 1.5757e-10),
    1e-12: (1.0000, 3.2349e-24, 1.5757e-12),
}
# t_m -> M++ - M-- for s = 1; the last row stands for every t_m <= 1e-5.
REFERENCE_TABLE_II = {
    1e5: 0.0,
    1e2: 0.00456,
    1e1: 0.04528,
    1e0: 0.37174,
    1e-1: 0.94596,
    1e-2: 0.99936,
    1e-5: 1.0,
}


@dataclass(frozen=True)
class ThermalCoefficients:
    m_pp: float
    m_mm: float
    m_pm: float
    s: int
    t_m: float
    abs_error_estimate: float = 0.0

    def __post_init__(self):
        if self.s not in (0, 1):
            raise ValueError(f"energy branch s must be 0 or 1, got {self.s!r}")
        if not self.t_m > 0:
            raise ValueError("t_m must be positive")

    @property
    def parity_imbalance(self) -> float:
        return self.m_pp - self.m_mm

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.m_pp, self.m_mm, self.m_pm)


def fermi_dirac_pdf(q):
    """Normalised radial density ``2 q^2 / (3 ζ(3) (e^q + 1))`` in ``q = p/T``."""
    q = np.asarray(q, dtype=float)
    if np.any(q < 0):
        raise ValueError("fermi_dirac_pdf is defined for q >= 0")
    out = _PDF_NORM * q * q * fermi_occupation(q)
    return float(out) if out.ndim == 0 else out


def stable_defect(x):
    """``1 - 1/sqrt(1+x)`` computed as ``x / (sqrt(1+x) (1 + sqrt(1+x)))``."""
    x = np.asarray(x, dtype=float)
    root = np.sqrt(1.0 + x)
    out = x / (root * (1.0 + root))
    return float(out) if out.ndim == 0 else out


def _check_branch(s, t_m):
    if s not in (0, 1):
        raise ValueError(f"energy branch s must be 0 or 1, got {s!r}")
    if not (t_m > 0 and math.isfinite(t_m)):
        raise ValueError(f"t_m must be positive and finite, got {t_m!r}")


def coefficients(s: int, t_m: float, abs_tol: float = DEFAULT_COEFF_TOL) -> ThermalCoefficients:
    """Thermal coefficients by adaptive quadrature.

    The small block weight and the transition weight are integrated with
    ``min(1, t_m^2)`` and ``min(1, t_m)`` factored out, so values far below
    ``abs_tol`` still come out with full relative accuracy.
    """
    _check_branch(s, t_m)
    t2 = t_m * t_m
    small_scale = min(1.0, t2)
    pm_scale = min(1.0, t_m)

    def integrand(q):
        x = t2 * q * q
        root = np.sqrt(1.0 + x)
        occ = fermi_occupation(q)
        q2 = q * q
        large = q2 * (1.0 + 1.0 / root)
        if small_scale < 1.0:
            small = q2 * q2 / (root * (1.0 + root))
        else:
            small = q2 * stable_defect(x)
        transition = (t_m / pm_scale) * q2 * q / root
        return np.stack([large, small, transition], axis=-1) * occ[:, None]

    res = integrate_semi_infinite(integrand, abs_tol / _COEFF_NORM)
    if not res.converged:
        raise QuadratureError(
            f"thermal coefficients did not converge at s={s}, t_m={t_m!r}: "
            f"error estimate {res.abs_error_estimate:.3e}"
        )
    large, small, transition = _COEFF_NORM * np.asarray(res.value)
    small *= small_scale
    transition *= pm_scale
    m_pp, m_mm = (large, small) if s == 1 else (small, large)
    return ThermalCoefficients(
        m_pp=float(m_pp),
        m_mm=float(m_mm),
        m_pm=float(transition),
        s=s,
        t_m=float(t_m),
        abs_error_estimate=_COEFF_NORM * res.abs_error_estimate,
    )


def coefficients_asymptotic(s: int, t_m: float) -> ThermalCoefficients:
    """Leading-order small-temperature coefficients (valid for ``t_m <= 1e-3``)."""
    _check_branch(s, t_m)
    if t_m > ASYMPTOTIC_MAX_TM:
        raise ValueError(
            f"small-temperature expansion requires t_m <= {ASYMPTOTIC_MAX_TM}, got {t_m!r}"
        )
    small = ASYMPTOTIC_MM_CONSTANT * t_m * t_m
    m_pp, m_mm = (1.0 - small, small) if s == 1 else (small, 1.0 - small)
    return ThermalCoefficients(m_pp, m_mm, ASYMPTOTIC_PM_CONSTANT * t_m, s, t_m)


def kelvin_from_tm(t_m: float, rest_energy_ev: float = ELECTRON_REST_ENERGY_EV) -> float:
    """Temperature in kelvin for a reduced temperature ``t_m`` and rest energy in eV."""
    if not t_m > 0:
        raise ValueError("t_m must be positive")
    if not rest_energy_ev > 0:
        raise ValueError("rest energy must be positive")
    return t_m * rest_energy_ev / BOLTZMANN_EV_PER_K
