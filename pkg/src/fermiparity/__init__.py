"""Intrinsic parity and helicity of a thermal relativistic Fermi gas as two qubits."""

from .numerics import QuadratureError, QuadratureResult, fermi_moment, integrate_semi_infinite
from .qinfo import (
    ModelParams,
    angular_coefficients,
    assemble_rho12,
    charge_conjugate,
    mutual_information,
    ppt_check,
    rho12_from_spinor_integral,
)
from .thermal import ThermalCoefficients, coefficients, coefficients_asymptotic, kelvin_from_tm

__version__ = "0.1.0"

__all__ = [
    "QuadratureError",
    "QuadratureResult",
    "fermi_moment",
    "integrate_semi_infinite",
    "ModelParams",
    "angular_coefficients",
    "assemble_rho12",
    "charge_conjugate",
    "mutual_information",
    "ppt_check",
    "rho12_from_spinor_integral",
    "ThermalCoefficients",
    "coefficients",
    "coefficients_asymptotic",
    "kelvin_from_tm",
]
