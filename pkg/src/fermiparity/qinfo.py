"""Parity-helicity density matrix and its quantum-information content.

The thermal state of the two intrinsic qubits is block structured in the
basis ``(|+,↑>, |+,↓>, |-,↑>, |-,↓>)``::

    [ n+ M++    0      ñ+ M+-    0    ]
    [   0     n- M++     0     ñ- M+- ]
    [ ñ- M+-    0      n- M--    0    ]
    [   0     ñ+ M+-     0     n+ M-- ]

with ``n±`` and ``ñ±`` the solid-angle averages of the helicity projectors
and ``M`` the thermal coefficients. :func:`rho12_from_spinor_integral`
rebuilds the same matrix by brute-force integration of ``|η><η|`` and serves
as an independent check on the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import dirac
from .numerics import QuadratureError, integrate_semi_infinite
from .thermal import ThermalCoefficients, coefficients, fermi_dirac_pdf

__all__ = [
    "ModelParams",
    "AngularCoefficients",
    "TwoQubitDensity",
    "SpectralData",
    "PPTResult",
    "angular_coefficients",
    "assemble_from_parts",
    "assemble_rho12",
    "rho12_from_spinor_integral",
    "partial_trace",
    "partial_transpose",
    "hermitian_eigenvalues",
    "reduce_parity",
    "rho1_closed",
    "reduce_helicity",
    "helicity_populations",
    "eigvals_closed_rho12",
    "eigvals_closed_rho1",
    "von_neumann_entropy",
    "spectral_data",
    "mutual_information",
    "ppt_check",
    "charge_conjugate",
    "charge_conjugation_operator",
    "conjugated_reconstruction",
]

EIG_CLAMP = 1e-10
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10

_C_UNITARY = np.kron(dirac.SIGMA_Y, dirac.SIGMA_Y)


@dataclass(frozen=True)
class ModelParams:
    """Energy branch ``s`` (1 particle, 0 antiparticle), ``t_m``, mixing angle and phase."""

    s: int = 1
    t_m: float = 1.0
    chi: float = math.pi / 4
    mu: float = 0.0

    def __post_init__(self):
        if self.s not in (0, 1):
            raise ValueError(f"s must be 0 or 1, got {self.s!r}")
        if not (self.t_m > 0 and math.isfinite(self.t_m)):
            raise ValueError(f"t_m must be positive and finite, got {self.t_m!r}")
        if not 0.0 <= self.chi <= math.pi:
            raise ValueError(f"chi must lie in [0, pi], got {self.chi!r}")
        if not 0.0 <= self.mu < 2 * math.pi:
            raise ValueError(f"mu must lie in [0, 2 pi), got {self.mu!r}")


@dataclass(frozen=True)
class AngularCoefficients:
    n_plus: float
    n_minus: float
    nt_plus: complex
    nt_minus: complex

    def swapped_tilde(self) -> "AngularCoefficients":
        return AngularCoefficients(self.n_plus, self.n_minus, self.nt_minus, self.nt_plus)


@dataclass(frozen=True)
class TwoQubitDensity:
    matrix: np.ndarray
    params: ModelParams | None = None


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: np.ndarray
    entropy_nats: float


@dataclass(frozen=True)
class PPTResult:
    separable: bool
    min_pt_eigenvalue: float
    pt_equals_rho: bool


def angular_coefficients(chi: float, mu: float) -> AngularCoefficients:
    """Closed-form solid-angle averages ``n±`` and ``ñ±``."""
    offset = (math.pi / 8) * math.sin(2 * chi)
    n_plus = 0.5 + offset * math.cos(mu)
    real = 0.5 * math.cos(2 * chi)
    imag = offset * math.sin(mu)
    return AngularCoefficients(
        n_plus=n_plus,
        n_minus=1.0 - n_plus,
        nt_plus=complex(real, imag),
        nt_minus=complex(real, -imag),
    )


def assemble_from_parts(
    ang: AngularCoefficients, m_pp: float, m_mm: float, m_pm: float
) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = ang.n_plus * m_pp
    rho[1, 1] = ang.n_minus * m_pp
    rho[2, 2] = ang.n_minus * m_mm
    rho[3, 3] = ang.n_plus * m_mm
    rho[0, 2] = ang.nt_plus * m_pm
    rho[2, 0] = ang.nt_minus * m_pm
    rho[1, 3] = ang.nt_minus * m_pm
    rho[3, 1] = ang.nt_plus * m_pm
    return rho


def assemble_rho12(params: ModelParams, coeffs: ThermalCoefficients | None = None) -> TwoQubitDensity:
    """Closed-form thermal density matrix of the parity and helicity qubits."""
    if coeffs is None:
        coeffs = coefficients(params.s, params.t_m)
    if coeffs.s != params.s or not math.isclose(coeffs.t_m, params.t_m, rel_tol=1e-12):
        raise ValueError(
            f"coefficients were computed for (s={coeffs.s}, t_m={coeffs.t_m}) "
            f"but params ask for (s={params.s}, t_m={params.t_m})"
        )
    if abs(coeffs.m_pp + coeffs.m_mm - 1.0) > TRACE_TOL:
        raise ValueError(f"non-physical coefficients: M++ + M-- = {coeffs.m_pp + coeffs.m_mm!r}")
    ang = angular_coefficients(params.chi, params.mu)
    return TwoQubitDensity(assemble_from_parts(ang, coeffs.m_pp, coeffs.m_mm, coeffs.m_pm), params)


def rho12_from_spinor_integral(
    params: ModelParams,
    tol: float = 1e-11,
    grid: dirac.AngularGrid | None = None,
    mass: float = 1.0,
) -> TwoQubitDensity:
    """Thermal average of ``|η_s(p)><η_s(p)|`` by direct quadrature.

    For every momentum node the spinor is built on a full solid-angle grid and
    the projectors are averaged; the result is then integrated against the
    Fermi-Dirac radial density. Nothing from the closed form is used.
    """
    grid = grid or dirac.AngularGrid(n_theta=32, n_phi=16)
    theta, phi, w = grid.nodes()
    t = params.t_m

    def integrand(q):
        eta = dirac.eta_states_on_grid(params.s, t * mass * q, mass, theta, phi, params.chi, params.mu)
        avg = np.einsum("k,pka,pkb->pab", w, eta, eta.conj())
        weighted = avg * fermi_dirac_pdf(q)[:, None, None]
        flat = weighted.reshape(q.size, 16)
        return np.concatenate([flat.real, flat.imag], axis=1)

    res = integrate_semi_infinite(integrand, tol)
    if not res.converged:
        raise QuadratureError(
            f"spinor integral did not converge for {params}: error estimate {res.abs_error_estimate:.3e}"
        )
    v = np.asarray(res.value)
    rho = (v[:16] + 1j * v[16:]).reshape(4, 4)
    return TwoQubitDensity(rho, params)


def _as_matrix(rho) -> np.ndarray:
    return np.asarray(rho.matrix if isinstance(rho, TwoQubitDensity) else rho, dtype=complex)


def partial_trace(rho, subsystem: int) -> np.ndarray:
    """Trace out qubit ``subsystem`` (1 = parity, 2 = spin) of a 4x4 operator."""
    m = _as_matrix(rho).reshape(2, 2, 2, 2)
    if subsystem == 2:
        return np.einsum("ajbj->ab", m)
    if subsystem == 1:
        return np.einsum("iaib->ab", m)
    raise ValueError(f"subsystem must be 1 or 2, got {subsystem!r}")


def partial_transpose(rho, subsystem: int = 2) -> np.ndarray:
    m = _as_matrix(rho).reshape(2, 2, 2, 2)
    if subsystem == 2:
        return m.transpose(0, 3, 2, 1).reshape(4, 4)
    if subsystem == 1:
        return m.transpose(2, 1, 0, 3).reshape(4, 4)
    raise ValueError(f"subsystem must be 1 or 2, got {subsystem!r}")


def hermitian_eigenvalues(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    m = _as_matrix(m)
    asym = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if asym > HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {asym:.3e})")
    return np.linalg.eigvalsh(m)[::-1]


def reduce_parity(rho) -> np.ndarray:
    return partial_trace(rho, 2)


def rho1_closed(coeffs: ThermalCoefficients, chi: float) -> np.ndarray:
    off = coeffs.m_pm * math.cos(2 * chi)
    return np.array([[coeffs.m_pp, off], [off, coeffs.m_mm]], dtype=complex)


def reduce_helicity(rho) -> np.ndarray:
    return partial_trace(rho, 1)


def helicity_populations(coeffs: ThermalCoefficients, chi: float, mu: float) -> tuple[float, float]:
    """``(H++, H--)``, the diagonal of the reduced helicity state."""
    h_pp = 0.5 + (math.pi / 8) * math.sin(2 * chi) * math.cos(mu) * (coeffs.m_pp - coeffs.m_mm)
    return h_pp, 1.0 - h_pp


def _pair(a: float, b: float, coupling2: float) -> tuple[float, float]:
    radicand = (a - b) ** 2 + 4.0 * coupling2
    if radicand < 0:
        raise ArithmeticError(f"negative radicand {radicand!r}; coefficients are inconsistent")
    root = math.sqrt(radicand)
    return 0.5 * (a + b) + 0.5 * root, 0.5 * (a + b) - 0.5 * root


def eigvals_closed_rho12(coeffs: ThermalCoefficients, ang: AngularCoefficients) -> np.ndarray:
    """Closed-form spectrum ``(λ1, λ2, λ3, λ4)``; ``ñ+ ñ-`` enters as ``|ñ+|^2``."""
    coupling2 = abs(ang.nt_plus) ** 2 * coeffs.m_pm**2
    l1, l2 = _pair(ang.n_minus * coeffs.m_pp, ang.n_plus * coeffs.m_mm, coupling2)
    l3, l4 = _pair(ang.n_plus * coeffs.m_pp, ang.n_minus * coeffs.m_mm, coupling2)
    return np.array([l1, l2, l3, l4])


def eigvals_closed_rho1(coeffs: ThermalCoefficients, chi: float) -> np.ndarray:
    """``(λ+, λ-)`` of the reduced parity state."""
    off = coeffs.m_pm * math.cos(2 * chi)
    root = math.sqrt((coeffs.m_pp - coeffs.m_mm) ** 2 + 4.0 * off * off)
    return np.array([0.5 + 0.5 * root, 0.5 - 0.5 * root])


def von_neumann_entropy(eigs) -> float:
    """``-Σ λ ln λ`` in nats. Eigenvalues within ``1e-10`` below zero count as zero."""
    eigs = np.asarray(eigs, dtype=float)
    if np.any(eigs < -EIG_CLAMP):
        raise ValueError(f"negative eigenvalue {eigs.min()!r}: not a density matrix")
    if abs(eigs.sum() - 1.0) > 1e-8:
        raise ValueError(f"eigenvalues sum to {eigs.sum()!r}, expected 1")
    p = eigs[eigs > 0]
    return float(max(0.0, -np.sum(p * np.log(p))))


def spectral_data(m) -> SpectralData:
    eigs = hermitian_eigenvalues(m)
    return SpectralData(eigenvalues=eigs, entropy_nats=von_neumann_entropy(eigs))


def _entropies(rho: np.ndarray) -> tuple[float, float, float]:
    return (
        spectral_data(partial_trace(rho, 2)).entropy_nats,
        spectral_data(partial_trace(rho, 1)).entropy_nats,
        spectral_data(rho).entropy_nats,
    )


def mutual_information(params: ModelParams, coeffs: ThermalCoefficients | None = None) -> float:
    """Parity-helicity mutual information ``H(ρ1) + H(ρ2) - H(ρ12)`` in nats."""
    rho = assemble_rho12(params, coeffs).matrix
    h1, h2, h12 = _entropies(rho)
    value = h1 + h2 - h12
    if value < -1e-9:
        raise ArithmeticError(f"mutual information {value!r} is negative beyond roundoff")
    return max(0.0, value)


def ppt_check(rho, tol: float = 1e-12) -> PPTResult:
    """Peres-Horodecki test with the transpose taken on the spin qubit."""
    m = _as_matrix(rho)
    pt = partial_transpose(m, 2)
    min_eig = float(hermitian_eigenvalues(pt)[-1])
    return PPTResult(
        separable=min_eig >= -EIG_CLAMP,
        min_pt_eigenvalue=min_eig,
        pt_equals_rho=bool(np.max(np.abs(pt - m)) <= tol),
    )


def charge_conjugation_operator() -> np.ndarray:
    """Unitary part ``σy ⊗ σy`` of the antiunitary charge conjugation."""
    return _C_UNITARY.copy()


def charge_conjugate(rho) -> np.ndarray:
    """``C ρ C^-1`` with ``C = (σy ⊗ σy) K``."""
    m = _as_matrix(rho)
    return _C_UNITARY @ m.conj() @ _C_UNITARY.conj().T


def conjugated_reconstruction(params: ModelParams, coeffs: ThermalCoefficients) -> np.ndarray:
    """Closed-form image of the thermal state under charge conjugation.

    Parity populations swap (``M++ <-> M--``), the complex angular factors swap
    (``ñ+ <-> ñ-``), and the transition weight changes sign because
    ``σy|0> = i|1>`` while ``σy|1> = -i|0>``.
    """
    ang = angular_coefficients(params.chi, params.mu).swapped_tilde()
    return assemble_from_parts(ang, coeffs.m_mm, coeffs.m_pp, -coeffs.m_pm)
