"""Pauli/Dirac algebra and the two-qubit spinor of a free massive fermion.

Basis ordering is ``(|+,↑>, |+,↓>, |-,↑>, |-,↓>)``: qubit 1 is intrinsic
parity (slow index), qubit 2 is spin (fast index). Matrices and states are
plain complex ndarrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "I2",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PARITY_PLUS",
    "PARITY_MINUS",
    "KinematicPoint",
    "AngularGrid",
    "dirac_matrices",
    "dirac_hamiltonian",
    "momentum_direction",
    "helicity_operator",
    "helicity_eigenstates",
    "h_states",
    "spinor_weights",
    "eta_state",
    "eta_states_on_grid",
    "angular_average",
    "pure_density",
]

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PARITY_PLUS = np.array([1, 0], dtype=complex)
PARITY_MINUS = np.array([0, 1], dtype=complex)

_NORM_TOL = 1e-10


@dataclass(frozen=True)
class KinematicPoint:
    """Momentum magnitude and direction of a particle of mass ``m`` (ħ = c = 1)."""

    p: float
    m: float = 1.0
    theta: float = 0.0
    phi: float = 0.0
    energy: float = field(init=False)

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("momentum magnitude must be non-negative")
        if self.m <= 0:
            raise ValueError("mass must be positive")
        object.__setattr__(self, "energy", math.hypot(self.p, self.m))


@dataclass(frozen=True)
class AngularGrid:
    """Product rule on the unit sphere.

    Gauss-Legendre in ``theta`` (with the ``sin(theta)`` Jacobian folded into
    the weights) times the periodic trapezoid rule in ``phi``. Weights are
    normalised so they sum to one, i.e. the rule computes solid-angle averages.
    """

    n_theta: int = 64
    n_phi: int = 128

    def nodes(self):
        x, w = np.polynomial.legendre.leggauss(self.n_theta)
        theta = 0.5 * math.pi * (x + 1.0)
        w_theta = 0.5 * math.pi * w * np.sin(theta)
        phi = 2.0 * math.pi * np.arange(self.n_phi) / self.n_phi
        w_phi = np.full(self.n_phi, 2.0 * math.pi / self.n_phi)
        th, ph = np.meshgrid(theta, phi, indexing="ij")
        weights = np.outer(w_theta, w_phi) / (4.0 * math.pi)
        return th.ravel(), ph.ravel(), weights.ravel()


def dirac_matrices() -> dict[str, np.ndarray]:
    """Dirac-representation matrices written as two-qubit Kronecker products."""
    sig = (SIGMA_X, SIGMA_Y, SIGMA_Z)
    mats = {
        "alpha_x": np.kron(SIGMA_X, SIGMA_X),
        "alpha_y": np.kron(SIGMA_X, SIGMA_Y),
        "alpha_z": np.kron(SIGMA_X, SIGMA_Z),
        "beta": np.kron(SIGMA_Z, I2),
        "gamma0": np.kron(SIGMA_Z, I2),
    }
    for i, s in enumerate(sig, start=1):
        mats[f"gamma{i}"] = np.kron(1j * SIGMA_Y, s)
    mats["gamma5"] = np.kron(SIGMA_X, I2)
    return mats


def momentum_direction(theta, phi):
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    return np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1
    )


def helicity_operator(theta: float, phi: float) -> np.ndarray:
    """``p̂·σ`` for the direction ``(theta, phi)``."""
    n = momentum_direction(theta, phi)
    return n[0] * SIGMA_X + n[1] * SIGMA_Y + n[2] * SIGMA_Z


def dirac_hamiltonian(kin: KinematicPoint, reverse_momentum: bool = False) -> np.ndarray:
    """``α·p + m β`` at the given kinematic point (``α·(-p) + m β`` if reversed)."""
    mats = dirac_matrices()
    sign = -1.0 if reverse_momentum else 1.0
    px, py, pz = sign * kin.p * momentum_direction(kin.theta, kin.phi)
    return px * mats["alpha_x"] + py * mats["alpha_y"] + pz * mats["alpha_z"] + kin.m * mats["beta"]


def helicity_eigenstates(theta, phi):
    """Eigenvectors of ``p̂·σ`` with eigenvalues +1 and -1.

    Phase convention: the ``|↑>`` amplitude of ``Ω+`` is ``cos(theta/2) ≥ 0``.
    Array arguments broadcast; the spinor index is the last axis.
    """
    theta = np.asarray(theta, dtype=float)
    phase = np.exp(1j * np.asarray(phi, dtype=float))
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    omega_plus = np.stack(np.broadcast_arrays(c + 0j, phase * s), axis=-1)
    omega_minus = np.stack(np.broadcast_arrays(s + 0j, -phase * c), axis=-1)
    return omega_plus, omega_minus


def h_states(theta, phi, chi: float, mu: float):
    """``h± = cos χ Ω+ ± e^{iμ} sin χ Ω-``; ``h-`` equals ``(p̂·σ) h+``."""
    omega_plus, omega_minus = helicity_eigenstates(theta, phi)
    a = math.cos(chi)
    b = np.exp(1j * mu) * math.sin(chi)
    return a * omega_plus + b * omega_minus, a * omega_plus - b * omega_minus


def spinor_weights(s: int, p, m: float = 1.0):
    """Amplitudes ``(N_s, N_s g_s)`` of the ``|+>h+`` and ``|->h-`` components.

    Both are evaluated without subtractive cancellation:
    ``sqrt((E+m)/2E)`` and ``p / sqrt(2E(E+m))``. For ``s = 1`` the first is the
    large one, for ``s = 0`` the roles swap, so ``p -> 0`` gives ``|->h-``.
    """
    if s not in (0, 1):
        raise ValueError(f"energy branch s must be 0 or 1, got {s!r}")
    p = np.asarray(p, dtype=float)
    energy = np.hypot(p, m)
    large = np.sqrt((energy + m) / (2.0 * energy))
    small = p / np.sqrt(2.0 * energy * (energy + m))
    return (large, small) if s == 1 else (small, large)


def eta_state(s: int, kin: KinematicPoint, chi: float, mu: float) -> np.ndarray:
    """Normalised 4-spinor ``N_s (|+>⊗|h+> + g_s |->⊗|h->)``, ``g_s = p / (E ± m)``.

    For ``s = 1`` this is the ``+E`` eigenvector of ``H(p)``. With the same
    positive ``g_0`` the ``s = 0`` spinor is the ``-E`` eigenvector of
    ``H(-p) = β H(p) β``, i.e. the negative-energy state of reversed momentum.
    """
    h_plus, h_minus = h_states(kin.theta, kin.phi, chi, mu)
    a, b = spinor_weights(s, kin.p, kin.m)
    return float(a) * np.kron(PARITY_PLUS, h_plus) + float(b) * np.kron(PARITY_MINUS, h_minus)


def eta_states_on_grid(s, p, m, theta, phi, chi, mu):
    """Batch version of :func:`eta_state`.

    ``p`` has shape ``(P,)`` and ``theta``/``phi`` shape ``(A,)``; the result
    has shape ``(P, A, 4)``.
    """
    h_plus, h_minus = h_states(theta, phi, chi, mu)
    a, b = spinor_weights(s, np.asarray(p, dtype=float), m)
    out = np.empty((np.size(a), h_plus.shape[0], 4), dtype=complex)
    out[:, :, 0:2] = a[:, None, None] * h_plus[None]
    out[:, :, 2:4] = b[:, None, None] * h_minus[None]
    return out


_KINDS = {"pp": (0, 0), "mm": (1, 1), "pm": (0, 1), "mp": (1, 0)}


def angular_average(kind: str, chi: float, mu: float, grid: AngularGrid | None = None) -> np.ndarray:
    """Solid-angle average of ``|h_a><h_b|`` by direct quadrature.

    ``kind`` is one of ``"pp"``, ``"mm"``, ``"pm"``, ``"mp"`` where ``p`` means
    ``h+`` and ``m`` means ``h-`` (``"pm"`` is ``|h+><h-|``).
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {sorted(_KINDS)}, got {kind!r}")
    grid = grid or AngularGrid()
    theta, phi, w = grid.nodes()
    states = h_states(theta, phi, chi, mu)
    ia, ib = _KINDS[kind]
    return np.einsum("k,ka,kb->ab", w, states[ia], states[ib].conj())


def pure_density(state) -> np.ndarray:
    """Projector ``|ψ><ψ|`` onto a unit-norm state."""
    state = np.asarray(state, dtype=complex)
    norm2 = float(np.vdot(state, state).real)
    if abs(norm2 - 1.0) > _NORM_TOL:
        raise ValueError(f"state is not normalised (norm^2 = {norm2!r})")
    return np.outer(state, state.conj())
