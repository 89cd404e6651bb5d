"""Semi-infinite quadrature and Fermi-Dirac moment constants.

The integrals needed by the thermal model all have the shape
``∫_0^∞ g(q) / (e^q + 1) dq`` with ``g`` growing at most polynomially, so the
integrand decays like ``q^k e^{-q}``. :func:`integrate_semi_infinite` truncates
the range where an analytic tail bound drops below the tolerance and runs a
globally adaptive 7/15-point Gauss-Kronrod scheme on the remaining interval.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.special import expit, zeta

__all__ = [
    "QuadratureError",
    "QuadratureResult",
    "MomentTable",
    "integrate_semi_infinite",
    "fermi_occupation",
    "fermi_moment",
    "moment_table",
    "tail_cutoff",
    "DEFAULT_ABS_TOL",
    "DEFAULT_BUDGET",
]

DEFAULT_ABS_TOL = 1e-12
DEFAULT_BUDGET = 1_000_000

# Kronrod abscissae on [-1, 1] (non-negative half, descending). Odd indices are
# the embedded 7-point Gauss-Legendre nodes.
_XK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# Full 15-point rule laid out left to right.
KRONROD_NODES = np.concatenate([-_XK[:-1], _XK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WK[:-1], _WK[::-1]])
_GAUSS_IDX = np.array([1, 3, 5, 7, 9, 11, 13])
GAUSS_WEIGHTS = np.concatenate([_WG[:-1], _WG[::-1]])

_EVALS_PER_PANEL = KRONROD_NODES.size


class QuadratureError(RuntimeError):
    """Raised when an integrand misbehaves or a quadrature cannot converge."""


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive integration.

    ``value`` is a float for scalar integrands and an ndarray when the
    integrand returns several components per abscissa. ``abs_error_estimate``
    is the max-norm over components.
    """

    value: float | np.ndarray
    abs_error_estimate: float
    evaluations: int
    converged: bool = True
    upper_limit: float = math.inf


@dataclass(frozen=True)
class MomentTable:
    """Closed forms of ``∫_0^∞ q^k / (e^q + 1) dq`` for k = 2, 3, 4."""

    moment_k: dict[int, float] = field(default_factory=dict)
    zeta3: float = 0.0
    zeta4: float = 0.0
    zeta5: float = 0.0


def fermi_occupation(q):
    """``1 / (e^q + 1)`` evaluated without overflow for any real ``q``."""
    return expit(-np.asarray(q, dtype=float))


def fermi_moment(k: int) -> float:
    """Return ``(1 - 2^-k) k! ζ(k+1)`` for k in {2, 3, 4}."""
    if k not in (2, 3, 4):
        raise ValueError(f"fermi_moment supports k in {{2, 3, 4}}, got {k!r}")
    return (1.0 - 2.0**-k) * math.factorial(k) * float(zeta(k + 1))


def moment_table() -> MomentTable:
    return MomentTable(
        moment_k={k: fermi_moment(k) for k in (2, 3, 4)},
        zeta3=float(zeta(3)),
        zeta4=float(zeta(4)),
        zeta5=float(zeta(5)),
    )


def _tail_bound(q: float, degree: int) -> float:
    # ∫_q^∞ x^n e^{-x} dx = e^{-q} Σ_{j≤n} n!/j! q^j
    total = 0.0
    coef = 1.0
    for j in range(degree, -1, -1):
        total += coef * q**j
        coef *= j
    return math.exp(-q) * total


def tail_cutoff(abs_tol: float, degree: int = 4) -> float:
    """Smallest ``Q`` (to 1/8 resolution) with ``∫_Q^∞ q^degree e^{-q} dq < abs_tol/10``."""
    target = abs_tol / 10.0
    lo, hi = 0.0, 1.0
    while _tail_bound(hi, degree) >= target:
        lo, hi = hi, 2.0 * hi
    while hi - lo > 0.125:
        mid = 0.5 * (lo + hi)
        if _tail_bound(mid, degree) >= target:
            lo = mid
        else:
            hi = mid
    return hi


def _panel(f: Callable, a: float, b: float):
    half = 0.5 * (b - a)
    centre = 0.5 * (a + b)
    x = centre + half * KRONROD_NODES
    fx = np.asarray(f(x), dtype=float)
    if fx.shape[:1] != x.shape:
        raise QuadratureError(
            f"integrand returned shape {fx.shape}; expected leading axis of length {x.size}"
        )
    bad = ~np.isfinite(fx)
    if bad.any():
        rows = np.nonzero(bad.reshape(x.size, -1).any(axis=1))[0]
        raise QuadratureError(f"integrand is not finite at q = {float(x[rows[0]])!r}")
    kron = half * np.tensordot(KRONROD_WEIGHTS, fx, axes=1)
    gauss = half * np.tensordot(GAUSS_WEIGHTS, fx[_GAUSS_IDX], axes=1)
    err = float(np.max(np.abs(kron - gauss)))
    return kron, err


def integrate_semi_infinite(
    f: Callable,
    abs_tol: float = DEFAULT_ABS_TOL,
    budget: int = DEFAULT_BUDGET,
    *,
    tail_degree: int = 4,
    upper: float | None = None,
    raise_on_failure: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over ``[0, ∞)``.

    ``f`` is called with a 1-D array of abscissae and must return an array
    whose leading axis matches it (extra trailing axes give a vector-valued
    integral). The range is cut at ``upper`` or, by default, where the tail
    bound of ``q^tail_degree e^{-q}`` falls below ``abs_tol / 10``.

    The panel with the largest error estimate is bisected until the summed
    estimate is at most ``abs_tol`` or ``budget`` evaluations are spent. If the
    budget runs out the result with the smallest estimate seen so far is
    returned with ``converged=False`` (or :class:`QuadratureError` is raised
    when ``raise_on_failure`` is set).
    """
    if not abs_tol > 0:
        raise ValueError("abs_tol must be positive")
    if budget < _EVALS_PER_PANEL:
        raise ValueError(f"budget must allow at least one panel ({_EVALS_PER_PANEL} evaluations)")
    q_max = tail_cutoff(abs_tol, tail_degree) if upper is None else float(upper)

    value, err = _panel(f, 0.0, q_max)
    evaluations = _EVALS_PER_PANEL
    # heap entries: (-err, counter, a, b, value, err); the counter keeps ordering deterministic
    counter = 0
    heap = [(-err, counter, 0.0, q_max, value, err)]
    total = np.array(value, dtype=float)
    total_err = err
    frozen_value = np.zeros_like(total)
    frozen_err = 0.0
    best = (total.copy(), total_err)

    def resum():
        vals = [entry[4] for entry in heap]
        errs = [entry[5] for entry in heap]
        v = frozen_value + (np.sum(vals, axis=0) if vals else 0.0)
        return np.asarray(v, dtype=float), frozen_err + math.fsum(errs)

    converged = False
    while True:
        if total_err <= abs_tol:
            total, total_err = resum()
            if total_err <= abs_tol:
                converged = True
                break
        if not heap or evaluations + 2 * _EVALS_PER_PANEL > budget:
            break
        _, _, a, b, v, e = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not (a < mid < b) or (b - a) <= 4 * np.finfo(float).eps * max(1.0, abs(b)):
            frozen_value = frozen_value + v
            frozen_err += e
            continue
        v1, e1 = _panel(f, a, mid)
        v2, e2 = _panel(f, mid, b)
        evaluations += 2 * _EVALS_PER_PANEL
        counter += 1
        heapq.heappush(heap, (-e1, counter, a, mid, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, mid, b, v2, e2))
        total = total + (v1 + v2 - v)
        total_err = total_err + (e1 + e2 - e)
        if total_err < best[1]:
            best = (total.copy(), total_err)

    if converged:
        out_value, out_err = total, total_err
    else:
        total, total_err = resum()
        out_value, out_err = (total, total_err) if total_err <= best[1] else best
        if raise_on_failure:
            raise QuadratureError(
                f"budget of {budget} evaluations exhausted; error estimate {out_err:.3e} "
                f"exceeds tolerance {abs_tol:.3e}"
            )
    if out_value.ndim == 0:
        out_value = float(out_value)
    return QuadratureResult(
        value=out_value,
        abs_error_estimate=float(out_err),
        evaluations=evaluations,
        converged=converged,
        upper_limit=q_max,
    )
