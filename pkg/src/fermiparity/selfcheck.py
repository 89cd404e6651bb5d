"""Fast invariant suite backing the ``selfcheck`` command."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import dirac, qinfo
from .numerics import fermi_moment, fermi_occupation, integrate_semi_infinite
from .tables import ABS_TOL, REL_TOL
from .thermal import REFERENCE_TABLE_I, coefficients, fermi_dirac_pdf


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


_ANGLES = [(0.3, 0.2), (1.1, 2.9), (2.7, 5.5)]
_MIXINGS = [(math.pi / 4, 0.0), (math.pi / 8, math.pi / 2), (1.0, 4.0)]


def _clifford(_):
    m = dirac.dirac_matrices()
    alphas = [m["alpha_x"], m["alpha_y"], m["alpha_z"]]
    eye = np.eye(4)
    worst = np.max(np.abs(m["beta"] @ m["beta"] - eye))
    for k, a in enumerate(alphas):
        worst = max(worst, np.max(np.abs(a @ m["beta"] + m["beta"] @ a)))
        for l, b in enumerate(alphas):
            worst = max(worst, np.max(np.abs(a @ b + b @ a - 2 * (k == l) * eye)))
    g5 = 1j * m["gamma0"] @ m["gamma1"] @ m["gamma2"] @ m["gamma3"]
    worst = max(worst, np.max(np.abs(g5 - m["gamma5"])))
    return worst <= 1e-14, f"max deviation {worst:.1e}"


def _h_overlaps(_):
    worst = 0.0
    for theta, phi in _ANGLES:
        for chi, mu in _MIXINGS:
            hp, hm = dirac.h_states(theta, phi, chi, mu)
            worst = max(
                worst,
                abs(np.vdot(hp, hp) - 1),
                abs(np.vdot(hm, hm) - 1),
                abs(np.vdot(hp, hm) - math.cos(2 * chi)),
                np.max(np.abs(dirac.helicity_operator(theta, phi) @ hp - hm)),
            )
    return worst <= 1e-12, f"max deviation {worst:.1e}"


def _angular(_):
    worst = 0.0
    for chi, mu in _MIXINGS[:2]:
        ang = qinfo.angular_coefficients(chi, mu)
        expected = {
            "pp": np.diag([ang.n_plus, ang.n_minus]),
            "mm": np.diag([ang.n_minus, ang.n_plus]),
            "pm": np.diag([ang.nt_plus, ang.nt_minus]),
            "mp": np.diag([ang.nt_minus, ang.nt_plus]),
        }
        for kind, target in expected.items():
            worst = max(worst, np.max(np.abs(dirac.angular_average(kind, chi, mu) - target)))
    return worst <= 1e-10, f"max deviation {worst:.1e}"


def _pdf_norm(_):
    res = integrate_semi_infinite(fermi_dirac_pdf, 1e-12)
    moments = max(
        abs(integrate_semi_infinite(lambda q, k=k: q**k * fermi_occupation(q)).value - fermi_moment(k))
        for k in (2, 3, 4)
    )
    ok = abs(res.value - 1) <= 1e-10 and moments <= 1e-11
    return ok, f"|∫pdf - 1| = {abs(res.value - 1):.1e}, moment deviation {moments:.1e}"


def _dirac_eigen(_):
    worst = 0.0
    for s in (0, 1):
        for p in (0.0, 1e-6, 1.0, 30.0):
            kin = dirac.KinematicPoint(p, 1.0, 1.2, 0.4)
            eta = dirac.eta_state(s, kin, 0.5, 1.3)
            energy = (1 if s == 1 else -1) * kin.energy
            ham = dirac.dirac_hamiltonian(kin, reverse_momentum=(s == 0))
            worst = max(worst, np.max(np.abs(ham @ eta - energy * eta)))
            worst = max(worst, abs(np.vdot(eta, eta) - 1))
    return worst <= 1e-10, f"max residual {worst:.1e}"


def _thermal_grid(perturb):
    worst_sum = 0.0
    worst_cs = 0.0
    for t in np.logspace(-12, 5, 18):
        c = coefficients(1, float(t))
        m_pp = c.m_pp + perturb
        worst_sum = max(worst_sum, abs(m_pp + c.m_mm - 1))
        worst_cs = max(worst_cs, c.m_pm**2 - m_pp * c.m_mm)
    ok = worst_sum <= 1e-10 and worst_cs <= 1e-12
    return ok, f"max |M++ + M-- - 1| = {worst_sum:.1e}, max CS violation {worst_cs:.1e}"


def _table_rows(perturb, quick=False):
    rows = [1.0] if quick else list(REFERENCE_TABLE_I)
    failures = []
    for t in rows:
        c = coefficients(1, t)
        got = (c.m_pp + perturb, c.m_mm, c.m_pm)
        for value, ref in zip(got, REFERENCE_TABLE_I[t]):
            if abs(value - ref) > max(ABS_TOL, REL_TOL * abs(ref)):
                failures.append(f"t_m={t:g}: {value:.6g} vs {ref:.6g}")
    return not failures, "; ".join(failures) or f"{len(rows)} row(s) within tolerance"


def _oracle(_, quick=False):
    points = [qinfo.ModelParams(1, 1.0, math.pi / 4, 0.0)]
    if not quick:
        points += [
            qinfo.ModelParams(0, 1e-3, math.pi / 8, math.pi / 2),
            qinfo.ModelParams(1, 1e2, math.pi / 8, math.pi / 2),
        ]
    worst = 0.0
    for p in points:
        closed = qinfo.assemble_rho12(p).matrix
        brute = qinfo.rho12_from_spinor_integral(p).matrix
        worst = max(worst, np.max(np.abs(closed - brute)))
    return worst <= 1e-8, f"{len(points)} point(s), max deviation {worst:.1e}"


def _spectra_ppt_cc(_):
    worst_eig = worst_pt = worst_cc = 0.0
    min_pt = math.inf
    for s in (0, 1):
        for t in (1e-3, 1.0, 1e2):
            for chi, mu in _MIXINGS[:2]:
                p = qinfo.ModelParams(s, t, chi, mu)
                c = coefficients(s, t)
                rho = qinfo.assemble_rho12(p, c).matrix
                closed = np.sort(qinfo.eigvals_closed_rho12(c, qinfo.angular_coefficients(chi, mu)))[::-1]
                worst_eig = max(worst_eig, np.max(np.abs(closed - qinfo.hermitian_eigenvalues(rho))))
                res = qinfo.ppt_check(rho)
                worst_pt = max(worst_pt, np.max(np.abs(qinfo.partial_transpose(rho) - rho)))
                min_pt = min(min_pt, res.min_pt_eigenvalue)
                cc = qinfo.charge_conjugate(rho)
                worst_cc = max(worst_cc, np.max(np.abs(cc - qinfo.conjugated_reconstruction(p, c))))
    ok = worst_eig <= 1e-12 and worst_pt <= 1e-12 and min_pt >= -1e-10 and worst_cc <= 1e-12
    return ok, (
        f"eigen {worst_eig:.1e}, PT-rho {worst_pt:.1e}, min PT eig {min_pt:.2e}, C-swap {worst_cc:.1e}"
    )


def run_selfcheck(quick: bool = False, perturbation: float = 0.0) -> list[CheckResult]:
    """Run the invariant suite. ``perturbation`` shifts ``M++`` to inject a fault."""
    checks: list[tuple[str, Callable]] = [
        ("clifford relations", _clifford),
        ("h-state overlaps", _h_overlaps),
        ("angular averages", _angular),
        ("fermi-dirac normalisation", _pdf_norm),
        ("spinor eigen-residual", _dirac_eigen),
        ("table I spot rows", lambda d: _table_rows(d, quick)),
        ("coefficient invariants", _thermal_grid),
        ("closed form vs spinor integral", lambda d: _oracle(d, quick)),
    ]
    if not quick:
        checks.append(("spectra, PPT, charge conjugation", _spectra_ppt_cc))
    results = []
    for name, fn in checks:
        start = time.perf_counter()
        try:
            ok, detail = fn(perturbation)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail, time.perf_counter() - start))
    return results
