"""``fermi-parity`` command-line entry point.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 self-check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict

import numpy as np

from . import qinfo, sweep, tables
from .numerics import QuadratureError
from .selfcheck import run_selfcheck
from .thermal import DEFAULT_COEFF_TOL, coefficients, kelvin_from_tm

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_SELFCHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> float:
    value = float(text)
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _branch(text: str) -> int:
    if text not in ("0", "1"):
        raise argparse.ArgumentTypeError("s must be 0 or 1")
    return int(text)


def _model_args(p: argparse.ArgumentParser, tm_required=True):
    p.add_argument("--s", type=_branch, default=1, help="energy branch: 1 particle, 0 antiparticle")
    if tm_required:
        p.add_argument("--tm", type=_positive, required=True, help="temperature per unit mass kT/mc^2")
    p.add_argument("--tol", type=_positive, default=DEFAULT_COEFF_TOL, help="absolute quadrature tolerance")


def _angle_args(p: argparse.ArgumentParser):
    p.add_argument("--chi", type=float, default=math.pi / 4, help="mixing angle (radians)")
    p.add_argument("--mu", type=float, default=0.0, help="relative phase (radians)")
    p.add_argument("--deg", action="store_true", help="read --chi and --mu in degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fermi-parity", description="Parity-helicity correlations of a thermal Fermi gas.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coeffs", help="thermal coefficients M++, M--, M+-")
    _model_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table", help="recompute a reference table and compare")
    p.add_argument("which", type=int, choices=(1, 2))
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("state", help="full report on the parity-helicity state")
    _model_args(p)
    _angle_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bits", action="store_true", help="also show entropies in bits")

    p = sub.add_parser("sweep", help="CSV data over a temperature range")
    _model_args(p, tm_required=False)
    _angle_args(p)
    p.add_argument("--tmin", type=_positive, default=1e-3)
    p.add_argument("--tmax", type=_positive, default=1e3)
    p.add_argument("--points", type=int, default=61)
    p.add_argument("--linear", action="store_true", help="linear instead of logarithmic spacing")
    p.add_argument("--columns", default=",".join(sweep.COLUMNS), help="comma-separated column list")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("selfcheck", help="run the invariant suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--inject-fault", type=float, default=0.0, metavar="DELTA", help=argparse.SUPPRESS)
    return parser


def _params(args) -> qinfo.ModelParams:
    chi, mu = args.chi, args.mu
    if args.deg:
        chi, mu = math.radians(chi), math.radians(mu)
    try:
        return qinfo.ModelParams(args.s, getattr(args, "tm", 1.0), chi, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_coeffs(args) -> str:
    c = coefficients(args.s, args.tm, args.tol)
    if args.format == "json":
        return json.dumps(asdict(c), indent=2)
    return " ".join(tables.round_sig(v) for v in c.as_tuple())


def cmd_table(args) -> str:
    cells = tables.table_one() if args.which == 1 else tables.table_two()
    if args.format == "json":
        return json.dumps(
            [
                {
                    "t_m": c.t_m,
                    "column": c.column,
                    "computed": c.computed,
                    "reference": c.reference,
                    "abs_dev": c.abs_dev,
                    "rel_dev": c.rel_dev,
                    "passed": c.passed,
                }
                for c in cells
            ],
            indent=2,
        )
    return tables.render(cells)


def _matrix_json(m: np.ndarray) -> dict:
    return {"real": m.real.tolist(), "imag": m.imag.tolist()}


def state_report(params: qinfo.ModelParams, tol: float = DEFAULT_COEFF_TOL) -> dict:
    c = coefficients(params.s, params.t_m, tol)
    ang = qinfo.angular_coefficients(params.chi, params.mu)
    rho = qinfo.assemble_rho12(params, c).matrix
    rho1 = qinfo.reduce_parity(rho)
    rho2 = qinfo.reduce_helicity(rho)
    rec = sweep.output_record(params)
    ppt = qinfo.ppt_check(rho)
    cc = qinfo.charge_conjugate(rho)
    return {
        "params": asdict(params),
        "kelvin_electron": kelvin_from_tm(params.t_m),
        "coefficients": {"m_pp": c.m_pp, "m_mm": c.m_mm, "m_pm": c.m_pm},
        "angular": {
            "n_plus": ang.n_plus,
            "n_minus": ang.n_minus,
            "nt_plus": [ang.nt_plus.real, ang.nt_plus.imag],
            "nt_minus": [ang.nt_minus.real, ang.nt_minus.imag],
        },
        "rho12": _matrix_json(rho),
        "trace_rho12": float(np.trace(rho).real),
        "eigenvalues_closed": sorted(qinfo.eigvals_closed_rho12(c, ang).tolist(), reverse=True),
        "eigenvalues_numeric": qinfo.hermitian_eigenvalues(rho).tolist(),
        "rho1": _matrix_json(rho1),
        "trace_rho1": float(np.trace(rho1).real),
        "rho1_eigenvalues_closed": qinfo.eigvals_closed_rho1(c, params.chi).tolist(),
        "rho2": _matrix_json(rho2),
        "trace_rho2": float(np.trace(rho2).real),
        "record": asdict(rec),
        "ppt": asdict(ppt),
        "charge_conjugate": {
            "diagonal": np.diag(cc).real.tolist(),
            "eigenvalues": qinfo.hermitian_eigenvalues(cc).tolist(),
            "matches_reconstruction": bool(
                np.max(np.abs(cc - qinfo.conjugated_reconstruction(params, c))) <= 1e-12
            ),
        },
    }


def _fmt_matrix(m: dict) -> list[str]:
    re, im = np.asarray(m["real"]), np.asarray(m["imag"])
    return ["  " + "  ".join(f"{a:+.6f}{b:+.6f}j" for a, b in zip(r, i)) for r, i in zip(re, im)]


def _render_state(rep: dict, bits: bool) -> str:
    g = lambda x: format(x, ".15g")  # noqa: E731
    p, rec = rep["params"], rep["record"]
    lines = [
        f"s = {p['s']}  t_m = {g(p['t_m'])}  chi = {g(p['chi'])}  mu = {g(p['mu'])}",
        f"electron temperature ~ {rep['kelvin_electron']:.4g} K",
        f"M++ = {g(rep['coefficients']['m_pp'])}  M-- = {g(rep['coefficients']['m_mm'])}  "
        f"M+- = {g(rep['coefficients']['m_pm'])}",
        "rho12:",
        *_fmt_matrix(rep["rho12"]),
        f"trace rho12 = {rep['trace_rho12']:.6f}",
        "eigenvalues (closed form): " + " ".join(g(x) for x in rep["eigenvalues_closed"]),
        "eigenvalues (numeric):     " + " ".join(g(x) for x in rep["eigenvalues_numeric"]),
        "rho1 (parity):",
        *_fmt_matrix(rep["rho1"]),
        f"trace rho1 = {rep['trace_rho1']:.6f}",
        "rho2 (helicity):",
        *_fmt_matrix(rep["rho2"]),
        f"trace rho2 = {rep['trace_rho2']:.6f}",
    ]
    for key in ("entropy_rho1", "entropy_rho2", "entropy_rho12", "mutual_info"):
        extra = f"  ({rec[key] / math.log(2):.15g} bits)" if bits else ""
        lines.append(f"{key} = {g(rec[key])} nats{extra}")
    ppt = rep["ppt"]
    lines.append(
        f"PPT: {'separable' if ppt['separable'] else 'entangled'}  "
        f"min PT eigenvalue = {g(ppt['min_pt_eigenvalue'])}  PT(rho) == rho: {ppt['pt_equals_rho']}"
    )
    cc = rep["charge_conjugate"]
    lines.append(
        "charge conjugate: diagonal " + " ".join(g(x) for x in cc["diagonal"])
        + f"  matches swapped reconstruction: {cc['matches_reconstruction']}"
    )
    return "\n".join(lines)


def cmd_state(args) -> str:
    rep = state_report(_params(args), args.tol)
    if args.format == "json":
        return json.dumps(rep, indent=2)
    return _render_state(rep, args.bits)


def cmd_sweep(args) -> str | None:
    params = _params(args)
    columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    try:
        spec = sweep.SweepSpec(args.tmin, args.tmax, args.points, not args.linear, params.chi, params.mu, params.s)
        if set(columns) - set(sweep.COLUMNS):
            raise ValueError(f"unknown columns {sorted(set(columns) - set(sweep.COLUMNS))}")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    records = sweep.run_sweep(spec, jobs=args.jobs)
    if args.format == "json":
        text = json.dumps([{c: asdict(r)[c] for c in columns} for r in records], indent=2) + "\n"
    else:
        text = sweep.to_csv(records, columns)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        return None
    return text.rstrip("\n")


def cmd_selfcheck(args) -> tuple[str, int]:
    results = run_selfcheck(quick=args.quick, perturbation=args.inject_fault)
    lines = [
        f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail} ({r.seconds:.2f} s)" for r in results
    ]
    failed = [r.name for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        lines.append("failed: " + ", ".join(failed))
    return "\n".join(lines), EXIT_SELFCHECK if failed else EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selfcheck":
            text, code = cmd_selfcheck(args)
            print(text)
            return code
        handler = {"coeffs": cmd_coeffs, "table": cmd_table, "state": cmd_state, "sweep": cmd_sweep}[args.command]
        text = handler(args)
    except UsageError as exc:
        print(f"fermi-parity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, ArithmeticError) as exc:
        print(f"fermi-parity: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"fermi-parity: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if text is not None:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
