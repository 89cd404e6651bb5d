"""Temperature sweeps producing one flat record per reduced temperature."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

import numpy as np

from . import qinfo
from .thermal import coefficients

MAX_POINTS = 100_000


@dataclass(frozen=True)
class SweepSpec:
    t_min: float = 1e-3
    t_max: float = 1e3
    points: int = 61
    log_spaced: bool = True
    chi: float = math.pi / 4
    mu: float = 0.0
    s: int = 1

    def __post_init__(self):
        if not (self.t_min > 0 and self.t_max > self.t_min):
            raise ValueError("sweep needs 0 < t_min < t_max")
        if not 2 <= self.points <= MAX_POINTS:
            raise ValueError(f"points must be in [2, {MAX_POINTS}]")
        # validates chi, mu, s
        qinfo.ModelParams(self.s, self.t_min, self.chi, self.mu)

    def temperatures(self) -> np.ndarray:
        if self.log_spaced:
            t = np.logspace(math.log10(self.t_min), math.log10(self.t_max), self.points)
        else:
            t = np.linspace(self.t_min, self.t_max, self.points)
        # pin the endpoints exactly so they line up with tabulated rows
        t[0], t[-1] = self.t_min, self.t_max
        return t


@dataclass(frozen=True)
class OutputRecord:
    t_m: float
    m_pp: float
    m_mm: float
    m_pm: float
    h_pp: float
    entropy_rho1: float
    entropy_rho2: float
    entropy_rho12: float
    mutual_info: float
    min_pt_eig: float


COLUMNS = tuple(f.name for f in fields(OutputRecord))


def output_record(params: qinfo.ModelParams) -> OutputRecord:
    c = coefficients(params.s, params.t_m)
    rho = qinfo.assemble_rho12(params, c).matrix
    h1 = qinfo.spectral_data(qinfo.reduce_parity(rho)).entropy_nats
    h2 = qinfo.spectral_data(qinfo.reduce_helicity(rho)).entropy_nats
    h12 = qinfo.spectral_data(rho).entropy_nats
    mi = h1 + h2 - h12
    if mi < -1e-9:
        raise ArithmeticError(f"negative mutual information {mi!r} at {params}")
    return OutputRecord(
        t_m=params.t_m,
        m_pp=c.m_pp,
        m_mm=c.m_mm,
        m_pm=c.m_pm,
        h_pp=qinfo.helicity_populations(c, params.chi, params.mu)[0],
        entropy_rho1=h1,
        entropy_rho2=h2,
        entropy_rho12=h12,
        mutual_info=max(0.0, mi),
        min_pt_eig=qinfo.ppt_check(rho).min_pt_eigenvalue,
    )


def _record_at(args) -> OutputRecord:
    s, t, chi, mu = args
    return output_record(qinfo.ModelParams(s, float(t), chi, mu))


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list[OutputRecord]:
    """Evaluate every temperature of ``spec``; output order follows the grid."""
    tasks = [(spec.s, t, spec.chi, spec.mu) for t in spec.temperatures()]
    if jobs <= 1:
        return [_record_at(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_record_at, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def format_value(x: float) -> str:
    return format(x, ".17g")


def to_csv(records: list[OutputRecord], columns=COLUMNS) -> str:
    unknown = set(columns) - set(COLUMNS)
    if unknown:
        raise ValueError(f"unknown columns: {sorted(unknown)}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        row = asdict(rec)
        writer.writerow([format_value(row[c]) for c in columns])
    return buf.getvalue()
