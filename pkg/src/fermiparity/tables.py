"""Recompute the reference coefficient tables and compare cell by cell."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .thermal import REFERENCE_TABLE_I, REFERENCE_TABLE_II, coefficients

ABS_TOL = 1e-5
REL_TOL = 1e-3


@dataclass(frozen=True)
class Cell:
    t_m: float
    column: str
    computed: float
    reference: float

    @property
    def abs_dev(self) -> float:
        return abs(self.computed - self.reference)

    @property
    def rel_dev(self) -> float | None:
        if self.reference == 0:
            return None
        return self.abs_dev / abs(self.reference)

    @property
    def passed(self) -> bool:
        return self.abs_dev <= max(ABS_TOL, REL_TOL * abs(self.reference))


def round_sig(x: float, digits: int = 5) -> str:
    """Render ``x`` with ``digits`` significant figures, rounding half away from zero."""
    if x == 0:
        return "0." + "0" * (digits - 1)
    d = Decimal(repr(float(x)))
    exp = d.adjusted()
    q = d.quantize(Decimal(1).scaleb(exp - digits + 1), rounding=ROUND_HALF_UP)
    if q.adjusted() != exp:
        exp = q.adjusted()
        q = d.quantize(Decimal(1).scaleb(exp - digits + 1), rounding=ROUND_HALF_UP)
    if -3 <= exp < 5:
        return f"{q:f}"
    mantissa = q.scaleb(-exp)
    return f"{mantissa:f}e{exp:+03d}"


def table_one() -> list[Cell]:
    cells = []
    for t_m, ref in REFERENCE_TABLE_I.items():
        c = coefficients(1, t_m)
        for name, value, expected in zip(("M++", "M--", "M+-"), c.as_tuple(), ref):
            cells.append(Cell(t_m, name, value, expected))
    return cells


def table_two() -> list[Cell]:
    cells = []
    for t_m, ref in REFERENCE_TABLE_II.items():
        for s, sign in ((1, 1.0), (0, -1.0)):
            c = coefficients(s, t_m)
            cells.append(Cell(t_m, f"s={s}", c.parity_imbalance, sign * ref))
    return cells


def render(cells: list[Cell]) -> str:
    header = f"{'t_m':>8}  {'column':>6}  {'computed':>12}  {'reference':>12}  {'abs dev':>9}  {'rel dev':>9}  result"
    lines = [header, "-" * len(header)]
    for c in cells:
        rel = "-" if c.rel_dev is None else f"{c.rel_dev:.2e}"
        lines.append(
            f"{c.t_m:>8.0e}  {c.column:>6}  {round_sig(c.computed):>12}  {round_sig(c.reference):>12}  "
            f"{c.abs_dev:>9.2e}  {rel:>9}  {'PASS' if c.passed else 'FAIL'}"
        )
    return "\n".join(lines)
