"""Prefix estimates of row and column densities of a win-lose matrix.

Upper and lower asymptotic densities are limits over ever longer prefixes and
cannot be observed on a finite one. The report gives the prefix frequencies
(1/n) * #{i <= n : entry is 1} and flags a candidate separating pair only as
an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..core import GameOracle
from ..errors import DomainError

CAVEAT = "prefix frequencies only estimate limsup and liminf densities"


@dataclass(frozen=True)
class DensityReport:
    prefix: int
    rows: tuple
    cols: tuple
    row_estimates: tuple  # estimates of the upper density of each listed row
    col_estimates: tuple  # estimates of the lower density of each listed column
    pair: tuple | None  # (alpha, beta) with alpha < beta, or None
    caveat: str = CAVEAT


def _count_row(oracle, s, prefix):
    if oracle.supports_row_ones:
        return sum(1 for t in oracle.row_ones(s) if t <= prefix)
    return sum(oracle.payoff(s, t) for t in range(1, prefix + 1))


def density_report(oracle: GameOracle, prefix: int, rows: Sequence[int] | None = None,
                   cols: Sequence[int] | None = None) -> DensityReport:
    """Frequencies of 1s among the first ``prefix`` entries of each listed line.

    ``rows`` and ``cols`` default to 1..20 (clipped to the oracle's size).
    """
    if prefix < 1:
        raise DomainError("prefix must be at least 1")
    if oracle.n_rows is not None and prefix > oracle.n_rows:
        raise DomainError(f"prefix {prefix} exceeds the {oracle.n_rows} rows of {oracle.name}")
    if oracle.n_cols is not None and prefix > oracle.n_cols:
        raise DomainError(f"prefix {prefix} exceeds the {oracle.n_cols} columns of {oracle.name}")
    rows = tuple(rows) if rows is not None else tuple(range(1, min(20, prefix) + 1))
    cols = tuple(cols) if cols is not None else tuple(range(1, min(20, prefix) + 1))
    row_est = tuple(Fraction(_count_row(oracle, s, prefix), prefix) for s in rows)
    col_est = tuple(
        Fraction(sum(oracle.payoff(s, t) for s in range(1, prefix + 1)), prefix) for t in cols
    )
    alpha, beta = max(row_est), min(col_est)
    pair = (alpha, beta) if alpha < beta else None
    return DensityReport(prefix, rows, cols, row_est, col_est, pair)
