"""Growing truncations of countable games.

Value grids over truncation schedules, the two one-sided estimates of the
minimax gap, column covering by a mixed strategy, and the alternating
construction that extracts a countable core of a game with a gap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    FiniteGame,
    GameOracle,
    MixedStrategy,
    reduced_col_truncation,
    reduced_truncation,
    subgame,
    to_fraction,
    truncate,
)
from .errors import (
    CoverFailure,
    DomainError,
    GapInfeasible,
    ResourceLimitError,
    UnsupportedCapabilityError,
)
from .solver import SolveResult, solve

DEFAULT_SCHEDULE = (1, 2, 4, 8, 16, 32, 64)


@dataclass(frozen=True)
class ValueGrid:
    oracle_name: str
    row_schedule: tuple
    col_schedule: tuple
    values: tuple  # values[i][j] = value of the first n_i rows against the first m_j columns
    results: tuple
    # exact lambda_n = lim_m V[n][m]; present only for oracles whose rows are all finite
    row_limits: tuple | None = None
    row_limit_results: tuple | None = None
    row_limit_cols: tuple | None = None

    def value(self, n: int, m: int) -> Fraction:
        return self.values[self.row_schedule.index(n)][self.col_schedule.index(m)]

    def diagonal(self) -> list[Fraction]:
        k = min(len(self.row_schedule), len(self.col_schedule))
        return [self.values[i][i] for i in range(k)]

    def to_csv(self) -> str:
        lines = ["n\\m," + ",".join(str(m) for m in self.col_schedule)]
        for n, row in zip(self.row_schedule, self.values):
            lines.append(f"{n}," + ",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


def _check_schedule(schedule, what):
    schedule = tuple(int(x) for x in schedule)
    if not schedule or schedule[0] < 1 or any(a >= b for a, b in zip(schedule, schedule[1:])):
        raise DomainError(f"{what} schedule must be strictly increasing naturals, got {schedule}")
    return schedule


def _solve_cell(game, n, m):
    try:
        return solve(game)
    except ResourceLimitError as exc:
        raise ResourceLimitError(f"grid cell (n={n}, m={m}): {exc}") from exc


def value_grid(
    oracle: GameOracle,
    row_schedule: Sequence[int] = DEFAULT_SCHEDULE,
    col_schedule: Sequence[int] = DEFAULT_SCHEDULE,
) -> ValueGrid:
    rows = _check_schedule(row_schedule, "row")
    cols = _check_schedule(col_schedule, "column")
    full = truncate(oracle, rows[-1], cols[-1])
    values, results = [], []
    for n in rows:
        vrow, rrow = [], []
        for m in cols:
            cell = subgame(full, range(1, n + 1), range(1, m + 1))
            res = _solve_cell(cell, n, m)
            vrow.append(res.value)
            rrow.append(res)
        values.append(tuple(vrow))
        results.append(tuple(rrow))

    limits = limit_results = limit_cols = None
    if oracle.supports_row_ones:
        limits, limit_results, limit_cols = [], [], []
        for n in rows:
            # one column past every 1 of rows 1..n is unbeaten by all of them
            m_star = max((max(oracle.row_ones(s), default=0) for s in range(1, n + 1)), default=0) + 1
            res = _solve_cell(truncate(oracle, n, m_star), n, m_star)
            limits.append(res.value)
            limit_results.append(res)
            limit_cols.append(m_star)
        limits, limit_results, limit_cols = tuple(limits), tuple(limit_results), tuple(limit_cols)

    return ValueGrid(oracle.name, rows, cols, tuple(values), tuple(results),
                     limits, limit_results, limit_cols)


@dataclass(frozen=True)
class GapReport:
    upper_estimate: Fraction  # estimates inf_q sup_p
    lower_estimate: Fraction  # estimates sup_p inf_q
    converged: bool
    tol: Fraction
    upper_cell: tuple  # (n, m) whose solve gives the upper witness
    lower_cell: tuple
    lower_exact: bool  # lower_estimate computed from exact row limits
    upper_witness: SolveResult
    lower_witness: SolveResult


def gap_report(grid: ValueGrid, tol=Fraction(0)) -> GapReport:
    """Read the grid in both orders of limits.

    Columns first: for each column budget take the best row budget, then the
    smallest such value (upper estimate). Rows first: for each row budget take
    the column limit, then the largest (lower estimate). The column limit is
    exact when the grid carries row limits; otherwise the last column stands in
    for it and overestimates.
    """
    tol = to_fraction(tol)
    if not grid.values:
        raise DomainError("empty grid")
    K, L = len(grid.row_schedule), len(grid.col_schedule)

    upper, upper_cell = None, None
    for j in range(L):
        i = max(range(K), key=lambda i: (grid.values[i][j], -i))
        if upper is None or grid.values[i][j] < upper:
            upper, upper_cell = grid.values[i][j], (i, j)
    upper_witness = grid.results[upper_cell[0]][upper_cell[1]]

    if grid.row_limits is not None:
        i = max(range(K), key=lambda i: (grid.row_limits[i], -i))
        lower = grid.row_limits[i]
        lower_cell = (grid.row_schedule[i], grid.row_limit_cols[i])
        lower_witness = grid.row_limit_results[i]
        exact = True
    else:
        i = max(range(K), key=lambda i: (grid.values[i][L - 1], -i))
        lower = grid.values[i][L - 1]
        lower_cell = (grid.row_schedule[i], grid.col_schedule[L - 1])
        lower_witness = grid.results[i][L - 1]
        exact = False

    diag = grid.diagonal()
    settled = len(diag) < 2 or abs(diag[-1] - diag[-2]) <= tol
    converged = settled and abs(upper - lower) <= tol
    return GapReport(
        upper,
        lower,
        converged,
        tol,
        (grid.row_schedule[upper_cell[0]], grid.col_schedule[upper_cell[1]]),
        lower_cell,
        exact,
        upper_witness,
        lower_witness,
    )


def cover_columns(oracle: GameOracle, cols, eps) -> MixedStrategy:
    """Mixed strategy over oracle rows winning each of ``cols`` with probability >= 1 - eps.

    Raises CoverFailure carrying the restricted game value when none exists.
    """
    eps = to_fraction(eps)
    if not 0 < eps < 1:
        raise DomainError("eps must lie strictly between 0 and 1")
    reduced = reduced_truncation(oracle, cols)
    res = solve(reduced)
    if res.value < 1 - eps:
        raise CoverFailure(res.value, eps)
    return res.p_opt.relabel(lambda s: reduced.row_labels[s - 1])


@dataclass(frozen=True)
class ViolatingCore:
    """Alternating finite-support strategies p1, q1, p2, q2, ..., q_k, p_{k+1}."""

    v_low: Fraction
    v_bar: Fraction
    p_steps: tuple
    q_steps: tuple

    @property
    def rows(self) -> list[int]:
        return sorted({s for p in self.p_steps for s in p})

    @property
    def cols(self) -> list[int]:
        return sorted({t for q in self.q_steps for t in q})


def check_core(oracle: GameOracle, core: ViolatingCore) -> bool:
    """Re-verify both alternating conditions with direct payoff evaluation.

    Each p^(k) must win at least v_bar against every column used by the
    earlier q's; each q^(k) must concede at most v_low to every row used by
    p^(1..k).
    """
    for k, p in enumerate(core.p_steps):
        for q in core.q_steps[:k]:
            for t in q:
                if oracle.pi_mix(p, MixedStrategy.point(t)) < core.v_bar:
                    return False
    for k, q in enumerate(core.q_steps):
        for p in core.p_steps[: k + 1]:
            for s in p:
                if oracle.pi_mix(MixedStrategy.point(s), q) > core.v_low:
                    return False
    return True


def extract_violating_core(oracle: GameOracle, v_low, v_bar, depth: int) -> ViolatingCore:
    """Build ``depth`` rounds of the alternating construction starting from row 1.

    Each restricted game has finitely many strategies on one side and is
    reduced to a finite game by pattern enumeration on the other. Raises
    GapInfeasible when a restricted value lands on the wrong side of
    (v_low, v_bar); that shows the supplied pair is not a gap for this oracle
    along this construction, not that the oracle has no gap.
    """
    v_low, v_bar = to_fraction(v_low), to_fraction(v_bar)
    if not v_low < v_bar:
        raise DomainError("need v_low < v_bar")
    if depth < 1:
        raise DomainError("depth must be at least 1")
    if not (oracle.supports_row_patterns and oracle.supports_col_patterns):
        raise UnsupportedCapabilityError(f"{oracle.name}: extraction needs both pattern enumerations")

    p_steps = [MixedStrategy.point(1)]
    q_steps = []
    rows_used = {1}
    cols_used: set[int] = set()
    for k in range(1, depth + 1):
        reduced = reduced_col_truncation(oracle, rows_used)
        res = solve(reduced)
        if res.value > v_low:
            raise GapInfeasible(k, "q", res.value, v_low)
        q = res.q_opt.relabel(lambda t: reduced.col_labels[t - 1])
        q_steps.append(q)
        cols_used.update(q)

        reduced = reduced_truncation(oracle, cols_used)
        res = solve(reduced)
        if res.value < v_bar:
            raise GapInfeasible(k + 1, "p", res.value, v_bar)
        p = res.p_opt.relabel(lambda s: reduced.row_labels[s - 1])
        p_steps.append(p)
        rows_used.update(p)

    core = ViolatingCore(v_low, v_bar, tuple(p_steps), tuple(q_steps))
    if not check_core(oracle, core):
        raise AssertionError("alternating construction produced strategies violating its own conditions")
    return core


def restrict_to_core(oracle: GameOracle, core: ViolatingCore) -> FiniteGame:
    """The finite subgame on the union of the core's supports."""
    rows, cols = core.rows, core.cols
    return FiniteGame(
        [[oracle.payoff(s, t) for t in cols] for s in rows],
        [oracle.row_label(s) for s in rows],
        cols,
    )
