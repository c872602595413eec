"""Exact solution of finite zero-sum matrix games."""

from dataclasses import dataclass
from fractions import Fraction

from . import lp
from .core import FiniteGame, MixedStrategy, col_payoffs, row_payoffs
from .errors import ResourceLimitError

MAX_EXACT_SIZE = 300


@dataclass(frozen=True)
class SolveResult:
    value: Fraction
    p_opt: MixedStrategy
    q_opt: MixedStrategy
    iterations: int


def solve(game: FiniteGame, max_size: int = MAX_EXACT_SIZE) -> SolveResult:
    """Value and a pair of optimal strategies, in exact arithmetic.

    Payoffs are shifted by +1 so the value is positive; the column player's
    problem ``max sum(y)  s.t.  (M + 1) y <= 1`` is then solved by the primal
    simplex, and the row player's strategy is read off the duals of the same
    run. Pivoting follows Bland's rule, so the returned vertex is deterministic.
    """
    n, m = game.shape
    if n > max_size or m > max_size:
        raise ResourceLimitError(
            f"{n}x{m} game exceeds the exact solver budget of {max_size}x{max_size}"
        )
    shifted = [[v + 1 for v in row] for row in game.payoff]
    res = lp.maximize(shifted, [1] * n, [1] * m)
    shifted_value = 1 / res.value
    p = MixedStrategy({s + 1: w * shifted_value for s, w in enumerate(res.y) if w})
    q = MixedStrategy({t + 1: w * shifted_value for t, w in enumerate(res.x) if w})
    return SolveResult(shifted_value - 1, p, q, res.pivots)


def value(game: FiniteGame) -> Fraction:
    return solve(game).value


def verify(game: FiniteGame, result: SolveResult) -> bool:
    """Check the optimality certificate exactly.

    Holds iff p_opt guarantees at least ``value`` against every column, q_opt
    concedes at most ``value`` to every row, and both bounds are attained.
    """
    n, m = game.shape
    if any(s > n for s in result.p_opt) or any(t > m for t in result.q_opt):
        return False
    return (
        min(col_payoffs(game, result.p_opt)) == result.value
        and max(row_payoffs(game, result.q_opt)) == result.value
    )


def best_pure_response(game: FiniteGame, q: MixedStrategy) -> tuple[int, Fraction]:
    """Row maximizing pi_mix(s, q), lowest index on ties, with its payoff."""
    payoffs = row_payoffs(game, q)
    best = max(payoffs)
    return payoffs.index(best) + 1, best
