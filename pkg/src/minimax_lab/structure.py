"""Combinatorial structure of win-lose matrices.

Staircases (fully lower-triangular submatrices, i.e. copies of a finite
larger number game), chains in set families, and the VC, Littlestone and
threshold dimensions of a matrix read as a concept class (rows are
hypotheses, columns are instances).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .core import FiniteGame, GameOracle, SetFamily, dualize, oracle_from_game
from .errors import DomainError, ResourceLimitError

EXACT_STAIRCASE_MAX_DIM = 20
VC_MAX_COLS = 24
LITTLESTONE_MAX_STATES = 1 << 20


@dataclass(frozen=True)
class StaircaseWitness:
    """Rows s_1..s_k and columns t_1..t_k with s_i beating t_j exactly when i >= j."""

    rows: tuple
    cols: tuple
    stalled: bool = False

    @property
    def size(self) -> int:
        return len(self.rows)


def is_staircase(payoff, rows: Sequence[int], cols: Sequence[int], strict: bool = False) -> bool:
    """Check the staircase pattern with ``payoff(s, t)`` on 1-based indices.

    With ``strict`` the pattern is s_i beating t_j exactly when i > j.
    """
    if len(rows) != len(cols):
        return False
    for i, s in enumerate(rows):
        for j, t in enumerate(cols):
            expected = i > j if strict else i >= j
            if bool(payoff(s, t)) != expected:
                return False
    return True


def validate_witness(game: FiniteGame, witness: StaircaseWitness, strict: bool = False) -> bool:
    return is_staircase(lambda s, t: game.entry(s, t), witness.rows, witness.cols, strict)


# ---------------------------------------------------------------------------
# staircase search


def staircase_exact(game: FiniteGame, strict: bool = False,
                    max_dim: int = EXACT_STAIRCASE_MAX_DIM) -> tuple[int, StaircaseWitness]:
    """Largest staircase, found by exhaustive search.

    The strict pattern (i > j) in a game is the non-strict pattern in its
    dual with rows and columns exchanged, so both conventions share one search.
    """
    game.require_win_lose()
    if game.n_rows > max_dim or game.n_cols > max_dim:
        raise ResourceLimitError(
            f"exact staircase search is limited to {max_dim}x{max_dim}; use staircase_greedy"
        )
    if strict:
        k, w = staircase_exact(dualize(game), strict=False, max_dim=max_dim)
        return k, StaircaseWitness(w.cols, w.rows)
    rows, cols = _staircase_search(game.row_masks(), game.col_masks(), game.n_rows, game.n_cols)
    return len(rows), StaircaseWitness(tuple(rows), tuple(cols))


def _staircase_search(row_masks, col_masks, n, m):
    """Depth-first search over alternating choices t_1, s_1, t_2, s_2, ...

    After a prefix is fixed, the admissible future rows are those beating every
    chosen column and the admissible future columns those beaten by no chosen
    row, so the best extension depends only on that pair of bitmasks; it is
    memoized on them.
    """
    memo: dict[tuple[int, int], tuple[int, tuple | None]] = {}

    def best(R, C):
        key = (R, C)
        if key in memo:
            return memo[key][0]
        top, choice = 0, None
        bound = min(bin(R).count("1"), bin(C).count("1"))
        cc = C
        while cc and top < bound:
            t = (cc & -cc).bit_length() - 1
            cc &= cc - 1
            R2 = R & col_masks[t]
            rr = R2
            while rr and top < bound:
                s = (rr & -rr).bit_length() - 1
                rr &= rr - 1
                C2 = C & ~row_masks[s]
                if 1 + min(bin(R2).count("1"), bin(C2).count("1")) <= top:
                    continue
                val = 1 + best(R2, C2)
                if val > top:
                    top, choice = val, (s, t, R2, C2)
        memo[key] = (top, choice)
        return top

    R, C = (1 << n) - 1, (1 << m) - 1
    best(R, C)
    rows, cols = [], []
    while True:
        _, choice = memo[(R, C)]
        if choice is None:
            break
        s, t, R, C = choice
        rows.append(s + 1)
        cols.append(t + 1)
    return rows, cols


def staircase_greedy(source, budget: int, window: int | None = None,
                     col_pool: Sequence[int] | None = None) -> StaircaseWitness:
    """Alternating greedy construction t_1, s_1, t_2, s_2, ...

    Each new column is the lowest-index one (within ``col_pool`` when given)
    that no chosen row beats; each new row is the lowest-index one beating all
    chosen columns. Rows and columns are scanned up to ``window``. The result
    is always a valid staircase, possibly smaller than the largest one; it is
    flagged ``stalled`` when it ends before reaching ``budget``.
    """
    oracle = oracle_from_game(source) if isinstance(source, FiniteGame) else source
    if window is None:
        window = max(64, 4 * budget)
    row_limit = min(window, oracle.n_rows or window)
    col_limit = min(window, oracle.n_cols or window)
    pool = list(range(1, col_limit + 1)) if col_pool is None else sorted(set(col_pool))
    rows: list[int] = []
    cols: list[int] = []
    while len(rows) < budget:
        t = next((c for c in pool if c not in cols
                  and all(oracle.payoff(s, c) == 0 for s in rows)), None)
        if t is None:
            break
        s = next((r for r in range(1, row_limit + 1)
                  if all(oracle.payoff(r, c) == 1 for c in cols + [t])), None)
        if s is None:
            break
        rows.append(s)
        cols.append(t)
    return StaircaseWitness(tuple(rows), tuple(cols), stalled=len(rows) < budget)


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain:
    sets: tuple

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        for a, b in zip(sets, sets[1:]):
            if not a < b:
                raise DomainError(f"chain is not strictly increasing at {sorted(a)} -> {sorted(b)}")
        object.__setattr__(self, "sets", sets)

    def __len__(self):
        return len(self.sets)

    @property
    def union(self) -> frozenset:
        return frozenset().union(*self.sets) if self.sets else frozenset()


def longest_chain(family: SetFamily) -> Chain:
    """Longest strictly increasing chain, by longest path in the containment order.

    Ties prefer lexicographically smaller sets (compared as sorted tuples)
    at every position from the top down.
    """
    members = sorted(family.members(), key=lambda a: (len(a), sorted(a)))
    if not members:
        return Chain(())
    length = []
    pred: list[int | None] = []
    for i, a in enumerate(members):
        best, arg = 1, None
        for j in range(i):
            b = members[j]
            if len(b) < len(a) and b < a:
                cand = length[j] + 1
                if cand > best or (cand == best and arg is not None
                                   and sorted(b) < sorted(members[arg])):
                    best, arg = cand, j
        length.append(best)
        pred.append(arg)
    top = max(length)
    end = min((i for i in range(len(members)) if length[i] == top),
              key=lambda i: sorted(members[i]))
    chain = []
    while end is not None:
        chain.append(members[end])
        end = pred[end]
    return Chain(tuple(reversed(chain)))


def beaten_family(game: FiniteGame, downward: bool = True) -> SetFamily:
    """Sets of columns beaten by each row, optionally closed under subsets."""
    game.require_win_lose()
    sets = [frozenset(t + 1 for t, v in enumerate(row) if v) for row in game.payoff]
    fam = SetFamily(sets, name="beaten")
    return fam.downward_closure() if downward else fam


def chain_to_staircase(family: SetFamily, chain: Chain, game: FiniteGame,
                       limit: int | None = None) -> StaircaseWitness:
    """Turn an ascending chain of beaten-column sets into a staircase.

    Columns are drawn from the union of the chain outside everything already
    beaten; each row is chosen to dominate the smallest chain member holding
    all columns so far (smallest such row, then lowest index). At finite scale
    the union runs out, which ends the construction with ``stalled`` set.
    """
    game.require_win_lose()
    for a in chain.sets:
        if a not in family:
            raise DomainError(f"chain member {sorted(a)} is not in the family")
    beats = [frozenset(t + 1 for t, v in enumerate(row) if v) for row in game.payoff]
    union = chain.union
    rows: list[int] = []
    cols: list[int] = []
    covered: set[int] = set()
    while limit is None or len(rows) < limit:
        free = sorted(union - covered)
        if not free:
            return StaircaseWitness(tuple(rows), tuple(cols), stalled=True)
        t = free[0]
        chosen = cols + [t]
        target = next(a for a in chain.sets if a.issuperset(chosen))
        candidates = [s for s in range(len(beats)) if beats[s] >= target]
        if not candidates:
            raise DomainError(f"no row dominates chain member {sorted(target)}")
        s = min(candidates, key=lambda s: (len(beats[s]), s))
        rows.append(s + 1)
        cols.append(t)
        covered |= beats[s]
    return StaircaseWitness(tuple(rows), tuple(cols), stalled=False)


# ---------------------------------------------------------------------------
# dimensions


def vc_dimension(game: FiniteGame, max_cols: int = VC_MAX_COLS) -> int:
    """Largest set of columns on which the rows realize every pattern."""
    game.require_win_lose()
    m = game.n_cols
    if m > max_cols:
        raise ResourceLimitError(f"VC search is limited to {max_cols} columns")
    masks = set(game.row_masks())
    cap = int(math.log2(len(masks)))
    from itertools import combinations

    d = 0
    for size in range(1, min(cap, m) + 1):
        found = False
        for subset in combinations(range(m), size):
            smask = sum(1 << j for j in subset)
            if len({r & smask for r in masks}) == 1 << size:
                found = True
                break
        if not found:
            break
        d = size
    return d


def littlestone_dimension(game: FiniteGame, max_states: int = LITTLESTONE_MAX_STATES) -> int:
    """Depth of the deepest mistake tree the rows shatter.

    Ldim(H) = max over splitting columns x of 1 + min(Ldim(H_x=0), Ldim(H_x=1)),
    and 0 for a single hypothesis. Subclasses are memoized on their pattern set
    projected to the columns that still split them.
    """
    game.require_win_lose()
    m = game.n_cols
    memo: dict[frozenset, int] = {}

    def canon(hs):
        union = 0
        inter = (1 << m) - 1
        for h in hs:
            union |= h
            inter &= h
        split = union & ~inter
        return frozenset(h & split for h in hs), split

    def ldim(hs):
        if len(hs) <= 1:
            return 0
        key, split = canon(hs)
        if key in memo:
            return memo[key]
        if len(memo) >= max_states:
            raise ResourceLimitError("Littlestone recursion exceeded its memo budget")
        cap = int(math.log2(len(hs)))
        best = 0
        x = split
        while x and best < cap:
            bit = x & -x
            x &= x - 1
            ones = frozenset(h for h in hs if h & bit)
            zeros = hs - ones
            if min(len(ones), len(zeros)) == 0:
                continue
            if 1 + int(math.log2(min(len(ones), len(zeros)))) <= best:
                continue
            val = 1 + min(ldim(ones), ldim(zeros))
            best = max(best, val)
        memo[key] = best
        return best

    return ldim(frozenset(game.row_masks()))


def threshold_dimension(game: FiniteGame) -> int:
    return staircase_exact(game)[0]


def dimensions(game: FiniteGame) -> dict[str, int]:
    return {
        "vc": vc_dimension(game),
        "littlestone": littlestone_dimension(game),
        "threshold": threshold_dimension(game),
    }


@dataclass(frozen=True)
class Profile:
    row_ones: tuple
    row_zeros: tuple
    col_ones: tuple
    col_zeros: tuple
    conditions: dict = field(default_factory=dict)


def row_col_profile(game: FiniteGame) -> Profile:
    """Per-row and per-column counts of 0s and 1s.

    The four counting conditions that rule out staircases are statements about
    infinite matrices; on a finite matrix every count is finite, so they all
    hold vacuously. The report records them as such alongside the largest
    count each one is about, leaving interpretation to the reader.
    """
    game.require_win_lose()
    rows = game.to_rows()
    row_ones = tuple(sum(r) for r in rows)
    row_zeros = tuple(game.n_cols - k for k in row_ones)
    col_ones = tuple(sum(r[j] for r in rows) for j in range(game.n_cols))
    col_zeros = tuple(game.n_rows - k for k in col_ones)
    conditions = {
        "row_zeros_finite": {"holds": True, "max": max(row_zeros)},
        "row_ones_bounded": {"holds": True, "max": max(row_ones)},
        "col_zeros_bounded": {"holds": True, "max": max(col_zeros)},
        "col_ones_finite": {"holds": True, "max": max(col_ones)},
    }
    return Profile(row_ones, row_zeros, col_ones, col_zeros, conditions)
