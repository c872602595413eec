"""Win-lose games: finite payoff matrices, countable games given by an oracle,
mixed strategies with finite support, and finite set families.

Strategy indices are 1-based naturals throughout. Labels are opaque and are
carried through restrictions so that witnesses can be traced back.
"""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .errors import DomainError, UnsupportedCapabilityError

_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def to_fraction(value) -> Fraction:
    """Exact rational from an int, a Fraction or an ``"a/b"`` string.

    Floats are refused: they would smuggle binary rounding into exact results.
    """
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL.match(value):
            raise DomainError(f"not an exact rational literal: {value!r}")
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise DomainError(f"zero denominator in {value!r}") from None
    raise DomainError(f"expected an exact rational, got {type(value).__name__} {value!r}")


def format_fraction(x: Fraction) -> str:
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# finite games


@dataclass(frozen=True)
class FiniteGame:
    """Payoff matrix with entries in [0, 1] and labeled rows and columns."""

    payoff: tuple
    row_labels: tuple = None
    col_labels: tuple = None

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(v) for v in row) for row in self.payoff)
        if not rows or not rows[0]:
            raise DomainError("a game needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise DomainError("payoff matrix is ragged")
            for v in row:
                if v < 0 or v > 1:
                    raise DomainError(f"payoff {v} outside [0, 1]")
        row_labels = tuple(range(1, len(rows) + 1)) if self.row_labels is None else tuple(self.row_labels)
        col_labels = tuple(range(1, width + 1)) if self.col_labels is None else tuple(self.col_labels)
        if len(row_labels) != len(rows) or len(col_labels) != width:
            raise DomainError("label count does not match the payoff shape")
        if len(set(row_labels)) != len(row_labels) or len(set(col_labels)) != len(col_labels):
            raise DomainError("row and column labels must be duplicate-free")
        object.__setattr__(self, "payoff", rows)
        object.__setattr__(self, "row_labels", row_labels)
        object.__setattr__(self, "col_labels", col_labels)

    @property
    def n_rows(self) -> int:
        return len(self.payoff)

    @property
    def n_cols(self) -> int:
        return len(self.payoff[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def win_lose(self) -> bool:
        return all(v == 0 or v == 1 for row in self.payoff for v in row)

    def entry(self, s: int, t: int) -> Fraction:
        self._check_row(s)
        self._check_col(t)
        return self.payoff[s - 1][t - 1]

    def _check_row(self, s):
        if not 1 <= s <= self.n_rows:
            raise DomainError(f"row index {s} out of range 1..{self.n_rows}")

    def _check_col(self, t):
        if not 1 <= t <= self.n_cols:
            raise DomainError(f"column index {t} out of range 1..{self.n_cols}")

    def require_win_lose(self):
        if not self.win_lose:
            raise DomainError("operation needs a win-lose (0/1) game")

    def row_masks(self) -> list[int]:
        """Bit t-1 of entry s-1 is set iff row s beats column t."""
        self.require_win_lose()
        return [sum(1 << j for j, v in enumerate(row) if v) for row in self.payoff]

    def col_masks(self) -> list[int]:
        self.require_win_lose()
        return [
            sum(1 << i for i in range(self.n_rows) if self.payoff[i][j])
            for j in range(self.n_cols)
        ]

    def to_rows(self) -> list[list[int]]:
        """Integer 0/1 rows, for display and tests."""
        self.require_win_lose()
        return [[int(v) for v in row] for row in self.payoff]


def identity_matrix(k: int) -> FiniteGame:
    return FiniteGame([[int(i == j) for j in range(k)] for i in range(k)])


def constant_matrix(n: int, m: int, value=1) -> FiniteGame:
    return FiniteGame([[value] * m for _ in range(n)])


def staircase_matrix(k: int) -> FiniteGame:
    """The k x k fully lower-triangular matrix (LNG restricted to 1..k)."""
    return FiniteGame([[int(s >= t) for t in range(1, k + 1)] for s in range(1, k + 1)])


def subgame(game: FiniteGame, rows: Iterable[int], cols: Iterable[int]) -> FiniteGame:
    rows = list(rows)
    cols = list(cols)
    if not rows or not cols:
        raise DomainError("subgame needs non-empty row and column sets")
    for s in rows:
        game._check_row(s)
    for t in cols:
        game._check_col(t)
    return FiniteGame(
        [[game.payoff[s - 1][t - 1] for t in cols] for s in rows],
        [game.row_labels[s - 1] for s in rows],
        [game.col_labels[t - 1] for t in cols],
    )


def dualize(game: FiniteGame) -> FiniteGame:
    """Swap the players: transpose and replace each payoff by 1 - payoff."""
    return FiniteGame(
        [[1 - game.payoff[s][t] for s in range(game.n_rows)] for t in range(game.n_cols)],
        game.col_labels,
        game.row_labels,
    )


# ---------------------------------------------------------------------------
# mixed strategies


class MixedStrategy(Mapping):
    """Finite-support probability vector over 1-based strategy indices."""

    __slots__ = ("_weights",)

    def __init__(self, weights: Mapping):
        clean = {}
        for k, v in weights.items():
            w = to_fraction(v)
            if w == 0:
                continue
            if w < 0:
                raise DomainError(f"negative probability {w} on strategy {k}")
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise DomainError(f"strategy index must be a natural, got {k!r}")
            clean[k] = w
        if not clean:
            raise DomainError("a mixed strategy needs non-empty support")
        total = sum(clean.values())
        if total != 1:
            raise DomainError(f"probabilities sum to {total}, not 1")
        self._weights = dict(sorted(clean.items()))

    @classmethod
    def point(cls, index: int) -> "MixedStrategy":
        return cls({index: 1})

    @classmethod
    def uniform(cls, indices: Iterable[int]) -> "MixedStrategy":
        indices = sorted(set(indices))
        if not indices:
            raise DomainError("uniform strategy over an empty set")
        w = Fraction(1, len(indices))
        return cls({i: w for i in indices})

    def __getitem__(self, index):
        return self._weights[index]

    def __iter__(self):
        return iter(self._weights)

    def __len__(self):
        return len(self._weights)

    def __hash__(self):
        return hash(tuple(self._weights.items()))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self._weights.items())
        return f"MixedStrategy({{{body}}})"

    def weight(self, index: int) -> Fraction:
        return self._weights.get(index, Fraction(0))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._weights)

    def relabel(self, mapping: Callable[[int], int]) -> "MixedStrategy":
        out: dict[int, Fraction] = {}
        for k, v in self._weights.items():
            key = mapping(k)
            out[key] = out.get(key, Fraction(0)) + v
        return MixedStrategy(out)


def pi_mix(game: FiniteGame, p: MixedStrategy, q: MixedStrategy) -> Fraction:
    """Expected payoff to player 1 when rows follow ``p`` and columns ``q``."""
    for s in p:
        game._check_row(s)
    for t in q:
        game._check_col(t)
    total = Fraction(0)
    for s, ps in p.items():
        row = game.payoff[s - 1]
        total += ps * sum((qt * row[t - 1] for t, qt in q.items()), Fraction(0))
    return total


def row_payoffs(game: FiniteGame, q: MixedStrategy) -> list[Fraction]:
    """pi_mix(s, q) for every row s, in row order."""
    for t in q:
        game._check_col(t)
    return [sum((qt * row[t - 1] for t, qt in q.items()), Fraction(0)) for row in game.payoff]


def col_payoffs(game: FiniteGame, p: MixedStrategy) -> list[Fraction]:
    """pi_mix(p, t) for every column t, in column order."""
    for s in p:
        game._check_row(s)
    return [
        sum((ps * game.payoff[s - 1][j] for s, ps in p.items()), Fraction(0))
        for j in range(game.n_cols)
    ]


# ---------------------------------------------------------------------------
# oracles


class GameOracle:
    """A countable win-lose game given intensionally.

    ``payoff_fn(s, t)`` returns 0 or 1 for 1-based indices. Pattern enumeration
    is optional and is enabled by ``row_scan``/``col_scan``: given a finite set
    of columns (rows), the scan returns candidate row (column) indices that
    realize every achievable pattern on that set. Without them, operations that
    need finite reductions raise UnsupportedCapabilityError.

    ``row_ones(s)``, when given, returns the finite set of columns row ``s``
    beats; it is only meaningful when ``rows_all_finite`` is true.
    """

    def __init__(
        self,
        name: str,
        payoff_fn: Callable[[int, int], int],
        *,
        row_scan: Callable[[Sequence[int]], Iterable[int]] | None = None,
        col_scan: Callable[[Sequence[int]], Iterable[int]] | None = None,
        rows_all_finite: bool | None = None,
        row_ones: Callable[[int], Iterable[int]] | None = None,
        n_rows: int | None = None,
        n_cols: int | None = None,
        row_label: Callable[[int], Hashable] | None = None,
        family: "SetFamily | None" = None,
    ):
        self.name = name
        self.payoff_fn = payoff_fn
        self._row_scan = row_scan
        self._col_scan = col_scan
        self.rows_all_finite = rows_all_finite
        self._row_ones = row_ones
        self.n_rows = n_rows
        self.n_cols = n_cols
        self._row_label = row_label
        self.family = family

    def __repr__(self):
        return f"GameOracle({self.name!r})"

    def payoff(self, s: int, t: int) -> int:
        if s < 1 or (self.n_rows is not None and s > self.n_rows):
            raise DomainError(f"{self.name}: row index {s} out of range")
        if t < 1 or (self.n_cols is not None and t > self.n_cols):
            raise DomainError(f"{self.name}: column index {t} out of range")
        return self.payoff_fn(s, t)

    def row_label(self, s: int) -> Hashable:
        return s if self._row_label is None else self._row_label(s)

    @property
    def supports_row_patterns(self) -> bool:
        return self._row_scan is not None

    @property
    def supports_col_patterns(self) -> bool:
        return self._col_scan is not None

    @property
    def supports_row_ones(self) -> bool:
        return self._row_ones is not None and bool(self.rows_all_finite)

    def row_ones(self, s: int) -> frozenset:
        if not self.supports_row_ones:
            raise UnsupportedCapabilityError(f"{self.name}: rows are not known to be finite")
        return frozenset(self._row_ones(s))

    def row_pattern(self, s: int, cols: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.payoff(s, t) for t in cols)

    def col_pattern(self, t: int, rows: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.payoff(s, t) for s in rows)

    def distinct_row_patterns(self, cols: Iterable[int]) -> list[tuple[tuple[int, ...], int]]:
        """Every achievable row pattern on ``cols`` once, with its lowest representative."""
        if self._row_scan is None:
            raise UnsupportedCapabilityError(f"{self.name}: no row pattern enumeration")
        cols = sorted(set(cols))
        seen: dict[tuple, int] = {}
        for s in sorted(set(self._row_scan(cols))):
            seen.setdefault(self.row_pattern(s, cols), s)
        return list(seen.items())

    def distinct_col_patterns(self, rows: Iterable[int]) -> list[tuple[tuple[int, ...], int]]:
        if self._col_scan is None:
            raise UnsupportedCapabilityError(f"{self.name}: no column pattern enumeration")
        rows = sorted(set(rows))
        seen: dict[tuple, int] = {}
        for t in sorted(set(self._col_scan(rows))):
            seen.setdefault(self.col_pattern(t, rows), t)
        return list(seen.items())

    def pi_mix(self, p: MixedStrategy, q: MixedStrategy) -> Fraction:
        return sum(
            (ps * qt * self.payoff(s, t) for s, ps in p.items() for t, qt in q.items()),
            Fraction(0),
        )


def truncate(oracle: GameOracle, n: int, m: int) -> FiniteGame:
    """The finite game on rows 1..n and columns 1..m."""
    if n < 1 or m < 1:
        raise DomainError("truncation sizes must be at least 1")
    return FiniteGame(
        [[oracle.payoff(s, t) for t in range(1, m + 1)] for s in range(1, n + 1)],
        [oracle.row_label(s) for s in range(1, n + 1)],
        list(range(1, m + 1)),
    )


def reduced_truncation(oracle: GameOracle, cols: Iterable[int]) -> FiniteGame:
    """All rows restricted to ``cols``, one row per distinct pattern.

    Rows are labeled by their representative row index.
    """
    cols = sorted(set(cols))
    if not cols:
        raise DomainError("reduced truncation needs at least one column")
    patterns = oracle.distinct_row_patterns(cols)
    return FiniteGame([p for p, _ in patterns], [rep for _, rep in patterns], cols)


def reduced_col_truncation(oracle: GameOracle, rows: Iterable[int]) -> FiniteGame:
    """``rows`` against every column, one column per distinct pattern."""
    rows = sorted(set(rows))
    if not rows:
        raise DomainError("reduced truncation needs at least one row")
    patterns = oracle.distinct_col_patterns(rows)
    payoff = [[patterns[j][0][i] for j in range(len(patterns))] for i in range(len(rows))]
    return FiniteGame(payoff, rows, [rep for _, rep in patterns])


def oracle_from_game(game: FiniteGame, name: str = "matrix") -> GameOracle:
    """View a finite win-lose game as an oracle (rows and columns are bounded)."""
    game.require_win_lose()
    n, m = game.shape

    def payoff_fn(s, t):
        return int(game.payoff[s - 1][t - 1])

    return GameOracle(
        name,
        payoff_fn,
        row_scan=lambda cols: range(1, n + 1),
        col_scan=lambda rows: range(1, m + 1),
        rows_all_finite=True,
        row_ones=lambda s: [t for t in range(1, m + 1) if game.payoff[s - 1][t - 1]],
        n_rows=n,
        n_cols=m,
    )


# ---------------------------------------------------------------------------
# set families


def _subsets_lex(ground: int) -> Iterator[frozenset]:
    """Subsets of {1..ground} in lexicographic order of their sorted tuples."""

    def rec(prefix, start):
        yield frozenset(prefix)
        for i in range(start, ground + 1):
            prefix.append(i)
            yield from rec(prefix, i + 1)
            prefix.pop()

    return rec([], 1)


class SetFamily:
    """A family of finite sets of naturals.

    Three ways to give the members:

    * ``sets``: an explicit list;
    * ``predicate`` with a ``ground`` bound: members are the subsets of
      {1..ground} accepted by the predicate, enumerated lexicographically;
    * ``generator``: ``generator(horizon)`` yields the members contained in
      {1..horizon}; used for infinite families such as initial segments.

    ``maximizer(weights)`` optionally finds a heaviest member for nonnegative
    weights ``weights[1..N]`` (index 0 unused) inside {1..N}, which lets
    implicitly given families be used without enumerating them.
    ``shift_closed`` declares that replacing an element by a larger one not
    already present keeps a member in the family.
    """

    def __init__(
        self,
        sets: Iterable[Iterable[int]] | None = None,
        *,
        predicate: Callable[[frozenset], bool] | None = None,
        ground: int | None = None,
        generator: Callable[[int], Iterable[Iterable[int]]] | None = None,
        maximizer: Callable[[Sequence[Fraction]], tuple[frozenset, Fraction]] | None = None,
        downward_closed: bool = False,
        shift_closed: bool = False,
        name: str | None = None,
    ):
        modes = sum(x is not None for x in (sets, predicate, generator))
        if modes != 1:
            raise DomainError("give exactly one of sets, predicate or generator")
        if predicate is not None and ground is None:
            raise DomainError("a predicate family needs a ground-set bound")
        self._sets = None
        if sets is not None:
            seen = {}
            for s in sets:
                fs = frozenset(s)
                if any((not isinstance(x, int)) or x < 1 for x in fs):
                    raise DomainError(f"family members must be sets of naturals, got {sorted(fs)}")
                seen.setdefault(fs, None)
            self._sets = list(seen)
        self.predicate = predicate
        self.ground = ground
        self._generator = generator
        self._maximizer = maximizer
        self.downward_closed = downward_closed
        self.shift_closed = shift_closed
        self.name = name

    def __repr__(self):
        return f"SetFamily({self.name or 'anonymous'})"

    @property
    def has_maximizer(self) -> bool:
        return self._maximizer is not None

    @property
    def explicit(self) -> bool:
        return self._sets is not None

    def members(self, horizon: int | None = None) -> list[frozenset]:
        """Members contained in {1..horizon} (all members when horizon is None)."""
        return list(self.iter_members(horizon))

    def iter_members(self, horizon: int | None = None) -> Iterator[frozenset]:
        if self._sets is not None:
            if horizon is None:
                yield from self._sets
            else:
                yield from (s for s in self._sets if not s or max(s) <= horizon)
            return
        if self.predicate is not None:
            g = self.ground if horizon is None else min(self.ground, horizon)
            yield from (s for s in _subsets_lex(g) if self.predicate(s))
            return
        if horizon is None:
            raise DomainError(f"{self!r} is infinite; a horizon is required")
        seen = set()
        for s in self._generator(horizon):
            fs = frozenset(s)
            if fs not in seen:
                seen.add(fs)
                yield fs

    def __contains__(self, item) -> bool:
        fs = frozenset(item)
        if self._sets is not None:
            return fs in set(self._sets)
        if self.predicate is not None:
            return (not fs or max(fs) <= self.ground) and self.predicate(fs)
        return fs in set(self.members(max(fs, default=0)))

    def heaviest(self, weights: Sequence[Fraction]) -> tuple[frozenset, Fraction]:
        """A member of maximum weight inside {1..len(weights)-1}.

        Ties go to the first member in enumeration order.
        """
        if self._maximizer is not None:
            return self._maximizer(weights)
        horizon = len(weights) - 1
        best, best_w = None, None
        for s in self.members(horizon):
            w = sum((weights[i] for i in s), Fraction(0))
            if best_w is None or w > best_w:
                best, best_w = s, w
        if best is None:
            return frozenset(), Fraction(0)
        return best, best_w

    def covers(self, i: int) -> bool:
        """Whether some member contains ``i``."""
        if self.downward_closed and (self.predicate is not None or self._maximizer is not None):
            return frozenset([i]) in self
        return any(i in s for s in self.members(i if self._generator else None))

    def downward_closure(self, horizon: int | None = None) -> "SetFamily":
        """Explicit family of all subsets of members (exponential; small cases)."""
        out: dict[frozenset, None] = {}
        for s in self.members(horizon):
            items = sorted(s)
            for mask in range(1 << len(items)):
                out.setdefault(frozenset(x for b, x in enumerate(items) if mask >> b & 1), None)
        return SetFamily(sorted(out, key=lambda a: (len(a), sorted(a))), downward_closed=True,
                         name=f"down({self.name})" if self.name else None)


def initial_segments() -> SetFamily:
    """{1..k} for every k >= 1."""
    return SetFamily(
        generator=lambda h: (range(1, k + 1) for k in range(1, h + 1)),
        maximizer=_prefix_maximizer(lambda h: [list(range(1, h + 1))]),
        name="initial",
    )


def parity_initial_segments() -> SetFamily:
    """Initial segments of the odd naturals and of the even naturals."""

    def gen(h):
        for start in (1, 2):
            for k in range(start, h + 1, 2):
                yield range(start, k + 1, 2)

    return SetFamily(
        generator=gen,
        maximizer=_prefix_maximizer(lambda h: [list(range(1, h + 1, 2)), list(range(2, h + 1, 2))]),
        name="parity",
    )


def _prefix_maximizer(sequences):
    """Heaviest member of a family made of the prefixes of a few sequences."""

    def maximize(weights):
        h = len(weights) - 1
        best, best_w = frozenset(), Fraction(0)
        for seq in sequences(h):
            running = Fraction(0)
            for k, i in enumerate(seq):
                running += weights[i]
                if running > best_w:
                    best, best_w = frozenset(seq[: k + 1]), running
        return best, best_w

    return maximize


def _min_family_predicate(s: frozenset) -> bool:
    return not s or len(s) <= min(s)


def _min_family_maximizer(weights):
    """Heaviest A with |A| <= min A for nonnegative weights on 1..N.

    For a fixed minimum m the best member is m together with the m-1 heaviest
    elements above m. Sweeping m downward keeps those in a min-heap.
    """
    import heapq

    n = len(weights) - 1
    top: list = []  # (weight, -index) of the retained heaviest elements above m
    top_sum = Fraction(0)
    best_m, best_w = None, Fraction(0)
    for m in range(n, 0, -1):
        if m + 1 <= n:
            heapq.heappush(top, (weights[m + 1], -(m + 1)))
            top_sum += weights[m + 1]
        while len(top) > m - 1:
            w, _ = heapq.heappop(top)
            top_sum -= w
        total = weights[m] + top_sum
        if best_m is None or total >= best_w:
            best_m, best_w = m, total
    if best_m is None or best_w == 0:
        return frozenset(), Fraction(0)
    above = sorted(range(best_m + 1, n + 1), key=lambda i: (-weights[i], i))[: best_m - 1]
    return frozenset([best_m, *above]), best_w


def min_size_family() -> SetFamily:
    """All finite A with |A| <= min A (the empty set included)."""
    return SetFamily(
        generator=lambda h: (s for s in _subsets_lex(h) if _min_family_predicate(s)),
        maximizer=_min_family_maximizer,
        downward_closed=True,
        shift_closed=True,
        name="min",
    )


FAMILIES = {
    "initial": initial_segments,
    "parity": parity_initial_segments,
    "min": min_size_family,
}


def family_by_name(name: str) -> SetFamily:
    try:
        return FAMILIES[name]()
    except KeyError:
        raise DomainError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None


# ---------------------------------------------------------------------------
# the zoo


def lng(strict: bool = False) -> GameOracle:
    """Larger number game: row s beats column t iff s >= t (s > t when strict)."""
    if strict:
        return GameOracle(
            "lng-strict",
            lambda s, t: int(s > t),
            row_scan=lambda cols: range(1, max(cols, default=0) + 2),
            col_scan=lambda rows: range(1, max(rows, default=0) + 1),
            rows_all_finite=True,
            row_ones=lambda s: range(1, s),
        )
    return GameOracle(
        "lng",
        lambda s, t: int(s >= t),
        row_scan=lambda cols: range(1, max(cols, default=1) + 1),
        col_scan=lambda rows: range(1, max(rows, default=0) + 2),
        rows_all_finite=True,
        row_ones=lambda s: range(1, s + 1),
    )


def diagonal() -> GameOracle:
    """Infinite matching pennies: row s beats column t iff s == t."""
    return GameOracle(
        "diagonal",
        lambda s, t: int(s == t),
        row_scan=lambda cols: range(1, max(cols, default=0) + 2),
        col_scan=lambda rows: range(1, max(rows, default=0) + 2),
        rows_all_finite=True,
        row_ones=lambda s: (s,),
    )


def _copy_index(t):
    """Column t -> (copy, position): odd columns are copy 1, even ones copy 2."""
    return (1, (t + 1) // 2) if t % 2 else (2, t // 2)


def _two_copies_payoff(s, t):
    own, n = _copy_index(s)  # row 2n-1 favours copy 1, row 2n copy 2
    copy, k = _copy_index(t)
    if copy == own:
        return int(k <= n)
    return int(k == n)


def _two_copies_ones(s):
    own, n = _copy_index(s)
    if own == 1:
        return [2 * k - 1 for k in range(1, n + 1)] + [2 * n]
    return [2 * k for k in range(1, n + 1)] + [2 * n - 1]


def two_copies() -> GameOracle:
    """Columns are two interleaved copies C1 (odd) and C2 (even) of N.

    Row 2n-1 beats the first n elements of C1 and the n-th element of C2;
    row 2n is the mirror image.
    """

    def row_scan(cols):
        k = max((_copy_index(t)[1] for t in cols), default=0)
        return range(1, 2 * (k + 1) + 1)

    def col_scan(rows):
        k = max((_copy_index(s)[1] for s in rows), default=0)
        return range(1, 2 * (k + 1) + 1)

    return GameOracle(
        "two-copies",
        _two_copies_payoff,
        row_scan=row_scan,
        col_scan=col_scan,
        rows_all_finite=True,
        row_ones=_two_copies_ones,
    )


def constant(value: int) -> GameOracle:
    if value not in (0, 1):
        raise DomainError("constant oracle payoff must be 0 or 1")
    return GameOracle(
        f"const{value}",
        lambda s, t: value,
        row_scan=lambda cols: (1,),
        col_scan=lambda rows: (1,),
        rows_all_finite=value == 0,
        row_ones=(lambda s: ()) if value == 0 else None,
    )


def tail_game() -> GameOracle:
    """Incidence game of the tail hypergraph: vertex v lies in edge E_j iff v >= j."""
    oracle = lng()
    oracle.name = "tail"
    return oracle


def family_game(family: SetFamily, horizon: int | None = None) -> GameOracle:
    """Row i is the i-th member A of the family; it beats column t iff t is in A."""
    members = family.members(horizon)
    if not members:
        raise DomainError("family game needs a non-empty family")

    def payoff_fn(s, t):
        return int(t in members[s - 1])

    def col_scan(rows):
        top = max((max(members[s - 1], default=0) for s in rows), default=0)
        return range(1, top + 2)

    return GameOracle(
        f"family:{family.name or 'anonymous'}",
        payoff_fn,
        row_scan=lambda cols: range(1, len(members) + 1),
        col_scan=col_scan,
        rows_all_finite=True,
        row_ones=lambda s: members[s - 1],
        n_rows=len(members),
        row_label=lambda s: tuple(sorted(members[s - 1])),
        family=family,
    )


def _min_family_game():
    return family_game(min_size_family(), horizon=8)


ZOO = {
    "lng": lng,
    "lng-strict": lambda: lng(strict=True),
    "diagonal": diagonal,
    "two-copies": two_copies,
    "tail": tail_game,
    "const0": lambda: constant(0),
    "const1": lambda: constant(1),
    "min-family": _min_family_game,
}


def oracle_by_name(name: str) -> GameOracle:
    try:
        return ZOO[name]()
    except KeyError:
        raise DomainError(f"unknown zoo game {name!r}; known: {', '.join(sorted(ZOO))}") from None
