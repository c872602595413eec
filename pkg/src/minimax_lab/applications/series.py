"""Series fooled by a set family, and the families that force convergence.

A family F of finite sets of naturals enforces convergence when every
nonnegative series whose sums over members of F stay at most 1 has a finite
total. Here the finite-horizon version is computed exactly: the largest total
reachable under the constraints, and series built from the family game.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ..core import GameOracle, SetFamily, to_fraction
from ..errors import (
    DomainError,
    FoolingFailure,
    ResourceLimitError,
    UnboundedError,
    UnsupportedCapabilityError,
)
from ..lp import maximize

MAX_PREMISE_MEMBERS = 1_000_000
MAX_CUT_ROUNDS = 10_000


class Series:
    """Nonnegative rational terms a_1, a_2, ... given by a term function."""

    def __init__(self, term: Callable[[int], Fraction], name: str | None = None):
        self._term = term
        self.name = name

    @classmethod
    def from_terms(cls, terms: Sequence, name: str | None = None) -> "Series":
        """Finitely many terms a_1..a_k; every later term is 0."""
        values = tuple(to_fraction(v) for v in terms)
        if any(v < 0 for v in values):
            raise DomainError("series terms must be nonnegative")
        return cls(lambda i: values[i - 1] if i <= len(values) else Fraction(0), name)

    def __getitem__(self, i: int) -> Fraction:
        if i < 1:
            raise DomainError(f"series index {i} is not a natural number")
        v = Fraction(self._term(i))
        if v < 0:
            raise DomainError(f"series term a_{i} = {v} is negative")
        return v

    def prefix(self, horizon: int) -> list[Fraction]:
        """Weights indexed 0..horizon with a dummy 0 in position 0."""
        return [Fraction(0)] + [self[i] for i in range(1, horizon + 1)]

    def partial_sum(self, horizon: int) -> Fraction:
        return sum(self.prefix(horizon), Fraction(0))

    def __repr__(self):
        return f"Series({self.name or 'anonymous'})"


def harmonic() -> Series:
    return Series(lambda i: Fraction(1, i), "harmonic")


def zero() -> Series:
    return Series(lambda i: Fraction(0), "zero")


@dataclass(frozen=True)
class Violation:
    member: frozenset
    total: Fraction


def check_premise(family: SetFamily, series: Series, horizon: int,
                  max_members: int = MAX_PREMISE_MEMBERS) -> list[Violation]:
    """Members A within 1..horizon whose sum of a_i over A exceeds 1.

    When the family has a maximizer the heaviest member is checked first; if
    even that one stays at most 1 there is nothing to enumerate.
    """
    weights = series.prefix(horizon)
    if family.has_maximizer:
        _, heaviest = family.heaviest(weights)
        if heaviest <= 1:
            return []
    out = []
    for count, a in enumerate(family.iter_members(horizon), 1):
        if count > max_members:
            raise ResourceLimitError(
                f"{family!r} has more than {max_members} members within 1..{horizon}"
            )
        total = sum((weights[i] for i in a), Fraction(0))
        if total > 1:
            out.append(Violation(a, total))
    return out


def blend(sequences: Sequence[Series], horizon: int) -> Series:
    """a_i = sum over n of a_i^(n) / 2^n, for the given finite list of series.

    Terms are checked for nonnegativity up to ``horizon``.
    """
    seqs = tuple(sequences)
    for s in seqs:
        s.prefix(horizon)

    def term(i):
        return sum((s[i] / 2 ** n for n, s in enumerate(seqs, 1)), Fraction(0))

    return Series(term, "blend")


# ---------------------------------------------------------------------------
# the enforcing constant


@dataclass(frozen=True)
class EnforcingSolution:
    value: Fraction
    terms: tuple  # optimal a_1..a_horizon
    cuts: tuple  # members whose constraints were generated


def _uncovered(family: SetFamily, horizon: int) -> list[int]:
    """Elements of 1..horizon in no member."""
    if not family.has_maximizer:
        covered = set().union(*family.members(horizon))
        return [i for i in range(1, horizon + 1) if i not in covered]
    # repeatedly take a member of largest overlap with what is still uncovered
    remaining = set(range(1, horizon + 1))
    while remaining:
        w = [Fraction(int(i in remaining)) for i in range(horizon + 1)]
        member, weight = family.heaviest(w)
        if weight == 0:
            break
        remaining -= member
    return sorted(remaining)


def enforcing_solution(family: SetFamily, horizon: int) -> EnforcingSolution:
    """Solve max sum a_i subject to sum over A of a_i <= 1 for members A, a >= 0.

    Explicit families are solved directly. Families with a maximizer are
    solved by generating rows and columns together: a restricted LP over the
    cuts and variables found so far, variables priced in by reduced cost, and
    cuts added from the heaviest member for the current optimum.

    For shift-closed families an optimum can be taken nonincreasing, so the
    variables are the differences d_j = a_j - a_{j+1} >= 0: member A
    contributes |A & [1, j]| to the coefficient of d_j and the objective
    coefficient of d_j is j.
    """
    if horizon < 1:
        raise DomainError("horizon must be at least 1")
    missing = _uncovered(family, horizon)
    if missing:
        raise UnboundedError(
            f"elements {missing[:10]} lie in no member; the total is unbounded", tuple(missing)
        )

    if not family.has_maximizer:
        cuts = family.members(horizon)
        A = [[1 if i in c else 0 for i in range(1, horizon + 1)] for c in cuts]
        a = list(maximize(A, [1] * len(A), [1] * horizon).x)
        return EnforcingSolution(sum(a, Fraction(0)), tuple(a), tuple(cuts))

    shifted = family.shift_closed
    cuts: list[frozenset] = []
    prefix_counts: list[list[int]] = []  # prefix_counts[c][j] = |cut_c & [1, j]|

    def add_cut(member):
        if member in cuts:
            raise AssertionError("maximizer repeated a cut")
        cuts.append(member)
        counts, k = [0], 0
        for j in range(1, horizon + 1):
            k += j in member
            counts.append(k)
        prefix_counts.append(counts)

    def coef(c, j):
        if shifted:
            return prefix_counts[c][j]
        return prefix_counts[c][j] - prefix_counts[c][j - 1]

    def objective(j):
        return j if shifted else 1

    cols: list[int] = [horizon]
    for _ in range(MAX_CUT_ROUNDS):
        # a column no cut touches would make the restricted LP unbounded
        bare = next((j for j in cols if all(coef(c, j) == 0 for c in range(len(cuts)))), None)
        if bare is not None:
            w = [Fraction(0)] * (horizon + 1)
            for i in (range(1, bare + 1) if shifted else (bare,)):
                w[i] = Fraction(1)
            member, weight = family.heaviest(w)
            if weight == 0:
                raise AssertionError("maximizer found no member for a covered element")
            add_cut(member)
            continue
        A = [[coef(c, j) for j in cols] for c in range(len(cuts))]
        res = maximize(A, [1] * len(cuts), [objective(j) for j in cols])
        duals = [(c, y) for c, y in enumerate(res.y) if y]
        active = set(cols)
        best_rc, best_j = Fraction(0), None
        for j in range(1, horizon + 1):
            if j in active:
                continue
            rc = objective(j) - sum((y * coef(c, j) for c, y in duals), Fraction(0))
            if rc > best_rc:
                best_rc, best_j = rc, j
        if best_j is not None:
            cols.append(best_j)
            continue
        x = [Fraction(0)] * (horizon + 1)
        for j, v in zip(cols, res.x):
            x[j] = v
        if shifted:
            running = Fraction(0)
            for j in range(horizon, 0, -1):
                running += x[j]
                x[j] = running
        a = x[1:]
        member, weight = family.heaviest(x)
        if weight <= 1:
            return EnforcingSolution(sum(a, Fraction(0)), tuple(a), tuple(cuts))
        add_cut(member)
    raise ResourceLimitError(f"constraint generation did not settle in {MAX_CUT_ROUNDS} rounds")


def enforcing_constant_lower(family: SetFamily, horizon: int) -> Fraction:
    """Exact finite-horizon lower bound on the enforcing constant of ``family``.

    Nondecreasing in the horizon; raises UnboundedError when some element of
    1..horizon lies in no member.
    """
    return enforcing_solution(family, horizon).value


# ---------------------------------------------------------------------------
# fooling series


def _family_of(source) -> SetFamily:
    if isinstance(source, SetFamily):
        return source
    if isinstance(source, GameOracle):
        if source.family is not None:
            return source.family
        if source.n_rows is not None and source.supports_row_ones:
            return SetFamily([source.row_ones(s) for s in range(1, source.n_rows + 1)],
                             name=source.name)
    raise UnsupportedCapabilityError(f"{source!r} does not describe a set family")


def fooling_series(source, eps, horizon: int) -> Series:
    """a = q/eps for a column strategy q of the family game on 1..horizon.

    The truncated family game (members inside 1..horizon against columns
    1..horizon) has value 1/C, where C is the enforcing LP optimum, and an
    optimal q is a*/C. When 1/C <= eps the returned series has total 1/eps and
    sums at most 1 over every member; otherwise FoolingFailure carries 1/C.
    """
    eps = to_fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    family = _family_of(source)
    name = f"fooling({family.name or 'anonymous'})"
    try:
        sol = enforcing_solution(family, horizon)
    except UnboundedError as exc:
        # a column no member beats: the truncated value is 0 and q is a point mass
        t = exc.elements[0]
        return Series.from_terms([1 / eps if i == t else 0 for i in range(1, horizon + 1)], name)
    value = 1 / sol.value
    if value > eps:
        raise FoolingFailure(value, eps, horizon)
    return Series.from_terms([a / (sol.value * eps) for a in sol.terms], name)
