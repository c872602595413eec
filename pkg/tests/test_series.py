from fractions import Fraction

import pytest

from minimax_lab import (
    FoolingFailure,
    UnboundedError,
    family_game,
    initial_segments,
    min_size_family,
    parity_initial_segments,
)
from minimax_lab.applications import (
    Series,
    blend,
    check_premise,
    enforcing_constant_lower,
    enforcing_solution,
    fooling_series,
    harmonic,
    zero,
)
from minimax_lab.core import SetFamily


def test_harmonic_premise_small_horizon_by_enumeration():
    explicit = SetFamily(min_size_family().members(12))
    assert check_premise(explicit, harmonic(), 12) == []


def test_harmonic_premise_min_family_large():
    assert check_premise(min_size_family(), harmonic(), 2000) == []


def test_harmonic_violates_initial_segments():
    v = check_premise(initial_segments(), harmonic(), 100)
    # H_1 = 1 is fine, H_2 = 3/2 already exceeds 1
    assert [sorted(x.member) for x in v[:2]] == [[1, 2], [1, 2, 3]]
    assert len(v) == 99
    assert v[2].total == Fraction(25, 12)


def test_zero_series_never_violates():
    for fam in (initial_segments(), parity_initial_segments(), min_size_family()):
        assert check_premise(fam, zero(), 30) == []


def test_series_terms_nonnegative():
    with pytest.raises(Exception):
        Series.from_terms([1, -1])
    s = Series(lambda i: Fraction(-1))
    with pytest.raises(Exception):
        s[1]


def test_blend_examples():
    ones = Series(lambda i: Fraction(1))
    assert blend([ones], 5).prefix(5)[1:] == [Fraction(1, 2)] * 5
    assert blend([ones, ones], 3)[2] == Fraction(3, 4)


def test_blend_keeps_premise():
    fam = initial_segments()
    seqs = [Series.from_terms([Fraction(1, k)] * k) for k in (1, 2, 3, 5)]
    for s in seqs:
        assert check_premise(fam, s, 10) == []
    b = blend(seqs, 10)
    assert check_premise(fam, b, 10) == []
    assert b.partial_sum(10) < 1


def test_enforcing_constant_examples():
    assert all(enforcing_constant_lower(initial_segments(), h) == 1 for h in (1, 5, 20))
    assert enforcing_constant_lower(parity_initial_segments(), 20) == 2


def test_enforcing_constant_min_family_growth():
    values = [enforcing_constant_lower(min_size_family(), h) for h in (2, 4, 8, 16, 32, 64)]
    assert values == sorted(set(values))
    # C(2^k) = k + 2^(1-k) on this schedule
    assert values == [k + Fraction(2, 2 ** k) for k in range(1, 7)]


def test_enforcing_generated_matches_explicit_lp():
    for h in (3, 5, 8):
        explicit = SetFamily(min_size_family().members(h))
        assert enforcing_constant_lower(explicit, h) == enforcing_constant_lower(min_size_family(), h)


def test_enforcing_without_shift_reparametrization():
    fam = min_size_family()
    fam.shift_closed = False
    assert enforcing_constant_lower(fam, 16) == Fraction(33, 8)


def test_enforcing_nondecreasing_in_horizon():
    for fam in (initial_segments(), parity_initial_segments(), min_size_family()):
        vals = [enforcing_constant_lower(fam, h) for h in range(2, 20)]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_enforcing_solution_is_feasible():
    sol = enforcing_solution(min_size_family(), 24)
    weights = [Fraction(0)] + list(sol.terms)
    assert min_size_family().heaviest(weights)[1] <= 1
    assert sum(sol.terms) == sol.value


def test_uncovered_element_is_unbounded():
    with pytest.raises(UnboundedError) as exc:
        enforcing_constant_lower(SetFamily([{1}, {3}]), 4)
    assert exc.value.elements == (2, 4)


def test_fooling_series_min_family():
    a = fooling_series(min_size_family(), Fraction(1, 4), 64)
    assert a.partial_sum(64) == 4
    assert check_premise(min_size_family(), a, 64) == []


def test_fooling_series_from_oracle():
    o = family_game(min_size_family(), horizon=8)
    a = fooling_series(o, Fraction(1, 4), 64)
    assert a.partial_sum(64) == 4


def test_fooling_fails_on_initial_segments():
    with pytest.raises(FoolingFailure) as exc:
        fooling_series(initial_segments(), Fraction(9, 10), 40)
    assert exc.value.value == 1


def test_fooling_eps_one_is_the_strategy():
    a = fooling_series(initial_segments(), 1, 10)
    assert a.partial_sum(10) == 1
    assert check_premise(initial_segments(), a, 10) == []


def test_fooling_uses_uncovered_column():
    a = fooling_series(SetFamily([{1}, {3}]), Fraction(1, 2), 4)
    assert a.prefix(4)[1:] == [0, 2, 0, 0]


def test_horizon_1000_is_just_short_of_tenfold():
    assert enforcing_constant_lower(min_size_family(), 1000) == Fraction(4989, 500)
    with pytest.raises(FoolingFailure) as exc:
        fooling_series(min_size_family(), Fraction(1, 10), 1000)
    assert exc.value.value == Fraction(500, 4989)


@pytest.mark.parametrize("eps", ["1", "1/2", "1/3", "1/5"])
def test_fooling_output_meets_both_conclusions(eps):
    eps = Fraction(eps)
    a = fooling_series(min_size_family(), eps, 256)
    assert a.partial_sum(256) == 1 / eps
    assert check_premise(min_size_family(), a, 256) == []
