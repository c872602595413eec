from fractions import Fraction

import pytest

from minimax_lab import (
    DomainError,
    FiniteGame,
    MixedStrategy,
    UnsupportedCapabilityError,
    diagonal,
    dualize,
    family_game,
    identity_matrix,
    initial_segments,
    lng,
    oracle_by_name,
    pi_mix,
    reduced_truncation,
    solve,
    staircase_matrix,
    subgame,
    tail_game,
    truncate,
    two_copies,
)
from minimax_lab.core import ZOO, GameOracle, SetFamily, constant_matrix, to_fraction


def test_pi_mix_matching_pennies():
    g = identity_matrix(2)
    u = MixedStrategy.uniform([1, 2])
    assert pi_mix(g, u, u) == Fraction(1, 2)


def test_pi_mix_point_masses_read_entries():
    g = truncate(lng(), 4, 4)
    for s in range(1, 5):
        for t in range(1, 5):
            assert pi_mix(g, MixedStrategy.point(s), MixedStrategy.point(t)) == g.entry(s, t)


def test_pi_mix_lng_row_three():
    g = truncate(lng(), 3, 3)
    assert pi_mix(g, MixedStrategy.point(3), MixedStrategy.uniform([1, 2, 3])) == 1


def test_pi_mix_rejects_out_of_range():
    with pytest.raises(DomainError):
        pi_mix(identity_matrix(2), MixedStrategy.point(3), MixedStrategy.point(1))


def test_mixed_strategy_invariants():
    with pytest.raises(DomainError):
        MixedStrategy({1: Fraction(1, 2)})
    with pytest.raises(DomainError):
        MixedStrategy({1: Fraction(3, 2), 2: Fraction(-1, 2)})
    p = MixedStrategy({2: "1/3", 5: "2/3"})
    assert p.support == (2, 5)


def test_subgame_examples():
    g = truncate(lng(), 5, 5)
    assert subgame(g, range(1, 6), range(1, 6)) == g
    sub = subgame(g, [2, 4], [3])
    assert sub.to_rows() == [[0], [1]]
    assert sub.row_labels == (2, 4)
    assert subgame(g, [3], [2]).to_rows() == [[1]]
    with pytest.raises(DomainError):
        subgame(g, [], [1])


def test_dualize_involution_and_value():
    g = truncate(lng(), 5, 5)
    assert dualize(dualize(g)) == g
    assert solve(dualize(g)).value == 1 - solve(g).value
    ones = constant_matrix(2, 3, 1)
    assert dualize(ones).to_rows() == [[0, 0], [0, 0], [0, 0]]


def test_truncate_examples():
    assert truncate(lng(), 3, 3).to_rows() == [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    assert truncate(diagonal(), 2, 4).to_rows() == [[1, 0, 0, 0], [0, 1, 0, 0]]
    assert truncate(two_copies(), 1, 1).to_rows() == [[1]]


@pytest.mark.parametrize("name", sorted(ZOO))
def test_truncate_agrees_with_payoff(name):
    oracle = oracle_by_name(name)
    n = min(50, oracle.n_rows or 50)
    g = truncate(oracle, n, 50)
    assert all(g.entry(s, t) == oracle.payoff(s, t) for s in range(1, n + 1) for t in range(1, 51))


def test_reduced_truncation_examples():
    r = reduced_truncation(lng(), [1, 2, 3])
    assert sorted(map(tuple, r.to_rows())) == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]
    d = reduced_truncation(diagonal(), [1, 2])
    assert sorted(map(tuple, d.to_rows())) == [(0, 0), (0, 1), (1, 0)]
    assert reduced_truncation(two_copies(), [3]).n_rows <= 2


def test_reduced_truncation_needs_capability():
    bare = GameOracle("bare", lambda s, t: int(s >= t))
    with pytest.raises(UnsupportedCapabilityError):
        reduced_truncation(bare, [1, 2])


@pytest.mark.parametrize("name", ["lng", "diagonal", "two-copies", "tail", "lng-strict"])
def test_reduced_truncation_preserves_value(name):
    oracle = oracle_by_name(name)
    for m in (1, 2, 3, 5):
        reduced = reduced_truncation(oracle, range(1, m + 1))
        # every row pattern on 1..m is already realized by the first 2m + 2 rows
        assert solve(reduced).value == solve(truncate(oracle, 2 * m + 2, m)).value


def test_zoo_examples():
    assert lng().payoff(5, 5) == 1
    assert lng(strict=True).payoff(5, 5) == 0
    tail = tail_game()
    assert tail.payoff(3, 5) == 0 and tail.payoff(7, 5) == 1
    tc = two_copies()
    for n in range(1, 6):
        odd_row, even_row = 2 * n - 1, 2 * n
        c1 = [2 * k - 1 for k in range(1, 12)]
        c2 = [2 * k for k in range(1, 12)]
        assert [t for t in c1 if tc.payoff(odd_row, t)] == c1[:n]
        assert [t for t in c2 if tc.payoff(odd_row, t)] == [c2[n - 1]]
        assert [t for t in c2 if tc.payoff(even_row, t)] == c2[:n]
        assert [t for t in c1 if tc.payoff(even_row, t)] == [c1[n - 1]]


def test_staircase_matrix_is_lng_truncation():
    assert staircase_matrix(6) == truncate(lng(), 6, 6)


def test_family_game():
    fam = initial_segments()
    o = family_game(fam, horizon=4)
    assert o.payoff(3, 3) == 1 and o.payoff(3, 4) == 0
    assert o.row_label(2) == (1, 2)
    with pytest.raises(DomainError):
        family_game(SetFamily([]))


def test_unknown_zoo_name():
    with pytest.raises(DomainError):
        oracle_by_name("no-such-game")


@pytest.mark.parametrize("bad", [0.5, "0.5", "1/0", "x", None])
def test_to_fraction_rejects(bad):
    with pytest.raises(DomainError):
        to_fraction(bad)


def test_game_invariants():
    with pytest.raises(DomainError):
        FiniteGame([[2]])
    with pytest.raises(DomainError):
        FiniteGame([[0, 1], [1]])
    with pytest.raises(DomainError):
        FiniteGame([[0, 1]], ["a"], ["x", "x"])
    assert not FiniteGame([["1/2"]]).win_lose
