import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import win_lose
from minimax_lab import (
    FiniteGame,
    MixedStrategy,
    ResourceLimitError,
    best_pure_response,
    identity_matrix,
    lng,
    solve,
    truncate,
    two_copies,
    value,
    verify,
)
from minimax_lab.core import constant_matrix
from oracles import game_value


@pytest.mark.parametrize("k", [1, 2, 3, 7, 20])
def test_identity_value(k):
    res = solve(identity_matrix(k))
    assert res.value == Fraction(1, k)
    assert verify(identity_matrix(k), res)


def test_constant_games():
    assert value(constant_matrix(3, 4, 1)) == 1
    assert value(constant_matrix(3, 4, 0)) == 0


def test_lng_square_value_is_one():
    assert value(truncate(lng(), 6, 6)) == 1
    assert value(truncate(lng(), 6, 7)) == 0


def test_fractional_payoffs():
    g = FiniteGame([["1/2", "1/4"], ["1/4", "1/2"]])
    assert value(g) == Fraction(3, 8)


def test_deterministic_output():
    g = FiniteGame([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
    assert solve(g) == solve(g)


def test_size_budget():
    with pytest.raises(ResourceLimitError):
        solve(identity_matrix(5), max_size=4)


def test_verify_rejects_wrong_value():
    g = identity_matrix(3)
    res = solve(g)
    bad = type(res)(res.value + Fraction(1, 10), res.p_opt, res.q_opt, res.iterations)
    assert not verify(g, bad)


@settings(max_examples=200, deadline=None)
@given(win_lose(4, 4))
def test_value_matches_kernel_enumeration(g):
    res = solve(g)
    assert verify(g, res)
    assert res.value == game_value(g.payoff)


@settings(max_examples=100, deadline=None)
@given(win_lose(6, 6))
def test_certificate_random(g):
    assert verify(g, solve(g))


def test_best_pure_response_ties_go_low():
    g = identity_matrix(3)
    assert best_pure_response(g, MixedStrategy.uniform([1, 2, 3])) == (1, Fraction(1, 3))


def test_two_copies_pure_response_reaches_half():
    rnd = random.Random(7)
    for _ in range(100):
        k = rnd.randint(1, 8)
        support = rnd.sample(range(1, 2 * k + 1), rnd.randint(1, 2 * k))
        weights = [rnd.randint(1, 9) for _ in support]
        total = sum(weights)
        q = MixedStrategy({t: Fraction(w, total) for t, w in zip(support, weights)})
        g = truncate(two_copies(), 2 * k + 2, 2 * k)
        _, payoff = best_pure_response(g, q)
        assert payoff >= Fraction(1, 2)
