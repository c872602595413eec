from fractions import Fraction

import pytest

from minimax_lab import DomainError, identity_matrix, lng
from minimax_lab.applications import density_report
from minimax_lab.core import constant, constant_matrix, diagonal, oracle_from_game


def test_lng_density_pair():
    r = density_report(lng(), 10_000)
    assert max(r.row_estimates) <= Fraction(20, 10_000)
    assert min(r.col_estimates) >= 1 - Fraction(19, 10_000)
    assert r.pair == (Fraction(20, 10_000), Fraction(9981, 10_000))
    assert "estimate" in r.caveat


def test_identity_has_no_pair():
    r = density_report(oracle_from_game(identity_matrix(40)), 40)
    assert all(x <= Fraction(1, 40) for x in r.row_estimates + r.col_estimates)
    assert r.pair is None


def test_all_ones_has_no_pair():
    r = density_report(constant(1), 50)
    assert set(r.row_estimates) == set(r.col_estimates) == {1}
    assert r.pair is None


def test_diagonal_infinite_prefix_estimates():
    r = density_report(diagonal(), 100, rows=[1, 50], cols=[7])
    assert r.row_estimates == (Fraction(1, 100),) * 2


def test_prefix_validation():
    with pytest.raises(DomainError):
        density_report(lng(), 0)
    with pytest.raises(DomainError):
        density_report(oracle_from_game(constant_matrix(3, 3)), 4)
