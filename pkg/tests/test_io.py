from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minimax_lab import DomainError, FiniteGame, truncate, lng
from minimax_lab.applications import Hypergraph, triangle
from minimax_lab.core import SetFamily
from minimax_lab.io import (
    dumps,
    dumps_family,
    dumps_game,
    dumps_hypergraph,
    loads_family,
    loads_game,
    loads_hypergraph,
)

fractions01 = st.fractions(min_value=0, max_value=1, max_denominator=50)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.lists(st.lists(fractions01, min_size=m, max_size=m), min_size=1, max_size=4)))
def test_game_round_trip(payoff):
    g = FiniteGame(payoff, [f"r{i}" for i in range(len(payoff))], list(range(1, len(payoff[0]) + 1)))
    text = dumps_game(g)
    assert loads_game(text) == g
    assert dumps_game(loads_game(text)) == text


def test_lowest_terms():
    text = '{"rows": [1], "cols": [1, 2], "payoff": [["2/4", "3/3"]]}'
    g = loads_game(text)
    assert g.payoff == ((Fraction(1, 2), Fraction(1)),)
    assert '"1/2", "1"' in dumps_game(g)


def test_canonical_layout():
    assert dumps_game(truncate(lng(), 2, 2)) == (
        '{\n  "rows": [1, 2],\n  "cols": [1, 2],\n  "payoff": [\n'
        '    ["1", "0"],\n    ["1", "1"]\n  ]\n}\n'
    )


@pytest.mark.parametrize("text, field", [
    ('{"rows": [1], "cols": [1]}', "payoff"),
    ('{"rows": [1], "cols": [1], "payoff": [[0.5]]}', "floating"),
    ('{"rows": [1], "cols": [1], "payoff": [["3/2"]]}', "payoff"),
    ('{"rows": [1, 2], "cols": [1], "payoff": [["1"]]}', "payoff"),
    ('not json', "invalid JSON"),
])
def test_bad_game_input(text, field):
    with pytest.raises(DomainError, match=field):
        loads_game(text)


def test_hypergraph_round_trip():
    for h in (triangle(), Hypergraph(["a", "b"], [["a"], ["a", "b"]])):
        text = dumps_hypergraph(h)
        assert loads_hypergraph(text) == h
        assert dumps_hypergraph(loads_hypergraph(text)) == text


def test_family_round_trip():
    fam = SetFamily([[1], [1, 2], []], downward_closed=False)
    text = dumps_family(fam)
    again = loads_family(text)
    assert again.members() == fam.members()
    assert dumps_family(again) == text


def test_family_rejects_bad_members():
    with pytest.raises(DomainError):
        loads_family('{"sets": [[0]]}')
    with pytest.raises(DomainError):
        loads_family('{"sets": [[1], [1]]}')


def test_dumps_is_ordered_and_stable():
    obj = {"b": [1, 2], "a": {"x": "1/2"}}
    assert dumps(obj) == dumps(obj)
    assert dumps(obj).index('"b"') < dumps(obj).index('"a"')
