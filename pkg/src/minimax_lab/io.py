"""JSON interchange for games, hypergraphs and set families.

Rationals are written as lowest-terms ``"a/b"`` strings (integers as ``"a"``)
and never as floats. Writers emit a canonical layout, so reading a canonical
file and writing it back reproduces it byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .applications.hypergraph import Hypergraph
from .core import FiniteGame, MixedStrategy, SetFamily, format_fraction, to_fraction
from .errors import DomainError


def _load(text: str, what: str):
    try:
        return json.loads(text, parse_float=_no_float)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{what}: invalid JSON ({exc})") from None


def _no_float(literal):
    raise DomainError(f"floating literal {literal} not allowed; write rationals as \"a/b\"")


def _field(obj, key, what):
    if not isinstance(obj, dict):
        raise DomainError(f"{what}: expected a JSON object")
    if key not in obj:
        raise DomainError(f"{what}: missing field {key!r}")
    return obj[key]


def _label(x, field):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DomainError(f"field {field!r}: labels must be integers or strings, got {x!r}")
    return x


def _rational(x, field):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DomainError(f"field {field!r}: expected an \"a/b\" string, got {x!r}")
    try:
        return to_fraction(x)
    except DomainError as exc:
        raise DomainError(f"field {field!r}: {exc}") from None


def dumps(obj) -> str:
    """Deterministic JSON: objects and nested lists indented, scalar lists inline."""
    return _render(obj, 0) + "\n"


def _render(obj, depth):
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        items = [inner + _render(x, depth + 1) for x in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(obj, ensure_ascii=False)


def strategy_to_json(p: MixedStrategy) -> dict:
    return {str(k): format_fraction(p[k]) for k in sorted(p)}


# games


def game_to_json(game: FiniteGame) -> dict:
    return {
        "rows": list(game.row_labels),
        "cols": list(game.col_labels),
        "payoff": [[format_fraction(v) for v in row] for row in game.payoff],
    }


def game_from_json(obj) -> FiniteGame:
    what = "game"
    rows = _field(obj, "rows", what)
    cols = _field(obj, "cols", what)
    payoff = _field(obj, "payoff", what)
    if not isinstance(rows, list) or not isinstance(cols, list):
        raise DomainError("fields 'rows' and 'cols' must be lists")
    if not isinstance(payoff, list) or not all(isinstance(r, list) for r in payoff):
        raise DomainError("field 'payoff' must be a list of lists")
    matrix = [[_rational(v, "payoff") for v in r] for r in payoff]
    try:
        return FiniteGame(matrix, [_label(x, "rows") for x in rows], [_label(x, "cols") for x in cols])
    except DomainError as exc:
        raise DomainError(f"field 'payoff': {exc}") from None


def dumps_game(game: FiniteGame) -> str:
    return dumps(game_to_json(game))


def loads_game(text: str) -> FiniteGame:
    return game_from_json(_load(text, "game"))


# hypergraphs


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"vertices": list(h.vertices), "edges": [list(e) for e in h.edges]}


def hypergraph_from_json(obj) -> Hypergraph:
    vertices = _field(obj, "vertices", "hypergraph")
    edges = _field(obj, "edges", "hypergraph")
    if not isinstance(vertices, list):
        raise DomainError("field 'vertices' must be a list")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise DomainError("field 'edges' must be a list of lists")
    try:
        return Hypergraph([_label(v, "vertices") for v in vertices],
                          [[_label(v, "edges") for v in e] for e in edges])
    except DomainError as exc:
        raise DomainError(f"field 'edges': {exc}") from None


def dumps_hypergraph(h: Hypergraph) -> str:
    return dumps(hypergraph_to_json(h))


def loads_hypergraph(text: str) -> Hypergraph:
    return hypergraph_from_json(_load(text, "hypergraph"))


# set families


def family_to_json(family: SetFamily) -> dict:
    if not family.explicit:
        raise DomainError(f"{family!r} is not explicit and cannot be written out")
    return {
        "sets": [sorted(s) for s in family.members()],
        "downward_closed": family.downward_closed,
    }


def family_from_json(obj) -> SetFamily:
    sets = _field(obj, "sets", "family")
    down = obj.get("downward_closed", False)
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise DomainError("field 'sets' must be a list of lists")
    if not isinstance(down, bool):
        raise DomainError("field 'downward_closed' must be true or false")
    for s in sets:
        for x in s:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise DomainError(f"field 'sets': members must be natural numbers, got {x!r}")
    family = SetFamily(sets, downward_closed=down)
    if len(family.members()) != len(sets):
        raise DomainError("field 'sets': duplicate members")
    return family


def dumps_family(family: SetFamily) -> str:
    return dumps(family_to_json(family))


def loads_family(text: str) -> SetFamily:
    return family_from_json(_load(text, "family"))


def read_text(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def fraction_list(values) -> list[str]:
    return [format_fraction(Fraction(v)) for v in values]
