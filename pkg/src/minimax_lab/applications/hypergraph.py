"""Fractional matchings and covers of finite hypergraphs.

Vertices and edges are addressed by 1-based position. The incidence game has
a row per vertex and a column per edge; the vertex wins when it lies in the
edge. Its value is 1/tau* = 1/nu*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from ..core import FiniteGame, MixedStrategy, to_fraction
from ..errors import DomainError
from ..lp import maximize, minimize_cover
from ..structure import StaircaseWitness, staircase_exact


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple
    edges: tuple  # tuples of vertex labels

    def __init__(self, vertices: Sequence[Hashable], edges: Sequence[Sequence[Hashable]]):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise DomainError("duplicate vertex labels")
        known = set(vertices)
        clean = []
        for k, e in enumerate(edges, 1):
            e = tuple(e)
            if not e:
                raise DomainError(f"edge {k} is empty")
            if len(set(e)) != len(e):
                raise DomainError(f"edge {k} repeats a vertex")
            stray = [v for v in e if v not in known]
            if stray:
                raise DomainError(f"edge {k} contains unknown vertices {stray}")
            clean.append(e)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(clean))

    def incidence(self) -> list[list[int]]:
        """Vertex by edge 0/1 matrix."""
        index = {v: i for i, v in enumerate(self.vertices)}
        rows = [[0] * len(self.edges) for _ in self.vertices]
        for j, e in enumerate(self.edges):
            for v in e:
                rows[index[v]][j] = 1
        return rows


def tail_hypergraph(n: int) -> Hypergraph:
    """E_j = {v : j <= v <= n} on vertices 1..n."""
    return Hypergraph(range(1, n + 1), [range(j, n + 1) for j in range(1, n + 1)])


def triangle() -> Hypergraph:
    return Hypergraph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])


@dataclass(frozen=True)
class FractionalSolution:
    kind: str  # "matching" (weights on edge positions) or "cover" (weights on vertex positions)
    weights: tuple

    @property
    def size(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def is_feasible(self, h: Hypergraph) -> bool:
        inc = h.incidence()
        if any(w < 0 for w in self.weights):
            return False
        if self.kind == "matching":
            return len(self.weights) == len(h.edges) and all(
                sum((f for f, x in zip(self.weights, row) if x), Fraction(0)) <= 1 for row in inc
            )
        if self.kind == "cover":
            return len(self.weights) == len(h.vertices) and all(
                sum((g for g, row in zip(self.weights, inc) if row[j]), Fraction(0)) >= 1
                for j in range(len(h.edges))
            )
        return False


def nu_star(h: Hypergraph) -> tuple[Fraction, FractionalSolution]:
    """Maximum fractional matching. With no edges it is 0."""
    if not h.edges:
        return Fraction(0), FractionalSolution("matching", ())
    res = maximize(h.incidence(), [1] * len(h.vertices), [1] * len(h.edges))
    return res.value, FractionalSolution("matching", res.x)


def tau_star(h: Hypergraph) -> tuple[Fraction, FractionalSolution]:
    """Minimum fractional cover. With no edges it is 0."""
    if not h.edges:
        return Fraction(0), FractionalSolution("cover", (Fraction(0),) * len(h.vertices))
    inc = h.incidence()
    by_edge = [[inc[v][j] for v in range(len(h.vertices))] for j in range(len(h.edges))]
    res = minimize_cover(by_edge, [1] * len(h.edges), [1] * len(h.vertices))
    return res.value, FractionalSolution("cover", res.x)


def game_of_hypergraph(h: Hypergraph) -> FiniteGame:
    if not h.vertices or not h.edges:
        raise DomainError("the incidence game needs at least one vertex and one edge")
    return FiniteGame(h.incidence(), list(h.vertices), list(range(1, len(h.edges) + 1)))


def cover_to_strategy(g: FractionalSolution) -> MixedStrategy:
    """p_v = g(v) / |g|."""
    if g.kind != "cover":
        raise DomainError("expected a fractional cover")
    size = g.size
    if size <= 0:
        raise DomainError("cover has zero size")
    return MixedStrategy({v: w / size for v, w in enumerate(g.weights, 1) if w})


def strategy_to_cover(p: MixedStrategy, alpha, h: Hypergraph) -> FractionalSolution:
    """g(v) = p_v / alpha, a cover of size 1/alpha when p wins every edge w.p. >= alpha."""
    alpha = to_fraction(alpha)
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    n = len(h.vertices)
    if any(v > n for v in p):
        raise DomainError(f"strategy support {p.support} exceeds the {n} vertices")
    inc = h.incidence()
    for j, e in enumerate(h.edges, 1):
        got = sum((w for v, w in p.items() if inc[v - 1][j - 1]), Fraction(0))
        if got < alpha:
            raise DomainError(f"edge {j} {list(e)} is won with probability {got} < {alpha}")
    return FractionalSolution("cover", tuple(p.weight(v) / alpha for v in range(1, n + 1)))


def separation_witness(game: FiniteGame) -> StaircaseWitness:
    return staircase_exact(game)[1]
