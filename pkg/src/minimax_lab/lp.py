"""Exact linear programming over the rationals.

Internal module. Two entry points share one integer tableau:

* :func:`maximize` runs the primal simplex on ``max c.x  s.t.  A x <= b, x >= 0``
  with ``b >= 0`` (the slack basis is feasible, so no phase one is needed).
* :func:`minimize_cover` runs the dual simplex on ``min c.x  s.t.  A x >= b,
  x >= 0`` with ``c >= 0`` (the slack basis is dual feasible).

The tableau is kept fraction-free (integer-preserving pivoting): every stored
entry equals the true tableau entry multiplied by the current pivot ``d``, and
the update ``(a*p - b*c) / d_old`` divides exactly. Both methods use smallest
index pivoting rules, so they terminate and are deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InfeasibleError, UnboundedError


@dataclass(frozen=True)
class LPResult:
    x: tuple  # primal solution
    y: tuple  # dual solution, one entry per constraint row
    value: Fraction
    pivots: int


def _scale(row):
    """Smallest positive integer multiplier clearing the denominators of ``row``."""
    m = 1
    for v in row:
        m = lcm(m, Fraction(v).denominator)
    return m


class _Tableau:
    def __init__(self, rows, objective, n_struct):
        self.t = rows
        self.z = objective
        self.d = 1
        self.n = n_struct
        self.basis = [n_struct + i for i in range(len(rows))]
        self.pivots = 0

    def pivot(self, r, j):
        pr = self.t[r]
        p = pr[j]
        d = self.d
        for i, row in enumerate(self.t):
            if i != r:
                self.t[i] = self._eliminate(row, pr, p, d, j)
        self.z = self._eliminate(self.z, pr, p, d, j)
        self.d = p
        self.basis[r] = j
        if p < 0:
            # keep d positive so stored signs equal true signs
            self.t = [[-v for v in row] for row in self.t]
            self.z = [-v for v in self.z]
            self.d = -p
        self.pivots += 1

    @staticmethod
    def _eliminate(row, pr, p, d, j):
        f = row[j]
        if f == 0:
            if p == d:
                return row
            return [v * p // d for v in row]
        return [(v * p - f * w) // d for v, w in zip(row, pr)]

    def basic_values(self):
        x = [Fraction(0)] * (self.n + len(self.t))
        for i, b in enumerate(self.basis):
            x[b] = Fraction(self.t[i][-1], self.d)
        return x


def maximize(A, b, c):
    """Solve ``max c.x`` subject to ``A x <= b``, ``x >= 0`` where ``b >= 0``.

    Raises UnboundedError whose ``elements`` holds the 0-based index of the
    entering column that has no blocking row.
    """
    m = len(A)
    n = len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("maximize needs a nonnegative right-hand side")
    row_scale = [_scale(list(A[i]) + [b[i]]) for i in range(m)]
    obj_scale = _scale(c)
    rows = []
    for i in range(m):
        s = row_scale[i]
        slack = [0] * m
        slack[i] = 1
        rows.append([int(Fraction(v) * s) for v in A[i]] + slack + [int(Fraction(b[i]) * s)])
    z = [int(Fraction(v) * obj_scale) for v in c] + [0] * m + [0]
    tab = _Tableau(rows, z, n)

    while True:
        # Bland: lowest-index improving column, lowest-index basic variable on ties
        entering = next((j for j in range(n + m) if tab.z[j] > 0), None)
        if entering is None:
            break
        best = None
        for i, row in enumerate(tab.t):
            a = row[entering]
            if a > 0:
                if best is None:
                    best = i
                    continue
                lhs = row[-1] * tab.t[best][entering]
                rhs = tab.t[best][-1] * a
                if lhs < rhs or (lhs == rhs and tab.basis[i] < tab.basis[best]):
                    best = i
        if best is None:
            raise UnboundedError("linear program is unbounded", (entering,))
        tab.pivot(best, entering)

    vals = tab.basic_values()
    x = tuple(vals[:n])
    y = tuple(
        Fraction(-tab.z[n + i], tab.d) * row_scale[i] / obj_scale for i in range(m)
    )
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult(x, y, value, tab.pivots)


def minimize_cover(A, b, c):
    """Solve ``min c.x`` subject to ``A x >= b``, ``x >= 0`` where ``c >= 0``.

    Runs the dual simplex from the all-slack basis. The returned ``y`` is an
    optimal solution of the packing dual ``max b.y  s.t.  A^T y <= c``.
    """
    m = len(A)
    n = len(c)
    if any(Fraction(v) < 0 for v in c):
        raise ValueError("minimize_cover needs a nonnegative cost vector")
    row_scale = [_scale(list(A[i]) + [b[i]]) for i in range(m)]
    obj_scale = _scale(c)
    rows = []
    for i in range(m):
        s = row_scale[i]
        slack = [0] * m
        slack[i] = 1
        rows.append([-int(Fraction(v) * s) for v in A[i]] + slack + [-int(Fraction(b[i]) * s)])
    # maximize -c.x
    z = [-int(Fraction(v) * obj_scale) for v in c] + [0] * m + [0]
    tab = _Tableau(rows, z, n)

    while True:
        infeasible = [i for i, row in enumerate(tab.t) if row[-1] < 0]
        if not infeasible:
            break
        r = min(infeasible, key=lambda i: tab.basis[i])
        row = tab.t[r]
        entering = None
        best_ratio = None
        for j in range(n + m):
            a = row[j]
            if a < 0:
                ratio = Fraction(tab.z[j], a)
                if best_ratio is None or ratio < best_ratio:
                    entering, best_ratio = j, ratio
        if entering is None:
            raise InfeasibleError("covering program is infeasible")
        tab.pivot(r, entering)

    vals = tab.basic_values()
    x = tuple(vals[:n])
    y = tuple(
        Fraction(-tab.z[n + i], tab.d) * row_scale[i] / obj_scale for i in range(m)
    )
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult(x, y, value, tab.pivots)
