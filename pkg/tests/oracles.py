"""Independent brute-force references used to cross-check the library.

Nothing here imports the code under test except for plain data types.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product


def _solve_linear(A, b):
    """Unique solution of a square system by Gauss-Jordan elimination, or None."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def game_value(matrix):
    """Value of a small matrix game by Shapley-Snow kernel enumeration.

    Every extreme optimal row strategy is the solution of p^T M[R, C] = v 1,
    sum p = 1 for some square submatrix. Among the candidates that are
    nonnegative and guarantee v against every column, the largest v is the value.
    """
    M = [[Fraction(x) for x in row] for row in matrix]
    n, m = len(M), len(M[0])
    best = None
    for k in range(1, min(n, m) + 1):
        for R in combinations(range(n), k):
            for C in combinations(range(m), k):
                # unknowns p_R (k of them) and v
                A = [[M[r][c] for r in R] + [-1] for c in C]
                A.append([1] * k + [0])
                sol = _solve_linear(A, [0] * k + [1])
                if sol is None:
                    continue
                p, v = sol[:k], sol[k]
                if any(x < 0 for x in p):
                    continue
                if all(sum(px * M[r][c] for px, r in zip(p, R)) >= v for c in range(m)):
                    if best is None or v > best:
                        best = v
    return best


def littlestone(rows):
    """Mistake-tree depth by the defining recursion, cached on the exact row set."""
    return _littlestone(frozenset(map(tuple, rows)))


@lru_cache(maxsize=None)
def _littlestone(rows):
    if len(rows) <= 1:
        return 0
    best = 0
    for x in range(len(next(iter(rows)))):
        zeros = frozenset(r for r in rows if r[x] == 0)
        ones = rows - zeros
        if zeros and ones:
            best = max(best, 1 + min(_littlestone(zeros), _littlestone(ones)))
    return best


def vc(rows):
    rows = {tuple(r) for r in rows}
    m = len(next(iter(rows)))
    d = 0
    for k in range(1, m + 1):
        for cols in combinations(range(m), k):
            if {tuple(r[c] for c in cols) for r in rows} == set(product((0, 1), repeat=k)):
                d = k
                break
    return d


def threshold(rows):
    """Largest k with rows s_1..s_k and columns t_1..t_k, s_i beating t_j iff i >= j.

    For a fixed ordered row tuple, column t_j must show the pattern 0^(j-1) 1^(k-j+1)
    down the chosen rows; distinct j need distinct patterns, so the columns can be
    chosen independently.
    """
    n, m = len(rows), len(rows[0])
    best = 0
    for k in range(1, min(n, m) + 1):
        found = False
        for R in permutations(range(n), k):
            col_patterns = {tuple(rows[r][c] for r in R) for c in range(m)}
            if all(tuple(int(i >= j) for i in range(k)) in col_patterns for j in range(k)):
                found = True
                break
        if not found:
            break
        best = k
    return best


def longest_chain_length(sets):
    sets = [frozenset(s) for s in set(map(frozenset, sets))]

    def extend(top):
        return 1 + max((extend(b) for b in sets if top < b), default=0)

    return max((extend(a) for a in sets), default=0)


def subsets(ground):
    for k in range(ground + 1):
        yield from (frozenset(c) for c in combinations(range(1, ground + 1), k))
