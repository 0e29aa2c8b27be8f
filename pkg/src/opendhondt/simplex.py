"""Exact two-phase simplex over :class:`fractions.Fraction`.

Solves ``maximize c.x  s.t.  A x = b, x >= 0`` with a dense tableau and
Bland's rule, so it cannot cycle.  Intended for the small support LPs of
this package, where exactness matters more than speed.
"""

from fractions import Fraction


class Infeasible(ArithmeticError):
    pass


class Unbounded(ArithmeticError):
    pass


def _pivot(tableau, basis, row, col):
    pivot_row = tableau[row]
    inv = 1 / pivot_row[col]
    if inv != 1:
        tableau[row] = pivot_row = [v * inv for v in pivot_row]
    for r, other in enumerate(tableau):
        if r == row:
            continue
        factor = other[col]
        if factor:
            tableau[r] = [a - factor * p if p else a for a, p in zip(other, pivot_row)]
    basis[row] = col


def _run(tableau, basis, allowed):
    """Iterate Bland's rule on ``tableau`` whose last row holds reduced costs.

    The objective row stores ``-c`` so a negative entry means the column
    can improve the (maximised) objective.
    """
    obj = tableau[-1]
    m = len(tableau) - 1
    while True:
        obj = tableau[-1]
        col = next((j for j in allowed if obj[j] < 0), None)
        if col is None:
            return
        best = None
        for r in range(m):
            a = tableau[r][col]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(tableau, basis, best[1], col)


def solve(c, A, b):
    """Maximise ``c.x`` subject to ``A x = b`` and ``x >= 0``.

    Parameters
    ----------
    c : sequence of numbers, length n
    A : sequence of m rows, each a sequence of n numbers
    b : sequence of m numbers

    Returns
    -------
    (Fraction, list of Fraction)
        The optimal value and an optimal basic solution.
    """
    n = len(c)
    rows = []
    rhs = []
    for row, bi in zip(A, b):
        row = [Fraction(v) for v in row]
        bi = Fraction(bi)
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
        rows.append(row)
        rhs.append(bi)
    m = len(rows)

    # phase 1: one artificial per row, minimise their sum
    width = n + m
    tableau = []
    for i, row in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tableau.append(row + art + [rhs[i]])
    phase1 = [Fraction(0)] * (width + 1)
    for r in tableau:
        for j in range(n):
            phase1[j] -= r[j]
        phase1[-1] -= r[-1]
    tableau.append(phase1)
    basis = list(range(n, n + m))
    _run(tableau, basis, range(n))
    if tableau[-1][-1] != 0:
        raise Infeasible("constraints admit no non-negative solution")

    # drive remaining (zero-valued) artificials out of the basis
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, r, col)
    keep = [r for r in range(m) if basis[r] < n]
    tableau = [tableau[r][:n] + [tableau[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]

    # phase 2
    obj = [-Fraction(v) for v in c] + [Fraction(0)]
    for r, col in enumerate(basis):
        coef = obj[col]
        if coef:
            obj = [o - coef * t for o, t in zip(obj, tableau[r])]
    tableau.append(obj)
    _run(tableau, basis, range(n))

    x = [Fraction(0)] * n
    for r, col in enumerate(basis):
        x[col] = tableau[r][-1]
    return tableau[-1][-1], x
