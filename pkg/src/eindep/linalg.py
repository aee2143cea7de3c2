"""Small exact Gaussian-elimination helpers, generic over the field.

Entries only need +, -, *, /, unary minus, truthiness for zero tests and
structural equality.  Used with GaussRat and RatFunc entries.  Matrices
are lists of row lists and are never mutated in place by the public
functions.
"""

from __future__ import annotations


def _clone(rows):
    return [list(r) for r in rows]


def rank(rows) -> int:
    if not rows:
        return 0
    m = _clone(rows)
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        for i in range(r + 1, nrows):
            if m[i][c]:
                f = m[i][c] / inv
                for j in range(c, ncols):
                    m[i][j] = m[i][j] - f * m[r][j]
        r += 1
        if r == nrows:
            break
    return r


def det(rows):
    """Determinant of a square matrix; zero comes back as a falsy entry."""
    m = _clone(rows)
    n = len(m)
    if n == 0:
        raise ValueError("determinant of an empty matrix")
    sign = 1
    acc = None
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            zero = m[0][0] - m[0][0]
            return zero
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        p = m[c][c]
        acc = p if acc is None else acc * p
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / p
                for j in range(c, n):
                    m[i][j] = m[i][j] - f * m[c][j]
    return acc if sign > 0 else -acc


def invert(rows, zero, one):
    """Inverse of a square matrix, or None when singular."""
    n = len(rows)
    m = [list(rows[i]) + [one if j == i else zero for j in range(n)]
         for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        if p != one:
            m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


def solve(rows, rhs, zero):
    """One exact solution of A x = b, or None when inconsistent.

    Free variables are set to zero, so the solution is unique exactly
    when the system is.
    """
    if not rows:
        return []
    nrows, ncols = len(rows), len(rows[0])
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols]:
            return None
    x = [zero] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x


def nullspace(rows, ncols, zero, one):
    """Basis of the right kernel, one vector per free column (RREF form)."""
    m = _clone(rows)
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for i, c in enumerate(pivots):
            v[c] = -m[i][free]
        basis.append(v)
    return basis
