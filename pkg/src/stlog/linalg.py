"""Small exact linear algebra helpers over Q (row echelon, rank, kernels)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form with deterministic left-to-right pivots.

    Returns (echelon_rows, pivot_columns); zero rows are dropped and the
    result is canonical for the row span.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def in_row_span(vector, echelon_rows) -> bool:
    """Membership of a vector in the span of rref rows."""
    v = [Fraction(x) for x in vector]
    for row in echelon_rows:
        pivot = next((j for j, x in enumerate(row) if x), None)
        if pivot is not None and v[pivot]:
            f = v[pivot]
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def kernel_basis(rows):
    """Deterministic rational basis of {v : A v = 0}, scaled to integers."""
    if not rows:
        return []
    ncols = len(rows[0])
    ech, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(ech, pivots):
            v[pc] = -row[fc]
        basis.append(integerize(v))
    return basis


def integerize(vector):
    """Scale a rational vector to a primitive integer vector."""
    denoms = [x.denominator for x in vector]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(x * lcm) for x in vector]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def det(rows) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    n = len(mat)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        pv = mat[c][c]
        result *= pv
        for i in range(c + 1, n):
            if mat[i][c]:
                f = mat[i][c] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return result * sign
