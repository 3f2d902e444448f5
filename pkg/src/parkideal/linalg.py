"""Exact integer/rational linear algebra on small dense matrices."""

from fractions import Fraction

from . import _kernels

DEFAULT_PRIME = 32003


def det_exact(matrix):
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("det_exact needs a square matrix")
    if m == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, m) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, m):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, m):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[m - 1][m - 1]


def det_rational(matrix):
    """Determinant over Q by plain Gaussian elimination on Fractions."""
    a = [[Fraction(x) for x in row] for row in matrix]
    m = len(a)
    det = Fraction(1)
    for k in range(m):
        piv = next((i for i in range(k, m) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, m):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, m):
                    a[i][j] -= f * a[k][j]
    return det


def rank_exact(rows):
    """Rank over Q of an integer matrix (list of rows), fraction-free."""
    a = [[int(x) for x in row] for row in rows if any(row)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        rowr = a[r]
        for i in range(r + 1, m):
            rowi = a[i]
            f = rowi[c]
            for j in range(c + 1, n):
                rowi[j] = (p * rowi[j] - f * rowr[j]) // prev
            rowi[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank(rows, field=0):
    """Rank over Q (``field=0``) or over GF(field) for a prime ``field``."""
    if field == 0:
        return rank_exact(rows)
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return 0
    return _kernels.rank_mod_p(rows, field)
