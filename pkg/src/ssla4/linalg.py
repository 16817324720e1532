"""Small exact linear algebra over Q and Z (lists of lists, no numpy)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def transpose(A):
    return [list(r) for r in zip(*A)]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def identity(n, one=1):
    return [[one if i == j else 0 * one for j in range(n)] for i in range(n)]


def det(M) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        piv = A[c][c]
        d *= piv
        for r in range(c + 1, n):
            f = A[r][c] / piv
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return d


def det_int(M) -> int:
    """Integer determinant via the Bareiss fraction-free scheme."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def solve(A, b):
    """Exact solution x of A x = b for a consistent (possibly tall) system.

    Returns None when the system is inconsistent.  A must have full column
    rank.
    """
    m, n = len(A), len(A[0])
    R = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    row = 0
    pivots = []
    for c in range(n):
        p = next((r for r in range(row, m) if R[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix does not have full column rank")
        R[row], R[p] = R[p], R[row]
        inv = 1 / R[row][c]
        R[row] = [x * inv for x in R[row]]
        for r in range(m):
            if r != row and R[r][c]:
                f = R[r][c]
                R[r] = [x - f * y for x, y in zip(R[r], R[row])]
        pivots.append(row)
        row += 1
    if any(R[r][n] for r in range(row, m)):
        return None
    return [R[i][n] for i in range(n)]


def inverse(M):
    n = len(M)
    cols = [solve(M, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return transpose(cols)


def rational_gcd(values) -> Fraction:
    """Positive generator of the Z-module spanned by the given rationals."""
    num, den = 0, 1
    for v in values:
        v = Fraction(v)
        if not v:
            continue
        # gcd(p/q, r/s) = gcd(ps, rq) / (qs), kept reduced
        num, den = gcd(num * v.denominator, v.numerator * den), den * v.denominator
        g = gcd(num, den)
        num, den = num // g, den // g
    return Fraction(num, den)


def column_hnf(M):
    """Column-style Hermite normal form of an integer matrix.

    The columns of the result span the same Z-module as the columns of M.
    Zero columns are dropped.  For a non-singular square matrix the result
    is lower triangular with positive diagonal and each entry left of the
    diagonal reduced into [0, diagonal of its row).
    """
    rows = len(M)
    cols = [list(map(int, c)) for c in zip(*M)]
    k = 0
    for r in range(rows):
        if k == len(cols):
            break
        # gcd-combine row r over columns k..end into column k
        for j in range(k + 1, len(cols)):
            a, b = cols[k][r], cols[j][r]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            u, v = a // g, b // g
            ck, cj = cols[k], cols[j]
            cols[k] = [x * p + y * q for p, q in zip(ck, cj)]
            cols[j] = [-v * p + u * q for p, q in zip(ck, cj)]
        piv = cols[k][r]
        if piv == 0:
            continue
        if piv < 0:
            cols[k] = [-x for x in cols[k]]
            piv = -piv
        for j in range(k):
            q = cols[j][r] // piv
            if q:
                cols[j] = [p - q * s for p, s in zip(cols[j], cols[k])]
        k += 1
    cols = cols[:k]
    return [list(r) for r in zip(*cols)] if cols else [[] for _ in range(rows)]


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def charpoly(M):
    """Characteristic polynomial det(X I - M), coefficients lowest degree first.

    Faddeev-LeVerrier recursion in exact rationals.
    """
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = A M_{k-1} + c_{n-k+1} I
        prev = Mk
        Mk = matmul(A, prev) if k > 1 else [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            Mk[i][i] += coeffs[n - k + 1]
        AM = matmul(A, Mk)
        coeffs[n - k] = -sum(AM[i][i] for i in range(n)) / k
    return coeffs


def is_positive_definite(G) -> bool:
    n = len(G)
    return all(det([row[:k] for row in G[:k]]) > 0 for k in range(1, n + 1))
