"""Exact Fincke-Pohst enumeration for positive definite rational forms.

The form ``Q(x) = x^T G x`` is diagonalised once as
``Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`` over Q, and everything is
then scaled to integers so the search loop never touches a Fraction.
Coordinates are fixed from the last index down; at the final level the
shell equation ``Q(x) = target`` is solved directly.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm

from .errors import InvalidArgument


class FinckePohst:
    def __init__(self, G):
        n = len(G)
        A = [[Fraction(x) for x in row] for row in G]
        for i in range(n):
            for j in range(n):
                if A[i][j] != A[j][i]:
                    raise InvalidArgument("Gram matrix must be symmetric")
        # LDL^T with unit upper factor: Q = sum d_i (x_i + sum_{j>i} mu_ij x_j)^2
        d = [Fraction(0)] * n
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            d[i] = A[i][i] - sum(mu[k][i] ** 2 * d[k] for k in range(i))
            if d[i] <= 0:
                raise InvalidArgument("Gram matrix is not positive definite")
            for j in range(i + 1, n):
                mu[i][j] = (A[i][j] - sum(mu[k][i] * mu[k][j] * d[k] for k in range(i))) / d[i]
        self.n = n
        self.G = A
        self.D = lcm(1, *(mu[i][j].denominator for i in range(n) for j in range(i + 1, n)))
        self.M = [[int(mu[i][j] * self.D) for j in range(n)] for i in range(n)]
        w = [di / (self.D * self.D) for di in d]
        self.scale = lcm(1, *(x.denominator for x in w))
        self.W = [int(x * self.scale) for x in w]

    def value(self, x) -> Fraction:
        n = self.n
        return sum(self.G[i][j] * x[i] * x[j] for i in range(n) for j in range(n))

    def enumerate(self, bound, exact=False):
        """All integer x (including 0 when allowed) with Q(x) <= bound.

        With ``exact=True`` only vectors with Q(x) == bound are returned.
        Both x and -x are reported.
        """
        bound = Fraction(bound)
        R = bound * self.scale
        if exact and R.denominator != 1:
            return []
        R = R.numerator // R.denominator
        if R < 0:
            return []
        n, D, M, W = self.n, self.D, self.M, self.W
        out = []
        x = [0] * n

        def rec(i, rem):
            s = 0
            Mi = M[i]
            for j in range(i + 1, n):
                s += Mi[j] * x[j]
            Wi = W[i]
            if i == 0 and exact:
                if rem % Wi:
                    return
                sq = rem // Wi
                r = isqrt(sq)
                if r * r != sq:
                    return
                for y in {r, -r}:
                    t = y - s
                    if t % D == 0:
                        x[0] = t // D
                        out.append(tuple(x))
                return
            r = isqrt(rem // Wi)
            lo = -((r + s) // D)  # ceil((-r - s)/D)
            hi = (r - s) // D
            for xi in range(lo, hi + 1):
                y = D * xi + s
                left = rem - Wi * y * y
                if left < 0:
                    continue
                x[i] = xi
                if i == 0:
                    out.append(tuple(x))
                else:
                    rec(i - 1, left)
            x[i] = 0

        rec(n - 1, R)
        return out


def short_vectors(G, bound, exact=False, up_to_sign=False):
    """Non-zero integer vectors v with v^T G v <= bound (or == bound).

    With ``up_to_sign`` one of each pair +-v is kept: the one whose first
    non-zero coordinate is positive.
    """
    vecs = [v for v in FinckePohst(G).enumerate(bound, exact=exact) if any(v)]
    if up_to_sign:
        vecs = [v for v in vecs if next(c for c in v if c) > 0]
    return sorted(vecs)
