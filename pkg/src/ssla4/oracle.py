"""Brute-force similar-sublattice counts for small lattices.

Nothing here knows about quaternions.  Sublattices of index n are listed as
Hermite normal forms, and each is tested for similarity by searching for a
basis of the sublattice whose Gram matrix is exactly ``c * G`` with
``c = n**(2/d)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import linalg
from .errors import BudgetExceeded, InvalidArgument
from .shortvec import FinckePohst
from .shortvec import short_vectors as _short_vectors
from .sslgen import SublatticeMatrix


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        d = len(rows)
        if d not in (1, 2, 3, 4) or any(len(r) != d for r in rows):
            raise InvalidArgument("Gram matrix must be square of dimension 1 to 4")
        if any(rows[i][j] != rows[j][i] for i in range(d) for j in range(d)):
            raise InvalidArgument("Gram matrix must be symmetric")
        if not linalg.is_positive_definite(rows):
            raise InvalidArgument("Gram matrix must be positive definite")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def rows(self):
        return [list(r) for r in self.entries]

    def scaled(self, lam) -> "GramMatrix":
        lam = Fraction(lam)
        return GramMatrix(tuple(tuple(lam * x for x in r) for r in self.entries))

    def to_json(self):
        return [[str(x) if x.denominator != 1 else x.numerator for x in r] for r in self.entries]

    @classmethod
    def from_json(cls, data) -> "GramMatrix":
        try:
            return cls(tuple(tuple(Fraction(x) for x in r) for r in data))
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidArgument(f"bad Gram matrix: {e}") from e

    @classmethod
    def load(cls, path) -> "GramMatrix":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def _cartan(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def dual_gram(G: GramMatrix) -> GramMatrix:
    return GramMatrix(tuple(tuple(r) for r in linalg.inverse(G.rows())))


_A4 = [[Fraction(x, 2) for x in r] for r in _cartan(4)]

PRESETS = {
    "a4": GramMatrix(tuple(map(tuple, _A4))),
    "a2": GramMatrix(tuple(map(tuple, _cartan(2)))),
    "fcc": GramMatrix(tuple(map(tuple, _cartan(3)))),
    "z2": GramMatrix(tuple(map(tuple, linalg.identity(2)))),
    "z3": GramMatrix(tuple(map(tuple, linalg.identity(3)))),
    "z4": GramMatrix(tuple(map(tuple, linalg.identity(4)))),
    # rectangular lattice spanned by (2, 0) and (0, 3); exploratory only
    "rect23": GramMatrix(((4, 0), (0, 9))),
}
PRESETS["a4dual"] = dual_gram(PRESETS["a4"])


def preset(name: str) -> GramMatrix:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise InvalidArgument(f"unknown lattice preset {name!r}; known: {', '.join(sorted(PRESETS))}") from None


# ---- sublattice counting -------------------------------------------------------

def _factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def hnf_count(d: int, n: int) -> int:
    """Number of sublattices of Z^d of index n (product of Gaussian binomials)."""
    if n < 1 or d < 1:
        raise InvalidArgument("d and n must be positive")
    total = 1
    for p, k in _factor(n).items():
        num = den = 1
        for j in range(1, d):
            num *= p ** (k + j) - 1
            den *= p ** j - 1
        total *= num // den
    return total


def hnf_count_by_divisors(d: int, n: int) -> int:
    """Same count from the recursion a_d(n) = sum_{k | n} k a_{d-1}(k)."""
    if d == 1:
        return 1
    return sum(k * hnf_count_by_divisors(d - 1, k) for k in range(1, n + 1) if n % k == 0)


def _diagonals(d, n):
    if d == 1:
        yield (n,)
        return
    for h in range(1, n + 1):
        if n % h == 0:
            for rest in _diagonals(d - 1, n // h):
                yield (h,) + rest


def _hnf_stream(d, n, accept_column=None):
    """Yield column lists of lower triangular HNFs; ``accept_column`` prunes partial bases.

    Columns are fixed from the last to the first; entry (i, j), i > j, ranges
    over [0, h_i).
    """
    for diag in _diagonals(d, n):
        cols = [None] * d

        def rec(j):
            if j < 0:
                yield list(cols)
                return
            below = [range(diag[i]) for i in range(j + 1, d)]
            for tail in _product(below):
                col = (0,) * j + (diag[j],) + tail
                if accept_column is not None and not accept_column(col, cols[j + 1:]):
                    continue
                cols[j] = col
                yield from rec(j - 1)
            cols[j] = None

        yield from rec(d - 1)


def _product(ranges):
    if not ranges:
        yield ()
        return
    for x in ranges[0]:
        for rest in _product(ranges[1:]):
            yield (x,) + rest


def _to_matrix(cols):
    d = len(cols)
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


def hnf_enumerate(d: int, n: int):
    """Every sublattice of Z^d of index n once, as a SublatticeMatrix."""
    if n < 1 or d < 1:
        raise InvalidArgument("d and n must be positive")
    for cols in _hnf_stream(d, n):
        yield SublatticeMatrix(_to_matrix(cols), n)


# ---- similarity test ---------------------------------------------------------------

def short_vectors(G, bound):
    """Non-zero v with v^T G v <= bound, one of each pair +-v."""
    rows = G.rows() if isinstance(G, GramMatrix) else G
    return _short_vectors(rows, bound, up_to_sign=True)


def similarity_factor(d: int, n: int):
    """Integer c with c**d = n**2, or None."""
    target = n * n
    r = round(target ** (1 / d))
    for c in (r - 1, r, r + 1):
        if c > 0 and c ** d == target:
            return c
    return None


def _moduli(G):
    rows = G.rows() if isinstance(G, GramMatrix) else G
    d = len(rows)
    diag = linalg.rational_gcd([rows[i][i] for i in range(d)]
                               + [2 * rows[i][j] for i in range(d) for j in range(i + 1, d)])
    off = linalg.rational_gcd([rows[i][j] for i in range(d) for j in range(d)])
    return diag, off


def _form(G, u, v):
    d = len(G)
    return sum(G[i][j] * u[i] * v[j] for i in range(d) for j in range(d))


def find_similarity(G, Z):
    """Basis (as integer coordinates w.r.t. the columns of Z) realising Z^T G Z ~ c G, or None."""
    rows = G.rows() if isinstance(G, GramMatrix) else [[Fraction(x) for x in r] for r in G]
    d = len(rows)
    Z = [list(r) for r in (Z.entries if isinstance(Z, SublatticeMatrix) else Z)]
    n = abs(linalg.det_int(Z))
    c = similarity_factor(d, n) if n else None
    if c is None:
        return None
    Gp = linalg.matmul(linalg.matmul(linalg.transpose(Z), rows), Z)
    return _find_basis(Gp, [[c * x for x in r] for r in rows])


def _find_basis(Gp, target):
    """Unimodular W (columns) with W^T Gp W = target, or None."""
    d = len(Gp)
    fp = FinckePohst(Gp)
    shells = {}
    for i in range(d):
        t = target[i][i]
        if t not in shells:
            shells[t] = fp.enumerate(t, exact=True)
    # rarest shells first, larger norms breaking ties
    order = sorted(range(d), key=lambda i: (len(shells[target[i][i]]), -target[i][i], i))
    chosen = {}

    def rec(k):
        if k == d:
            W = [chosen[i] for i in range(d)]
            return W if abs(linalg.det_int(linalg.transpose(W))) == 1 else None
        i = order[k]
        for v in shells[target[i][i]]:
            if k == 0 and next(x for x in v if x) < 0:
                continue  # global sign
            if all(_form(Gp, v, chosen[j]) == target[i][j] for j in chosen):
                chosen[i] = v
                res = rec(k + 1)
                if res is not None:
                    return res
                del chosen[i]
        return None

    return rec(0)


def is_isometric(G1, G2) -> bool:
    """Exact Z-congruence of two positive definite forms."""
    A = G1.rows() if isinstance(G1, GramMatrix) else [[Fraction(x) for x in r] for r in G1]
    B = G2.rows() if isinstance(G2, GramMatrix) else [[Fraction(x) for x in r] for r in G2]
    if len(A) != len(B) or linalg.det(A) != linalg.det(B):
        return False
    return _find_basis(A, B) is not None


def is_similar_sublattice(G, Z) -> bool:
    return find_similarity(G, Z) is not None


def _column_filter(G, c):
    rows = G.rows()
    diag_mod, off_mod = _moduli(rows)
    dm, om = c * diag_mod, c * off_mod

    def accept(col, later):
        if (_form(rows, col, col) / dm).denominator != 1:
            return False
        return all((_form(rows, col, w) / om).denominator == 1 for w in later)

    return accept


def default_budget() -> int:
    return hnf_count(4, 81)


def similar_hnfs(G: GramMatrix, n: int, budget: int | None = None):
    """Sorted HNF entry tuples of all similar sublattices of index n."""
    if n < 1:
        raise InvalidArgument("index must be positive")
    d = G.dim
    est = hnf_count(d, n)
    budget = default_budget() if budget is None else budget
    if est > budget:
        raise BudgetExceeded(f"{est} sublattices of index {n} exceed the budget {budget}",
                             dimension=d, index=n, candidates=est, budget=budget, examined=0)
    c = similarity_factor(d, n)
    if c is None:
        return []
    out = []
    for cols in _hnf_stream(d, n, _column_filter(G, c)):
        H = _to_matrix(cols)
        if is_similar_sublattice(G, H):
            out.append(H)
    return sorted(out)


def brute_count(G: GramMatrix, n: int, budget: int | None = None) -> tuple[int, int]:
    """(all, primitive) similar sublattices of index n."""
    found = similar_hnfs(G, n, budget)
    primitive = sum(1 for H in found if gcd(*(x for r in H for x in r)) == 1)
    return len(found), primitive
