"""Similar sublattices of the A4 lattice L from right ideals of the icosian ring.

Every primitive similar sublattice of L has the form ``p L twist(p)`` for an
I-primitive icosian p, and equal ideals ``pI = qI`` give equal sublattices.
Enumeration therefore runs over icosians of prescribed reduced norm (an
exact short-vector search on the Z-coordinates of I), groups them into orbits
of the 120 unit quaternions, and maps one generator per orbit to a Hermite
normal form in the L-basis.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from . import golden, icosian, linalg, quatk
from .errors import BudgetExceeded, InternalError, InvalidArgument, InvalidNorm
from .golden import GoldenInt
from .icosian import Icosian
from .shortvec import FinckePohst

DEFAULT_MAX_M = 50


@dataclass(frozen=True)
class SublatticeMatrix:
    entries: tuple[tuple[int, ...], ...]
    index: int

    @classmethod
    def from_columns(cls, M) -> "SublatticeMatrix":
        H = linalg.column_hnf(M)
        if len(H[0]) != 4:
            raise InternalError("sublattice matrix is singular")
        entries = tuple(tuple(r) for r in H)
        return cls(entries, linalg.det_int(entries))

    def scaled(self, d: int) -> "SublatticeMatrix":
        return SublatticeMatrix.from_columns([[d * x for x in r] for r in self.entries])

    def content(self) -> int:
        return gcd(*(x for r in self.entries for x in r))


@dataclass(frozen=True)
class SslRecord:
    matrix: SublatticeMatrix
    generator: Icosian | None
    scale: int
    m: int

    @property
    def index(self) -> int:
        return self.m * self.m

    @property
    def primitive(self) -> bool:
        return self.scale == 1

    def sort_key(self):
        return (self.m, self.scale, self.matrix.entries)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "index": self.index,
            "scale": self.scale,
            "generator": list(self.generator.ints()) if self.generator is not None else None,
            "hnf": [list(r) for r in self.matrix.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SslRecord":
        gen = data.get("generator")
        hnf = tuple(tuple(int(x) for x in r) for r in data["hnf"])
        return cls(
            SublatticeMatrix(hnf, linalg.det_int(hnf)),
            Icosian.from_ints(gen) if gen is not None else None,
            int(data.get("scale", 1)),
            int(data["m"]),
        )


# ---- icosians of given reduced norm -----------------------------------------

@lru_cache(maxsize=None)
def _searcher(weight: GoldenInt) -> FinckePohst:
    return FinckePohst(icosian.trace_form_gram(weight))


def _ints_with_reduced_norm(alpha: GoldenInt, weight: str = "auto"):
    """Sorted Z-coordinate tuples of all x in I with nr(x) = alpha."""
    if weight == "trace":
        # Tr(nr x) <= Tr(alpha), a ball search
        candidates = _searcher(golden.ONE).enumerate(golden.trace(alpha))
    elif weight == "auto":
        # Tr(alpha' nr x) = Tr(alpha' alpha) = 2 N(alpha) on the solutions
        candidates = _searcher(golden.conj(alpha)).enumerate(2 * golden.norm(alpha), exact=True)
    else:
        raise InvalidArgument(f"unknown search weight {weight!r}")
    return sorted(v for v in candidates if icosian.nr_from_ints(v) == alpha)


def icosians_with_reduced_norm(alpha, weight: str = "auto") -> list[Icosian]:
    """All icosians x with nr(x) = alpha, sorted by Z-coordinates.

    ``weight="trace"`` uses the plain form Tr(nr x) bounded by Tr(alpha);
    the default searches the shell of Tr(alpha' nr x), which is much thinner.
    """
    alpha = GoldenInt(*alpha) if isinstance(alpha, tuple) else alpha
    if not isinstance(alpha, GoldenInt):
        alpha = GoldenInt(int(alpha), 0)
    if not golden.is_totally_positive(alpha):
        raise InvalidNorm(f"{alpha} is not totally positive")
    return [Icosian.from_ints(v) for v in _ints_with_reduced_norm(alpha, weight)]


def worker_count(workers=None) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("SSL_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _map(fn, items, workers):
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as ex:
        return list(ex.map(fn, items))


# ---- right ideal classes -----------------------------------------------------

@lru_cache(maxsize=1)
def _unit_right_matrices():
    return tuple(icosian.right_matrix(u) for u in icosian.roots_H4())


def in_right_ideal(q, p) -> bool:
    """True when q lies in pI, i.e. p^-1 q is an icosian."""
    q, p = icosian.as_icosian(q), icosian.as_icosian(p)
    return icosian.in_icosian_ring(quatk.inverse(p.quat) * q.quat)


def same_right_ideal(p, q) -> bool:
    return in_right_ideal(q, p) and in_right_ideal(p, q)


def _check_m(m):
    if not isinstance(m, int) or isinstance(m, bool) or m <= 0:
        raise InvalidArgument(f"m must be a positive integer, got {m!r}")


def _classes_from_ints(found):
    """Orbit representatives of a sorted shell; each is its orbit's minimum."""
    units = _unit_right_matrices()
    shell = set(found)
    seen = set()
    reps = []
    for v in found:
        if v in seen:
            continue
        orbit = {icosian.apply(R, v) for R in units}
        if len(orbit) != 120 or not orbit <= shell:
            raise InternalError("unit orbit is not free or leaves the norm shell")
        seen |= orbit
        reps.append(v)
    return reps


def right_ideal_classes(m: int, primitive_only: bool = False, workers=None) -> list[Icosian]:
    """One canonical generator per right ideal pI with |N(nr p)| = m.

    Generators are ordered by norm representative, then by Z-coordinates;
    each is the smallest element of its unit orbit in that order.
    """
    _check_m(m)
    alphas = golden.norm_representatives(m)
    shells = _map(_ints_with_reduced_norm, alphas, worker_count(workers))
    gens = []
    for found in shells:
        gens.extend(_classes_from_ints(found))
    result = [Icosian.from_ints(v) for v in gens]
    if primitive_only:
        result = [p for p in result if icosian.is_I_primitive(p)]
    return result


# ---- SSL matrices --------------------------------------------------------------

def similarity_columns(p, d: int = 1):
    """Integer L-coordinates of d p b_i twist(p) for the four L-basis vectors b_i."""
    p = icosian.as_icosian(p)
    S = quatk.similarity_matrix(d, p.quat)
    if S is None or any(Fraction(x).denominator != 1 for r in S for x in r):
        raise InternalError(f"p L twist(p) is not a sublattice of L for p = {p}")
    return [[int(x) for x in r] for r in S]


def ssl_matrix(p, d: int = 1) -> SslRecord:
    p = icosian.as_icosian(p)
    if not any(p.coords):
        raise InvalidArgument("p must be non-zero")
    if d < 1:
        raise InvalidArgument("scale must be positive")
    M = SublatticeMatrix.from_columns(similarity_columns(p, d))
    m = d * d * abs(golden.norm(icosian.nr_golden(p)))
    if M.index != m * m:
        raise InternalError(f"index {M.index} differs from {m * m}")
    return SslRecord(M, p, d, m)


def scaled_record(rec: SslRecord, d: int) -> SslRecord:
    gen = rec.generator
    if gen is not None and icosian.is_unit_icosian(gen):
        gen = None
    return SslRecord(rec.matrix.scaled(d), gen, rec.scale * d, rec.m * d * d)


def enumerate_ssls(m: int, primitive_only: bool = False, max_m: int | None = DEFAULT_MAX_M,
                   workers=None) -> list[SslRecord]:
    """All similar sublattices of L of index m^2 (primitive ones only if asked).

    ``max_m=None`` lifts the size cap.
    """
    _check_m(m)
    if max_m is not None and m > max_m:
        raise BudgetExceeded(f"m = {m} exceeds the enumeration bound {max_m}", m=m, max_m=max_m)
    scales = [1] if primitive_only else [d for d in range(1, isqrt(m) + 1) if m % (d * d) == 0]
    by_key = {}
    for d in scales:
        k = m // (d * d)
        for p in right_ideal_classes(k, True, workers):
            rec = ssl_matrix(p)
            if d > 1:
                rec = scaled_record(rec, d)
            by_key.setdefault(rec.matrix.entries, rec)
    return sorted(by_key.values(), key=SslRecord.sort_key)


# ---- verification ----------------------------------------------------------------

@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str
    primitive: bool

    def __bool__(self):
        return self.ok


def verify_matrix(Z, m: int, claim_primitive: bool | None = None) -> Verification:
    """Check Z^T G Z = m G and det Z = m^2 for the A4 Gram G."""
    G = icosian.A4_GRAM
    if len(Z) != 4 or any(len(r) != 4 for r in Z):
        return Verification(False, "bad_shape", False)
    Zt = linalg.transpose(Z)
    lhs = linalg.matmul(linalg.matmul(Zt, G), Z)
    content = gcd(*(int(x) for r in Z for x in r))
    primitive = content == 1
    if lhs != [[m * g for g in row] for row in G]:
        return Verification(False, "gram_mismatch", primitive)
    if linalg.det_int(Z) != m * m:
        return Verification(False, "det_mismatch", primitive)
    if claim_primitive is not None and claim_primitive != primitive:
        return Verification(False, "primitivity_mismatch", primitive)
    return Verification(True, "ok", primitive)


def verify_ssl(rec: SslRecord) -> Verification:
    """Exact check of a record.

    The Gram identity holds for the similarity matrix itself, so it is tested
    on the columns d p b_i twist(p) when a generator is present and on
    d times the identity otherwise; the stored HNF must then span the same
    module.
    """
    d = rec.scale
    if rec.generator is not None:
        try:
            Z = similarity_columns(rec.generator, d)
        except InternalError:
            return Verification(False, "not_integral", False)
    else:
        Z = [[d * int(i == j) for j in range(4)] for i in range(4)]
    res = verify_matrix(Z, rec.m, rec.scale == 1)
    if not res:
        return res
    H = [list(r) for r in rec.matrix.entries]
    if linalg.det_int(H) != rec.m * rec.m or rec.matrix.index != rec.m * rec.m:
        return Verification(False, "det_mismatch", res.primitive)
    if linalg.column_hnf(Z) != H:
        return Verification(False, "hnf_mismatch", res.primitive)
    return res


def parse_matrix_text(text: str):
    """Four lines of four integers."""
    rows = [[int(x) for x in line.replace(",", " ").split()] for line in text.splitlines() if line.strip()]
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise InvalidArgument("expected 4 lines of 4 integers")
    return rows
