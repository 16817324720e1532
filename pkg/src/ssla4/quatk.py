"""Quaternions over K = Q(sqrt 5) and the twist map.

The twist map sends ``(x0, x1, x2, x3)`` to ``(x0', x1', x3', x2')``: every
coordinate is algebraically conjugated and the j and k coordinates are
swapped.  It is a K-semilinear involutory anti-automorphism of H(K).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DivideByZero, NotRationalMap
from .golden import K_ONE, K_ZERO, GoldenInt, KScalar


@dataclass(frozen=True, slots=True)
class Quat:
    x0: KScalar
    x1: KScalar
    x2: KScalar
    x3: KScalar

    @classmethod
    def of(cls, *coords) -> "Quat":
        """Build from four values coercible to KScalar."""
        return cls(*(KScalar.coerce(c) for c in coords))

    @classmethod
    def scalar(cls, c) -> "Quat":
        return cls(KScalar.coerce(c), K_ZERO, K_ZERO, K_ZERO)

    @property
    def coords(self) -> tuple[KScalar, KScalar, KScalar, KScalar]:
        return (self.x0, self.x1, self.x2, self.x3)

    def __add__(self, o):
        return Quat(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)

    def __sub__(self, o):
        return Quat(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)

    def __neg__(self):
        return Quat(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, o):
        if not isinstance(o, Quat):
            c = KScalar.coerce(o)
            return Quat(self.x0 * c, self.x1 * c, self.x2 * c, self.x3 * c)
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = o.coords
        return Quat(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, c):
        c = KScalar.coerce(c)
        return Quat(c * self.x0, c * self.x1, c * self.x2, c * self.x3)

    def __truediv__(self, c):
        c = KScalar.coerce(c)
        return self * c.inverse()

    def __bool__(self):
        return any(self.coords)

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __repr__(self):
        return "Quat(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        return [c.to_json() for c in self.coords]

    @classmethod
    def from_json(cls, data):
        return cls(*(KScalar.from_json(c) for c in data))


ZERO = Quat.of(0, 0, 0, 0)
ONE = Quat.of(1, 0, 0, 0)
I = Quat.of(0, 1, 0, 0)
J = Quat.of(0, 0, 1, 0)
K = Quat.of(0, 0, 0, 1)


def sort_key(x: Quat):
    """Total order on exact coordinates.

    Orders lexicographically by ``(rational part, tau part)`` of each
    coordinate; it is a canonical order, not the real order.
    """
    return tuple((c.rational_part, c.tau_part) for c in x.coords)


def bar(x: Quat) -> Quat:
    return Quat(x.x0, -x.x1, -x.x2, -x.x3)


def tr(x: Quat) -> KScalar:
    return x.x0 + x.x0


def nr(x: Quat) -> KScalar:
    return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3


def dot(x: Quat, y: Quat) -> KScalar:
    """K-valued Euclidean product; equals tr(x bar(y))/2."""
    return x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3


def inverse(x: Quat) -> Quat:
    n = nr(x)
    if not n:
        raise DivideByZero("inverse of the zero quaternion")
    return bar(x) / n


def conj(x: Quat) -> Quat:
    """Algebraic conjugation of every coordinate."""
    return Quat(x.x0.conj(), x.x1.conj(), x.x2.conj(), x.x3.conj())


def twist(x: Quat) -> Quat:
    return Quat(x.x0.conj(), x.x1.conj(), x.x3.conj(), x.x2.conj())


def twist_laws_check(x: Quat, y: Quat, alpha) -> bool:
    alpha = KScalar.coerce(alpha)
    additive = twist(x + y) == twist(x) + twist(y)
    semilinear = twist(alpha * x) == alpha.conj() * twist(x)
    anti = twist(x * y) == twist(y) * twist(x)
    involution = twist(twist(x)) == x
    commutes_with_bar = twist(bar(x)) == bar(twist(x))
    return additive and semilinear and anti and involution and commutes_with_bar


def matrix_rep(p: Quat, q: Quat):
    """4x4 matrix over K with M(p, q) x^t = (p x q)^t."""
    basis = (ONE, I, J, K)
    cols = [(p * e * q).coords for e in basis]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def det_k(M) -> KScalar:
    """Determinant of a 4x4 matrix over K by cofactor expansion."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = K_ZERO
    for j in range(n):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_k(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def twist_eigenspace(x: Quat) -> str:
    t = twist(x)
    if t == x:
        return "plus"
    if t == -x:
        return "minus"
    return "neither"


# Q-embedding: each K coordinate c = r + s*tau contributes (r, s)
def embed8(x: Quat) -> list[Fraction]:
    out = []
    for c in x.coords:
        out.extend((c.rational_part, c.tau_part))
    return out


def unembed8(v) -> Quat:
    return Quat(*(KScalar.make(v[2 * i], v[2 * i + 1]) for i in range(4)))


# Spanning set of the twist-fixed Q-subspace, shared with icosian.L_BASIS.
_L_BASIS = (
    Quat.of(1, 0, 0, 0),
    Quat.of(Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    Quat.of(0, -1, 0, 0),
    Quat(K_ZERO, KScalar.coerce(Fraction(1, 2)), KScalar.make(Fraction(-1, 2), Fraction(1, 2)),
         KScalar.make(0, Fraction(-1, 2))),
)
_L_EMBED = linalg.transpose([embed8(b) for b in _L_BASIS])


def coords_in_plus_basis(x: Quat):
    """Rational coordinates of x in the L-basis, or None when x is not in V+."""
    return linalg.solve(_L_EMBED, embed8(x))


def similarity_char_poly(alpha, p: Quat):
    """Characteristic polynomial of x -> alpha p x twist(p) on V+.

    Returns ``[c0, c1, c2, c3, 1]`` (lowest degree first) from the closed
    form in terms of norms and traces of tr(p) and nr(p).  The map is first
    checked to have a rational matrix in the L-basis.
    """
    alpha = KScalar.coerce(alpha)
    if not alpha.is_rational():
        raise NotRationalMap("alpha must be rational for the map to preserve V+")
    a = alpha.to_fraction()
    if similarity_matrix(alpha, p) is None:
        raise NotRationalMap("map does not have rational entries in the L-basis")
    t, n = tr(p), nr(p)
    trace_T = a * (t * t.conj()).to_fraction()
    A = a ** 2 * ((t * t * n.conj()).trace() - 2 * n.norm())
    B = a ** 3 * (t * n).norm()
    det_T = a ** 4 * (n * n).norm()
    return [det_T, -B, A, -trace_T, Fraction(1)]


def similarity_matrix(alpha, p: Quat):
    """Matrix of x -> alpha p x twist(p) in the L-basis (None if not rational)."""
    alpha = KScalar.coerce(alpha)
    pt = twist(p)
    cols = []
    for b in _L_BASIS:
        c = coords_in_plus_basis(alpha * (p * b * pt))
        if c is None:
            return None
        cols.append(c)
    return linalg.transpose(cols)
