"""Exact arithmetic in the golden ring Z[tau] and the field K = Q(sqrt 5).

``tau = (1 + sqrt 5)/2`` satisfies ``tau**2 = tau + 1``; its algebraic
conjugate is ``1 - tau``.  Elements of Z[tau] are stored as the integer pair
``(a, b)`` meaning ``a + b*tau``.  No floating point is used anywhere; signs
under the two real embeddings are decided by integer comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational

from .errors import DivideByZero, InvalidArgument, NotAUnit, ZeroVector


def _sign_surd(u: int, v: int) -> int:
    """Sign of u + v*sqrt(5)."""
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return (v > 0) - (v < 0)
    if (u > 0) == (v > 0):
        return 1 if u > 0 else -1
    # opposite signs: the larger magnitude wins
    lhs, rhs = u * u, 5 * v * v
    if lhs == rhs:
        return 0
    if lhs > rhs:
        return 1 if u > 0 else -1
    return 1 if v > 0 else -1


@dataclass(frozen=True, slots=True)
class GoldenInt:
    a: int = 0
    b: int = 0

    @classmethod
    def coerce(cls, x) -> "GoldenInt":
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {x!r} as an element of Z[tau]")

    def __add__(self, other):
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return GoldenInt(self.a - other, self.b)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        if isinstance(other, int):
            return GoldenInt(other - self.a, -self.b)
        return NotImplemented

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        # (a + b t)(c + d t) = ac + (ad + bc) t + bd (t + 1)
        return GoldenInt(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return unit_inverse(self) ** (-n)
        result, base = GoldenInt(1, 0), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        t = "t" if abs(self.b) == 1 else f"{abs(self.b)}t"
        if not self.a:
            return ("-" if self.b < 0 else "") + t
        return f"{self.a}{'-' if self.b < 0 else '+'}{t}"

    def to_json(self):
        return [self.a, self.b]


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
TAU = GoldenInt(0, 1)
TAU2 = GoldenInt(1, 1)
TAU_INV = GoldenInt(-1, 1)
TAU4 = GoldenInt(2, 3)
SQRT5 = GoldenInt(-1, 2)


def conj(x: GoldenInt) -> GoldenInt:
    """Algebraic conjugate, sqrt 5 -> -sqrt 5 (so tau -> 1 - tau)."""
    return GoldenInt(x.a + x.b, -x.b)


def norm(x: GoldenInt) -> int:
    return x.a * x.a + x.a * x.b - x.b * x.b


def trace(x: GoldenInt) -> int:
    return 2 * x.a + x.b


def sign(x: GoldenInt) -> int:
    """Sign of x under the embedding tau -> (1 + sqrt 5)/2."""
    return _sign_surd(2 * x.a + x.b, x.b)


def is_totally_positive(x: GoldenInt) -> bool:
    return sign(x) > 0 and sign(conj(x)) > 0


def is_unit(x: GoldenInt) -> bool:
    return norm(x) in (1, -1)


def unit_inverse(x: GoldenInt) -> GoldenInt:
    n = norm(x)
    if n not in (1, -1):
        raise NotAUnit(f"{x} is not a unit of Z[tau]")
    c = conj(x)
    return GoldenInt(c.a * n, c.b * n)


def unit_log(x: GoldenInt) -> tuple[int, int]:
    """Return ``(s, m)`` with ``x == s * tau**m``."""
    if not is_unit(x):
        raise NotAUnit(f"{x} is not a unit of Z[tau]")
    s = sign(x)
    y = x if s > 0 else -x
    m = 0
    while y != ONE:
        if sign(y - ONE) > 0:
            y, m = y * TAU_INV, m + 1
        else:
            y, m = y * TAU, m - 1
    return s, m


def euclid_divmod(x: GoldenInt, y: GoldenInt) -> tuple[GoldenInt, GoldenInt]:
    """Division with remainder, ``x = q*y + r`` and ``|N(r)| < |N(y)|``.

    Each coefficient of the exact quotient x/y is rounded to the nearest
    integer, ties toward zero.
    """
    x, y = GoldenInt.coerce(x), GoldenInt.coerce(y)
    n = norm(y)
    if n == 0:
        raise DivideByZero("division by zero in Z[tau]")
    num = x * conj(y)
    q = GoldenInt(_round_half_to_zero(num.a, n), _round_half_to_zero(num.b, n))
    r = x - q * y
    return q, r


def _round_half_to_zero(p: int, q: int) -> int:
    if q < 0:
        p, q = -p, -q
    fl, rem = divmod(p, q)
    twice = 2 * rem
    if twice > q or (twice == q and p < 0):
        return fl + 1
    return fl


def divides(d: GoldenInt, x: GoldenInt) -> bool:
    if not d:
        return not x
    num = x * conj(d)
    n = norm(d)
    return num.a % n == 0 and num.b % n == 0


def exact_div(x: GoldenInt, d: GoldenInt) -> GoldenInt:
    n = norm(d)
    if n == 0:
        raise DivideByZero("division by zero in Z[tau]")
    num = x * conj(d)
    if num.a % n or num.b % n:
        raise InvalidArgument(f"{d} does not divide {x}")
    return GoldenInt(num.a // n, num.b // n)


def canonical_associate(g: GoldenInt) -> GoldenInt:
    """The totally positive associate of g with 1 <= g/g' < tau**4.

    Every non-zero ideal of Z[tau] has exactly one generator in this
    domain because N(tau) = -1.
    """
    if not g:
        return ZERO
    if norm(g) < 0:
        g = g * TAU
    if sign(g) < 0:
        g = -g
    return _reduce_mod_tau2(g)


def _reduce_mod_tau2(g: GoldenInt) -> GoldenInt:
    # g totally positive; g/g' >= 1 iff b >= 0, and multiplying by tau^2
    # scales g/g' by tau^4.
    while not _ratio_below_tau4(g):
        g = g * GoldenInt(2, -1)  # tau^-2
    while g.b < 0:
        g = g * TAU2
    return g


def _ratio_below_tau4(g: GoldenInt) -> bool:
    return sign(TAU4 * conj(g) - g) > 0


def gcd_golden(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    x, y = GoldenInt.coerce(x), GoldenInt.coerce(y)
    while y:
        _, r = euclid_divmod(x, y)
        x, y = y, r
    return canonical_associate(x)


def content(values) -> GoldenInt:
    """Canonical gcd of a non-empty list of Z[tau] elements."""
    values = [GoldenInt.coerce(v) for v in values]
    if not values or not any(values):
        raise ZeroVector("content of the zero vector is undefined")
    g = ZERO
    for v in values:
        g = gcd_golden(g, v)
        if is_unit(g):
            return ONE
    return g


def norm_representatives(m: int) -> list[GoldenInt]:
    """Totally positive alpha with N(alpha) = m, one per tau^2-orbit.

    Each returned alpha lies in the fundamental domain 1 <= alpha/alpha' <
    tau**4, which forces 0 <= b and bounds b by sqrt(m).
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument("m must be a positive integer")
    reps = []
    for b in range(isqrt(m) + 2):
        disc = 5 * b * b + 4 * m
        r = isqrt(disc)
        if r * r != disc:
            continue
        for s in {r, -r}:
            if (s - b) % 2:
                continue
            x = GoldenInt((s - b) // 2, b)
            if is_totally_positive(x) and _ratio_below_tau4(x):
                reps.append(x)
    return sorted(set(reps), key=lambda g: (trace(g), g.b))


@dataclass(frozen=True, slots=True)
class KScalar:
    """Element num/den of K with num in Z[tau] and den > 0, fully reduced."""

    num: GoldenInt
    den: int = 1

    def __post_init__(self):
        n, d = self.num, self.den
        if d == 0:
            raise DivideByZero("zero denominator")
        if d < 0:
            n, d = -n, -d
        g = gcd(gcd(n.a, n.b), d)
        if g != 1:
            n, d = GoldenInt(n.a // g, n.b // g), d // g
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def coerce(cls, x) -> "KScalar":
        if isinstance(x, KScalar):
            return x
        if isinstance(x, GoldenInt):
            return cls(x, 1)
        if isinstance(x, int):
            return cls(GoldenInt(x, 0), 1)
        if isinstance(x, Rational):
            return cls(GoldenInt(x.numerator, 0), x.denominator)
        raise TypeError(f"cannot interpret {x!r} as an element of K")

    @classmethod
    def make(cls, a, b=0) -> "KScalar":
        """Build a + b*tau from rationals."""
        a, b = Fraction(a), Fraction(b)
        d = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return cls(GoldenInt(int(a * d), int(b * d)), d)

    def __add__(self, other):
        try:
            o = KScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return KScalar(self.num + o.num, self.den)
        return KScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return KScalar(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = KScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return KScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            o = KScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return KScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "KScalar":
        n = norm(self.num)
        if n == 0:
            raise DivideByZero("inverse of zero in K")
        return KScalar(conj(self.num) * self.den, n)

    def __truediv__(self, other):
        try:
            o = KScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return KScalar.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, KScalar):
            return self.num == other.num and self.den == other.den
        try:
            return self == KScalar.coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return bool(self.num)

    def sign(self) -> int:
        return sign(self.num)

    def conj(self) -> "KScalar":
        return KScalar(conj(self.num), self.den)

    def norm(self) -> Fraction:
        return Fraction(norm(self.num), self.den * self.den)

    def trace(self) -> Fraction:
        return Fraction(trace(self.num), self.den)

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.num.a, self.den)

    @property
    def tau_part(self) -> Fraction:
        return Fraction(self.num.b, self.den)

    def is_rational(self) -> bool:
        return self.num.b == 0

    def to_fraction(self) -> Fraction:
        if self.num.b:
            raise InvalidArgument(f"{self} is not rational")
        return Fraction(self.num.a, self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def to_golden(self) -> GoldenInt:
        if self.den != 1:
            raise InvalidArgument(f"{self} is not in Z[tau]")
        return self.num

    def __repr__(self):
        return f"KScalar({self.num.a}, {self.num.b}, {self.den})"

    def __str__(self):
        return str(self.num) if self.den == 1 else f"({self.num})/{self.den}"

    def to_json(self):
        return [self.num.a, self.num.b, self.den]

    @classmethod
    def from_json(cls, data):
        a, b, den = data
        return cls(GoldenInt(int(a), int(b)), int(den))


K_ZERO = KScalar(ZERO)
K_ONE = KScalar(ONE)
K_HALF = KScalar(ONE, 2)
K_TAU = KScalar(TAU)
K_SQRT5 = KScalar(SQRT5)
