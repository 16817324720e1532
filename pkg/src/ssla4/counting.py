"""Arithmetic functions counting similar sublattices.

``f(m)`` and ``f_pr(m)`` count all and primitive similar sublattices of A4
of index ``m**2``.  Both are multiplicative.  Series are kept as
:class:`CoeffSeq` objects tagged with their index variable, because A4
counts are naturally indexed by ``m`` while the sublattice index is ``m**2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from math import isqrt

from . import golden
from .errors import InvalidArgument


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients a(1), ..., a(N) of a Dirichlet series.

    ``variable`` records what n stands for: the sublattice index itself
    ("index") or its square root ("sqrt_index", used for A4).
    """
    values: tuple[int, ...]
    label: str
    variable: str = "index"

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(n)
        return self.values[n - 1]

    def nonzero(self):
        return [(n, v) for n, v in enumerate(self.values, 1) if v]

    def to_json(self):
        return {"label": self.label, "variable": self.variable, "values": list(self.values)}


def _check_positive(n, what="n"):
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise InvalidArgument(f"{what} must be a positive integer, got {n!r}")


def chi(n: int) -> int:
    """The real character mod 5."""
    _check_positive(n)
    return (0, 1, -1, -1, 1)[n % 5]


def _chi_m3(n):
    return (0, 1, -1)[n % 3]


def _chi_m4(n):
    return (0, 1, 0, -1)[n % 4]


# ---- sieving helpers --------------------------------------------------------

def smallest_prime_factors(N: int) -> list[int]:
    spf = list(range(N + 1))
    for p in range(2, isqrt(N) + 1):
        if spf[p] == p:
            for q in range(p * p, N + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def factorize(n: int, spf=None) -> dict[int, int]:
    out: dict[int, int] = {}
    if spf is not None:
        while n > 1:
            p = spf[n]
            out[p] = out.get(p, 0) + 1
            n //= p
        return out
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_table(N: int, local) -> list[int]:
    """Values 0..N (index 0 unused) of the multiplicative function with f(p^r) = local(p, r)."""
    spf = smallest_prime_factors(N)
    vals = [0] * (N + 1)
    if N >= 1:
        vals[1] = 1
    for n in range(2, N + 1):
        p = spf[n]
        q, r = n, 0
        while q % p == 0:
            q //= p
            r += 1
        vals[n] = vals[q] * local(p, r)
    return vals


def dirichlet_convolve(a, b, N: int) -> list[int]:
    """(a * b)(n) for n = 1..N, inputs indexed from 1 (index 0 ignored)."""
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        ad = a[d]
        if not ad:
            continue
        for k in range(1, N // d + 1):
            if b[k]:
                out[d * k] += ad * b[k]
    return out


def _mobius_table(N):
    return multiplicative_table(N, lambda p, r: -1 if r == 1 else 0)


# ---- Z[tau] ideal counts ------------------------------------------------------

def _a_K_local(p, r):
    if p == 5:
        return 1
    c = chi(p)
    if c == 1:
        return r + 1
    return 1 if r % 2 == 0 else 0


def dedekind_zeta_K_coeffs(N: int) -> CoeffSeq:
    """Number of ideals of Z[tau] of each norm n <= N."""
    _check_positive(N, "N")
    return CoeffSeq(tuple(multiplicative_table(N, _a_K_local)[1:]), "zeta_K", "norm")


def a_K(n: int) -> int:
    _check_positive(n)
    return sum(chi(d) for d in range(1, n + 1) if n % d == 0)


# ---- f and f_pr -------------------------------------------------------------------

def _f_local(p: int, r: int) -> int:
    if p == 5:
        return (5 ** (r + 1) - 1) // 4
    if chi(p) == 1:
        num = 2 * (1 - p ** (r + 1)) - (r + 1) * (1 - p * p) * p ** r
        return num // (1 - p) ** 2
    if r % 2:
        return 0
    return (2 - p ** r - p ** (r + 2)) // (1 - p * p)


def _fpr_local(p: int, r: int) -> int:
    if p == 5:
        return 6 * 5 ** (r - 1)
    if chi(p) == 1:
        tail = (r - 1) * p ** (r - 2) if r > 1 else 0
        return (r + 1) * p ** r + 2 * r * p ** (r - 1) + tail
    if r % 2:
        return 0
    return p ** r + p ** (r - 2)


def f_closed(m: int) -> int:
    _check_positive(m, "m")
    out = 1
    for p, r in factorize(m).items():
        out *= _f_local(p, r)
    return out


def fpr_closed(m: int) -> int:
    _check_positive(m, "m")
    out = 1
    for p, r in factorize(m).items():
        out *= _fpr_local(p, r)
    return out


def f_table(N: int) -> list[int]:
    """f(0..N) by sieve; f(0) is a placeholder 0."""
    return multiplicative_table(N, _f_local)


def fpr_table(N: int) -> list[int]:
    return multiplicative_table(N, _fpr_local)


def f_via_convolution(N: int, primitive: bool = False) -> CoeffSeq:
    """f from a_K * (n a_K) * g with g(r^2) = mu(r) chi(r) and g = 0 off squares.

    With ``primitive`` the result is further convolved with h(r^2) = mu(r).
    """
    _check_positive(N, "N")
    aK = multiplicative_table(N, _a_K_local)
    naK = [n * v for n, v in enumerate(aK)]
    mu = _mobius_table(isqrt(N))
    g = [0] * (N + 1)
    h = [0] * (N + 1)
    for r in range(1, isqrt(N) + 1):
        g[r * r] = mu[r] * chi(r)
        h[r * r] = mu[r]
    out = dirichlet_convolve(dirichlet_convolve(aK, naK, N), g, N)
    if primitive:
        out = dirichlet_convolve(out, h, N)
    label = "D_A4^pr" if primitive else "D_A4"
    return CoeffSeq(tuple(out[1:]), label, "sqrt_index")


def right_ideal_count(m: int) -> int:
    """Right ideals pI with |N(nr p)| = m, i.e. of index m^2 in the reduced-norm sense."""
    _check_positive(m, "m")
    return sum(a_K(d) * a_K(m // d) * (m // d) for d in range(1, m + 1) if m % d == 0)


def two_sided_ideal_count(m: int, normalization: str = "central") -> int:
    """Two-sided ideals of I.

    With ``"central"`` m is the norm of the central generator, so 2I counts at
    m = 4.  With ``"index"`` m is the same variable as in
    :func:`right_ideal_count`, where 2I sits at m = 16.
    """
    _check_positive(m, "m")
    if normalization == "central":
        return a_K(m)
    if normalization == "index":
        r = isqrt(m)
        return a_K(r) if r * r == m else 0
    raise InvalidArgument(f"unknown normalization {normalization!r}")


def possible_indices(N: int) -> list[int]:
    """Ascending m <= N with f(m) > 0."""
    _check_positive(N, "N")
    f = f_table(N)
    return [m for m in range(1, N + 1) if f[m] > 0]


def norm_form_values(N: int) -> list[int]:
    """Values m <= N of |k^2 + k l - l^2| by a direct scan over k and l.

    Every non-zero norm class has a representative with 0 <= l <= sqrt(m) + 1
    and |k| <= 2 sqrt(m) + 2, so a box of that size is exhaustive.
    """
    _check_positive(N, "N")
    R = isqrt(N) + 1
    hit = set()
    for l in range(0, R + 1):
        for k in range(-2 * R - 1, 2 * R + 2):
            v = abs(k * k + k * l - l * l)
            if 0 < v <= N:
                hit.add(v)
    return sorted(hit)


def prime_exponent_test(m: int) -> bool:
    """No prime = +-2 mod 5 divides m to an odd power."""
    return all(r % 2 == 0 for p, r in factorize(m).items() if chi(p) == -1)


# ---- multiplicativity -------------------------------------------------------------

def coprime_pairs(N: int):
    from math import gcd
    for a in range(2, N + 1):
        for b in range(a, N // a + 1):
            if gcd(a, b) == 1:
                yield a, b


def check_multiplicative(table, N: int) -> bool:
    return all(table[a * b] == table[a] * table[b] for a, b in coprime_pairs(N))


def check_super_multiplicative(table, N: int) -> bool:
    """f(mn) >= f(m) f(n) on coprime pairs with mn <= N."""
    return all(table[a * b] >= table[a] * table[b] for a, b in coprime_pairs(N))


def check_square_sum(N: int) -> bool:
    f, fp = f_table(N), fpr_table(N)
    for m in range(1, N + 1):
        s = sum(fp[m // (d * d)] for d in range(1, isqrt(m) + 1) if m % (d * d) == 0)
        if s != f[m]:
            return False
    return True


# ---- Euler product -------------------------------------------------------------------

def _series_mul(a, b, deg):
    out = [0] * (deg + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(deg + 1 - i):
                out[i + j] += x * b[j]
    return out


def _geometric(c, step, deg):
    """1/(1 - c X^step) truncated at degree deg."""
    out = [0] * (deg + 1)
    for k in range(0, deg // step + 1):
        out[k * step] = c ** k
    return out


def euler_local_series(p: int, deg: int) -> list[int]:
    """Local factor of the displayed product as a power series in X = p^(-2s)."""
    one = [1] + [0] * deg
    if p == 5:
        return _series_mul(_geometric(1, 1, deg), _geometric(5, 1, deg), deg)
    if chi(p) == 1:
        num = list(one)
        if deg >= 1:
            num[1] = 1
        s = _series_mul(num, _geometric(1, 1, deg), deg)
        g = _geometric(p, 1, deg)
        return _series_mul(s, _series_mul(g, g, deg), deg)
    num = list(one)
    if deg >= 2:
        num[2] = 1
    s = _series_mul(num, _geometric(1, 2, deg), deg)
    return _series_mul(s, _geometric(p * p, 2, deg), deg)


def euler_product_table(N: int) -> list[int]:
    cache: dict[int, list[int]] = {}

    def local(p, r):
        if p not in cache:
            deg, q = 0, 1
            while q * p <= N:
                q *= p
                deg += 1
            cache[p] = euler_local_series(p, deg)
        return cache[p][r]

    return multiplicative_table(N, local)


def euler_factor_check(N: int) -> bool:
    _check_positive(N, "N")
    return euler_product_table(N) == f_table(N)


# ---- asymptotics ---------------------------------------------------------------------

def summatory(x: int) -> int:
    """F(x) = sum of f(m) for m <= x."""
    _check_positive(x, "x")
    return sum(f_table(x))


def rho(digits: int = 12) -> Decimal:
    """Growth constant sqrt(5) log(tau) / 2, rounded to ``digits`` decimals."""
    if digits < 1:
        raise InvalidArgument("digits must be positive")
    with localcontext() as ctx:
        ctx.prec = digits + 20
        s5 = Decimal(5).sqrt()
        tau = (1 + s5) / 2
        value = s5 * tau.ln() / 2
        return value.quantize(Decimal(1).scaleb(-digits))


@dataclass(frozen=True)
class AsymptoticReport:
    x: int
    F: int
    main_term: Decimal
    ratio: Decimal
    rho: Decimal = field(repr=False)

    def to_json(self):
        return {"x": self.x, "F": self.F, "main_term": str(self.main_term),
                "ratio": str(self.ratio), "rho": str(self.rho)}


def asymptotic_report(x: int, digits: int = 12) -> AsymptoticReport:
    F = summatory(x)
    r = rho(digits + 10)
    with localcontext() as ctx:
        ctx.prec = digits + 30
        main = r * x * x / 2
        ratio = Decimal(F) / main
    q = Decimal(1).scaleb(-digits)
    return AsymptoticReport(x, F, main.quantize(q), ratio.quantize(q), rho(digits))


# ---- related lattices ------------------------------------------------------------

RELATED = ("A1", "A2", "A3", "Zsquare")


def _a3_local(p, r):
    # zeta(3s) Phi_cub(3s): in terms of the index n = p^(3k)
    if r % 3:
        return 0
    k = r // 3
    if p == 2:
        return 1
    # (1 + x) / ((1 - x)(1 - p x)): coefficient of x^k
    geo = sum(p ** j for j in range(k + 1))
    return geo + (sum(p ** j for j in range(k)) if k else 0)


def related_series(lattice: str, N: int) -> CoeffSeq:
    _check_positive(N, "N")
    if lattice == "A1":
        vals = [1] * N
    elif lattice == "A2":
        vals = multiplicative_table(N, lambda p, r: sum(_chi_m3(p ** j) for j in range(r + 1)))[1:]
    elif lattice == "Zsquare":
        vals = multiplicative_table(N, lambda p, r: sum(_chi_m4(p ** j) for j in range(r + 1)))[1:]
    elif lattice == "A3":
        vals = multiplicative_table(N, _a3_local)[1:]
    else:
        raise InvalidArgument(f"unsupported lattice {lattice!r}; expected one of {', '.join(RELATED)}")
    return CoeffSeq(tuple(vals), f"D_{lattice}", "index")


def coefficient_table(ms):
    """Rows (m, m^2, f(m), f_pr(m))."""
    return [(m, m * m, f_closed(m), fpr_closed(m)) for m in ms]
