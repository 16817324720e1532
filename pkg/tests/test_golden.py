from math import isqrt

import pytest
from hypothesis import given

from ssla4 import golden
from ssla4.errors import DivideByZero, InvalidArgument, NotAUnit, ZeroVector
from ssla4.golden import ONE, TAU, ZERO, GoldenInt, KScalar

from strategies import golden_ints, kscalars, nonzero_golden


def G(a, b=0):
    return GoldenInt(a, b)


def test_ring_examples():
    assert TAU * TAU == G(1, 1)
    assert G(1, 1) * G(1, -1) == G(0, -1)
    assert G(2, 3) * G(2, 3) == G(13, 21)


def test_conj_norm_trace():
    assert golden.conj(TAU) == G(1, -1)
    assert golden.conj(G(5)) == G(5)
    assert golden.conj(G(2, 3)) == G(5, -3)
    assert (golden.norm(TAU), golden.trace(TAU)) == (-1, 1)
    assert (golden.norm(G(2)), golden.trace(G(2))) == (4, 4)
    assert golden.norm(G(5, 3)) == 31


def test_units():
    assert golden.is_unit(G(1, 1)) and golden.unit_log(G(1, 1)) == (1, 2)
    assert golden.is_unit(G(-1, 1)) and golden.unit_log(G(-1, 1)) == (1, -1)
    assert not golden.is_unit(G(2))
    with pytest.raises(NotAUnit):
        golden.unit_log(G(2))


@pytest.mark.parametrize("k", range(-6, 7))
def test_unit_log_roundtrip(k):
    for s in (1, -1):
        x = G(s) * TAU ** k
        assert golden.unit_log(x) == (s, k)


def test_gcd_examples():
    assert golden.gcd_golden(G(2), TAU) == ONE
    assert golden.gcd_golden(G(2, 3), ZERO) == golden.canonical_associate(G(2, 3))
    g = golden.gcd_golden(G(5), G(2, 1))
    assert g == golden.canonical_associate(G(2, 1))
    assert golden.divides(G(2, 1), G(5))


def test_divmod_by_zero():
    with pytest.raises(DivideByZero):
        golden.euclid_divmod(G(1), ZERO)


def test_content():
    assert golden.content([G(2), G(0, 2), G(4)]) == G(2)
    assert golden.content([TAU, ONE]) == ONE
    assert golden.content([G(2, 1), G(5)]) == golden.canonical_associate(G(2, 1))
    with pytest.raises(ZeroVector):
        golden.content([ZERO, ZERO])


def test_total_positivity():
    assert golden.is_totally_positive(G(2, 1))
    assert not golden.is_totally_positive(TAU)
    assert not golden.is_totally_positive(ZERO)


def test_norm_representatives_examples():
    assert golden.norm_representatives(1) == [ONE]
    assert golden.norm_representatives(4) == [G(2)]
    assert golden.norm_representatives(2) == []
    with pytest.raises(InvalidArgument):
        golden.norm_representatives(0)


def _even_powers_test(m):
    n, p = m, 2
    while p * p <= n:
        r = 0
        while n % p == 0:
            n //= p
            r += 1
        if p % 5 in (2, 3) and r % 2:
            return False
        p += 1
    return not (n > 1 and n % 5 in (2, 3))


def test_norm_representatives_up_to_200():
    for m in range(1, 201):
        reps = golden.norm_representatives(m)
        R = 3 * isqrt(m) + 3
        brute = any(abs(k * k + k * l - l * l) == m for k in range(-R, R + 1) for l in range(-R, R + 1))
        assert bool(reps) == brute == _even_powers_test(m)
        for a in reps:
            assert golden.is_totally_positive(a) and golden.norm(a) == m
        # pairwise inequivalent under multiplication by units
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                q, r = golden.euclid_divmod(a, b)
                assert r != ZERO or not golden.is_unit(q)


@given(golden_ints, golden_ints, golden_ints)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(golden_ints, golden_ints)
def test_conj_is_automorphism(x, y):
    c = golden.conj
    assert c(x * y) == c(x) * c(y)
    assert c(c(x)) == x
    assert golden.norm(x * y) == golden.norm(x) * golden.norm(y)
    assert golden.trace(x + y) == golden.trace(x) + golden.trace(y)


@given(golden_ints, nonzero_golden)
def test_euclid(x, y):
    q, r = golden.euclid_divmod(x, y)
    assert q * y + r == x
    assert abs(golden.norm(r)) < abs(golden.norm(y))


@given(golden_ints, golden_ints, golden_ints)
def test_gcd_properties(x, y, d):
    if not (x.a or x.b or y.a or y.b):
        return
    g = golden.gcd_golden(x, y)
    assert golden.divides(g, x) and golden.divides(g, y)
    if d.a or d.b:
        g2 = golden.gcd_golden(d * x, d * y)
        assert golden.divides(d, g2)
    assert golden.canonical_associate(g) == g


@given(nonzero_golden)
def test_canonical_associate_is_stable(g):
    c = golden.canonical_associate(g)
    for k in (-2, -1, 1, 3):
        for s in (1, -1):
            assert golden.canonical_associate(G(s) * TAU ** k * g) == c


@given(kscalars, kscalars)
def test_kscalar_field(x, y):
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
    assert x.conj().conj() == x
    assert (x * y).norm() == x.norm() * y.norm()


def test_kscalar_reduced_form():
    x = KScalar(G(2, 4), 6)
    assert (x.num, x.den) == (G(1, 2), 3)
    assert KScalar.from_json(x.to_json()) == x
    assert x.to_json() == [1, 2, 3]
    assert G(2, 3).to_json() == [2, 3]
