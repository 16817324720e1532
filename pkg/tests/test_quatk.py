from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ssla4 import golden, icosian, linalg, quatk
from ssla4.errors import DivideByZero, NotRationalMap
from ssla4.golden import K_ONE, K_SQRT5, K_TAU, K_ZERO, KScalar
from ssla4.quatk import I, J, K, ONE, Quat, bar, nr, tr, twist

from strategies import fractions, icosians, kscalars, nonzero_icosians, positive_fractions, quats

HALF = Fraction(1, 2)


def test_hamilton():
    assert I * J == K
    assert J * I == -K
    h = Quat.of(HALF, HALF, HALF, HALF)
    assert h * h == Quat.of(-HALF, HALF, HALF, HALF)


def test_norm_trace_inverse():
    assert nr(Quat.of(HALF, HALF, HALF, HALF)) == K_ONE
    assert tr(Quat.of(1, 2, 3, 4)) == KScalar.coerce(2)
    r = Quat(KScalar.make(HALF, -HALF), KScalar.make(0, HALF), K_ZERO, KScalar.coerce(HALF))
    assert nr(r) == K_ONE
    with pytest.raises(DivideByZero):
        quatk.inverse(quatk.ZERO)


def test_twist_examples():
    assert twist(ONE) == ONE
    assert twist(J) == K
    assert twist(Quat(K_TAU, K_ZERO, K_ZERO, K_ZERO)) == Quat.of(golden.K_ONE - K_TAU, 0, 0, 0)
    assert twist(I * J) == twist(J) * twist(I)
    assert quatk.twist_laws_check(I, J, K_TAU)
    assert twist(K_TAU * ONE) == (K_ONE - K_TAU) * ONE


def test_eigenspaces():
    assert quatk.twist_eigenspace(I) == "plus"
    assert quatk.twist_eigenspace(J - K) == "minus"
    assert quatk.twist_eigenspace(J) == "neither"
    assert quatk.twist_eigenspace(K_SQRT5 * I) == "minus"


def test_matrix_rep_examples():
    M = quatk.matrix_rep(ONE, ONE)
    assert M == [[K_ONE if i == j else K_ZERO for j in range(4)] for i in range(4)]
    L = quatk.matrix_rep(I, ONE)
    cols = [[L[r][c] for r in range(4)] for c in range(4)]
    assert [Quat(*c) for c in cols] == [I, -ONE, K, -J]


def test_char_poly_examples():
    assert quatk.similarity_char_poly(1, ONE) == [1, -4, 6, -4, 1]
    two = Quat.of(2, 0, 0, 0)
    assert quatk.similarity_char_poly(1, two) == [256, -256, 96, -16, 1]
    with pytest.raises(NotRationalMap):
        quatk.similarity_char_poly(K_TAU, ONE)


@given(quats, quats)
def test_norm_multiplicative(x, y):
    assert nr(x * y) == nr(x) * nr(y)
    assert nr(twist(x)) == nr(x).conj()
    assert tr(x) * y == y * tr(x)


@given(quats, quats, kscalars)
def test_twist_laws(x, y, a):
    assert quatk.twist_laws_check(x, y, a)


@given(quats)
def test_eigen_decomposition(x):
    plus = (x + twist(x)) / 2
    minus = (x - twist(x)) / 2
    assert plus + minus == x
    assert not plus or quatk.twist_eigenspace(plus) == "plus"
    assert not minus or quatk.twist_eigenspace(minus) == "minus"


@settings(max_examples=20)
@given(quats, quats, quats)
def test_matrix_rep_action(p, q, x):
    M = quatk.matrix_rep(p, q)
    col = [sum((M[i][j] * x.coords[j] for j in range(4)), K_ZERO) for i in range(4)]
    assert Quat(*col) == p * x * q


@settings(max_examples=15)
@given(quats, quats)
def test_matrix_rep_det(p, q):
    n = nr(p) * nr(q)
    assert quatk.det_k(quatk.matrix_rep(p, q)) == n * n


@settings(max_examples=100)
@given(nonzero_icosians, positive_fractions)
def test_char_poly_closed_form(p, alpha):
    closed = quatk.similarity_char_poly(alpha, p.quat)
    S = quatk.similarity_matrix(alpha, p.quat)
    assert closed == linalg.charpoly(S)
    X = sympy.Symbol("X")
    sym = sympy.Matrix(S).charpoly(X).all_coeffs()[::-1]
    assert [Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in sym] == closed


def test_serialization():
    q = Quat(KScalar.make(HALF, 1), K_ZERO, K_TAU, KScalar.coerce(-3))
    assert Quat.from_json(q.to_json()) == q
