from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ssla4 import linalg

matrices = st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4)


@given(matrices)
def test_det_agree(M):
    assert linalg.det(M) == linalg.det_int(M)


@given(matrices)
def test_hnf_shape_and_span(M):
    if linalg.det_int(M) == 0:
        return
    H = linalg.column_hnf(M)
    n = 4
    for i in range(n):
        assert H[i][i] > 0
        for j in range(i + 1, n):
            assert H[i][j] == 0
        for j in range(i):
            assert 0 <= H[i][j] < H[i][i]
    assert abs(linalg.det_int(M)) == linalg.det_int(H)
    # same module: each side solves integrally in the other
    for A, B in ((M, H), (H, M)):
        for c in range(n):
            x = linalg.solve(B, [A[r][c] for r in range(n)])
            assert all(Fraction(v).denominator == 1 for v in x)
    assert linalg.column_hnf(H) == H


@given(matrices)
def test_charpoly_cayley_hamilton(M):
    c = linalg.charpoly(M)
    n = len(M)
    acc = [[Fraction(0)] * n for _ in range(n)]
    P = linalg.identity(n)
    for k in range(n + 1):
        acc = [[a + c[k] * p for a, p in zip(ra, rp)] for ra, rp in zip(acc, P)]
        P = linalg.matmul(P, M)
    assert all(x == 0 for r in acc for x in r)
    assert c[0] == (-1) ** n * linalg.det_int(M)


def test_rational_gcd():
    assert linalg.rational_gcd([Fraction(1, 2), 1, Fraction(-3, 4)]) == Fraction(1, 4)
    assert linalg.rational_gcd([0, 6, 4]) == 2
