from fractions import Fraction

import pytest

from ssla4 import counting, linalg, oracle, sslgen
from ssla4.errors import BudgetExceeded, InvalidArgument
from ssla4.oracle import GramMatrix, preset

A4 = preset("a4")


def test_hnf_enumerate_counts():
    assert sum(1 for _ in oracle.hnf_enumerate(2, 2)) == 3
    assert sum(1 for _ in oracle.hnf_enumerate(1, 7)) == 1
    for d, n in ((2, 12), (3, 8), (4, 16), (3, 18)):
        mats = [h.entries for h in oracle.hnf_enumerate(d, n)]
        assert len(mats) == len(set(mats)) == oracle.hnf_count(d, n) == oracle.hnf_count_by_divisors(d, n)
        for H in mats:
            assert [list(r) for r in linalg.column_hnf(H)] == [list(r) for r in H]
            assert linalg.det_int(H) == n


def test_short_vectors():
    assert len(oracle.short_vectors(A4, 1)) == 10
    assert len(oracle.short_vectors(preset("z2"), 1)) == 2
    assert len(oracle.short_vectors(preset("a2"), 2)) == 3


def test_similarity_examples():
    for m in (1, 2, 3):
        assert oracle.is_similar_sublattice(A4, [[m * int(i == j) for j in range(4)] for i in range(4)])
    assert not oracle.is_similar_sublattice(A4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 16]])
    for r in sslgen.enumerate_ssls(11):
        assert oracle.is_similar_sublattice(A4, r.matrix.entries)


def test_brute_counts_against_theory():
    for m in range(1, 10):
        assert oracle.brute_count(A4, m * m) == (counting.f_closed(m), counting.fpr_closed(m))


def test_oracle_matches_construction():
    for m in (1, 2, 4, 5):
        built = sorted(r.matrix.entries for r in sslgen.enumerate_ssls(m))
        assert oracle.similar_hnfs(A4, m * m) == built


def test_duality_and_scaling():
    assert oracle.brute_count(oracle.dual_gram(A4), 16) == oracle.brute_count(A4, 16) == (6, 5)
    assert oracle.brute_count(preset("a4dual"), 25) == (6, 6)
    a2 = preset("a2")
    assert oracle.brute_count(oracle.dual_gram(a2), 3) == oracle.brute_count(a2, 3)
    fcc = preset("fcc")
    assert oracle.brute_count(oracle.dual_gram(fcc), 8) == oracle.brute_count(fcc, 8)
    for lam in (Fraction(1, 3), 2, Fraction(7, 2)):
        assert oracle.brute_count(A4.scaled(lam), 16) == (6, 5)
        assert oracle.brute_count(a2.scaled(lam), 7) == (2, 2)


def test_related_lattices():
    a2 = counting.related_series("A2", 13)
    for n in range(1, 14):
        assert oracle.brute_count(preset("a2"), n)[0] == a2[n]
    assert oracle.brute_count(preset("fcc"), 8)[0] == counting.related_series("A3", 8)[8]
    z2 = counting.related_series("Zsquare", 10)
    for n in range(1, 11):
        assert oracle.brute_count(preset("z2"), n)[0] == z2[n]


def test_dual_gram():
    eye = preset("z4")
    assert oracle.dual_gram(eye) == eye
    D = oracle.dual_gram(A4)
    assert linalg.det(D.rows()) == 1 / linalg.det(A4.rows())


def test_gram_validation_and_json():
    with pytest.raises(InvalidArgument):
        GramMatrix(((1, 2), (2, 1)))
    with pytest.raises(InvalidArgument):
        GramMatrix(((1, 0), (1, 1)))
    with pytest.raises(InvalidArgument):
        preset("e8")
    data = A4.to_json()
    assert data[0][1] == "-1/2"
    assert GramMatrix.from_json(data) == A4


def test_isometry():
    B = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 2, 1]]
    G2 = linalg.matmul(linalg.matmul(linalg.transpose(B), A4.rows()), B)
    assert oracle.is_isometric(G2, A4)
    assert not oracle.is_isometric(preset("z4"), preset("z4").scaled(2))


def test_budget():
    with pytest.raises(BudgetExceeded) as e:
        oracle.brute_count(A4, 121)
    assert e.value.info["candidates"] == oracle.hnf_count(4, 121)
    assert e.value.info["budget"] == oracle.default_budget()
    assert oracle.brute_count(A4, 4, budget=10 ** 9) == (0, 0)


def test_rect_preset_runs():
    total, prim = oracle.brute_count(preset("rect23"), 4)
    assert total >= 1 and prim <= total
