import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tanglekh.linalg import GF2, QQ, SparseMatrix, compose_check, get_field, inverse, rank, row_reduce


def dense_rank_q(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 7).flatmap(
    lambda n: st.integers(1, 7).flatmap(
        lambda k: st.lists(st.lists(st.sampled_from([-1, 0, 0, 1, 2]), min_size=k, max_size=k), min_size=n, max_size=n)))


def test_small_ranks():
    assert rank(SparseMatrix(3, 3)) == 0
    assert rank(SparseMatrix.identity(3)) == 3
    ones = [[1, 1], [1, 1]]
    assert rank(SparseMatrix.from_dense(ones, GF2)) == 1
    assert rank(SparseMatrix.from_dense(ones, QQ)) == 1


def test_characteristic_matters():
    m = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rank(SparseMatrix.from_dense(m, QQ)) == 3
    assert rank(SparseMatrix.from_dense(m, GF2)) == 2


def test_compose_check():
    b = SparseMatrix.from_dense([[1, 2], [3, 4]])
    assert compose_check(SparseMatrix(3, 2), b)
    assert not compose_check(SparseMatrix.identity(1), SparseMatrix.identity(1))
    with pytest.raises(ValueError):
        compose_check(SparseMatrix(2, 3), b)


def test_no_stored_zeros_and_bounds():
    m = SparseMatrix(2, 2, [((0, 0), 1), ((0, 0), -1), ((1, 1), 2)])
    assert m.entries == {(1, 1): 2}
    assert SparseMatrix(2, 2, {(0, 0): 2}, GF2).is_zero()
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_field_lookup():
    assert get_field("gf2") is GF2 and get_field("Q") is QQ
    with pytest.raises(ValueError):
        get_field("R")


def test_inverse():
    m = SparseMatrix.from_dense([[2, 1], [1, 1]])
    assert m @ inverse(m) == SparseMatrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(SparseMatrix.from_dense([[1, 1], [1, 1]]))


@given(matrices)
def test_rank_matches_dense_oracle(rows):
    assert rank(SparseMatrix.from_dense(rows)) == dense_rank_q(rows)


@given(matrices)
def test_rank_of_transpose(rows):
    for f in (QQ, GF2):
        m = SparseMatrix.from_dense(rows, f)
        assert rank(m) == rank(m.transpose())


@given(matrices)
def test_rank_q_at_least_gf2(rows):
    assert rank(SparseMatrix.from_dense(rows, QQ)) >= rank(SparseMatrix.from_dense(rows, GF2))


@given(matrices)
def test_row_reduce_is_exact(rows):
    for f in (QQ, GF2):
        m = SparseMatrix.from_dense(rows, f)
        t, r, piv = row_reduce(m)
        assert t @ m == r
        assert len(piv) == rank(m)


def test_rank_growth_stays_exact():
    rng = random.Random(3)
    rows = [[rng.randint(-9, 9) for _ in range(12)] for _ in range(12)]
    assert rank(SparseMatrix.from_dense(rows)) == dense_rank_q(rows)
