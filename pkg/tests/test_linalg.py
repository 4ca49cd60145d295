from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from jacobihom import algebra as alg
from jacobihom.complexes import build_hochschild_complex
from jacobihom.linalg import (ContainmentError, SizeGuardError, SparseMatrix, Subspace, image,
                              kernel, quotient_dim, rank, rank_and_bases, solve_linear)
from oracles import to_sympy

F = Fraction


def dense(rows):
    return SparseMatrix.from_dense(rows)


def test_empty_matrix():
    r, ker, im = rank_and_bases(SparseMatrix(0, 0))
    assert (r, ker.dim, im.dim) == (0, 0, 0)


def test_identity():
    r, ker, im = rank_and_bases(SparseMatrix.identity(2))
    assert (r, ker.dim, im.dim) == (2, 0, 2)


def test_rank_one_example():
    r, ker, im = rank_and_bases(dense([[1, 2], [2, 4]]))
    assert r == 1
    # the canonical basis is normalised at its pivot: (1, -1/2) spans the same line
    assert ker.basis == ({0: F(1), 1: F(-1, 2)},)
    assert ker == Subspace.span(2, [{0: -2, 1: 1}])
    assert im == Subspace.span(2, [{0: 1, 1: 2}])


def test_solve_examples():
    assert solve_linear(SparseMatrix.identity(3), [1, 0, 2]) == [1, 0, 2]
    assert solve_linear(dense([[1, 1]]), [5]) == [5, 0]
    assert solve_linear(dense([[1], [1]]), [1, 2]) is None


def test_solve_wrong_length():
    with pytest.raises(ValueError):
        solve_linear(SparseMatrix.identity(2), [1])


def test_quotient_dim():
    s = Subspace.span(2, [{0: 1}])
    assert quotient_dim(s, s) == 0
    assert quotient_dim(Subspace.whole(2), s) == 1
    with pytest.raises(ContainmentError, match="basis vector 0"):
        quotient_dim(s, Subspace.span(2, [{1: 1}]))


def test_quotient_dim_hochschild_degree_zero():
    cx = build_hochschild_complex(alg.product_algebra(alg.ground_field(), alg.ground_field()),
                                  None, 1)
    assert quotient_dim(Subspace.whole(cx.dims[0]), image(cx.boundaries[1])) == 2


def test_bit_identical_results():
    m = dense([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    a, b = rank_and_bases(m), rank_and_bases(m)
    assert a[1].basis == b[1].basis and a[2].basis == b[2].basis


def test_size_guard(monkeypatch):
    monkeypatch.setenv("HOMOLOGY_SIZE_GUARD", "5")
    with pytest.raises(SizeGuardError):
        rank(dense([[1, 2, 3], [4, 5, 6], [7, 8, 10]]))


def test_dump_roundtrip():
    m = dense([[F(1, 2), 0], [0, -3]])
    assert SparseMatrix.load(m.dump()) == m


def test_bad_entry_index():
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})


matrices = st.integers(0, 5).flatmap(lambda r: st.integers(0, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                       min_size=r, max_size=r).map(lambda rows: (r, c, rows))))


def build(rc):
    r, c, rows = rc
    return SparseMatrix(r, c, {(i, j): x for i, row in enumerate(rows) for j, x in enumerate(row)})


@given(matrices)
def test_rank_matches_transpose_and_sympy(rc):
    m = build(rc)
    assert rank(m) == rank(m.transpose())
    assert rank(m) == (to_sympy(m).rank() if m.rows and m.cols else 0)


@given(matrices)
def test_kernel_is_annihilated_and_rank_nullity(rc):
    m = build(rc)
    ker = kernel(m)
    assert ker.dim + rank(m) == m.cols
    for v in ker.basis:
        assert not m.apply(v)


@given(matrices, st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_solve_consistent_systems(rc, xs):
    m = build(rc)
    x = xs[:m.cols]
    b = m.apply(dict(enumerate(x)))
    sol = solve_linear(m, [b.get(i, 0) for i in range(m.rows)])
    assert sol is not None
    assert m.apply(dict(enumerate(sol))) == b


@given(matrices)
def test_image_contains_columns(rc):
    m = build(rc)
    im = image(m)
    for col in m.columns():
        assert im.contains(col)
    assert im.dim == rank(m)


@given(matrices)
def test_subspace_is_canonical(rc):
    m = build(rc)
    cols = list(m.columns())
    assert Subspace.span(m.rows, cols) == Subspace.span(m.rows, list(reversed(cols)))
