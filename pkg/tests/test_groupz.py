from fractions import Fraction
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobihom.groupz import (GroupChainElement, Poly, Sequence, h0_preimage, h1_kernel_test,
                              halfline_kernel_image_test, halfline_preimage,
                              random_finite_sequence, random_half_line_sequence, reduce_to_tau,
                              reduce_to_tau_closed_form)

F = Fraction


def e(i, dim=1):
    return Sequence.finite(dim, {i: (1,) * dim})


def degree0(chain):
    return chain.boundary().terms.get((), Sequence.zero(chain.dim))


finite_seqs = st.builds(lambda s: random_finite_sequence(2, random.Random(s)),
                        st.integers(0, 10 ** 6))
half_line_seqs = st.builds(lambda s: random_half_line_sequence(2, random.Random(s)),
                           st.integers(0, 10 ** 6))


def poly_tailed(seed):
    rng = random.Random(seed)
    left = Poly(1, [(rng.randint(-2, 2),) for _ in range(rng.randint(0, 3))])
    right = Poly(1, [(rng.randint(-2, 2),) for _ in range(rng.randint(0, 3))])
    vals = {i: (rng.randint(-2, 2),) for i in range(-3, 4)}
    return Sequence(1, left, right, vals, -3, 3)


tailed_seqs = st.builds(poly_tailed, st.integers(0, 10 ** 6))


# --- sequences and polynomials ----------------------------------------------------------

def test_poly_interpolation_and_antidifference():
    p = Poly.interpolate(1, [0, 1, 2], [(1,), (3,), (7,)])     # i^2 + i + 1
    assert p(3) == (13,)
    q = p.antidifference()
    assert all(F(q(i)[0] - q(i - 1)[0]) == p(i)[0] for i in range(-5, 6)) and q(0) == (0,)


@given(tailed_seqs, st.integers(-4, 4), st.integers(-4, 4))
def test_shift_composition(m, p, q):
    assert m.shift(p).shift(q) == m.shift(p + q)
    assert all(m.shift(p)(i) == m(i + p) for i in range(-8, 9))


@given(tailed_seqs)
def test_antidifference_inverts_difference(m):
    s = m.antidifference()
    assert s - s.shift(-1) == m and s(0) == (0,)


@given(tailed_seqs, tailed_seqs)
def test_equality_is_pointwise(a, b):
    same = all(a(i) == b(i) for i in range(-30, 31))
    assert (a == b) == same


# --- degree zero ------------------------------------------------------------------------

def test_h0_preimage_of_e0():
    pre = h0_preimage(e(0))
    mt = pre.terms[(-1,)]
    assert all(mt(i) == ((-1,) if i < 0 else (0,)) for i in range(-10, 10))
    assert degree0(pre) == e(0)


def test_h0_preimage_of_zero_and_difference():
    assert h0_preimage(Sequence.zero(1)).is_zero()
    m = e(1) - e(0)
    pre = h0_preimage(m)
    assert degree0(pre) == m
    # partial sums anchored at zero: 1 on both sides, 0 at the anchor
    assert pre.terms[(-1,)] == Sequence.constant(1, (1,)) - e(0)


def test_h0_preimage_rejects_constants():
    with pytest.raises(ValueError, match="not finitely supported; preimage formula inapplicable"):
        h0_preimage(Sequence.constant(1, (1,)))


@given(finite_seqs)
def test_h0_preimage_property(m):
    assert degree0(h0_preimage(m)) == m


# --- degree one ---------------------------------------------------------------------------

def test_reduce_examples():
    m = Sequence.finite(1, {0: (1,), 2: (5,)})
    assert reduce_to_tau(m, 1)[0] == m
    assert reduce_to_tau(m, 2)[0] == m + m.shift(1)
    assert reduce_to_tau(m, -1)[0] == -m.shift(-1)
    assert reduce_to_tau(m, 0)[0].is_zero()


@given(tailed_seqs, st.integers(-4, 4))
def test_reduction_bounds(m, p):
    mp, chain = reduce_to_tau(m, p)
    assert mp == reduce_to_tau_closed_form(m, p)
    want = GroupChainElement.single(m, p) - GroupChainElement.single(mp, 1)
    assert chain.boundary() == want


def test_h1_kernel_examples():
    c = Sequence.constant(1, (3,))
    assert h1_kernel_test(c)
    assert not h1_kernel_test(e(0))
    assert not h1_kernel_test(c + e(0))


@given(tailed_seqs)
def test_h1_kernel_is_shift_invariance(m):
    assert h1_kernel_test(m) == (m == m.shift(1)) == m.is_constant()


@given(tailed_seqs)
def test_boundary_squares_to_zero(m):
    c = GroupChainElement.single(m, 2, -1) + GroupChainElement.single(m.shift(1), 0, 3)
    assert c.boundary().boundary().is_zero()


# --- half-line -----------------------------------------------------------------------------

def test_halfline_examples():
    one = Sequence.half_line_constant(1, (1,))
    rep = halfline_kernel_image_test(one, 1)
    assert not rep["in_kernel"] and rep["expected_kernel"] is False
    assert halfline_kernel_image_test(Sequence.zero(1), 1)["in_kernel"]


def test_halfline_rejects_left_tails():
    with pytest.raises(ValueError):
        halfline_preimage(Sequence.constant(1, (1,)))


@given(half_line_seqs, st.integers(-3, 3))
def test_halfline_property(m, p):
    rep = halfline_kernel_image_test(m, p)
    assert rep["in_kernel"] == rep["expected_kernel"]
    assert rep["preimage_ok"] and rep["preimage_in_module"]
