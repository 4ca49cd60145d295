from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacobihom import algebra as alg
from jacobihom.complexes import compute_homology, hochschild_boundary
from jacobihom.cyclic import (ConnesBicomplex, build_connes_cyclic_complex,
                              build_cyclic_total_complex, connes_B, connes_B_tensor,
                              cyclic_operator, periodicity_maps)
from algebras import K, KE, KK, POOL, truncated_poly, upper_triangular
from oracles import cyclic_betti, dense_B, to_sympy


def hc(a, top):
    rep = compute_homology(build_cyclic_total_complex(a, top + 1), representatives=False)
    return rep.betti[:top + 1]


def test_B_at_degree_zero():
    # B(r) = 1 (x) r + r (x) 1
    eps = KE.index("eps")
    assert connes_B_tensor(KE, (eps,)) == {(0, eps): 1, (eps, 0): 1}


@pytest.mark.parametrize("a", POOL[:6], ids=lambda a: a.name)
def test_B_matches_dense_oracle(a):
    for p in range(3):
        assert to_sympy(connes_B(a, p)) == dense_B(a, p)


@pytest.mark.parametrize("a", POOL, ids=lambda a: a.name)
def test_bicomplex_identities(a):
    ConnesBicomplex(a, 4 if a.dim <= 2 else 3)


def test_bicomplex_cells():
    bc = ConnesBicomplex(KE, 4)
    assert bc.cells[(0, 3)] == 16 and bc.cells[(1, 3)] == 8 and bc.cells[(2, 2)] == 2
    assert (2, 1) not in bc.cells


def test_known_values():
    assert hc(K, 4) == [1, 0, 1, 0, 1]
    assert hc(KK, 3) == [2, 0, 2, 0]
    assert hc(KE, 4) == [2, 0, 2, 0, 2]


def test_total_complex_flags_top():
    rep = compute_homology(build_cyclic_total_complex(K, 5))
    assert rep.reliable_betti == [1, 0, 1, 0, 1]
    assert not rep[5].reliable


@pytest.mark.parametrize("a", POOL[:6], ids=lambda a: a.name)
def test_against_dense_oracle(a):
    top = 3 if a.dim <= 2 else 2
    assert hc(a, top) == cyclic_betti(a, top)


@pytest.mark.parametrize("a", [K, KE, KK, truncated_poly(3), upper_triangular(),
                               alg.matrix_algebra(K, 2)], ids=lambda a: a.name)
def test_connes_cyclic_complex_agrees(a):
    top = 3 if a.dim <= 2 else 2
    lam = compute_homology(build_connes_cyclic_complex(a, top + 1), representatives=False)
    assert lam.betti[:top + 1] == hc(a, top)


def test_hc0_is_abelianization():
    for a in POOL:
        assert hc(a, 0) == [alg.abelianization(a)[0]]


def test_cyclic_operator_order():
    for n in range(4):
        t = cyclic_operator(KK, n)
        power = t
        for _ in range(n):
            power = t @ power
        assert power == power.identity(t.rows)


@pytest.mark.parametrize("a", [K, KE], ids=lambda a: a.name)
def test_periodicity_exact(a):
    res = periodicity_maps(a, 5)
    assert res.exact
    assert {x["n"] for x in res.nodes} == {0, 1, 2, 3}


def test_periodicity_reads_k_to_k_for_ground_field():
    res = periodicity_maps(K, 5)
    assert res.maps[("I", 0)].to_dense() == [[1]]
    # HC_2 -> HC_0 is an isomorphism for R = k
    assert res.maps[("S", 2)].to_dense() != [[0]]


@given(st.sampled_from([K, KE, KK]), st.integers(0, 2), st.data())
def test_bB_plus_Bb_on_random_chains(a, p, data):
    n = a.dim ** (p + 2)
    v = {i: Fraction(c) for i, c in enumerate(data.draw(
        st.lists(st.integers(-2, 2), min_size=n, max_size=n))) if c}
    lhs = connes_B(a, p).apply(hochschild_boundary(a, None, p + 1).apply(v))
    rhs = hochschild_boundary(a, None, p + 2).apply(connes_B(a, p + 1).apply(v))
    total = dict(lhs)
    for k, x in rhs.items():
        total[k] = total.get(k, 0) + x
    assert not {k: x for k, x in total.items() if x}
