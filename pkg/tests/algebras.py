"""Small algebras shared by the tests."""

from jacobihom import algebra as alg


def truncated_poly(n):
    """``k[x]/(x^n)``."""
    labels = ["1"] + [f"x{i}" for i in range(1, n)]
    consts = {}
    for i in range(n):
        for j in range(n):
            if i + j < n:
                consts[(i, j)] = {i + j: 1}
    return alg.build_algebra(labels, consts, {0: 1}, name=f"k[x]/x^{n}")


def upper_triangular():
    """Upper triangular 2x2 matrices with basis e11, e12, e22."""
    consts = {("e11", "e11"): {"e11": 1}, ("e11", "e12"): {"e12": 1},
              ("e12", "e22"): {"e12": 1}, ("e22", "e22"): {"e22": 1}}
    return alg.build_algebra(["e11", "e12", "e22"], consts, {"e11": 1, "e22": 1}, name="T2(k)")


K = alg.ground_field()
KE = alg.dual_numbers()
KK = alg.product_algebra(K, K)

POOL = [K, KE, KK, truncated_poly(3), upper_triangular(), alg.cyclic_group_algebra(2).algebra,
        alg.cyclic_group_algebra(3).algebra, alg.product_algebra(K, KE), alg.matrix_algebra(K, 2)]
