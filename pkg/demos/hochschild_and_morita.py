"""
Hochschild homology of small algebras
=====================================

Every algebra here is given by structure constants over the rationals,
and every number printed below comes from exact elimination.
"""

from jacobihom import algebra as alg
from jacobihom.complexes import build_hochschild_complex, compute_homology
from jacobihom.relative import build_relative_hochschild_complex

k = alg.ground_field()
eps = alg.dual_numbers()

# The ground field has homology only in degree 0.  The top degree of a
# truncated complex has no boundary coming in, so it is reported as an
# upper bound and flagged.
print(compute_homology(build_hochschild_complex(k, None, 3)).to_text())

# The dual numbers k[eps] carry a class in every degree.
print(compute_homology(build_hochschild_complex(eps, None, 3)).betti)

# Matrix algebras have the same homology as their coefficients.
m2 = alg.matrix_algebra(k, 2)
print("M2(k):", compute_homology(build_hochschild_complex(m2, None, 4),
                                 representatives=False).betti[:4])

# For M3 the absolute complex grows like 9^(p+1).  Working relative to the
# diagonal subalgebra, which is separable, gives the same homology with far
# smaller chain groups.
m3 = alg.matrix_algebra(k, 3)
rel = build_relative_hochschild_complex(m3, None, alg.diagonal_witness(k, 3), 3)
print("chain dims relative to the diagonal:", rel.dims)
print("M3(k):", compute_homology(rel, representatives=False).betti[:3])
