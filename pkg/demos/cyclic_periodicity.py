"""
Cyclic homology and the periodicity sequence
============================================

The total complex of Connes' bicomplex computes HC.  Its S, B and I maps
fit into a long exact sequence that we assemble and test node by node.
"""

from jacobihom import algebra as alg
from jacobihom.complexes import compute_homology
from jacobihom.cyclic import build_connes_cyclic_complex, build_cyclic_total_complex, periodicity_maps

eps = alg.dual_numbers()

tot = compute_homology(build_cyclic_total_complex(eps, 5), representatives=False)
lam = compute_homology(build_connes_cyclic_complex(eps, 5), representatives=False)
print("HC(k[eps]) from the bicomplex:      ", tot.betti[:5])
print("HC(k[eps]) from the quotient by 1-t:", lam.betti[:5])

# Degree zero is always the abelianization R / [R, R].
print("dim R^ab:", alg.abelianization(eps)[0])

res = periodicity_maps(eps, 5)
for node in res.nodes:
    print(node)
print("exact everywhere:", res.exact)
