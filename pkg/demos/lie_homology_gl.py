"""
Lie algebra homology of gl_N
============================

With trivial coefficients the homology of gl_N(k) is an exterior algebra on
generators of degrees 1, 3, ..., 2N-1.  The Chevalley-Eilenberg complex
confirms this for small N.
"""

from jacobihom import algebra as alg
from jacobihom.complexes import compute_homology
from jacobihom.lie import chevalley_eilenberg_complex, odd_exterior_dims

for n in (1, 2, 3):
    g = alg.gl(n)
    got = compute_homology(chevalley_eilenberg_complex(g), representatives=False).betti
    want = odd_exterior_dims(range(1, 2 * n, 2), g.dim)
    print(f"gl_{n}: {got}  expected {want}")

# The same complex accepts any associative algebra through its commutator
# bracket; for k[eps] the Lie algebra is abelian.
print(compute_homology(chevalley_eilenberg_complex(alg.commutator_lie(alg.dual_numbers()))).betti)
