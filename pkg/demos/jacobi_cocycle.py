"""
Banded matrices and their central extension
===========================================

A banded Z x Z matrix is stored as finitely many periodic diagonals plus a
finite corner.  The cocycle Psi measures how far the bracket of the
"upper half" projections is from the projection of the bracket.
"""

import random

from jacobihom import algebra as alg
from jacobihom.jacobi import (JElement, Window, affine_generator, central_extension_bracket,
                              format_jelement, japanese_cocycle, jbracket, random_jelement)

k = alg.ground_field()
tau, tau_inv = JElement.shift(k, 1), JElement.shift(k, -1)

# tau and its inverse commute, but their lifts to the extension do not.
print("Psi(tau, tau^-1) =", *map(str, japanese_cocycle(tau, tau_inv)))
br, central = central_extension_bracket((tau, (0,)), (tau_inv, (0,)))
print("extended bracket:", format_jelement(br) or "0", "+ central", *map(str, central))

# A dense window computation agrees with the closed form.
closed = japanese_cocycle(JElement.shift(k, 2), JElement.shift(k, -2))
dense = Window(10).cocycle(JElement.shift(k, 2), JElement.shift(k, -2))
print("Psi(tau^2, tau^-2): closed form", *map(str, closed), "window", *map(str, dense))

# Affine generators e_{ij} t^p satisfy the loop algebra relations.
x = affine_generator(k, 2, 1, 2, 1)
y = affine_generator(k, 2, 2, 1, -1)
print(format_jelement(jbracket(x, y)))

# Random elements satisfy the cocycle identity exactly.
rng = random.Random(0)
eps = alg.dual_numbers()
a, b, c = (random_jelement(eps, rng) for _ in range(3))
print("Jacobi sum:", [str(sum(t)) for t in zip(japanese_cocycle(jbracket(a, b), c),
                           japanese_cocycle(jbracket(b, c), a),
                           japanese_cocycle(jbracket(c, a), b))])
