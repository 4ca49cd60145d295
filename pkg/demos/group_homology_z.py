"""
Group homology of Z with sequence coefficients
==============================================

Sequences indexed by Z, polynomial outside a finite window, form a module
over k[Z] by shifting.  Degree 0 homology vanishes: every finitely supported
sequence is a boundary, with an explicit preimage.
"""

from jacobihom.groupz import (Sequence, h0_preimage, h1_kernel_test, halfline_kernel_image_test,
                              reduce_to_tau)

e0 = Sequence.finite(1, {0: (1,)})
pre = h0_preimage(e0)
m_tilde = pre.terms[(-1,)]
print("preimage values on -3..3:", [str(m_tilde(i)[0]) for i in range(-3, 4)])
print("its boundary is e_0:", pre.boundary().terms[()] == e0)

# m (x) tau is a cycle exactly when m is shift invariant.
print(h1_kernel_test(Sequence.constant(1, (5,))), h1_kernel_test(e0))

# Higher powers of tau reduce to tau: m (x) tau^2 ~ (m + m[1]) (x) tau.
m = Sequence.finite(1, {0: (1,), 3: (2,)})
print(reduce_to_tau(m, 2)[0] == m + m.shift(1))

# On the half-line module nothing nonzero is fixed by the shift.
print(halfline_kernel_image_test(Sequence.half_line_constant(1, (1,)), 1)["in_kernel"])
