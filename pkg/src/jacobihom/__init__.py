"""Exact homological algebra for structure-constant algebras.

The main entry points:

* :mod:`jacobihom.algebra` builds algebras, bimodules and Lie algebras.
* :mod:`jacobihom.complexes`, :mod:`jacobihom.cyclic`, :mod:`jacobihom.relative`
  and :mod:`jacobihom.lie` build chain complexes; :func:`compute_homology`
  turns any of them into Betti numbers and representatives.
* :mod:`jacobihom.jacobi` models banded Z x Z matrices over an algebra.
* :mod:`jacobihom.groupz` solves the group homology of Z on sequence modules.
* :mod:`jacobihom.verifier` is the registry of executable checks.
"""

from .algebra import (abelianization, dual_numbers, gl, ground_field, matrix_algebra,
                      power_algebra, product_algebra)
from .complexes import ChainComplex, build_hochschild_complex, compute_homology
from .cyclic import build_cyclic_total_complex, periodicity_maps
from .lie import chevalley_eilenberg_complex
from .linalg import SizeGuardError, SparseMatrix
from .relative import build_relative_hochschild_complex
from .verifier import list_checks, run_check

__version__ = "0.1.0"

__all__ = [
    "ChainComplex", "SizeGuardError", "SparseMatrix", "abelianization",
    "build_cyclic_total_complex", "build_hochschild_complex",
    "build_relative_hochschild_complex", "chevalley_eilenberg_complex",
    "compute_homology", "dual_numbers", "gl", "ground_field", "list_checks",
    "matrix_algebra", "periodicity_maps", "power_algebra", "product_algebra",
    "run_check",
]
