"""Hochschild homology relative to a separable subalgebra.

The chains are ``M (x)_S A (x)_S ... (x)_S A (x)_S``: the quotient of
``M (x) A^p`` by moving any ``s`` in ``S`` across a tensor sign or around
the end of the cycle.  With a separability idempotent ``e = sum u (x) v``
the projection ``phi`` has the section

    psi(m (x) r_1 .. r_p) = sum v_p m u_0 (x) v_0 r_1 u_1 (x) ... (x) v_{p-1} r_p u_p

and ``h = sum_i (-1)^i h_i`` is a chain homotopy between ``id`` and
``psi phi`` on the absolute complex.
"""

from fractions import Fraction
from itertools import product

from .algebra import AlgebraError, regular_bimodule, verify_separability
from .complexes import (ChainComplex, ComplexError, _tensor_from_index, _tensor_index,
                        guard_degree, hochschild_b_tensor, hochschild_boundary,
                        hochschild_labels)
from .linalg import Quotient, SparseMatrix, Subspace


def _put(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _vec_tensor(factors):
    """Expand a list of sparse vectors into ``{tensor tuple: coeff}``."""
    out = {(): Fraction(1)}
    for f in factors:
        nxt = {}
        for t, c in out.items():
            for k, x in f.items():
                _put(nxt, t + (k,), c * x)
        out = nxt
    return out


def balancing_relations(a, m, w, p):
    """Sparse vectors spanning the S-balancing relations in ``M (x) A^p``."""
    dm, da = m.dim, a.dim
    ns = w.sub.dim
    svecs = [w.embedding.column(s) for s in range(ns)]
    # products with s are looked up rather than recomputed per tensor
    a_s = [[a.mul({x: Fraction(1)}, s) for s in svecs] for x in range(da)]
    s_a = [[a.mul(s, {x: Fraction(1)}) for s in svecs] for x in range(da)]
    m_s = [[m.act_right({x: Fraction(1)}, s) for s in svecs] for x in range(dm)]
    s_m = [[m.act_left(s, {x: Fraction(1)}) for s in svecs] for x in range(dm)]
    rels = []
    seen = set()
    for t in product(range(dm), *([range(da)] * p)):
        for si in range(ns):
            for j in range(p + 1):
                rel = {}
                if j < p:
                    # x_j s (x) x_{j+1}  -  x_j (x) s x_{j+1}
                    left = m_s[t[0]][si] if j == 0 else a_s[t[j]][si]
                    for k, c in left.items():
                        _put(rel, t[:j] + (k,) + t[j + 1:], c)
                    for k, c in s_a[t[j + 1]][si].items():
                        _put(rel, t[:j + 1] + (k,) + t[j + 2:], -c)
                else:
                    # x_0 (x) ... (x) x_p s  -  s x_0 (x) ... (x) x_p
                    last = m_s[t[0]][si] if p == 0 else a_s[t[p]][si]
                    for k, c in last.items():
                        _put(rel, t[:p] + (k,), c)
                    for k, c in s_m[t[0]][si].items():
                        _put(rel, (k,) + t[1:], -c)
                if rel:
                    vec = {_tensor_index(k, dm, da): c for k, c in rel.items()}
                    key = frozenset(vec.items())
                    if key not in seen:
                        seen.add(key)
                        rels.append(vec)
    return rels


class RelativeComplex(ChainComplex):
    """:class:`ChainComplex` of ``C^S`` that remembers its quotient data.

    ``quotients[p]`` is the :class:`Quotient` of ``M (x) A^p`` by the
    balancing relations; basis classes are represented by the surviving
    lexicographic tensors.
    """

    def __init__(self, a, m, w, quotients, dims, bds, catalog, name):
        self.algebra = a
        self.module = m
        self.witness = w
        self.quotients = quotients
        super().__init__(dims, bds, catalog, name=name)


def build_relative_hochschild_complex(a, m=None, w=None, cap=3):
    """The complex ``C^S_p(A, M)`` for ``0 <= p <= cap``.

    ``w`` is a :class:`~jacobihom.algebra.SeparabilityWitness` whose ambient
    algebra is ``a``; it is verified first.  The induced boundary is checked
    to descend (``b`` maps relations into relations).
    """
    m = m or regular_bimodule(a)
    if w is None:
        from .algebra import trivial_witness
        w = trivial_witness(a)
    if w.ambient is not a and (w.ambient.table != a.table or w.ambient.unit != a.unit):
        raise AlgebraError("witness is not embedded in this algebra")
    verdict = verify_separability(w)
    if not verdict:
        raise AlgebraError(f"separability witness fails: {verdict.failure} ({verdict.witness})")
    dm, da = m.dim, a.dim
    full = [dm * da ** p for p in range(cap + 1)]
    quotients = []
    for p in range(cap + 1):
        rels = balancing_relations(a, m, w, p)
        quotients.append(Quotient(Subspace.span(full[p], rels)))
    dims = [q.dim for q in quotients]
    bds = []
    for p in range(1, cap + 1):
        q_hi, q_lo = quotients[p], quotients[p - 1]
        guard_degree(dims[p - 1], dims[p], p + 1, "relative complex", p)
        cols = []
        for c in q_hi.complement:
            t = _tensor_from_index(c, p, dm, da)
            img = {_tensor_index(k, dm, da): x
                   for k, x in hochschild_b_tensor(a, m, t).items()}
            cols.append(q_lo.project(img))
        bds.append(SparseMatrix.from_columns(dims[p - 1], cols))
        for i, rel in enumerate(q_hi.relations.basis):
            img = {}
            for idx, x in rel.items():
                t = _tensor_from_index(idx, p, dm, da)
                for k, y in hochschild_b_tensor(a, m, t).items():
                    _put(img, _tensor_index(k, dm, da), x * y)
            if q_lo.project(img):
                raise ComplexError(
                    f"boundary does not descend: relation {i} in degree {p} "
                    f"maps outside the relations of degree {p - 1}")
    catalog = []
    for p in range(cap + 1):
        labels = hochschild_labels(a, m, p)
        catalog.append([labels[c] for c in quotients[p].complement])
    return RelativeComplex(a, m, w, quotients, dims, bds, catalog,
                           name=f"C^{w.sub.name}({a.name}, {m.name})")


# --- the comparison maps ---------------------------------------------------------

def _idem_terms(w):
    return w.terms()


def psi_tensor(a, m, w, t):
    """``psi`` on one basis tensor ``m (x) r_1 (x) ... (x) r_p``."""
    p = len(t) - 1
    terms = _idem_terms(w)
    out = {}
    for choice in product(range(len(terms)), repeat=p + 1):
        coeff = Fraction(1)
        for i in choice:
            coeff *= terms[i][0]
        u = [terms[i][1] for i in choice]
        v = [terms[i][2] for i in choice]
        first = m.act_right(m.act_left(v[p], {t[0]: Fraction(1)}), u[0])
        factors = [first]
        for j in range(1, p + 1):
            factors.append(a.mul(a.mul(v[j - 1], {t[j]: Fraction(1)}), u[j]))
        for key, x in _vec_tensor(factors).items():
            _put(out, key, coeff * x)
    return out


def h_component(a, m, w, t, i):
    """``h_i`` on one basis tensor (output has one more factor)."""
    p = len(t) - 1
    terms = _idem_terms(w)
    out = {}
    for choice in product(range(len(terms)), repeat=i + 1):
        coeff = Fraction(1)
        for j in choice:
            coeff *= terms[j][0]
        u = [terms[j][1] for j in choice]
        v = [terms[j][2] for j in choice]
        factors = [m.act_right({t[0]: Fraction(1)}, u[0])]
        for j in range(1, i + 1):
            factors.append(a.mul(a.mul(v[j - 1], {t[j]: Fraction(1)}), u[j]))
        factors.append(v[i])
        factors.extend({t[j]: Fraction(1)} for j in range(i + 1, p + 1))
        for key, x in _vec_tensor(factors).items():
            _put(out, key, coeff * x)
    return out


class ComparisonMaps:
    """Matrices of ``phi``, ``psi`` and ``h`` between the absolute and the
    relative complex, degree by degree."""

    def __init__(self, rel):
        self.rel = rel
        a, m, w = rel.algebra, rel.module, rel.witness
        dm, da = m.dim, a.dim
        self.phi, self.psi, self.h = {}, {}, {}
        for p in range(rel.cap + 1):
            q = rel.quotients[p]
            self.phi[p] = q.projection_matrix()
            cols = []
            for c in q.complement:
                t = _tensor_from_index(c, p, dm, da)
                cols.append({_tensor_index(k, dm, da): x
                             for k, x in psi_tensor(a, m, w, t).items()})
            self.psi[p] = SparseMatrix.from_columns(dm * da ** p, cols)
        for p in range(rel.cap):
            cols = []
            for idx in range(dm * da ** p):
                t = _tensor_from_index(idx, p, dm, da)
                col = {}
                for i in range(p + 1):
                    sign = -1 if i % 2 else 1
                    for k, x in h_component(a, m, w, t, i).items():
                        _put(col, _tensor_index(k, dm, da), sign * x)
                cols.append(col)
            self.h[p] = SparseMatrix.from_columns(dm * da ** (p + 1), cols)

    def phi_psi_is_identity(self, p):
        return self.phi[p] @ self.psi[p] == SparseMatrix.identity(self.rel.dims[p])

    def homotopy_defect(self, p):
        """``d h + h d - (id - psi phi)`` on ``C_p``; zero when the identity holds.

        Needs ``p + 1 <= cap`` so that ``h_p`` exists.
        """
        a, m = self.rel.algebra, self.rel.module
        n = m.dim * a.dim ** p
        lhs = hochschild_boundary(a, m, p + 1) @ self.h[p]
        if p >= 1:
            lhs = lhs + self.h[p - 1] @ hochschild_boundary(a, m, p)
        rhs = SparseMatrix.identity(n) - self.psi[p] @ self.phi[p]
        return lhs - rhs

    def phi_is_chain_map(self, p):
        a, m = self.rel.algebra, self.rel.module
        return (self.rel.boundaries[p] @ self.phi[p]
                == self.phi[p - 1] @ hochschild_boundary(a, m, p))

    def psi_is_chain_map(self, p):
        a, m = self.rel.algebra, self.rel.module
        return (hochschild_boundary(a, m, p) @ self.psi[p]
                == self.psi[p - 1] @ self.rel.boundaries[p])
