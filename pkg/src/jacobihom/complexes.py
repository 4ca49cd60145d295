"""Chain complexes, the Hochschild complex and the homology driver."""

import time
from fractions import Fraction
from itertools import product

from .algebra import regular_bimodule
from .linalg import (SizeGuardError, SparseMatrix, Subspace, add_into, image,
                     kernel, rank, size_guard)


class ComplexError(RuntimeError):
    pass


class TensorLabels:
    """Lazy labels for the lexicographic basis of ``V_0 (x) V_1 (x) ...``."""

    def __init__(self, factor_labels, sep="|"):
        self.factor_labels = [tuple(f) for f in factor_labels]
        self.sep = sep
        self._len = 1
        for f in self.factor_labels:
            self._len *= len(f)

    def __len__(self):
        return self._len

    def __getitem__(self, idx):
        if not 0 <= idx < self._len:
            raise IndexError(idx)
        parts = []
        for f in reversed(self.factor_labels):
            idx, r = divmod(idx, len(f))
            parts.append(f[r])
        return self.sep.join(reversed(parts))

    def __iter__(self):
        for t in product(*self.factor_labels):
            yield self.sep.join(t)


class ChainComplex:
    """Graded spaces in degrees ``0..cap`` with boundaries ``d_p: C_p -> C_{p-1}``.

    ``boundaries[p]`` is ``d_p`` for ``p >= 1``; ``boundaries[0]`` is the zero
    map out of ``C_0``.  ``d_{p-1} d_p = 0`` is checked on construction.
    ``vanishes_above`` records that ``C_p = 0`` for ``p > cap``.
    """

    def __init__(self, dims, boundaries, basis_catalog=None, name="complex",
                 vanishes_above=False, check=True):
        self.dims = list(dims)
        self.cap = len(self.dims) - 1
        if len(boundaries) == len(self.dims) - 1:
            boundaries = [SparseMatrix(0, self.dims[0])] + list(boundaries)
        self.boundaries = list(boundaries)
        self.basis_catalog = basis_catalog
        self.name = name
        self.vanishes_above = vanishes_above
        for p in range(1, self.cap + 1):
            d = self.boundaries[p]
            if d.shape != (self.dims[p - 1], self.dims[p]):
                raise ComplexError(f"d_{p} has shape {d.shape}, expected "
                                   f"{(self.dims[p - 1], self.dims[p])}")
        if check:
            self.check_square_zero()

    def __repr__(self):
        return f"<ChainComplex {self.name} dims={self.dims}>"

    def d(self, p):
        return self.boundaries[p]

    def check_square_zero(self):
        for p in range(2, self.cap + 1):
            dd = self.boundaries[p - 1] @ self.boundaries[p]
            if not dd.is_zero():
                raise ComplexError(f"{self.name}: d_{p - 1} d_{p} != 0")

    def label(self, p, i):
        if self.basis_catalog is None:
            return str(i)
        return self.basis_catalog[p][i]


# --- Hochschild complex ----------------------------------------------------------

def _tensor_index(t, dm, da):
    idx = t[0]
    for a in t[1:]:
        idx = idx * da + a
    return idx


def _tensor_from_index(idx, p, dm, da):
    out = []
    for _ in range(p):
        idx, r = divmod(idx, da)
        out.append(r)
    out.append(idx)
    return tuple(reversed(out))


def hochschild_b_tensor(A, M, t):
    """``b(m (x) a_1 (x) ... (x) a_p)`` as ``{tensor: coeff}``."""
    p = len(t) - 1
    out = {}

    def put(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    m, rest = t[0], t[1:]
    for k, c in M.right[m][rest[0]]:
        put((k,) + rest[1:], c)
    for i in range(1, p):
        sign = -1 if i % 2 else 1
        head, tail = t[:i], t[i + 2:]
        for k, c in A.table[t[i]][t[i + 1]]:
            put(head + (k,) + tail, sign * c)
    sign = -1 if p % 2 else 1
    for k, c in M.left[t[p]][m]:
        put((k,) + t[1:p], sign * c)
    return out


def hochschild_b_chain(A, M, chain):
    out = {}
    for t, x in chain.items():
        if len(t) == 1:
            continue
        add_into(out, hochschild_b_tensor(A, M, t), x)
    return out


def hochschild_boundary(a, m=None, p=1):
    """Matrix of ``b: M (x) A^p -> M (x) A^(p-1)`` in the lexicographic basis."""
    if p < 1:
        raise ValueError("Hochschild boundary needs p >= 1")
    m = m or regular_bimodule(a)
    dm, da = m.dim, a.dim
    cols = []
    for t in product(range(dm), *([range(da)] * p)):
        img = hochschild_b_tensor(a, m, t)
        cols.append({_tensor_index(k, dm, da): x for k, x in img.items()})
    return SparseMatrix.from_columns(dm * da ** (p - 1), cols)


def guard_degree(rows, cols, terms_per_column, what, degree):
    est = cols * terms_per_column * min(rows, cols)
    cap = size_guard()
    if est > cap:
        raise SizeGuardError(
            f"{what}: degree {degree} projected work {est} exceeds size guard {cap}",
            estimate=est, cap=cap)


def hochschild_labels(a, m, p):
    return TensorLabels([m.labels] + [a.labels] * p)


def build_hochschild_complex(a, m=None, cap=3):
    """The Hochschild complex ``C_p(A, M) = M (x) A^p`` for ``0 <= p <= cap``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    m = m or regular_bimodule(a)
    dims = [m.dim * a.dim ** p for p in range(cap + 1)]
    for p in range(1, cap + 1):
        guard_degree(dims[p - 1], dims[p], p + 1, "Hochschild complex", p)
    bds = [hochschild_boundary(a, m, p) for p in range(1, cap + 1)]
    cat = [hochschild_labels(a, m, p) for p in range(cap + 1)]
    return ChainComplex(dims, bds, cat, name=f"C({a.name}, {m.name})")


# --- homology -------------------------------------------------------------------------

class DegreeHomology:
    def __init__(self, degree, betti, reliable, cycles=None, boundaries=None,
                 representatives=None, dim=0, note=None):
        self.degree = degree
        self.betti = betti
        self.reliable = reliable
        self.cycles = cycles
        self.boundaries = boundaries
        self.representatives = representatives
        self.dim = dim
        self.note = note
        self._reps = None
        if representatives is not None:
            self._reps = Subspace(dim, [(min(v), v) for v in representatives]) if representatives else Subspace.zero(dim)

    def coordinates(self, z):
        """Coordinates of the class of cycle ``z`` in the representative basis."""
        if self.boundaries is None or self._reps is None:
            raise ComplexError("homology computed without representatives")
        r = self.boundaries.reduce(z)
        coords = self._reps.coordinates(r)
        if coords is None:
            raise ComplexError(f"vector is not a cycle in degree {self.degree}")
        return coords


class HomologyReport:
    def __init__(self, name, degrees, stats=None, timings=None, labels=None):
        self.name = name
        self.degrees = degrees
        self.stats = stats or {}
        self.timings = timings or {}
        self._labels = labels

    @property
    def betti(self):
        return [d.betti for d in self.degrees]

    @property
    def reliable_betti(self):
        return [d.betti for d in self.degrees if d.reliable]

    def __getitem__(self, p):
        return self.degrees[p]

    def __repr__(self):
        return f"<HomologyReport {self.name} betti={self.betti}>"

    def _rep_items(self, p, v):
        out = []
        for k in sorted(v):
            x = v[k]
            lab = self._labels[p][k] if self._labels else str(k)
            out.append((lab, str(x.numerator) if x.denominator == 1
                         else f"{x.numerator}/{x.denominator}"))
        return out

    def to_records(self, timings=False):
        """Line-delimited JSON records, one per degree plus a header."""
        import json
        lines = [json.dumps({"record": "homology", "complex": self.name,
                             "degrees": len(self.degrees)}, sort_keys=True)]
        for d in self.degrees:
            rec = {"record": "degree", "degree": d.degree, "betti": d.betti,
                   "reliable": d.reliable, "chain_dim": d.dim}
            if d.note:
                rec["note"] = d.note
            if d.representatives is not None:
                rec["representatives"] = [dict(self._rep_items(d.degree, v))
                                          for v in d.representatives]
            lines.append(json.dumps(rec, sort_keys=True))
        stats = {"record": "stats", **self.stats}
        if timings:
            stats["timings"] = self.timings
        lines.append(json.dumps(stats, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_text(self, timings=False):
        lines = [f"homology of {self.name}"]
        for d in self.degrees:
            if d.reliable:
                lines.append(f"H_{d.degree} = {d.betti}")
            else:
                lines.append(f"H_{d.degree} <= {d.betti}  (unreliable: truncation boundary)")
            for v in d.representatives or []:
                terms = " + ".join(f"{x}*[{lab}]" for lab, x in self._rep_items(d.degree, v))
                lines.append(f"    rep: {terms}")
        for k in sorted(self.stats):
            lines.append(f"# {k}: {self.stats[k]}")
        if timings:
            for k in sorted(self.timings):
                lines.append(f"# time {k}: {self.timings[k]:.3f}s")
        return "\n".join(lines) + "\n"


def _representatives(cycles, boundaries):
    reduced = [boundaries.reduce(v) for v in cycles.basis]
    reps = Subspace.span(cycles.ambient_dim, [v for v in reduced if v])
    return list(reps.basis)


def compute_homology(c, representatives=True, degrees=None):
    """Betti numbers (and canonical representatives) of a chain complex.

    The top degree is flagged unreliable unless the complex vanishes above
    its cap.
    """
    out = []
    stats = {"dims": list(c.dims), "nnz": [c.boundaries[p].nnz for p in range(c.cap + 1)]}
    timings = {}
    todo = range(c.cap + 1) if degrees is None else degrees
    ranks = {}

    def rank_of(p):
        if p not in ranks:
            if p == 0 or p > c.cap:
                ranks[p] = 0
            else:
                ranks[p] = rank(c.boundaries[p])
        return ranks[p]

    for p in todo:
        t0 = time.perf_counter()
        reliable = p < c.cap or c.vanishes_above
        note = None if reliable else "unreliable: truncation boundary"
        if representatives and reliable:
            cyc = kernel(c.boundaries[p]) if p > 0 else Subspace.whole(c.dims[0])
            if p < c.cap:
                bd = image(c.boundaries[p + 1])
            else:
                bd = Subspace.zero(c.dims[p])
            reps = _representatives(cyc, bd)
            betti = cyc.dim - bd.dim
            assert betti == len(reps)
            out.append(DegreeHomology(p, betti, reliable, cyc, bd, reps, c.dims[p], note))
        else:
            betti = c.dims[p] - rank_of(p) - (rank_of(p + 1) if p < c.cap else 0)
            if not reliable:
                note = "unreliable: truncation boundary; value is dim ker d_p, an upper bound"
            out.append(DegreeHomology(p, betti, reliable, dim=c.dims[p], note=note))
        timings[f"H{p}"] = time.perf_counter() - t0
    return HomologyReport(c.name, out, stats, timings, c.basis_catalog)


def chain_map_ok(f_lo, f_hi, d_src, d_tgt):
    """``d_tgt f_hi == f_lo d_src`` for matrices of a degree-p chain map."""
    return (d_tgt @ f_hi) == (f_lo @ d_src)
