"""Connes' operator B, the total complex of Connes' bicomplex and the
periodicity sequence HH_n -> HC_n -> HC_{n-2} -> HH_{n-1}."""

from itertools import product

from .complexes import (ChainComplex, TensorLabels, _tensor_index, chain_map_ok,
                        compute_homology, guard_degree, hochschild_boundary)
from .linalg import SparseMatrix, add_into, rank, solve_linear


def connes_B_tensor(r, t):
    """``B(r_0 (x) ... (x) r_p)`` for a basis tensor, as ``{tensor: coeff}``.

    sum_i (-1)^(p i) (1 (x) r_i .. r_p r_0 .. r_{i-1}
                      + r_i (x) 1 (x) r_{i+1} .. r_p r_0 .. r_{i-1})
    """
    p = len(t) - 1
    out = {}
    for i in range(p + 1):
        sign = -1 if (p * i) % 2 else 1
        rot = t[i:] + t[:i]
        for u, c in r.unit.items():
            for key in ((u,) + rot, (rot[0], u) + rot[1:]):
                v = out.get(key, 0) + sign * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return out


def connes_B_chain(r, chain):
    out = {}
    for t, x in chain.items():
        add_into(out, connes_B_tensor(r, t), x)
    return out


def connes_B(r, p):
    """Matrix of ``B: R^(p+1) -> R^(p+2)``."""
    if p < 0:
        raise ValueError("B needs p >= 0")
    d = r.dim
    cols = []
    for t in product(range(d), repeat=p + 1):
        cols.append({_tensor_index(k, d, d): x for k, x in connes_B_tensor(r, t).items()})
    return SparseMatrix.from_columns(d ** (p + 2), cols)


class ConnesBicomplex:
    """Cells ``(p, q)`` with ``q >= p >= 0`` holding ``R^(q-p+1)``.

    ``vertical[(p, q)]`` is ``b`` out of the cell, ``horizontal[(p, q)]`` is
    ``B: (p, q) -> (p-1, q)``; the identities ``b^2 = B^2 = bB + Bb = 0``
    are checked cell by cell up to total degree ``cap``.
    """

    def __init__(self, r, cap):
        self.r = r
        self.cap = cap
        d = r.dim
        self.cells = {(p, n - p): d ** (n - 2 * p + 1)
                      for n in range(cap + 1) for p in range(n // 2 + 1)}
        hmax = max((q - p for p, q in self.cells), default=0)
        self._b = {k: hochschild_boundary(r, None, k) for k in range(1, hmax + 1)}
        self._B = {k: connes_B(r, k) for k in range(0, hmax)}
        self.vertical = {(p, q): self._b[q - p] for (p, q) in self.cells if q > p}
        self.horizontal = {(p, q): self._B[q - p] for (p, q) in self.cells if p > 0}
        self.check()

    def check(self):
        for k in range(2, len(self._b) + 1):
            if not (self._b[k - 1] @ self._b[k]).is_zero():
                raise AssertionError(f"b^2 != 0 at Hochschild degree {k}")
        for k in range(0, len(self._B)):
            if k + 1 in self._B and not (self._B[k + 1] @ self._B[k]).is_zero():
                raise AssertionError(f"B^2 != 0 at degree {k}")
            bB = self._b[k + 1] @ self._B[k]
            if k >= 1:
                bB = bB + self._B[k - 1] @ self._b[k]
            if not bB.is_zero():
                raise AssertionError(f"bB + Bb != 0 at degree {k}")


def _tot_blocks(d, n):
    """Columns of ``Tot_n`` as ``(p, size, offset)``; column ``p`` holds ``R^(n-2p+1)``."""
    blocks = []
    off = 0
    for p in range(n // 2 + 1):
        size = d ** (n - 2 * p + 1)
        blocks.append((p, size, off))
        off += size
    return blocks, off


def _tot_differential(r, n, b_cache, B_cache):
    """``d = b + (-1)^p B`` from ``Tot_n`` to ``Tot_{n-1}``."""
    d = r.dim
    src, _ = _tot_blocks(d, n)
    tgt, tdim = _tot_blocks(d, n - 1)
    toff = {p: off for p, _, off in tgt}
    entries = {}
    for p, size, off in src:
        h = n - 2 * p
        if h >= 1:
            for (i, j), x in b_cache(h).entries.items():
                entries[(toff[p] + i, off + j)] = x
        if p >= 1:
            s = -1 if p % 2 else 1
            for (i, j), x in B_cache(h).entries.items():
                entries[(toff[p - 1] + i, off + j)] = s * x
    return SparseMatrix(tdim, sum(s for _, s, _ in src), entries)


def _tot_labels(r, n):
    labs = []
    for p in range(n // 2 + 1):
        tl = TensorLabels([r.labels] * (n - 2 * p + 1))
        labs.extend(f"c{p}:{x}" for x in tl)
    return labs


def build_cyclic_total_complex(r, cap=4):
    """Total complex of Connes' bicomplex truncated at total degree ``cap``.

    ``Tot_n = sum_{p <= n/2} R^(n-2p+1)``; the B component leaving column
    ``p`` carries the sign ``(-1)^p``.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    d = r.dim
    bc, Bc = {}, {}

    def b_cache(h):
        if h not in bc:
            bc[h] = hochschild_boundary(r, None, h)
        return bc[h]

    def B_cache(h):
        if h not in Bc:
            Bc[h] = connes_B(r, h)
        return Bc[h]

    dims = [_tot_blocks(d, n)[1] for n in range(cap + 1)]
    for n in range(1, cap + 1):
        guard_degree(dims[n - 1], dims[n], n + 3, "cyclic total complex", n)
    bds = [_tot_differential(r, n, b_cache, B_cache) for n in range(1, cap + 1)]
    cat = [_tot_labels(r, n) for n in range(cap + 1)]
    return ChainComplex(dims, bds, cat, name=f"Tot B({r.name})")


# --- periodicity ---------------------------------------------------------------------

def _inclusion(r, n):
    """Column ``p = 0`` of ``Tot_n`` is ``C_n(R)``; it sits first."""
    d = r.dim
    _, tdim = _tot_blocks(d, n)
    return SparseMatrix(tdim, d ** (n + 1), {(i, i): 1 for i in range(d ** (n + 1))})


def _s_map(r, n):
    """Delete column 0 and re-index ``(p, q) -> (p-1, q-1)``, with sign
    ``(-1)^(p-1)`` on the shifted column so the result is a chain map."""
    d = r.dim
    src, sdim = _tot_blocks(d, n)
    if n < 2:
        return SparseMatrix(0, sdim)
    tgt, tdim = _tot_blocks(d, n - 2)
    toff = {p: off for p, _, off in tgt}
    entries = {}
    for p, size, off in src:
        if p == 0:
            continue
        s = -1 if (p - 1) % 2 else 1
        for i in range(size):
            entries[(toff[p - 1] + i, off + i)] = s
    return SparseMatrix(tdim, sdim, entries)


class PeriodicityResult:
    def __init__(self, hh, hc, maps, nodes, exact):
        self.hh = hh
        self.hc = hc
        self.maps = maps
        self.nodes = nodes
        self.exact = exact

    def __repr__(self):
        return f"<PeriodicityResult exact={self.exact} nodes={len(self.nodes)}>"


def _induced(src_h, tgt_h, cycle_image):
    """Matrix of the map on homology from images of representatives."""
    cols = []
    for rep in src_h.representatives:
        z = cycle_image(rep)
        cols.append(dict(enumerate(tgt_h.coordinates(z))))
    return SparseMatrix.from_columns(tgt_h.betti, cols)


def periodicity_maps(r, cap=5):
    """Maps ``I_n, S_n, B_n`` of the periodicity sequence and an exactness verdict.

    ``I`` includes column 0, ``S`` deletes it, and the connecting map is
    computed by lifting a cycle through ``S`` with :func:`solve_linear`,
    applying the total differential and solving back through ``I``.
    Exactness is checked at every node whose index ``n`` satisfies
    ``n + 1 < cap``.
    """
    if cap < 2:
        raise ValueError("periodicity needs cap >= 2")
    from .complexes import build_hochschild_complex
    hc_cx = build_cyclic_total_complex(r, cap)
    hh_cx = build_hochschild_complex(r, None, cap)
    hh = compute_homology(hh_cx)
    hc = compute_homology(hc_cx)
    maps = {}

    for n in range(cap):
        inc = _inclusion(r, n)
        if n >= 1 and not chain_map_ok(_inclusion(r, n - 1), inc,
                                       hh_cx.boundaries[n], hc_cx.boundaries[n]):
            raise AssertionError(f"inclusion is not a chain map at degree {n}")
        maps[("I", n)] = _induced(hh[n], hc[n], inc.apply)
        if n < 2:
            continue
        s = _s_map(r, n)
        if n >= 3 and not chain_map_ok(_s_map(r, n - 1), s,
                                       hc_cx.boundaries[n], hc_cx.boundaries[n - 2]):
            raise AssertionError(f"S is not a chain map at degree {n}")
        maps[("S", n)] = _induced(hc[n], hc[n - 2], s.apply)
        inc_lo = _inclusion(r, n - 1)

        def connect(z, s=s, inc_lo=inc_lo, n=n):
            lift = solve_linear(s, z)
            if lift is None:
                raise AssertionError("S is not surjective")
            dz = hc_cx.boundaries[n].apply({i: x for i, x in enumerate(lift) if x})
            y = solve_linear(inc_lo, dz)
            if y is None:
                raise AssertionError("boundary of the lift leaves column 0")
            return {i: x for i, x in enumerate(y) if x}

        maps[("B", n)] = _induced(hc[n - 2], hh[n - 1], connect)

    def dim_hh(n):
        return hh[n].betti if n >= 0 else 0

    def dim_hc(n):
        return hc[n].betti if n >= 0 else 0

    def get(kind, n, rows, cols):
        m = maps.get((kind, n))
        return SparseMatrix(rows, cols) if m is None else m

    nodes = []
    # ... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -I-> HC_{n-1} -> ...
    for n in range(cap - 1):
        I_n = get("I", n, dim_hc(n), dim_hh(n))
        S_n = get("S", n, dim_hc(n - 2), dim_hc(n))
        B_n = get("B", n, dim_hh(n - 1), dim_hc(n - 2))
        B_next = get("B", n + 1, dim_hh(n), dim_hc(n - 1))
        triples = [(f"HH_{n}", B_next, I_n, dim_hh(n)),
                   (f"HC_{n}", I_n, S_n, dim_hc(n))]
        if n >= 2:
            triples.append((f"HC_{n - 2}'", S_n, B_n, dim_hc(n - 2)))
        for label, f, g, mid in triples:
            comp_zero = (g @ f).is_zero()
            rf, rg = rank(f), rank(g)
            nodes.append({"node": label, "n": n, "dim": mid, "rank_in": rf,
                          "rank_out": rg, "exact": comp_zero and rf == mid - rg})
    exact = all(x["exact"] for x in nodes)
    return PeriodicityResult(hh, hc, maps, nodes, exact)


# --- Connes' cyclic complex ------------------------------------------------------------

def cyclic_operator(r, n):
    """Matrix of ``t(r_0 .. r_n) = (-1)^n r_n (x) r_0 .. r_{n-1}``."""
    d = r.dim
    s = -1 if n % 2 else 1
    cols = []
    for t in product(range(d), repeat=n + 1):
        cols.append({_tensor_index((t[-1],) + t[:-1], d, d): s})
    return SparseMatrix.from_columns(d ** (n + 1), cols)


def build_connes_cyclic_complex(r, cap=4):
    """``C^lambda_n = R^(n+1) / (1 - t)`` with the induced ``b``.

    Over a field of characteristic zero its homology is ``HC_n(R)``; it is
    computed along a route that never touches ``B``, so it serves as an
    independent cross-check of the total complex.
    """
    from .linalg import Quotient, Subspace
    d = r.dim
    quotients = []
    for n in range(cap + 1):
        t = cyclic_operator(r, n)
        rels = []
        for c in range(d ** (n + 1)):
            v = {c: 1}
            add_into(v, t.column(c), -1)
            rels.append(v)
        quotients.append(Quotient(Subspace.span(d ** (n + 1), rels)))
    dims = [q.dim for q in quotients]
    bds = []
    for n in range(1, cap + 1):
        guard_degree(dims[n - 1], dims[n], n + 1, "cyclic complex", n)
        b = hochschild_boundary(r, None, n)
        cols = [quotients[n - 1].project(b.column(c)) for c in quotients[n].complement]
        bds.append(SparseMatrix.from_columns(dims[n - 1], cols))
    return ChainComplex(dims, bds, None, name=f"C^lambda({r.name})")
