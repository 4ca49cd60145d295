"""Dense reference implementations used only by the tests.

They build every boundary from first principles with plain lists and use
sympy for exact ranks, sharing no code with the package beyond reading the
structure constants of the input algebra.
"""

from itertools import combinations, product

import sympy


def constants(a):
    """``c[i][j]`` is the dense coefficient list of ``basis_i * basis_j``."""
    d = a.dim
    c = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k, x in a.table[i][j]:
                c[i][j][k] = sympy.Rational(x.numerator, x.denominator)
    return c


def unit(a):
    u = [0] * a.dim
    for k, x in a.unit.items():
        u[k] = sympy.Rational(x.numerator, x.denominator)
    return u


def _index(t, d):
    i = 0
    for x in t:
        i = i * d + x
    return i


def dense_b(a, p):
    """``b: A^(p+1) -> A^p`` with regular coefficients as a sympy matrix."""
    d = a.dim
    c = constants(a)
    m = sympy.zeros(d ** p, d ** (p + 1))
    for t in product(range(d), repeat=p + 1):
        col = _index(t, d)
        for i in range(p):
            for k in range(d):
                x = c[t[i]][t[i + 1]][k]
                if x:
                    new = t[:i] + (k,) + t[i + 2:]
                    m[_index(new, d), col] += (-1) ** i * x
        for k in range(d):
            x = c[t[p]][t[0]][k]
            if x:
                new = (k,) + t[1:p]
                m[_index(new, d), col] += (-1) ** p * x
    return m


def dense_B(a, p):
    """``B: A^(p+1) -> A^(p+2)`` written out from the cyclic-insertion formula."""
    d = a.dim
    u = unit(a)
    m = sympy.zeros(d ** (p + 2), d ** (p + 1))
    for t in product(range(d), repeat=p + 1):
        col = _index(t, d)
        for i in range(p + 1):
            rot = t[i:] + t[:i]
            s = (-1) ** (p * i)
            for e in range(d):
                if u[e]:
                    m[_index((e,) + rot, d), col] += s * u[e]
                    m[_index((rot[0], e) + rot[1:], d), col] += s * u[e]
    return m


def betti_from_boundaries(dims, bds):
    """``bds[p]`` maps degree p to p-1 (``bds[0]`` unused); top degree omitted."""
    ranks = [0] + [bds[p].rank() for p in range(1, len(dims))]
    return [dims[p] - ranks[p] - ranks[p + 1] for p in range(len(dims) - 1)]


def hochschild_betti(a, top):
    """HH_0..HH_top of ``a`` via dense ranks (builds one degree further)."""
    dims = [a.dim ** (p + 1) for p in range(top + 2)]
    bds = [None] + [dense_b(a, p) for p in range(1, top + 2)]
    return betti_from_boundaries(dims, bds)


def cyclic_betti(a, top):
    """HC_0..HC_top from the total complex with differential ``b + B``."""
    d = a.dim

    def blocks(n):
        return [(q, d ** (n - 2 * q + 1)) for q in range(n // 2 + 1)]

    def tot(n):
        src, tgt = blocks(n), blocks(n - 1)
        rows = sum(s for _, s in tgt)
        cols = sum(s for _, s in src)
        m = sympy.zeros(rows, cols)
        toff = {}
        off = 0
        for q, s in tgt:
            toff[q] = off
            off += s
        coff = 0
        for q, s in src:
            h = n - 2 * q
            if h >= 1:
                m[toff[q]:toff[q] + d ** h, coff:coff + s] = dense_b(a, h)
            if q >= 1:
                m[toff[q - 1]:toff[q - 1] + d ** (h + 2), coff:coff + s] = dense_B(a, h)
            coff += s
        return m

    dims = [sum(s for _, s in blocks(n)) for n in range(top + 2)]
    bds = [None] + [tot(n) for n in range(1, top + 2)]
    return betti_from_boundaries(dims, bds)


def ce_betti(g):
    """Betti numbers of the Chevalley-Eilenberg complex, all degrees."""
    n = g.dim
    br = [[dict(g.bracket_table[i][j]) for j in range(n)] for i in range(n)]
    bases = [list(combinations(range(n), p)) for p in range(n + 1)]
    index = [{w: i for i, w in enumerate(b)} for b in bases]

    def sort_sign(seq):
        if len(set(seq)) < len(seq):
            return 0, None
        inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
        return (-1) ** inv, tuple(sorted(seq))

    bds = [None]
    for p in range(1, n + 1):
        m = sympy.zeros(len(bases[p - 1]), len(bases[p]))
        for col, w in enumerate(bases[p]):
            for i in range(p):
                for j in range(i + 1, p):
                    rest = w[:i] + w[i + 1:j] + w[j + 1:]
                    for k, x in br[w[i]][w[j]].items():
                        s, key = sort_sign((k,) + rest)
                        if s:
                            m[index[p - 1][key], col] += (-1) ** (i + j) * s * sympy.Rational(
                                x.numerator, x.denominator)
        bds.append(m)
    dims = [len(b) for b in bases]
    ranks = [0] + [bds[p].rank() for p in range(1, n + 1)] + [0]
    return [dims[p] - ranks[p] - ranks[p + 1] for p in range(n + 1)]


def to_sympy(m):
    """A package ``SparseMatrix`` as a dense sympy matrix."""
    out = sympy.zeros(m.rows, m.cols)
    for (i, j), x in m.entries.items():
        out[i, j] = sympy.Rational(x.numerator, x.denominator)
    return out
