"""Chevalley-Eilenberg chains of a Lie algebra with trivial coefficients."""

from itertools import combinations

from .complexes import ChainComplex, guard_degree
from .linalg import SparseMatrix


def _sort_sign(seq):
    """Sign of the sorting permutation, or 0 if an index repeats."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
            elif seq[j] == seq[j + 1]:
                return 0, None
    return sign, tuple(seq)


def ce_boundary_wedge(g, wedge):
    """``d(x_1 ^ ... ^ x_p)`` for sorted basis indices, as ``{wedge: coeff}``."""
    out = {}
    p = len(wedge)
    for i in range(p):
        for j in range(i + 1, p):
            sign = -1 if (i + j) % 2 else 1  # (-1)^((i+1)+(j+1))
            rest = wedge[:i] + wedge[i + 1:j] + wedge[j + 1:]
            for k, c in g.bracket_table[wedge[i]][wedge[j]]:
                s, key = _sort_sign((k,) + rest)
                if s:
                    v = out.get(key, 0) + sign * s * c
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
    return out


def chevalley_eilenberg_complex(g, cap=None):
    """``C_p = Lambda^p g`` for ``0 <= p <= cap`` with the lexicographic wedge
    basis and ``d(x_1^..^x_p) = sum_{i<j} (-1)^(i+j) [x_i, x_j] ^ ...``.

    ``cap`` defaults to ``dim g``, where the complex is complete.
    """
    n = g.dim
    cap = n if cap is None else cap
    if cap < 0:
        raise ValueError("cap must be non-negative")
    cap_eff = min(cap, n)
    bases = [list(combinations(range(n), p)) for p in range(cap_eff + 1)]
    index = [{w: i for i, w in enumerate(b)} for b in bases]
    dims = [len(b) for b in bases]
    bds = []
    for p in range(1, cap_eff + 1):
        guard_degree(dims[p - 1], dims[p], p * (p - 1) // 2 + 1, "Chevalley-Eilenberg complex", p)
        cols = []
        for w in bases[p]:
            cols.append({index[p - 1][k]: c for k, c in ce_boundary_wedge(g, w).items()})
        bds.append(SparseMatrix.from_columns(dims[p - 1], cols))
    catalog = [["^".join(g.labels[i] for i in w) or "1" for w in b] for b in bases]
    return ChainComplex(dims, bds, catalog, name=f"CE({g.name})",
                        vanishes_above=cap_eff == n)


def odd_exterior_dims(degrees, top):
    """Graded dimensions, up to ``top``, of the free graded-commutative
    algebra on odd generators of the given degrees."""
    dims = [1] + [0] * top
    for d in degrees:
        for t in range(top, d - 1, -1):
            dims[t] += dims[t - d]
    return dims
