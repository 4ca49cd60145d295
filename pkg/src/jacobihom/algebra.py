"""Finite-dimensional algebras and bimodules given by structure constants.

Elements are sparse vectors (``dict`` basis index -> ``Fraction``).  Every
constructor verifies associativity and the unit exhaustively on the basis
and refuses bad input.
"""

from fractions import Fraction
from itertools import product

from .linalg import (Quotient, SparseMatrix, Subspace, add_into, clean_vector,
                     solve_linear)


class AlgebraError(ValueError):
    pass


def _vec_str(v, labels):
    if not v:
        return "0"
    return " + ".join(f"{x}*{labels[k]}" for k, x in sorted(v.items()))


class StructureAlgebra:
    """Associative unital algebra over Q on a finite basis.

    ``table[i][j]`` holds the product ``basis_i * basis_j`` as a tuple of
    ``(k, coefficient)`` pairs.
    """

    def __init__(self, labels, table, unit, name=None, _checked=False):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.table = table
        self.unit = clean_vector(unit)
        self.name = name or f"algebra[{self.dim}]"
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if not _checked:
            self._verify()

    def __repr__(self):
        return f"<StructureAlgebra {self.name} dim={self.dim}>"

    def index(self, label):
        if isinstance(label, int):
            return label
        return self._index[label]

    @property
    def structure_constants(self):
        return {(i, j): dict(self.table[i][j])
                for i in range(self.dim) for j in range(self.dim) if self.table[i][j]}

    def basis_product(self, i, j):
        return self.table[i][j]

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            row = self.table[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j]:
                    v = out.get(k, 0) + ab * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def basis_vector(self, i):
        return {self.index(i): Fraction(1)}

    def element(self, coeffs):
        """Sparse vector from a ``{label: value}`` mapping."""
        return clean_vector({self.index(k): v for k, v in coeffs.items()})

    def format(self, x):
        return _vec_str(x, self.labels)

    def _verify(self):
        n = self.dim
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise AlgebraError("structure table is not square over the labels")
        for i, j, k in product(range(n), repeat=3):
            left = self.mul(dict(self.table[i][j]), {k: Fraction(1)})
            right = self.mul({i: Fraction(1)}, dict(self.table[j][k]))
            if left != right:
                raise AlgebraError(
                    f"associativity fails on ({self.labels[i]}, {self.labels[j]}, "
                    f"{self.labels[k]}): {_vec_str(left, self.labels)} != "
                    f"{_vec_str(right, self.labels)}")
        for i in range(n):
            e = {i: Fraction(1)}
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise AlgebraError(f"unit fails on basis element {self.labels[i]}")


def _table_from(n, constants, index):
    table = [[() for _ in range(n)] for _ in range(n)]
    for (a, b), v in constants.items():
        i, j = index(a), index(b)
        vec = clean_vector({index(k): x for k, x in v.items()})
        table[i][j] = tuple(sorted(vec.items()))
    return tuple(tuple(row) for row in table)


def build_algebra(labels, constants, unit, name=None):
    """Algebra from labels, ``{(a, b): {c: coeff}}`` products and a unit.

    Keys may be labels or integer indices; omitted products are zero.
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise AlgebraError("duplicate basis labels")
    lookup = {lab: i for i, lab in enumerate(labels)}

    def index(key):
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < len(labels):
                raise AlgebraError(f"basis index {key} out of range")
            return key
        if key not in lookup:
            raise AlgebraError(f"unknown basis label {key!r}")
        return lookup[key]

    table = _table_from(len(labels), constants, index)
    unit = {index(k): x for k, x in unit.items()}
    return StructureAlgebra(labels, table, unit, name=name)


def ground_field():
    return build_algebra(["1"], {("1", "1"): {"1": 1}}, {"1": 1}, name="k")


def dual_numbers():
    """k[eps] with eps^2 = 0."""
    return build_algebra(
        ["1", "eps"],
        {("1", "1"): {"1": 1}, ("1", "eps"): {"eps": 1}, ("eps", "1"): {"eps": 1}},
        {"1": 1}, name="k[eps]")


def product_algebra(a, b):
    """Componentwise product ``a x b``; basis of ``a`` first."""
    n = a.dim
    labels = [f"({lab},0)" for lab in a.labels] + [f"(0,{lab})" for lab in b.labels]
    table = [[() for _ in range(n + b.dim)] for _ in range(n + b.dim)]
    for i, j in product(range(a.dim), repeat=2):
        table[i][j] = a.table[i][j]
    for i, j in product(range(b.dim), repeat=2):
        table[n + i][n + j] = tuple((n + k, c) for k, c in b.table[i][j])
    unit = dict(a.unit)
    unit.update({n + k: x for k, x in b.unit.items()})
    return StructureAlgebra(labels, tuple(map(tuple, table)), unit,
                            name=f"{a.name}x{b.name}")


def power_algebra(r, n):
    """``r^n`` with the componentwise product (n copies)."""
    d = r.dim
    labels = [f"{lab}@{c}" for c in range(1, n + 1) for lab in r.labels]
    size = n * d
    table = [[() for _ in range(size)] for _ in range(size)]
    for c in range(n):
        for i, j in product(range(d), repeat=2):
            table[c * d + i][c * d + j] = tuple((c * d + k, x) for k, x in r.table[i][j])
    unit = {c * d + k: x for c in range(n) for k, x in r.unit.items()}
    return StructureAlgebra(labels, tuple(map(tuple, table)), unit,
                            name=f"{r.name}^{n}")


def matrix_algebra(r, n):
    """``M_n(r)``; basis ``e_{i,j} (x) r_b`` ordered by ``(i, j, b)``, 1-based."""
    if n < 1:
        raise AlgebraError("matrix size must be at least 1")
    d = r.dim

    def idx(i, j, b):
        return (i * n + j) * d + b

    sep = "" if n < 10 else ","
    labels = [f"e{i + 1}{sep}{j + 1}" + ("" if d == 1 else f".{lab}")
              for i in range(n) for j in range(n) for lab in r.labels]
    size = n * n * d
    table = [[() for _ in range(size)] for _ in range(size)]
    for i, j, l in product(range(n), repeat=3):
        for a, b in product(range(d), repeat=2):
            table[idx(i, j, a)][idx(j, l, b)] = tuple(
                (idx(i, l, k), x) for k, x in r.table[a][b])
    unit = {idx(i, i, k): x for i in range(n) for k, x in r.unit.items()}
    return StructureAlgebra(labels, tuple(map(tuple, table)), unit,
                            name=f"M{n}({r.name})")


def matrix_unit(n, d, i, j, b=0):
    """Index of ``e_{i,j} (x) r_b`` in ``matrix_algebra`` (1-based i, j)."""
    return ((i - 1) * n + (j - 1)) * d + b


class CyclicGroupAlgebra:
    """Group algebra k[Z/n] with its Hopf data.

    Basis element ``g`` stands for the residue class ``g mod n``;
    the coproduct is diagonal, the counit sends every group element to 1
    and the antipode inverts.
    """

    def __init__(self, n):
        if n < 1:
            raise AlgebraError("cyclic group order must be positive")
        self.n = n
        labels = [f"{i}bar" for i in range(n)]
        table = tuple(tuple((((i + j) % n, Fraction(1)),) for j in range(n))
                      for i in range(n))
        self.algebra = StructureAlgebra(labels, table, {0: 1}, name=f"k[Z/{n}]")

    @property
    def dim(self):
        return self.n

    def coproduct(self, g):
        return ((g % self.n, g % self.n),)

    def counit(self, x):
        return sum(x.values(), Fraction(0))

    def antipode(self, g):
        return (-g) % self.n


def cyclic_group_algebra(n):
    return CyclicGroupAlgebra(n)


def _as_matrix(action, n):
    if isinstance(action, SparseMatrix):
        m = action
    else:
        m = SparseMatrix.from_dense(action, cols=n)
    if m.shape != (n, n):
        raise AlgebraError(f"action matrix must be {n}x{n}")
    return m


def check_automorphism(a, phi):
    """Return ``None`` if ``phi`` is a unital algebra automorphism of ``a``,
    else a message naming a witness."""
    phi = _as_matrix(phi, a.dim)
    if phi.apply(a.unit) != a.unit:
        return "action does not fix the unit"
    for i, j in product(range(a.dim), repeat=2):
        lhs = phi.apply(dict(a.table[i][j]))
        rhs = a.mul(phi.column(i), phi.column(j))
        if lhs != rhs:
            return (f"action is not multiplicative on ({a.labels[i]}, {a.labels[j]}): "
                    f"{a.format(lhs)} != {a.format(rhs)}")
    from .linalg import rank
    if rank(phi) != a.dim:
        return "action is not invertible"
    return None


def smash_product(a, h, action):
    """Smash product ``a # k[Z/n]`` for the generator acting by ``action``.

    ``(a1 # g^i)(a2 # g^j) = a1 * phi(g)^i(a2) # g^(i+j)``.  Basis is ordered
    by ``(a-basis, group element)``.
    """
    phi = _as_matrix(action, a.dim)
    problem = check_automorphism(a, phi)
    if problem:
        raise AlgebraError(problem)
    n = h.n
    powers = [SparseMatrix.identity(a.dim)]
    for _ in range(1, n + 1):
        powers.append(phi @ powers[-1])
    if powers[n] != powers[0]:
        raise AlgebraError(f"action generator does not have order dividing {n}")
    d = a.dim
    labels = [f"{lab}#{g}" for lab in a.labels for g in range(n)]
    size = d * n
    table = [[() for _ in range(size)] for _ in range(size)]
    for i, g in product(range(d), range(n)):
        for j, g2 in product(range(d), range(n)):
            prod = a.mul({i: Fraction(1)}, powers[g].column(j))
            gg = (g + g2) % n
            table[i * n + g][j * n + g2] = tuple(sorted((k * n + gg, x) for k, x in prod.items()))
    unit = {k * n: x for k, x in a.unit.items()}
    return StructureAlgebra(labels, tuple(map(tuple, table)), unit,
                            name=f"{a.name}#{h.algebra.name}")


def shift_action(r, n):
    """Cyclic shift on ``r^n``: ``(a_1..a_n) -> (a_2, .., a_n, a_1)``."""
    d = r.dim
    entries = {}
    for c in range(n):
        src = (c + 1) % n
        for b in range(d):
            entries[(c * d + b, src * d + b)] = 1
    return SparseMatrix(n * d, n * d, entries)


def smash_to_matrix_map(r, n):
    """Linear map ``(a_1..a_n) # i -> sum_k a_k e_{k,k+i}`` from
    ``smash_product(r^n, k[Z/n], shift)`` to ``M_n(r)``."""
    d = r.dim
    cols = []
    for c in range(n):
        for b in range(d):
            for g in range(n):
                cols.append({matrix_unit(n, d, c + 1, (c + g) % n + 1, b): Fraction(1)})
    return SparseMatrix.from_columns(n * n * d, cols)


def is_algebra_isomorphism(f, a, b):
    """Check a linear map is a bijective unital multiplicative map ``a -> b``.

    Returns ``None`` or a message naming the first failing basis pair.
    """
    if f.shape != (b.dim, a.dim):
        return "shape mismatch"
    from .linalg import rank
    if rank(f) != a.dim or a.dim != b.dim:
        return "map is not bijective"
    if f.apply(a.unit) != b.unit:
        return "map is not unital"
    for i, j in product(range(a.dim), repeat=2):
        lhs = f.apply(dict(a.table[i][j]))
        rhs = b.mul(f.column(i), f.column(j))
        if lhs != rhs:
            return f"not multiplicative on ({a.labels[i]}, {a.labels[j]})"
    return None


def commutator_span(r):
    vecs = []
    for i, j in product(range(r.dim), repeat=2):
        v = dict(r.table[i][j])
        add_into(v, dict(r.table[j][i]), -1)
        vecs.append(v)
    return Subspace.span(r.dim, vecs)


def abelianization(r):
    """``(dim R^ab, projection R -> R^ab)``."""
    q = Quotient(commutator_span(r))
    return q.dim, q.projection_matrix()


# --- bimodules ----------------------------------------------------------------

class Bimodule:
    """Bimodule over a :class:`StructureAlgebra` by action tables.

    ``left[a][m]`` is ``basis_a . m``; ``right[m][a]`` is ``m . basis_a``.
    """

    def __init__(self, over, labels, left, right, name=None, _checked=False):
        self.over = over
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.left = left
        self.right = right
        self.name = name or f"bimodule[{self.dim}]"
        if not _checked:
            self._verify()

    def __repr__(self):
        return f"<Bimodule {self.name} over {self.over.name} dim={self.dim}>"

    def act_left(self, a, m):
        out = {}
        for i, x in a.items():
            row = self.left[i]
            for k, y in m.items():
                for t, c in row[k]:
                    v = out.get(t, 0) + x * y * c
                    if v:
                        out[t] = v
                    else:
                        out.pop(t, None)
        return out

    def act_right(self, m, a):
        out = {}
        for k, y in m.items():
            row = self.right[k]
            for i, x in a.items():
                for t, c in row[i]:
                    v = out.get(t, 0) + x * y * c
                    if v:
                        out[t] = v
                    else:
                        out.pop(t, None)
        return out

    def _verify(self):
        A = self.over
        n, d = A.dim, self.dim
        for m in range(d):
            e = {m: Fraction(1)}
            if self.act_left(A.unit, e) != e:
                raise AlgebraError(f"unit does not act as identity on the left of {self.labels[m]}")
            if self.act_right(e, A.unit) != e:
                raise AlgebraError(f"unit does not act as identity on the right of {self.labels[m]}")
        for a, b, m in product(range(n), range(n), range(d)):
            ea, eb, em = {a: Fraction(1)}, {b: Fraction(1)}, {m: Fraction(1)}
            ab = dict(A.table[a][b])
            if self.act_left(ab, em) != self.act_left(ea, self.act_left(eb, em)):
                raise AlgebraError(f"left action not associative on ({A.labels[a]}, {A.labels[b]}, {self.labels[m]})")
            if self.act_right(em, ab) != self.act_right(self.act_right(em, ea), eb):
                raise AlgebraError(f"right action not associative on ({self.labels[m]}, {A.labels[a]}, {A.labels[b]})")
            if self.act_right(self.act_left(ea, em), eb) != self.act_left(ea, self.act_right(em, eb)):
                raise AlgebraError(f"actions do not commute on ({A.labels[a]}, {self.labels[m]}, {A.labels[b]})")


def _action_table(rows, cols, fn):
    return tuple(tuple(tuple(sorted(clean_vector(fn(i, j)).items())) for j in range(cols))
                 for i in range(rows))


def build_bimodule(over, labels, left, right, name=None):
    """Bimodule from ``{(a, m): vec}`` and ``{(m, a): vec}`` with integer keys."""
    n, d = over.dim, len(labels)
    lt = _action_table(n, d, lambda a, m: left.get((a, m), {}))
    rt = _action_table(d, n, lambda m, a: right.get((m, a), {}))
    return Bimodule(over, labels, lt, rt, name=name)


def regular_bimodule(a):
    """``a`` as a bimodule over itself."""
    return Bimodule(a, a.labels, a.table, a.table, name=a.name, _checked=True)


def restrict_bimodule(m, f, sub):
    """Restrict ``m`` along an algebra map ``f: sub -> m.over`` (a matrix)."""
    lt = _action_table(sub.dim, m.dim, lambda a, k: m.act_left(f.column(a), {k: Fraction(1)}))
    rt = _action_table(m.dim, sub.dim, lambda k, a: m.act_right({k: Fraction(1)}, f.column(a)))
    return Bimodule(sub, m.labels, lt, rt, name=f"{m.name}|{sub.name}")


def direct_sum_bimodule(m1, m2):
    if m1.over is not m2.over:
        raise AlgebraError("direct sum needs bimodules over the same algebra")
    n, d1 = m1.over.dim, m1.dim
    labels = [f"{lab}" for lab in m1.labels] + [f"{lab}'" for lab in m2.labels]

    def left(a, k):
        if k < d1:
            return dict(m1.left[a][k])
        return {d1 + t: x for t, x in m2.left[a][k - d1]}

    def right(k, a):
        if k < d1:
            return dict(m1.right[k][a])
        return {d1 + t: x for t, x in m2.right[k - d1][a]}

    return Bimodule(m1.over, labels, _action_table(n, len(labels), left),
                    _action_table(len(labels), n, right),
                    name=f"{m1.name}+{m2.name}")


def sub_bimodule(m, span_vectors, name=None):
    """Bimodule structure on a subspace given by basis vectors of ``m``
    (must be closed under both actions)."""
    d = len(span_vectors)
    B = SparseMatrix.from_columns(m.dim, span_vectors)

    def coords(v):
        x = solve_linear(B, v)
        if x is None or B.apply(dict(enumerate(x))) != clean_vector(v):
            raise AlgebraError("subspace is not closed under the actions")
        return dict(enumerate(x))

    lt = _action_table(m.over.dim, d, lambda a, k: coords(m.act_left({a: Fraction(1)}, span_vectors[k])))
    rt = _action_table(d, m.over.dim, lambda k, a: coords(m.act_right(span_vectors[k], {a: Fraction(1)})))
    labels = [f"v{k}" for k in range(d)]
    return Bimodule(m.over, labels, lt, rt, name=name or f"sub({m.name})")


# --- Lie algebras ---------------------------------------------------------------

class LieAlgebraData:
    """Lie algebra by bracket constants ``bracket[i][j]`` (tuples of pairs)."""

    def __init__(self, labels, bracket, name=None, _checked=False):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.bracket_table = bracket
        self.name = name or f"lie[{self.dim}]"
        if not _checked:
            self._verify()

    def __repr__(self):
        return f"<LieAlgebraData {self.name} dim={self.dim}>"

    def bracket(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_table[i][j]:
                    v = out.get(k, 0) + a * b * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def _verify(self):
        n = self.dim
        for i, j in product(range(n), repeat=2):
            s = dict(self.bracket_table[i][j])
            add_into(s, dict(self.bracket_table[j][i]))
            if s:
                raise AlgebraError(f"bracket not antisymmetric on ({self.labels[i]}, {self.labels[j]})")
        for i, j, k in product(range(n), repeat=3):
            if not (i < j < k):
                continue
            e = lambda t: {t: Fraction(1)}
            tot = self.bracket(self.bracket(e(i), e(j)), e(k))
            add_into(tot, self.bracket(self.bracket(e(j), e(k)), e(i)))
            add_into(tot, self.bracket(self.bracket(e(k), e(i)), e(j)))
            if tot:
                raise AlgebraError(f"Jacobi fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")


def commutator_lie(a):
    """The Lie algebra ``(a, [x, y] = xy - yx)``."""
    def br(i, j):
        v = dict(a.table[i][j])
        add_into(v, dict(a.table[j][i]), -1)
        return v
    table = _action_table(a.dim, a.dim, br)
    lie = LieAlgebraData(a.labels, table, name=f"gl({a.name})", _checked=True)
    try:
        lie._verify()
    except AlgebraError as exc:  # pragma: no cover - associative input cannot fail
        raise AssertionError(f"internal error: commutator bracket invalid: {exc}")
    return lie


def gl(n, r=None):
    return commutator_lie(matrix_algebra(r or ground_field(), n))


# --- separability -----------------------------------------------------------------

class SeparabilityWitness:
    """Separable subalgebra ``sub`` embedded in ``ambient`` by ``embedding``
    (a ``ambient.dim x sub.dim`` matrix) with idempotent
    ``sum coeff * u (x) v`` given as ``{(u, v): coeff}`` over ``sub``'s basis."""

    def __init__(self, sub, ambient, embedding, idempotent):
        self.sub = sub
        self.ambient = ambient
        self.embedding = embedding
        self.idempotent = clean_vector(idempotent)

    def terms(self):
        """Idempotent terms as ``(coeff, u_in_ambient, v_in_ambient)``."""
        out = []
        for (u, v), c in sorted(self.idempotent.items()):
            out.append((c, self.embedding.column(u), self.embedding.column(v)))
        return out


class SeparabilityResult:
    def __init__(self, ok, failure=None, witness=None):
        self.ok = ok
        self.failure = failure
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "pass" if self.ok else f"fail({self.failure}; {self.witness})"


def _tensor_mul(S, x, y):
    """Product in S (x) S^op of sparse dicts keyed by (u, v)."""
    out = {}
    for (u1, v1), a in x.items():
        for (u2, v2), b in y.items():
            uu = S.basis_product(u1, u2)
            vv = S.basis_product(v2, v1)
            for k, c in uu:
                for l, d in vv:
                    key = (k, l)
                    val = out.get(key, 0) + a * b * c * d
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
    return out


def verify_separability(w):
    """Check the idempotent identities for a :class:`SeparabilityWitness`."""
    S = w.sub
    emb = w.embedding
    if emb.apply(S.unit) != w.ambient.unit:
        return SeparabilityResult(False, "embedding is not unital")
    for i, j in product(range(S.dim), repeat=2):
        if emb.apply(dict(S.table[i][j])) != w.ambient.mul(emb.column(i), emb.column(j)):
            return SeparabilityResult(False, "embedding is not multiplicative",
                                      (S.labels[i], S.labels[j]))
    total = {}
    for (u, v), c in w.idempotent.items():
        add_into(total, dict(S.table[u][v]), c)
    if total != S.unit:
        return SeparabilityResult(False, "sum u_i v_i != 1", S.format(total))
    e = w.idempotent
    for s in range(S.dim):
        lhs = _tensor_mul(S, _pure(S, s, left_side=True), e)
        rhs = _tensor_mul(S, _pure(S, s, left_side=False), e)
        if lhs != rhs:
            return SeparabilityResult(False, "(s (x) 1) e != (1 (x) s) e", S.labels[s])
    if _tensor_mul(S, e, e) != e:
        return SeparabilityResult(False, "e is not idempotent")
    return SeparabilityResult(True)


def _pure(S, s, left_side):
    """``s (x) 1`` or ``1 (x) s`` in S (x) S^op as a dict."""
    out = {}
    for k, c in S.unit.items():
        key = (s, k) if left_side else (k, s)
        out[key] = out.get(key, 0) + c
    return clean_vector(out)


def diagonal_witness(r, n):
    """The diagonal subalgebra k^n of ``M_n(r)`` with ``e = sum e_ii (x) e_ii``."""
    S = power_algebra(ground_field(), n)
    A = matrix_algebra(r, n)
    cols = []
    for i in range(n):
        cols.append({matrix_unit(n, r.dim, i + 1, i + 1, k): x for k, x in r.unit.items()})
    emb = SparseMatrix.from_columns(A.dim, cols)
    return SeparabilityWitness(S, A, emb, {(i, i): 1 for i in range(n)})


def idempotent_witness(a, idempotents):
    """Separable ``k e_1 + ... + k e_m`` inside ``a`` for orthogonal
    idempotents summing to 1 (given as sparse vectors of ``a``)."""
    m = len(idempotents)
    S = power_algebra(ground_field(), m)
    emb = SparseMatrix.from_columns(a.dim, [clean_vector(e) for e in idempotents])
    return SeparabilityWitness(S, a, emb, {(i, i): 1 for i in range(m)})


def trivial_witness(a):
    """``S = k`` inside ``a`` with ``e = 1 (x) 1``."""
    S = ground_field()
    emb = SparseMatrix.from_columns(a.dim, [dict(a.unit)])
    return SeparabilityWitness(S, a, emb, {(0, 0): 1})


# --- coinvariants ---------------------------------------------------------------

def group_coinvariants(h, m):
    """Coinvariants of a bimodule over ``k[Z/n]`` under ``x -> g x g^-1``.

    Returns ``(dim, projection)``; the cyclic generator suffices.
    """
    g, ginv = 1 % h.n, h.antipode(1)
    vecs = []
    for k in range(m.dim):
        e = {k: Fraction(1)}
        conj = m.act_right(m.act_left({g: Fraction(1)}, e), {ginv: Fraction(1)})
        add_into(conj, e, -1)
        vecs.append(conj)
    q = Quotient(Subspace.span(m.dim, vecs))
    return q.dim, q.projection_matrix()


def group_module(h, action, labels=None):
    """Bimodule over ``k[Z/n]`` with the generator acting on the left by
    ``action`` and the right action trivial (through the counit)."""
    action = action if isinstance(action, SparseMatrix) else SparseMatrix.from_dense(action)
    d = action.rows
    powers = [SparseMatrix.identity(d)]
    for _ in range(1, h.n):
        powers.append(action @ powers[-1])
    left = {(g, k): powers[g].column(k) for g in range(h.n) for k in range(d)}
    right = {(k, g): {k: 1} for g in range(h.n) for k in range(d)}
    return build_bimodule(h.algebra, labels or [f"m{k}" for k in range(d)], left, right)
