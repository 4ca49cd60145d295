"""Sparse exact linear algebra over the rationals.

Vectors are plain ``dict`` objects mapping a coordinate index to a nonzero
:class:`fractions.Fraction`.  Matrices are :class:`SparseMatrix` values.
Elimination runs on primitive integer rows (content removed after every
step) and only the final reduced echelon form is converted back to
fractions, so results never depend on dictionary iteration order.
"""

import os
from fractions import Fraction
from math import gcd

DEFAULT_SIZE_GUARD = 2 * 10**8


class SizeGuardError(RuntimeError):
    """Raised when an elimination is projected to exceed the work cap."""

    def __init__(self, message, estimate=None, cap=None):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap


class ContainmentError(ValueError):
    pass


def size_guard():
    """Current cap on projected entry-operations.

    ``HOMOLOGY_SIZE_GUARD`` in the environment overrides the default.
    """
    value = os.environ.get("HOMOLOGY_SIZE_GUARD")
    if value:
        return int(float(value))
    return DEFAULT_SIZE_GUARD


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def clean_vector(v):
    """Copy of ``v`` with fractions as values and zeros dropped."""
    out = {}
    for k, x in v.items():
        x = _as_fraction(x)
        if x:
            out[k] = x
    return out


def add_into(acc, v, scale=1):
    """``acc += scale * v`` in place, dropping cancelled entries."""
    for k, x in v.items():
        y = acc.get(k, 0) + scale * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


class SparseMatrix:
    """Immutable sparse matrix with exact rational entries.

    ``entries`` maps ``(row, col)`` to a nonzero ``Fraction``.
    """

    __slots__ = ("rows", "cols", "_entries", "_columns", "_rowvecs")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (r, c), x in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside {rows}x{cols}")
            x = _as_fraction(x)
            if x:
                clean[(r, c)] = x
        self._entries = clean
        self._columns = None
        self._rowvecs = None

    @classmethod
    def from_columns(cls, rows, columns):
        """Build from a list of column vectors (dicts row -> value)."""
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = len(columns)
        entries = {}
        cols = []
        for c, col in enumerate(columns):
            col = clean_vector(col)
            for r, x in col.items():
                if not 0 <= r < rows:
                    raise IndexError(f"row {r} outside 0..{rows - 1}")
                entries[(r, c)] = x
            cols.append(col)
        m._entries = entries
        m._columns = cols
        m._rowvecs = None
        return m

    @classmethod
    def from_rows(cls, cols, rows):
        return cls(len(rows), cols,
                   {(r, c): x for r, row in enumerate(rows) for c, x in row.items()})

    @classmethod
    def from_dense(cls, data, cols=None):
        data = [list(row) for row in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, {(r, c): x for r, row in enumerate(data)
                                     for c, x in enumerate(row) if x})

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols)

    @property
    def entries(self):
        return dict(self._entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return len(self._entries)

    def __getitem__(self, rc):
        return self._entries.get(rc, Fraction(0))

    def column(self, c):
        return self.columns()[c]

    def columns(self):
        if self._columns is None:
            cols = [{} for _ in range(self.cols)]
            for (r, c), x in self._entries.items():
                cols[c][r] = x
            self._columns = cols
        return self._columns

    def row_vectors(self):
        if self._rowvecs is None:
            rows = [{} for _ in range(self.rows)]
            for (r, c), x in self._entries.items():
                rows[r][c] = x
            self._rowvecs = rows
        return self._rowvecs

    def transpose(self):
        return SparseMatrix(self.cols, self.rows,
                            {(c, r): x for (r, c), x in self._entries.items()})

    T = property(transpose)

    def apply(self, v):
        """Matrix times sparse vector (dict col -> value)."""
        out = {}
        cols = self.columns()
        for c, x in v.items():
            if x:
                add_into(out, cols[c], x)
        return out

    def __matmul__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrix.from_columns(
            self.rows, [self.apply(col) for col in other.columns()])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = dict(self._entries)
        add_into(out, other._entries)
        return SparseMatrix(self.rows, self.cols, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        s = _as_fraction(s)
        return SparseMatrix(self.rows, self.cols,
                            {k: s * x for k, x in self._entries.items()})

    def is_zero(self):
        return not self._entries

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def to_dense(self):
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), x in self._entries.items():
            out[r][c] = x
        return out

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def dump(self):
        """Line-based text dump: a header then ``row col num/den`` lines."""
        lines = [f"{self.rows} {self.cols}"]
        for (r, c) in sorted(self._entries):
            x = self._entries[(r, c)]
            lines.append(f"{r} {c} {x.numerator}/{x.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols = map(int, lines[0].split())
        entries = {}
        for ln in lines[1:]:
            r, c, x = ln.split()
            entries[(int(r), int(c))] = Fraction(x)
        return cls(rows, cols, entries)


# --- integer-row elimination -------------------------------------------------

def _primitive(v):
    """Scale a rational vector to a primitive integer vector."""
    den = 1
    for x in v.values():
        d = x.denominator if isinstance(x, Fraction) else 1
        if d != 1:
            den = den * d // gcd(den, d)
    out = {k: int(x * den) for k, x in v.items() if x}
    g = 0
    for x in out.values():
        g = gcd(g, x)
        if g == 1:
            return out
    if g > 1:
        out = {k: x // g for k, x in out.items()}
    return out


def _eliminate(v, row, c):
    """Clear coordinate ``c`` of integer vector ``v`` using ``row``."""
    a = row[c]
    b = v[c]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {k: a * x for k, x in v.items()}
    for k, x in row.items():
        y = out.get(k, 0) - b * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    g = 0
    for x in out.values():
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        out = {k: x // g for k, x in out.items()}
    return out


class _Echelon:
    """Incremental echelon form over integer rows.

    The pivot of a row is its smallest column, or its largest when
    ``reverse`` is set.
    """

    def __init__(self, reverse=False):
        self.rows = {}
        self.reverse = reverse

    def _lead(self, v):
        return max(v) if self.reverse else min(v)

    def add(self, v):
        rows = self.rows
        while v:
            c = self._lead(v)
            r = rows.get(c)
            if r is None:
                rows[c] = v
                return True
            v = _eliminate(v, r, c)
        return False

    def reduce_full(self, v, skip=None):
        rows = self.rows
        pick = min if not self.reverse else max
        while True:
            cs = [k for k in v if k in rows and k != skip]
            if not cs:
                return v
            c = pick(cs)
            v = _eliminate(v, rows[c], c)

    def rref(self):
        """Rows in reduced echelon form as fraction dicts, sorted by pivot."""
        out = []
        for c in sorted(self.rows, reverse=self.reverse):
            v = self.reduce_full(self.rows[c], skip=c)
            p = Fraction(v[c])
            out.append((c, {k: Fraction(x) / p for k, x in v.items()}))
        if self.reverse:
            out.reverse()
        return out


def _components(vectors):
    """Group vector indices whose supports are connected."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v in vectors:
        keys = list(v)
        for k in keys:
            parent.setdefault(k, k)
        for k in keys[1:]:
            a, b = find(keys[0]), find(k)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for i, v in enumerate(vectors):
        if v:
            groups.setdefault(find(next(iter(v))), []).append(i)
    return [groups[k] for k in sorted(groups)]


def projected_work(vectors):
    """Sparse-aware estimate of elimination work, summed over blocks."""
    total = 0
    for comp in _components(vectors):
        nnz = sum(len(vectors[i]) for i in comp)
        ncols = len({k for i in comp for k in vectors[i]})
        total += nnz * min(len(comp), ncols)
    return total


def _check_guard(vectors, what):
    cap = size_guard()
    est = projected_work(vectors)
    if est > cap:
        raise SizeGuardError(
            f"{what}: projected work {est} exceeds size guard {cap}",
            estimate=est, cap=cap)


def _markowitz_order(vectors):
    return sorted(range(len(vectors)), key=lambda i: (len(vectors[i]), i))


def _echelon_of(vectors, reverse=False, what="elimination"):
    _check_guard(vectors, what)
    ech = _Echelon(reverse=reverse)
    for i in _markowitz_order(vectors):
        if vectors[i]:
            ech.add(_primitive(vectors[i]))
    return ech


# --- subspaces ----------------------------------------------------------------

class Subspace:
    """Subspace of Q^n with a basis in reduced row echelon form.

    Pivots are the first nonzero coordinates and increase strictly; each
    basis vector has a 1 at its pivot and 0 at every other pivot.
    """

    __slots__ = ("ambient_dim", "basis", "pivots", "_by_pivot")

    def __init__(self, ambient_dim, rref_rows):
        self.ambient_dim = ambient_dim
        self.pivots = tuple(c for c, _ in rref_rows)
        self.basis = tuple(v for _, v in rref_rows)
        self._by_pivot = dict(rref_rows)

    @classmethod
    def span(cls, ambient_dim, vectors):
        vectors = [clean_vector(v) for v in vectors]
        for v in vectors:
            for k in v:
                if not 0 <= k < ambient_dim:
                    raise IndexError(f"coordinate {k} outside 0..{ambient_dim - 1}")
        ech = _echelon_of(vectors, what="span")
        return cls(ambient_dim, ech.rref())

    @classmethod
    def whole(cls, n):
        return cls(n, [(i, {i: Fraction(1)}) for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls(n, [])

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def reduce(self, v):
        """Remainder of ``v`` after clearing every pivot coordinate."""
        out = clean_vector(v)
        for c in [k for k in out if k in self._by_pivot]:
            x = out.get(c)
            if x:
                add_into(out, self._by_pivot[c], -x)
        return out

    def coordinates(self, v):
        """Coefficients of ``v`` in the echelon basis; ``None`` if outside."""
        v = clean_vector(v)
        coeffs = [v.get(c, Fraction(0)) for c in self.pivots]
        rest = dict(v)
        for c, x in zip(self.pivots, coeffs):
            if x:
                add_into(rest, self._by_pivot[c], -x)
        return coeffs if not rest else None

    def contains(self, v):
        return not self.reduce(v)

    def __contains__(self, v):
        return self.contains(v)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class Quotient:
    """The quotient Q^n / U with coordinates on the non-pivot columns of U."""

    def __init__(self, relations):
        self.relations = relations
        pivots = set(relations.pivots)
        self.complement = [i for i in range(relations.ambient_dim) if i not in pivots]
        self.index = {c: j for j, c in enumerate(self.complement)}

    @property
    def dim(self):
        return len(self.complement)

    def project(self, v):
        r = self.relations.reduce(v)
        return {self.index[k]: x for k, x in r.items()}

    def lift(self, j):
        """Canonical representative: the standard basis vector of column j."""
        return {self.complement[j]: Fraction(1)}

    def projection_matrix(self):
        n = self.relations.ambient_dim
        return SparseMatrix.from_columns(
            self.dim, [self.project({i: 1}) for i in range(n)])


# --- main operations ----------------------------------------------------------

def rank(m):
    """Rank of a sparse matrix."""
    vecs = m.row_vectors() if m.rows <= m.cols else m.columns()
    return len(_echelon_of(list(vecs), what=f"rank of {m.rows}x{m.cols}").rows)


def kernel(m):
    """Null space of ``m`` as a canonical :class:`Subspace`."""
    ech = _echelon_of(list(m.row_vectors()), reverse=True,
                      what=f"kernel of {m.rows}x{m.cols}")
    rows = ech.rref()
    pivots = {c for c, _ in rows}
    # with last-column pivots, the vector for free column f starts at f
    by_free = {}
    for p, row in rows:
        for f, x in row.items():
            if f != p:
                by_free.setdefault(f, {})[p] = -x
    basis = []
    for f in range(m.cols):
        if f in pivots:
            continue
        v = {f: Fraction(1)}
        v.update(by_free.get(f, {}))
        basis.append((f, v))
    return Subspace(m.cols, basis)


def image(m):
    """Column space of ``m`` as a canonical :class:`Subspace`."""
    ech = _echelon_of(list(m.columns()), what=f"image of {m.rows}x{m.cols}")
    return Subspace(m.rows, ech.rref())


def rank_and_bases(m):
    """Return ``(rank, kernel, image)`` of a sparse matrix."""
    ker = kernel(m)
    im = image(m)
    assert im.dim + ker.dim == m.cols
    return im.dim, ker, im


def solve_linear(m, b):
    """One solution ``x`` of ``m x = b`` or ``None`` if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    ``b`` may be a sequence or a sparse dict; the result is a list.
    """
    if isinstance(b, dict):
        bvec = clean_vector(b)
    else:
        b = list(b)
        if len(b) != m.rows:
            raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
        bvec = clean_vector(dict(enumerate(b)))
    rows = m.row_vectors()
    aug = []
    for r in range(m.rows):
        row = dict(rows[r])
        if r in bvec:
            row[m.cols] = bvec[r]
        aug.append(row)
    ech = _echelon_of(aug, what=f"solve {m.rows}x{m.cols}")
    if m.cols in ech.rows:
        return None
    x = [Fraction(0)] * m.cols
    for p, row in ech.rref():
        x[p] = row.get(m.cols, Fraction(0))
    return x


def quotient_dim(big, small):
    """``dim(big) - dim(small)`` after checking ``small`` lies in ``big``."""
    for i, v in enumerate(small.basis):
        if not big.contains(v):
            raise ContainmentError(
                f"basis vector {i} of the smaller space is not in the larger: {v}")
    return big.dim - small.dim


def vector_to_list(v, n):
    out = [Fraction(0)] * n
    for k, x in v.items():
        out[k] = x
    return out
