"""Banded Z x Z matrices over a finite-dimensional algebra R.

An element is stored as a periodic part plus a finite correction.  The
periodic part is a map ``(residue, offset) -> r`` at some period ``N``
meaning ``sum_{i = residue mod N} r e_{i, i+offset}``; with ``N = 1`` this is
a Laurent polynomial in the shift ``tau = sum e_{i,i+1}`` with coefficients
in ``R``.  The correction is a finitely supported matrix.  Every element the
constructions below produce stays in this class, and the decomposition is
unique, so equality is decided on the nose.
"""

import math
import random
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .algebra import abelianization
from .linalg import clean_vector


def _put(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _vadd(acc, v, scale=1):
    for k, x in v.items():
        _put(acc, k, scale * x)
    return acc


def _freeze(v):
    return tuple(sorted(v.items()))


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class JElement:
    """Element of J(R) in corner representation.

    ``laurent`` maps ``(residue, offset)`` to a sparse vector of R at period
    ``period``; ``corner`` maps ``(i, j)`` to a sparse vector of R.  Values
    are immutable after construction and the period is always minimal.
    """

    __slots__ = ("base", "period", "laurent", "corner", "_key")

    def __init__(self, base, laurent=None, corner=None, period=1):
        self.base = base
        lau = {}
        for (res, off), v in (laurent or {}).items():
            v = clean_vector(v)
            if v:
                lau[(res % period, off)] = _vadd(lau.get((res % period, off), {}), v)
        lau = {k: v for k, v in lau.items() if v}
        cor = {}
        for ij, v in (corner or {}).items():
            v = clean_vector(v)
            if v:
                cor[ij] = v
        self.period, self.laurent = _minimal_period(period, lau)
        self.corner = cor
        self._key = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, base):
        return cls(base)

    @classmethod
    def scalar_diagonal(cls, base, r):
        """``r I``."""
        return cls(base, {(0, 0): r})

    @classmethod
    def identity(cls, base):
        return cls.scalar_diagonal(base, base.unit)

    @classmethod
    def shift(cls, base, p=1, r=None):
        """``r tau^p`` with ``tau = sum_i e_{i,i+1}`` (``r`` defaults to 1)."""
        return cls(base, {(0, p): base.unit if r is None else r})

    @classmethod
    def unit_matrix(cls, base, i, j, r=None):
        """``r e_{i,j}``."""
        return cls(base, corner={(i, j): base.unit if r is None else r})

    # -- basic protocol --------------------------------------------------------
    def key(self):
        if self._key is None:
            self._key = (self.period,
                         tuple(sorted((k, _freeze(v)) for k, v in self.laurent.items())),
                         tuple(sorted((k, _freeze(v)) for k, v in self.corner.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, JElement):
            return NotImplemented
        return self.base is other.base and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_zero(self):
        return not self.laurent and not self.corner

    def __repr__(self):
        return f"JElement({format_jelement(self).strip() or '0'!r})"

    @property
    def bandwidth(self):
        offs = [abs(o) for _, o in self.laurent] + [abs(i - j) for i, j in self.corner]
        return max(offs, default=0)

    def refined(self, n):
        """The periodic part rewritten at period ``n`` (a multiple of ``period``)."""
        if n % self.period:
            raise ValueError(f"period {n} is not a multiple of {self.period}")
        out = {}
        for (res, off), v in self.laurent.items():
            for t in range(res, n, self.period):
                out[(t, off)] = v
        return out

    def entry(self, i, j):
        """The R-valued matrix entry at ``(i, j)``."""
        out = dict(self.laurent.get((i % self.period, j - i), {}))
        _vadd(out, self.corner.get((i, j), {}))
        return out

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other):
        if self.base is not other.base:
            raise ValueError("elements over different coefficient algebras")

    def __add__(self, other):
        self._check(other)
        n = _lcm(self.period, other.period)
        lau = self.refined(n)
        for k, v in other.refined(n).items():
            lau[k] = _vadd(dict(lau.get(k, {})), v)
        cor = {k: dict(v) for k, v in self.corner.items()}
        for k, v in other.corner.items():
            cor[k] = _vadd(cor.get(k, {}), v)
        return JElement(self.base, lau, cor, n)

    def scale(self, c):
        c = Fraction(c)
        return JElement(self.base, {k: {a: c * x for a, x in v.items()} for k, v in self.laurent.items()},
                        {k: {a: c * x for a, x in v.items()} for k, v in self.corner.items()},
                        self.period)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return jmul(self, other)


def _minimal_period(n, lau):
    for d in sorted(x for x in range(1, n + 1) if n % x == 0):
        if d == n:
            break
        ok = True
        for res in range(n):
            for off in {o for _, o in lau}:
                a = lau.get((res, off))
                b = lau.get((res % d, off))
                if (a or None) != (b or None):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return d, {(r, o): v for (r, o), v in lau.items() if r < d}
    return n, lau


def jmul(x, y):
    """Matrix product in J(R)."""
    x._check(y)
    R = x.base
    n = _lcm(x.period, y.period)
    lx, ly = x.refined(n), y.refined(n)
    lau, cor = {}, {}
    by_res = {}
    for (r2, p2), b in ly.items():
        by_res.setdefault(r2, []).append((p2, b))
    for (r1, p1), a in lx.items():
        for p2, b in by_res.get((r1 + p1) % n, ()):
            key = (r1, p1 + p2)
            lau[key] = _vadd(lau.get(key, {}), R.mul(a, b))
    for (k, j), c in y.corner.items():
        for (r, p), a in lx.items():
            i = k - p
            if i % n == r:
                cor[(i, j)] = _vadd(cor.get((i, j), {}), R.mul(a, c))
    for (i, k), c in x.corner.items():
        for p, b in by_res.get(k % n, ()):
            cor[(i, k + p)] = _vadd(cor.get((i, k + p), {}), R.mul(c, b))
        for (k2, j), d in y.corner.items():
            if k2 == k:
                cor[(i, j)] = _vadd(cor.get((i, j), {}), R.mul(c, d))
    return JElement(R, lau, cor, n)


def jbracket(x, y):
    """``[x, y] = xy - yx``."""
    return jmul(x, y) - jmul(y, x)


# --- affine generators and the block map ------------------------------------------

def affine_generator(base, n, i, j, p):
    """``e_{i,j}(p) = sum_r e_{i+rn, j+(p+r)n}`` for ``1 <= i, j <= n``."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("affine generator indices must lie in 1..n")
    return JElement(base, {(i % n, j - i + p * n): base.unit}, period=n)


def phi_block_map(n, x):
    """Split ``x`` into the ``n x n`` array of blocks
    ``(M_{i,j})_{r,s} = m_{i+rn, j+sn}`` with ``i, j`` in ``1..n``."""
    if n < 1:
        raise ValueError("block size must be positive")
    R = x.base
    N = x.period
    sub = N // math.gcd(n, N)
    blocks = [[({}, {}) for _ in range(n)] for _ in range(n)]
    for (rho, p), v in x.laurent.items():
        for i in range(1, n + 1):
            j = (i + p - 1) % n + 1
            q = (i + p - j) // n
            lau = blocks[i - 1][j - 1][0]
            for r in range(sub):
                if (i + r * n - rho) % N == 0:
                    lau[(r, q)] = v
    for (a, b), v in x.corner.items():
        i, j = (a - 1) % n + 1, (b - 1) % n + 1
        r, s = (a - i) // n, (b - j) // n
        blocks[i - 1][j - 1][1][(r, s)] = v
    return [[JElement(R, lau, cor, sub) for lau, cor in row] for row in blocks]


def phi_block_inverse(n, blocks):
    """Reassemble an element from its ``n x n`` blocks."""
    R = blocks[0][0].base
    total = JElement.zero(R)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            blk = blocks[i - 1][j - 1]
            M = blk.period
            lau = {(i + rho * n, j - i + q * n): v for (rho, q), v in blk.laurent.items()}
            cor = {(i + r * n, j + s * n): v for (r, s), v in blk.corner.items()}
            total = total + JElement(R, lau, cor, n * M)
    return total


def block_mul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = JElement.zero(a[0][0].base)
            for k in range(n):
                acc = acc + jmul(a[i][k], b[k][j])
            row.append(acc)
        out.append(row)
    return out


def block_bracket(a, b):
    ab, ba = block_mul(a, b), block_mul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(len(a))] for i in range(len(a))]


# --- corners, trace and the cocycle -------------------------------------------------

def corner_extract(x, sides):
    """``I_+ x I_-`` for ``sides == "+-"`` or ``I_- x I_+`` for ``"-+"``,
    as a finite ``{(i, j): r}`` matrix.  ``I_+`` projects onto indices
    ``>= 0`` and ``I_-`` onto indices ``< 0``."""
    if sides not in ("+-", "-+"):
        raise ValueError("sides must be '+-' or '-+'")
    upper = sides == "+-"
    out = {}
    N = x.period
    for (rho, p), v in x.laurent.items():
        if upper and p < 0:
            rows = range(0, -p)
        elif not upper and p > 0:
            rows = range(-p, 0)
        else:
            continue
        for i in rows:
            if i % N == rho:
                out[(i, i + p)] = _vadd(out.get((i, i + p), {}), v)
    for (i, j), v in x.corner.items():
        if (i >= 0 and j < 0) if upper else (i < 0 and j >= 0):
            out[(i, j)] = _vadd(out.get((i, j), {}), v)
    return {k: v for k, v in out.items() if v}


def finite_mul(R, a, b):
    out = {}
    cols = {}
    for (k, j), v in b.items():
        cols.setdefault(k, []).append((j, v))
    for (i, k), u in a.items():
        for j, v in cols.get(k, ()):
            out[(i, j)] = _vadd(out.get((i, j), {}), R.mul(u, v))
    return {k: v for k, v in out.items() if v}


def finite_sub(a, b):
    out = {k: dict(v) for k, v in a.items()}
    for k, v in b.items():
        out[k] = _vadd(out.get(k, {}), v, -1)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _ab_projection(R):
    return abelianization(R)


def trace_ab(R, m):
    """``pi^ab(sum_i m_ii)`` as a tuple of coordinates in ``R^ab``."""
    tr = {}
    for (i, j), v in m.items():
        if i == j:
            _vadd(tr, v)
    dim, proj = _ab_projection(R)
    img = proj.apply(tr)
    return tuple(img.get(t, Fraction(0)) for t in range(dim))


def _ab_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _ab_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def ab_zero(R):
    return (Fraction(0),) * _ab_projection(R)[0]


def japanese_cocycle(x, y):
    """``Tr((I_+ y I_-)(I_- x I_+) - (I_+ x I_-)(I_- y I_+))`` in ``R^ab``."""
    x._check(y)
    R = x.base
    first = finite_mul(R, corner_extract(y, "+-"), corner_extract(x, "-+"))
    second = finite_mul(R, corner_extract(x, "+-"), corner_extract(y, "-+"))
    return trace_ab(R, finite_sub(first, second))


def central_extension_bracket(xc, yc):
    """``[(x, c), (y, d)]' = ([x, y], Psi(x, y))``; the centre drops out."""
    (x, _), (y, _) = xc, yc
    return jbracket(x, y), japanese_cocycle(x, y)


# --- dense window oracle -----------------------------------------------------------

class Window:
    """Dense truncation of elements to indices ``-W..W`` for cross-checks."""

    def __init__(self, radius=12):
        self.W = radius

    def dense(self, x):
        W = self.W
        out = {}
        for i in range(-W, W + 1):
            for j in range(-W, W + 1):
                v = x.entry(i, j)
                if v:
                    out[(i, j)] = v
        return out

    def mul(self, R, a, b):
        return finite_mul(R, a, b)

    def agree(self, a, b, margin):
        """Entries of two dense windows agree for ``|i|, |j| <= W - margin``."""
        lim = self.W - margin
        for i in range(-lim, lim + 1):
            for j in range(-lim, lim + 1):
                if clean_vector(a.get((i, j), {})) != clean_vector(b.get((i, j), {})):
                    return (i, j)
        return None

    def cocycle(self, x, y):
        """``Tr([Phi x, Phi y] - Phi [x, y])`` with ``Phi = I_+ . I_+``,
        summed over the diagonal ``0 <= i <= W - 2*bandwidth``."""
        R = x.base
        bw = max(x.bandwidth, y.bandwidth, 1)
        dx, dy = self.dense(x), self.dense(y)
        plus = lambda m: {k: v for k, v in m.items() if k[0] >= 0 and k[1] >= 0}
        px, py = plus(dx), plus(dy)
        comm = finite_sub(finite_mul(R, px, py), finite_mul(R, py, px))
        full = plus(finite_sub(finite_mul(R, dx, dy), finite_mul(R, dy, dx)))
        diff = finite_sub(comm, full)
        lim = self.W - 2 * bw
        diag = {k: v for k, v in diff.items() if k[0] == k[1] and 0 <= k[0] <= lim}
        return trace_ab(R, diag)


# --- random elements -----------------------------------------------------------------

def random_jelement(base, rng, bandwidth=3, coeff_range=2, corner_box=3, periods=(1, 2)):
    """A random banded element with integer coefficients in
    ``-coeff_range..coeff_range`` (seeded through ``rng``)."""
    def rvec():
        v = {k: Fraction(rng.randint(-coeff_range, coeff_range)) for k in range(base.dim)}
        return clean_vector(v)
    N = rng.choice(periods)
    lau = {}
    for res in range(N):
        for off in range(-bandwidth, bandwidth + 1):
            if rng.random() < 0.4:
                lau[(res, off)] = rvec()
    cor = {}
    for _ in range(rng.randint(0, 3)):
        i = rng.randint(-corner_box, corner_box)
        j = i + rng.randint(-bandwidth, bandwidth)
        cor[(i, j)] = rvec()
    return JElement(base, lau, cor, N)


# --- text format -----------------------------------------------------------------

def format_jelement(x):
    """Lines ``L offset c_1 .. c_d`` (period 1), ``L offset residue/period c_1 ..``
    (period > 1) and ``C i j c_1 .. c_d``; offsets ascending, then residues,
    then corner positions lexicographically."""
    d = x.base.dim

    def coeffs(v):
        return " ".join(str(v.get(k, Fraction(0))) for k in range(d))

    lines = []
    for (res, off) in sorted(x.laurent, key=lambda k: (k[1], k[0])):
        v = x.laurent[(res, off)]
        if x.period == 1:
            lines.append(f"L {off} {coeffs(v)}")
        else:
            lines.append(f"L {off} {res}/{x.period} {coeffs(v)}")
    for (i, j) in sorted(x.corner):
        lines.append(f"C {i} {j} {coeffs(x.corner[(i, j)])}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_jelement(base, text):
    d = base.dim
    lau, cor = {}, {}
    period = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "L":
                off = int(parts[1])
                if len(parts) == d + 3 and "/" in parts[2]:
                    res, per = (int(t) for t in parts[2].split("/"))
                    vals = parts[3:]
                else:
                    res, per = 0, 1
                    vals = parts[2:]
                if period is None:
                    period = per
                elif per != period:
                    raise ValueError("mixed periods")
                key = (res, off)
            elif parts[0] == "C":
                key = (int(parts[1]), int(parts[2]))
                vals = parts[3:]
            else:
                raise ValueError(f"unknown line tag {parts[0]!r}")
            if len(vals) != d:
                raise ValueError(f"expected {d} coefficients, got {len(vals)}")
            v = {k: Fraction(s) for k, s in enumerate(vals)}
        except (ValueError, IndexError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        (lau if parts[0] == "L" else cor)[key] = v
    return JElement(base, lau, cor, period or 1)


# --- chains of J(R) ---------------------------------------------------------------

class JChain:
    """Finite formal sum of tensors of J(R) basis atoms.

    Atoms are ``("L", residue, offset, k)`` (at the chain's period) and
    ``("C", i, j, k)`` with ``k`` an R-basis index; they are linearly
    independent, so chains compare exactly once brought to a common period.
    """

    def __init__(self, base, degree, terms=None, period=1):
        self.base = base
        self.degree = degree
        self.period = period
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_elements(cls, base, degree, items):
        """``items`` is an iterable of ``(coeff, [JElement, ...])``."""
        items = list(items)
        n = 1
        for _, factors in items:
            for f in factors:
                n = _lcm(n, f.period)
        out = {}
        for c, factors in items:
            if len(factors) != degree + 1:
                raise ValueError("wrong number of tensor factors")
            expansion = {(): Fraction(c)}
            for f in factors:
                atoms = element_atoms(f, n)
                nxt = {}
                for t, x in expansion.items():
                    for a, y in atoms.items():
                        _put(nxt, t + (a,), x * y)
                expansion = nxt
            for t, x in expansion.items():
                _put(out, t, x)
        return cls(base, degree, out, n)

    def refined(self, n):
        if n == self.period:
            return self.terms
        if n % self.period:
            raise ValueError("refinement must be a multiple of the period")
        out = {}
        for t, c in self.terms.items():
            exp = {(): c}
            for a in t:
                if a[0] == "L":
                    opts = [("L", r, a[2], a[3]) for r in range(a[1], n, self.period)]
                else:
                    opts = [a]
                exp = {s + (o,): x for s, x in exp.items() for o in opts}
            for s, x in exp.items():
                _put(out, s, x)
        return out

    def _common(self, other):
        if self.base is not other.base or self.degree != other.degree:
            raise ValueError("incompatible chains")
        n = _lcm(self.period, other.period)
        return n, self.refined(n), other.refined(n)

    def __add__(self, other):
        n, a, b = self._common(other)
        out = dict(a)
        for k, v in b.items():
            _put(out, k, v)
        return JChain(self.base, self.degree, out, n)

    def scale(self, c):
        return JChain(self.base, self.degree, {k: c * v for k, v in self.terms.items()}, self.period)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, JChain):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"<JChain degree={self.degree} period={self.period} terms={len(self.terms)}>"


def element_atoms(x, n):
    """Coordinates of ``x`` on the atoms at period ``n``."""
    out = {}
    for (res, off), v in x.refined(n).items():
        for k, c in v.items():
            out[("L", res, off, k)] = c
    for (i, j), v in x.corner.items():
        for k, c in v.items():
            out[("C", i, j, k)] = c
    return out


def _atom_mul(R, n, a, b):
    """Product of two atoms at period ``n`` as ``{atom: coeff}``."""
    ka, kb = a[3], b[3]
    prod = R.table[ka][kb]
    if not prod:
        return {}
    if a[0] == "L" and b[0] == "L":
        if (a[1] + a[2]) % n != b[1]:
            return {}
        return {("L", a[1], a[2] + b[2], k): c for k, c in prod}
    if a[0] == "L":
        i = b[1] - a[2]
        if i % n != a[1]:
            return {}
        return {("C", i, b[2], k): c for k, c in prod}
    if b[0] == "L":
        if a[2] % n != b[1]:
            return {}
        return {("C", a[1], a[2] + b[2], k): c for k, c in prod}
    if a[2] != b[1]:
        return {}
    return {("C", a[1], b[2], k): c for k, c in prod}


def _identity_atoms(R, n):
    return {("L", r, 0, k): c for r in range(n) for k, c in R.unit.items()}


def j_hochschild_boundary(chain):
    """``b`` on a chain of J(R), products taken in J(R)."""
    R, n, p = chain.base, chain.period, chain.degree
    out = {}
    if p == 0:
        return JChain(R, 0, {}, n)
    for t, c in chain.terms.items():
        for i in range(p):
            sign = -1 if i % 2 else 1
            for a, x in _atom_mul(R, n, t[i], t[i + 1]).items():
                _put(out, t[:i] + (a,) + t[i + 2:], sign * c * x)
        sign = -1 if p % 2 else 1
        for a, x in _atom_mul(R, n, t[p], t[0]).items():
            _put(out, (a,) + t[1:p], sign * c * x)
    return JChain(R, p - 1, out, n)


def j_connes_B(chain):
    """Connes' ``B`` on a chain of J(R), inserting the identity ``I``."""
    R, n, p = chain.base, chain.period, chain.degree
    one = _identity_atoms(R, n)
    out = {}
    for t, c in chain.terms.items():
        for i in range(p + 1):
            sign = -1 if (p * i) % 2 else 1
            rot = t[i:] + t[:i]
            for u, x in one.items():
                _put(out, (u,) + rot, sign * c * x)
                _put(out, (rot[0], u) + rot[1:], sign * c * x)
    return JChain(R, p + 1, out, n)


def _diag(R, k):
    return ("L", 0, 0, k)


def _tau_atoms(R):
    return {("L", 0, 1, k): c for k, c in R.unit.items()}


def tilde_phi(R, p, chain):
    """``r_0 I (x) sum_k (-1)^k r_1 I .. r_k I (x) tau (x) r_{k+1} I .. r_p I``.

    ``chain`` is an element of ``R^(p+1)`` as ``{basis tuple: coeff}``.
    """
    out = {}
    tau = _tau_atoms(R)
    for t, c in chain.items():
        if len(t) != p + 1:
            raise ValueError(f"expected tensors with {p + 1} factors")
        for k in range(p + 1):
            sign = -1 if k % 2 else 1
            head = tuple(_diag(R, r) for r in t[:k + 1])
            tail = tuple(_diag(R, r) for r in t[k + 1:])
            for a, x in tau.items():
                _put(out, head + (a,) + tail, sign * c * x)
    return JChain(R, p + 1, out, 1)


def norm_operator(p, chain):
    """``N = sum_k t^k`` with ``t(r_0 .. r_p) = (-1)^p r_p (x) r_0 .. r_{p-1}``."""
    out = {}
    for t, c in chain.items():
        cur, sign = t, 1
        for _ in range(p + 1):
            _put(out, cur, sign * c)
            cur = (cur[-1],) + cur[:-1]
            if p % 2:
                sign = -sign
    return out


def rotate_once(p, chain):
    """The cyclic operator ``t`` itself."""
    s = -1 if p % 2 else 1
    return {(t[-1],) + t[:-1]: s * c for t, c in chain.items()}


def embed_diagonal_chain(R, chain, degree):
    """``r_0 (x) .. (x) r_q -> r_0 I (x) .. (x) r_q I`` as a JChain."""
    return JChain(R, degree, {tuple(_diag(R, r) for r in t): c for t, c in chain.items()}, 1)


def prepend_atoms(prefix, chain):
    """``a_1 (x) .. (x) a_m (x) chain`` for fixed atom dictionaries ``prefix``."""
    out = {}
    for t, c in chain.terms.items():
        exp = {(): c}
        for atoms in prefix:
            exp = {s + (a,): x * y for s, x in exp.items() for a, y in atoms.items()}
        for s, x in exp.items():
            _put(out, s + t, x)
    return JChain(chain.base, chain.degree + len(prefix), out, chain.period)


class BCompatReport:
    def __init__(self, ok, lhs, rhs, note=""):
        self.ok = ok
        self.lhs = lhs
        self.rhs = rhs
        self.note = note

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"<BCompatReport ok={self.ok} {self.note}>"


def check_B_compatibility(R, p, omega):
    """Compare ``(Phi~_{p+1} B_R + B_J Phi~_p)(omega)`` with
    ``-b(I (x) tau (x) I (x) N(omega))`` for a Hochschild cycle ``omega``."""
    from .complexes import hochschild_b_chain
    from .algebra import regular_bimodule
    from .cyclic import connes_B_chain
    omega = {t: Fraction(c) for t, c in omega.items() if c}
    if hochschild_b_chain(R, regular_bimodule(R), omega):
        raise ValueError("omega is not a Hochschild cycle")
    lhs = tilde_phi(R, p + 1, connes_B_chain(R, omega)) + j_connes_B(tilde_phi(R, p, omega))
    one = _identity_atoms(R, 1)
    big = prepend_atoms([one, _tau_atoms(R), one], embed_diagonal_chain(R, norm_operator(p, omega), p))
    rhs = -j_hochschild_boundary(big)
    return BCompatReport(lhs == rhs, lhs, rhs)


def phi_chain_defect(R, p, chain):
    """``b Phi~_{p+1}(c) + Phi~_p(b c)`` for ``c`` in ``R^(p+2)``; zero when the
    chain-map identity holds."""
    from .complexes import hochschild_b_chain
    from .algebra import regular_bimodule
    lhs = j_hochschild_boundary(tilde_phi(R, p + 1, chain))
    bc = hochschild_b_chain(R, regular_bimodule(R), chain)
    return lhs + tilde_phi(R, p, bc)
