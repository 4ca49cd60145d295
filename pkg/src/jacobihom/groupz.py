"""Group homology of Z with coefficients in sequences ``(m_i)_{i in Z}``.

The generator ``tau`` acts on the left by ``tau(m)_i = m_{i+1}`` and on the
right trivially.  Sequences are represented exactly when they agree with a
polynomial in ``i`` on each side of a finite window.  That class contains
the finitely supported and the eventually constant sequences and is closed
under shifts and under the partial sums that build preimages of ``b``.
"""

from fractions import Fraction

from .linalg import SparseMatrix, solve_linear


def _vec(dim, v):
    if v is None:
        return (Fraction(0),) * dim
    v = tuple(Fraction(x) for x in v)
    if len(v) != dim:
        raise ValueError(f"expected a vector of length {dim}")
    return v


def _vadd(u, v, s=1):
    return tuple(a + s * b for a, b in zip(u, v))


def _is0(v):
    return not any(v)


class Poly:
    """Vector-valued polynomial ``sum_k c_k i^k`` with exact coefficients."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim, coeffs=()):
        self.dim = dim
        cs = [tuple(Fraction(x) for x in c) for c in coeffs]
        while cs and _is0(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, dim, v):
        return cls(dim, [_vec(dim, v)])

    @classmethod
    def interpolate(cls, dim, points, values):
        """The polynomial of degree < len(points) through the given values."""
        n = len(points)
        if n == 0:
            return cls(dim)
        V = SparseMatrix.from_dense([[Fraction(x) ** k for k in range(n)] for x in points])
        coeffs = [[Fraction(0)] * dim for _ in range(n)]
        for c in range(dim):
            sol = solve_linear(V, [values[t][c] for t in range(n)])
            for k in range(n):
                coeffs[k][c] = sol[k]
        return cls(dim, coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, i):
        out = (Fraction(0),) * self.dim
        for c in reversed(self.coeffs):
            out = tuple(a * i + b for a, b in zip(out, c))
        return out

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def _points(self, extra=1):
        return list(range(max(self.degree, 0) + 1 + extra))

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = (Fraction(0),) * self.dim
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Poly(self.dim, [_vadd(x, y) for x, y in zip(a, b)])

    def scale(self, s):
        return Poly(self.dim, [tuple(s * x for x in c) for c in self.coeffs])

    def shifted(self, p):
        """``i -> P(i + p)``."""
        pts = self._points(0)
        return Poly.interpolate(self.dim, pts, [self(x + p) for x in pts])

    def antidifference(self):
        """``Q`` with ``Q(i) - Q(i-1) = P(i)`` and ``Q(0) = 0``."""
        pts = list(range(max(self.degree, 0) + 2))
        vals = [(Fraction(0),) * self.dim]
        for x in pts[1:]:
            vals.append(_vadd(vals[-1], self(x)))
        return Poly.interpolate(self.dim, pts, vals)


class Sequence:
    """``m = (m_i)`` with ``m_i = left(i)`` for ``i < lo``, explicit values on
    ``lo..hi`` and ``m_i = right(i)`` for ``i > hi``.  Values are vectors in
    ``Q^dim`` (coordinates in a chosen basis of the coefficient space)."""

    __slots__ = ("dim", "left", "right", "lo", "hi", "values")

    def __init__(self, dim, left=None, right=None, values=None, lo=0, hi=-1):
        self.dim = dim
        self.left = left if left is not None else Poly(dim)
        self.right = right if right is not None else Poly(dim)
        values = {int(i): _vec(dim, v) for i, v in (values or {}).items()}
        if values:
            lo = min(lo, min(values)) if lo <= hi else min(values)
            hi = max(hi, max(values)) if lo <= hi else max(values)
        self.lo, self.hi = lo, hi
        self.values = {}
        for i in range(lo, hi + 1):
            self.values[i] = values.get(i, (Fraction(0),) * dim)

    # -- constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def finite(cls, dim, values):
        return cls(dim, values=values)

    @classmethod
    def constant(cls, dim, v):
        p = Poly.constant(dim, v)
        return cls(dim, p, p)

    @classmethod
    def half_line_constant(cls, dim, v):
        """``v`` at every ``i >= 0`` and zero below."""
        return cls(dim, Poly(dim), Poly.constant(dim, v), {0: v}, 0, 0)

    def __call__(self, i):
        if i < self.lo:
            return self.left(i)
        if i > self.hi:
            return self.right(i)
        return self.values[i]

    def window(self, other=None, margin=0):
        lo, hi = self.lo, self.hi
        if other is not None:
            if other.lo <= other.hi:
                lo, hi = (min(lo, other.lo), max(hi, other.hi)) if lo <= hi else (other.lo, other.hi)
        if lo > hi:
            lo, hi = 0, -1
        return lo - margin, hi + margin

    def _combine(self, other, s):
        lo, hi = self.window(other)
        vals = {i: _vadd(self(i), other(i), s) for i in range(lo, hi + 1)}
        return Sequence(self.dim, self.left + other.left.scale(s),
                        self.right + other.right.scale(s), vals, lo, hi)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c):
        c = Fraction(c)
        return Sequence(self.dim, self.left.scale(c), self.right.scale(c),
                        {i: tuple(c * x for x in v) for i, v in self.values.items()},
                        self.lo, self.hi)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        if self.left != other.left or self.right != other.right:
            return False
        lo, hi = self.window(other)
        return all(self(i) == other(i) for i in range(lo, hi + 1))

    __hash__ = None

    def is_zero(self):
        return self == Sequence.zero(self.dim)

    def shift(self, p):
        """``m[p]`` with ``m[p]_i = m_{i+p}``."""
        return Sequence(self.dim, self.left.shifted(p), self.right.shifted(p),
                        {i - p: v for i, v in self.values.items()},
                        self.lo - p, self.hi - p)

    # -- classification ---------------------------------------------------------
    def is_finite(self):
        return self.left.is_zero() and self.right.is_zero()

    def is_constant(self):
        return (self.left == self.right and self.left.degree <= 0
                and all(self(i) == self.left(0) for i in range(self.lo, self.hi + 1)))

    def constant_part(self):
        """The eventual value when both tails are the same constant."""
        if self.left == self.right and self.left.degree <= 0:
            return self.left(0)
        return None

    def in_half_line_module(self):
        """Finitely supported on the negative side (any tail to the right)."""
        return self.left.is_zero()

    def antidifference(self, anchor="zero"):
        """``S`` with ``S_i - S_{i-1} = m_i``.

        ``anchor="zero"`` normalises ``S_0 = 0`` (the explicit partial sums
        ``S_i = sum_{0<r<=i} m_r``, ``S_i = -sum_{i<r<=0} m_r``);
        ``anchor="left"`` makes ``S`` vanish far to the left, which requires
        ``m`` to be finitely supported on that side.
        """
        lo, hi = self.window(margin=1)
        lo, hi = min(lo, -1), max(hi, 1)
        z = (Fraction(0),) * self.dim
        vals = {0: z}
        for i in range(1, hi + 1):
            vals[i] = _vadd(vals[i - 1], self(i))
        for i in range(-1, lo - 1, -1):
            vals[i] = _vadd(vals[i + 1], self(i + 1), -1)
        qr = self.right.antidifference()
        right = qr + Poly.constant(self.dim, _vadd(vals[hi], qr(hi), -1))
        ql = self.left.antidifference()
        left = ql + Poly.constant(self.dim, _vadd(vals[lo], ql(lo), -1))
        s = Sequence(self.dim, left, right, vals, lo, hi)
        if anchor == "left":
            if not self.left.is_zero():
                raise ValueError("sequence is not finitely supported on the left")
            c = left(0)
            s = s - Sequence.constant(self.dim, c)
        elif anchor != "zero":
            raise ValueError("anchor must be 'zero' or 'left'")
        return s

    def __repr__(self):
        vals = {i: [str(x) for x in v] for i, v in self.values.items() if any(v)}
        return (f"Sequence(left={[list(map(str, c)) for c in self.left.coeffs]}, "
                f"window={vals}, right={[list(map(str, c)) for c in self.right.coeffs]})")


class GroupChainElement:
    """``sum m_e (x) tau^{e_1} (x) ... (x) tau^{e_q}`` with ``m_e`` sequences."""

    def __init__(self, dim, degree, terms=None):
        self.dim = dim
        self.degree = degree
        self.terms = {}
        for e, m in (terms or {}).items():
            if len(e) != degree:
                raise ValueError("exponent tuple has the wrong length")
            self._acc(tuple(e), m)

    def _acc(self, e, m):
        cur = self.terms.get(e)
        m = m if cur is None else cur + m
        if m.is_zero():
            self.terms.pop(e, None)
        else:
            self.terms[e] = m

    @classmethod
    def single(cls, m, *exps):
        return cls(m.dim, len(exps), {tuple(exps): m})

    def __add__(self, other):
        out = GroupChainElement(self.dim, self.degree, self.terms)
        for e, m in other.terms.items():
            out._acc(e, m)
        return out

    def scale(self, c):
        return GroupChainElement(self.dim, self.degree,
                                 {e: m.scale(c) for e, m in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, GroupChainElement) and (self - other).is_zero()

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def boundary(self):
        """Hochschild ``b`` for ``k[Z]`` with ``tau`` acting by shifting on the
        left and trivially on the right:
        ``b(m (x) g_1 .. g_q) = m (x) g_2 .. + sum (-1)^i .. g_i g_{i+1} ..
        + (-1)^q g_q(m) (x) g_1 .. g_{q-1}``."""
        q = self.degree
        if q == 0:
            return GroupChainElement(self.dim, 0)
        out = GroupChainElement(self.dim, q - 1)
        for e, m in self.terms.items():
            out._acc(e[1:], m)
            for i in range(1, q):
                sign = -1 if i % 2 else 1
                out._acc(e[:i - 1] + (e[i - 1] + e[i],) + e[i + 1:], m.scale(sign))
            sign = -1 if q % 2 else 1
            out._acc(e[:-1], m.shift(e[-1]).scale(sign))
        return out

    def __repr__(self):
        return f"<GroupChainElement degree={self.degree} terms={sorted(self.terms)}>"


def h0_preimage(m):
    """``m~ (x) tau^-1`` with ``b(m~ (x) tau^-1) = m`` for finitely supported ``m``."""
    if not m.is_finite():
        raise ValueError("not finitely supported; preimage formula inapplicable")
    pre = GroupChainElement.single(m.antidifference("zero"), -1)
    if pre.boundary().terms.get((), Sequence.zero(m.dim)) != m:
        raise AssertionError("internal error: preimage does not map to its input")
    return pre


def reduce_to_tau(m, p):
    """``(m', c)`` with ``b(c) = m (x) tau^p - m' (x) tau``.

    For ``p > 0`` the reduction uses ``b(m (x) tau^{p-1} (x) tau)``; for
    ``p < 0`` it first trades ``m (x) tau^p`` for ``-m[p] (x) tau^{-p}``;
    ``p = 0`` is the boundary of ``m (x) 1 (x) 1``.
    """
    dim = m.dim
    if p == 0:
        return Sequence.zero(dim), GroupChainElement.single(m, 0, 0)
    if p == 1:
        return m, GroupChainElement(dim, 2)
    if p > 1:
        # m (x) tau^p = m (x) tau + m[1] (x) tau^{p-1} - b(m (x) tau^{p-1} (x) tau)
        rest, c = reduce_to_tau(m.shift(1), p - 1)
        return m + rest, c - GroupChainElement.single(m, p - 1, 1)
    P = -p
    # m (x) tau^p = b(m (x) tau^P (x) tau^p + m (x) 1 (x) 1) - m[p] (x) tau^P
    rest, c = reduce_to_tau(m.shift(p), P)
    chain = (GroupChainElement.single(m, P, p) + GroupChainElement.single(m, 0, 0)) - c
    return -rest, chain


def reduce_to_tau_closed_form(m, p):
    """The explicit sums: ``sum_{k<p} m[k]`` for ``p > 0``, ``0`` for ``p = 0``,
    ``-sum_{p<=k<0} m[k]`` for ``p < 0``."""
    out = Sequence.zero(m.dim)
    if p > 0:
        for k in range(p):
            out = out + m.shift(k)
    elif p < 0:
        for k in range(p, 0):
            out = out - m.shift(k)
    return out


def h1_kernel_test(m):
    """``m (x) tau`` is a cycle exactly when ``m = m[1]``."""
    return GroupChainElement.single(m, 1).boundary().is_zero()


def halfline_preimage(m):
    """Degree-0 preimage inside the half-line module: ``S_i = sum_{r<=i} m_r``."""
    if not m.in_half_line_module():
        raise ValueError("element is not in the half-line module")
    return GroupChainElement.single(m.antidifference("left"), -1)


def halfline_kernel_image_test(m, p):
    """Report on ``b(m (x) tau^p) = m - m[p]`` and a degree-0 preimage of ``m``
    for a representable element of the half-line module."""
    if not m.in_half_line_module():
        raise ValueError("element is not in the half-line module")
    image = m - m.shift(p)
    pre = halfline_preimage(m)
    lifted = pre.boundary().terms.get((), Sequence.zero(m.dim))
    return {
        "in_kernel": image.is_zero(),
        "expected_kernel": m.is_zero() or p == 0,
        "preimage_ok": lifted == m,
        "preimage_in_module": all(s.in_half_line_module() for s in pre.terms.values()),
        "preimage": pre,
    }


def random_finite_sequence(dim, rng, support=6, coeff_range=3):
    vals = {}
    for _ in range(rng.randint(0, support)):
        i = rng.randint(-support, support)
        vals[i] = tuple(Fraction(rng.randint(-coeff_range, coeff_range)) for _ in range(dim))
    return Sequence.finite(dim, vals)


def random_half_line_sequence(dim, rng, support=6, coeff_range=3):
    c = tuple(Fraction(rng.randint(-coeff_range, coeff_range)) for _ in range(dim))
    return Sequence.half_line_constant(dim, c) + random_finite_sequence(dim, rng, support, coeff_range)
