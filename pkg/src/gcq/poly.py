"""Dense univariate polynomials over GF(q).

Coefficients are stored as a numpy array of field encodings, constant term
first, with trailing zeros stripped; the zero polynomial has no coefficients
and degree ``None``.

Addition, scalar multiplication and shifting are what the folding
algorithms need.  Multiplication, long division and gcd exist for the
oracle and for building test instances.
"""

import re

import numpy as np

from .counters import tally
from .errors import BadElement, BothZero, DivisionByZeroPoly, EmptyInput, FieldMismatch
from .field import DTYPE, FieldElement, FieldSpec, kernel_tables

# below this divisor length long division runs on python lists
_SMALL = 48


def _normalize(c):
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return c[:0]
    return c[: nz[-1] + 1]


class DensePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        if not isinstance(field, FieldSpec):
            raise TypeError("field must be a FieldSpec")
        c = np.array(coeffs, dtype=DTYPE).reshape(-1)
        if c.size and (c.min() < 0 or c.max() >= field.q):
            raise BadElement(f"coefficient out of range for GF({field.q})")
        self.field = field
        self.coeffs = _normalize(c)

    @classmethod
    def _raw(cls, field, coeffs):
        # trusted constructor: coeffs already valid encodings
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = _normalize(np.asarray(coeffs, dtype=DTYPE))
        return obj

    @classmethod
    def zero(cls, field):
        return cls._raw(field, np.zeros(0, dtype=DTYPE))

    @classmethod
    def one(cls, field):
        return cls._raw(field, np.ones(1, dtype=DTYPE))

    @classmethod
    def monomial(cls, field, k, c=1):
        a = np.zeros(k + 1, dtype=DTYPE)
        a[k] = c
        return cls._raw(field, a)

    @classmethod
    def x_minus_one(cls, field):
        return cls._raw(field, [field.sneg(1), 1])

    @classmethod
    def from_text(cls, field, text):
        return cls(field, parse_elements(text, field.q))

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if len(self.coeffs) else None

    @property
    def lead(self):
        return int(self.coeffs[-1]) if len(self.coeffs) else 0

    def is_zero(self):
        return len(self.coeffs) == 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return int(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0

    def padded(self, n):
        """Coefficient array zero-padded (never truncated) to length ``n``."""
        out = np.zeros(max(n, len(self.coeffs)), dtype=DTYPE)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def __eq__(self, other):
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.field.q, self.coeffs.tobytes()))

    def __repr__(self):
        return f"DensePoly(GF({self.field.q}), [{to_text(self)}])"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs.tolist()):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + ("*" if coef and mono else "") + mono)
        return " + ".join(terms)

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_add(self, poly_neg(other))

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, np.integer)):
            return poly_scalar(other, self)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        return poly_pow(self, k)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __call__(self, a):
        return poly_eval(self, a)


def _match(f, g):
    if f.field != g.field:
        raise FieldMismatch(f"GF({f.field.q}) vs GF({g.field.q})")
    return f.field


def parse_elements(text, q):
    """Parse comma/whitespace-separated base-10 encodings."""
    parts = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    if not parts:
        raise EmptyInput("no elements given")
    try:
        values = [int(t) for t in parts]
    except ValueError as exc:
        raise BadElement(str(exc)) from None
    bad = [v for v in values if not 0 <= v < q]
    if bad:
        raise BadElement(f"element {bad[0]} outside [0, {q})")
    return values


def to_text(f):
    return ",".join(str(c) for c in f.coeffs.tolist())


def poly_add(f, g):
    field = _match(f, g)
    n = max(len(f), len(g))
    tally("additions", min(len(f), len(g)))
    return DensePoly._raw(field, field.add(f.padded(n), g.padded(n)))


def poly_neg(f):
    return DensePoly._raw(f.field, f.field.neg(f.coeffs))


def poly_scalar(c, f):
    field = f.field
    if isinstance(c, FieldElement):
        field.check(c.field)
        c = c.value
    c = int(c)
    if not 0 <= c < field.q:
        raise BadElement(f"scalar {c} outside [0, {field.q})")
    tally("scalar_multiplications", len(f))
    return DensePoly._raw(field, field.mul(np.full(len(f), c, dtype=DTYPE), f.coeffs))


def poly_shift(f, k):
    """Return f * x**k."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    if f.is_zero():
        return f
    out = np.zeros(len(f) + k, dtype=DTYPE)
    out[k:] = f.coeffs
    return DensePoly._raw(f.field, out)


def poly_eval(f, a):
    """Evaluate f at ``a`` (FieldElement or encoding) by Horner's rule."""
    field = f.field
    if isinstance(a, FieldElement):
        field.check(a.field)
        a = a.value
    a = int(a)
    if f.is_zero():
        return FieldElement(field, 0)
    if a == 1:
        # Horner at 1 collapses to the coefficient sum
        tally("additions", len(f) - 1)
        return FieldElement(field, int(field.total(f.coeffs)))
    acc = 0
    for c in reversed(f.coeffs.tolist()):
        acc = field.sadd(field.smul(acc, a), c)
    return FieldElement(field, acc)


def poly_mul(f, g):
    field = _match(f, g)
    if f.is_zero() or g.is_zero():
        return DensePoly.zero(field)
    p, e = field.p, field.e
    if e == 1:
        return DensePoly._raw(field, np.convolve(f.coeffs, g.coeffs) % p)
    # Kronecker substitution: basis digits laid out with stride 2e-1 never collide
    stride = 2 * e - 1
    n, m = len(f), len(g)
    a = np.zeros((n, stride), dtype=DTYPE)
    b = np.zeros((m, stride), dtype=DTYPE)
    a[:, :e] = field.to_digits(f.coeffs)
    b[:, :e] = field.to_digits(g.coeffs)
    conv = np.convolve(a.ravel(), b.ravel())
    full = np.zeros((n + m) * stride, dtype=DTYPE)
    full[: conv.size] = conv
    digits = full.reshape(n + m, stride)[: n + m - 1]
    return DensePoly._raw(field, field.reduce_digit_poly(digits))


def poly_pow(f, k):
    result, base = DensePoly.one(f.field), f
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_divmod(f, g):
    """Long division: return (quotient, remainder) with f = quotient*g + remainder."""
    field = _match(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    tally("divisions")
    dg = g.degree
    if len(f) <= dg:
        return DensePoly.zero(field), f
    tables = kernel_tables(field)
    if tables is not None:
        from ._kernels import divmod_kernel

        tally("inversions")
        quot, rem = divmod_kernel(f.coeffs, g.coeffs, *tables)
        return DensePoly._raw(field, quot), DensePoly._raw(field, rem)
    inv_lead = field.inv(g.lead)
    nq = len(f) - dg
    if len(g) <= _SMALL:
        r = f.coeffs.tolist()
        gl = g.coeffs.tolist()[:-1]
        quot = [0] * nq
        sadd, smul, sneg = field.sadd, field.smul, field.sneg
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if not c:
                continue
            c = smul(c, inv_lead)
            quot[i - dg] = c
            r[i] = 0
            nc = sneg(c)
            base = i - dg
            for j, gj in enumerate(gl):
                if gj:
                    r[base + j] = sadd(r[base + j], smul(nc, gj))
        return DensePoly._raw(field, quot), DensePoly._raw(field, r[:dg])
    r = f.coeffs.copy()
    quot = np.zeros(nq, dtype=DTYPE)
    garr = g.coeffs
    for i in range(len(r) - 1, dg - 1, -1):
        c = int(r[i])
        if not c:
            continue
        c = field.smul(c, inv_lead)
        quot[i - dg] = c
        sl = slice(i - dg, i + 1)
        r[sl] = field.sub(r[sl], field.mul(np.full(len(garr), c, dtype=DTYPE), garr))
    return DensePoly._raw(field, quot), DensePoly._raw(field, r[:dg])


def monic(f):
    if f.is_zero():
        return f
    lead = f.lead
    if lead == 1:
        return f
    return poly_scalar(f.field.inv(lead), f)


def poly_gcd(f, g):
    """Monic greatest common divisor by Euclid's algorithm."""
    _match(f, g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    tables = kernel_tables(f.field)
    if tables is not None:
        from ._kernels import gcd_kernel

        out, steps = gcd_kernel(f.coeffs, g.coeffs, *tables)
        tally("divisions", steps)
        tally("inversions", steps + 2)
        return DensePoly._raw(f.field, out)
    a, b = monic(f), monic(g)
    while not b.is_zero():
        a, b = b, monic(poly_divmod(a, b)[1])
    return a


def x_pow_minus_one(field, n):
    """The polynomial x**n - 1."""
    if n == 0:
        return DensePoly.zero(field)
    c = np.zeros(n + 1, dtype=DTYPE)
    c[0] = field.sneg(1)
    c[n] = 1
    return DensePoly._raw(field, c)
