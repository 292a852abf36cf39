"""Finite fields GF(p^e) in polynomial basis.

Elements are encoded as integers in ``[0, q)``: the base-``p`` digits of the
encoding are the polynomial-basis coordinates, least significant digit first.
The defining modulus is the smallest monic irreducible polynomial of degree
``e`` under the same encoding, so a given ``q`` always yields the same field.

Vectorised arithmetic works on numpy integer arrays of encodings; the
:class:`FieldElement` wrapper gives the scalar, operator-overloaded view.
"""

from dataclasses import dataclass, field as dc_field
from functools import cache

import numpy as np

from .counters import tally
from .errors import FieldMismatch, NotPrimePower, Overflow, ZeroInverse

MAX_ORDER = 1 << 16
TABLE_LIMIT = 256

DTYPE = np.int64


def _smallest_factor(n):
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def prime_power(q):
    """Return ``(p, e)`` with ``q == p**e``, or raise NotPrimePower."""
    if not isinstance(q, (int, np.integer)) or q < 2:
        raise NotPrimePower(f"{q!r} is not a prime power")
    q = int(q)
    p = _smallest_factor(q)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


# --- GF(p)[x] helpers used only to find the modulus (coefficient lists, low first)

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, m, p)


def _ppowmod(a, k, m, p):
    result, base = [1], _pmod(a, m, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        k >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(m, p):
    """Irreducibility over GF(p) of the monic polynomial ``m`` (low-first list).

    ``m`` of degree e is irreducible iff it divides x^(p^e) - x and shares no
    factor with x^(p^k) - x for 1 <= k < e.
    """
    e = len(m) - 1
    if e < 1:
        return False
    x = [0, 1]
    frob = _pmod(x, m, p)
    for k in range(1, e + 1):
        frob = _ppowmod(frob, p, m, p)
        diff = _psub(frob, x, p)
        if k < e:
            g = _pgcd(m, diff, p)
            if len(g) > 1:
                return False
        else:
            return not _pmod(diff, m, p)
    return False


def _digits(n, p, width):
    out = []
    for _ in range(width):
        n, r = divmod(n, p)
        out.append(r)
    return out


def find_modulus(p, e):
    """Smallest monic irreducible of degree ``e`` over GF(p), by integer encoding."""
    for enc in range(p**e, 2 * p**e):
        m = _digits(enc, p, e + 1)
        if m[0] == 0:
            continue  # divisible by x
        if is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def binomial_mod_p(i, k, p):
    """C(i, k) mod p by Lucas' theorem."""
    if k < 0 or k > i:
        return 0
    result = 1
    while i or k:
        i, ii = divmod(i, p)
        k, kk = divmod(k, p)
        if kk > ii:
            return 0
        num = den = 1
        for t in range(kk):
            num = num * (ii - t) % p
            den = den * (t + 1) % p
        result = result * num * pow(den, p - 2, p) % p
    return result


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(q) with q = p**e.

    ``modulus`` holds the e+1 coefficients (constant term first) of the
    defining polynomial, or None for a prime field.
    """

    p: int
    e: int
    q: int
    modulus: tuple | None
    _add: np.ndarray | None = dc_field(default=None, repr=False)
    _mul: np.ndarray | None = dc_field(default=None, repr=False)
    _neg: np.ndarray | None = dc_field(default=None, repr=False)
    _inv: list | None = dc_field(default=None, repr=False)
    _add_l: list | None = dc_field(default=None, repr=False)
    _mul_l: list | None = dc_field(default=None, repr=False)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.q == self.q

    def __hash__(self):
        return hash(("FieldSpec", self.q))

    def __repr__(self):
        return f"GF({self.q})"

    @property
    def modulus_encoding(self):
        if self.modulus is None:
            return None
        return sum(c * self.p**i for i, c in enumerate(self.modulus))

    @property
    def has_tables(self):
        return self._mul is not None

    def check(self, other):
        if other != self:
            raise FieldMismatch(f"{self!r} vs {other!r}")

    # --- digit view

    def to_digits(self, a):
        a = np.asarray(a, dtype=DTYPE)
        powers = self.p ** np.arange(self.e, dtype=DTYPE)
        return (a[..., None] // powers) % self.p

    def from_digits(self, d):
        powers = self.p ** np.arange(self.e, dtype=DTYPE)
        return (np.asarray(d, dtype=DTYPE) % self.p) @ powers

    # --- vectorised arithmetic on arrays of encodings

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.e == 1:
            return (np.asarray(a) + b) % self.p
        if self._add is not None:
            return self._add[a, b]
        return self.from_digits(self.to_digits(a) + self.to_digits(b))

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a).copy()
        if self.e == 1:
            return (-np.asarray(a)) % self.p
        if self._neg is not None:
            return self._neg[a]
        return self.from_digits(-self.to_digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (np.asarray(a, dtype=DTYPE) * b) % self.p
        if self._mul is not None:
            return self._mul[a, b]
        return self._mul_digits(a, b)

    def scale(self, a, m):
        """Multiply encodings ``a`` by the prime-subfield integer ``m``."""
        m %= self.p
        if m == 1:
            return np.asarray(a).copy()
        if m == 0:
            return np.zeros_like(np.asarray(a))
        if self.e == 1:
            return (np.asarray(a, dtype=DTYPE) * m) % self.p
        if self._mul is not None:
            return self._mul[m, a]
        return self.from_digits(self.to_digits(a) * m)

    def total(self, a, axis=None):
        """Field sum of ``a`` (along ``axis``)."""
        a = np.asarray(a, dtype=DTYPE)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if a.size else np.zeros((), DTYPE)
        if self.e == 1:
            return a.sum(axis=axis) % self.p
        d = self.to_digits(a)
        if axis is None:
            return self.from_digits(d.reshape(-1, self.e).sum(axis=0))
        return self.from_digits(d.sum(axis=axis))

    def _mul_digits(self, a, b):
        p, e = self.p, self.e
        da, db = self.to_digits(a), self.to_digits(b)
        da, db = np.broadcast_arrays(da, db)
        prod = np.zeros(da.shape[:-1] + (2 * e - 1,), dtype=DTYPE)
        for u in range(e):
            for v in range(e):
                prod[..., u + v] += da[..., u] * db[..., v]
        prod %= p
        m = np.asarray(self.modulus[:e], dtype=DTYPE)
        for j in range(2 * e - 2, e - 1, -1):
            c = prod[..., j]
            prod[..., j - e:j] -= c[..., None] * m
            prod[..., j - e:j] %= p
        return self.from_digits(prod[..., :e])

    def reduce_digit_poly(self, prod):
        """Reduce trailing-axis basis polynomials of any length mod the modulus."""
        p, e = self.p, self.e
        prod = np.array(prod, dtype=DTYPE) % p
        if e == 1:
            return prod.sum(axis=-1) % p
        m = np.asarray(self.modulus[:e], dtype=DTYPE)
        for j in range(prod.shape[-1] - 1, e - 1, -1):
            c = prod[..., j]
            prod[..., j - e:j] -= c[..., None] * m
            prod[..., j - e:j] %= p
        return self.from_digits(prod[..., :e])

    # --- scalar arithmetic on python ints

    def sadd(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        if self._add_l is not None:
            return self._add_l[a][b]
        p, out, w = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += (x + y) % p * w
            w *= p
        return out

    def sneg(self, a):
        if self.e == 1:
            return -a % self.p
        if self._neg is not None:
            return int(self._neg[a])
        p, out, w = self.p, 0, 1
        while a:
            a, x = divmod(a, p)
            out += -x % p * w
            w *= p
        return out

    def smul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        if self._mul_l is not None:
            return self._mul_l[a][b]
        return self._smul_digits(a, b)

    def _smul_digits(self, a, b):
        p, e = self.p, self.e
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for u, x in enumerate(da):
            if x:
                for v, y in enumerate(db):
                    prod[u + v] += x * y
        m = self.modulus
        for j in range(2 * e - 2, e - 1, -1):
            c = prod[j] % p
            if c:
                for i in range(e):
                    prod[j - e + i] -= c * m[i]
        return sum((prod[i] % p) * p**i for i in range(e))

    def spow(self, a, k):
        result = 1
        while k:
            if k & 1:
                result = self.smul(result, a)
            a = self.smul(a, a)
            k >>= 1
        return result

    def inv(self, a):
        """Multiplicative inverse of the encoding ``a``."""
        a = int(a)
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        tally("inversions")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv is not None:
            return self._inv[a]
        return self.spow(a, self.q - 2)

    def element(self, value):
        return FieldElement(self, value)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.q)]


def _build_tables(f):
    q = f.q
    grid_a, grid_b = np.meshgrid(np.arange(q, dtype=DTYPE), np.arange(q, dtype=DTYPE), indexing="ij")
    add = f.from_digits(f.to_digits(grid_a) + f.to_digits(grid_b))
    mul = f._mul_digits(grid_a, grid_b)
    neg = f.from_digits(-f.to_digits(np.arange(q, dtype=DTYPE)))
    inv = [0] * q
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])
    object.__setattr__(f, "_add", add)
    object.__setattr__(f, "_mul", mul)
    object.__setattr__(f, "_neg", neg)
    object.__setattr__(f, "_inv", inv)
    object.__setattr__(f, "_add_l", add.tolist())
    object.__setattr__(f, "_mul_l", mul.tolist())


@cache
def kernel_tables(field):
    """(add, mul, neg, inv) lookup arrays for the compiled kernels, or None above TABLE_LIMIT."""
    q = field.q
    if q > TABLE_LIMIT:
        return None
    a, b = np.meshgrid(np.arange(q, dtype=DTYPE), np.arange(q, dtype=DTYPE), indexing="ij")
    add = np.ascontiguousarray(field.add(a, b), dtype=DTYPE)
    mul = np.ascontiguousarray(field.mul(a, b), dtype=DTYPE)
    neg = np.ascontiguousarray(field.neg(np.arange(q, dtype=DTYPE)), dtype=DTYPE)
    inv = np.zeros(q, dtype=DTYPE)
    for x in range(1, q):
        inv[x] = int(np.flatnonzero(mul[x] == 1)[0])
    return add, mul, neg, inv


@cache
def field_make(q):
    """Build GF(q) with its canonical modulus.

    >>> field_make(9).modulus_encoding
    10
    """
    p, e = prime_power(q)
    if q > MAX_ORDER:
        raise Overflow(f"q={q} exceeds the supported bound {MAX_ORDER}")
    modulus = find_modulus(p, e) if e > 1 else None
    f = FieldSpec(p=p, e=e, q=q, modulus=modulus)
    if e > 1 and q <= TABLE_LIMIT:
        _build_tables(f)
    return f


@dataclass(frozen=True)
class FieldElement:
    """A single element of GF(q), stored by its integer encoding."""

    field: FieldSpec
    value: int

    def __post_init__(self):
        v = int(self.value)
        if not 0 <= v < self.field.q:
            raise ValueError(f"encoding {v} out of range for {self.field!r}")
        object.__setattr__(self, "value", v)

    @property
    def coeffs(self):
        return tuple(_digits(self.value, self.field.p, self.field.e))

    @classmethod
    def from_coeffs(cls, field, coeffs):
        return cls(field, sum(c * field.p**i for i, c in enumerate(coeffs)))

    def _other(self, other):
        if isinstance(other, FieldElement):
            self.field.check(other.field)
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, other).value
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sadd(self.value, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.sneg(self.value))

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sadd(self.value, self.field.sneg(b)))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.smul(self.value, b))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        return FieldElement(self.field, self.field.spow(self.value, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.field, b).inverse()

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@GF({self.field.q})"


def elem_add(a, b):
    a.field.check(b.field)
    return a + b


def elem_neg(a):
    return -a


def elem_mul(a, b):
    a.field.check(b.field)
    return a * b


def elem_inv(a):
    return a.inverse()
