"""q-folding of periodic blocks and polynomials.

A block of length N = q*N' splits into q consecutive chunks c_0..c_{q-1} of
length N'.  Because N' is a power of the characteristic, x^N' - 1 equals
(x - 1)^N', and expanding x^(i N') = ((x^N' - 1) + 1)^i gives the unique
(x - 1)^N'-adic digits

    f = sum_k (x - 1)^(k N') * d_k,    d_k = sum_{i >= k} C(i, k) * c_i,

each of degree < N'.  The zeroth digit is the plain fold (sum of chunks);
the first nonzero digit decides the next recursion step.
"""

from dataclasses import dataclass, field as dc_field
from functools import cache, lru_cache

import numpy as np

from .counters import tally
from .errors import BadPeriod, WindowTooSmall
from .field import DTYPE, FieldSpec, binomial_mod_p
from .poly import DensePoly, poly_add, poly_mul, poly_pow, poly_shift


def log_q(length, q):
    """Return n with length == q**n, or None."""
    if length < 1:
        return None
    n = 0
    while length % q == 0:
        length //= q
        n += 1
    return n if length == 1 else None


class PeriodicSequence:
    """A sequence over GF(q) with period N = q**n, held as its first period."""

    __slots__ = ("field", "block", "n")

    def __init__(self, field, block):
        b = np.array(block, dtype=DTYPE).reshape(-1)
        n = log_q(b.size, field.q)
        if n is None:
            raise BadPeriod(f"block length {b.size} is not a power of {field.q}")
        if b.size and (b.min() < 0 or b.max() >= field.q):
            raise ValueError(f"element outside [0, {field.q})")
        self.field = field
        self.block = b
        self.n = n

    @property
    def period(self):
        return self.block.size

    @property
    def block_poly(self):
        """s_0 + s_1 x + ... + s_{N-1} x^(N-1)."""
        return DensePoly._raw(self.field, self.block)

    def is_zero(self):
        return not self.block.any()

    def __add__(self, other):
        self.field.check(other.field)
        if other.period != self.period:
            raise BadPeriod("periods differ")
        return PeriodicSequence(self.field, self.field.add(self.block, other.block))

    def __eq__(self, other):
        return (
            isinstance(other, PeriodicSequence)
            and self.field == other.field
            and np.array_equal(self.block, other.block)
        )

    def __repr__(self):
        return f"PeriodicSequence(GF({self.field.q}), {self.block.tolist()})"


@cache
def binomial_table(p, q):
    """B[i, k] = C(i, k) mod p for 0 <= i, k < q."""
    return np.array([[binomial_mod_p(i, k, p) for k in range(q)] for i in range(q)], dtype=DTYPE)


def chunk_matrix(coeffs, half_size, q):
    """Coefficient array reshaped to (q, half_size), zero-padded."""
    coeffs = np.asarray(coeffs, dtype=DTYPE)
    if coeffs.size > q * half_size:
        raise WindowTooSmall(f"length {coeffs.size} exceeds q*N' = {q * half_size}")
    if coeffs.size == q * half_size:
        return coeffs.reshape(q, half_size)
    out = np.zeros(q * half_size, dtype=DTYPE)
    out[: coeffs.size] = coeffs
    return out.reshape(q, half_size)


@cache
def _digit_plan(p, q, k):
    coef = binomial_table(p, q)[k:, k]
    used = np.flatnonzero(coef)
    return coef, used, used.size - 1, int(np.count_nonzero(coef > 1))


def digit_row(field, mat, k):
    """d_k = sum_{i >= k} C(i, k) * c_i for the chunk matrix ``mat``."""
    q, half = mat.shape
    coef, used, n_add, n_scale = _digit_plan(field.p, q, k)
    rows = mat[k:]
    tally("additions", n_add * half)
    tally("scalar_multiplications", n_scale * half)
    if field.p == 2:
        # binomials are 0/1: a digit is an XOR of selected chunks
        if q == 2:
            return rows[0] ^ rows[1] if k == 0 else rows[0]
        return np.bitwise_xor.reduce(rows[used], axis=0)
    if field.e == 1:
        return (coef @ rows) % field.p
    d = field.to_digits(rows)
    return field.from_digits(np.tensordot(coef, d, axes=(0, 0)))


def first_nonzero_digit(field, mat):
    """Compute digits in increasing order until one is nonzero.

    Returns ``(kstar, digit)``, or ``(None, None)`` when every digit vanishes.
    """
    for k in range(mat.shape[0]):
        d = digit_row(field, mat, k)
        if d.any():
            return k, d
    return None, None


def chunk(f, half_size):
    """Split ``f`` into q chunks of ``half_size`` coefficients, shifted down."""
    q = f.field.q
    mat = chunk_matrix(f.coeffs, half_size, q)
    return [DensePoly._raw(f.field, row) for row in mat]


def _chunks_matrix(chunks):
    field = chunks[0].field
    half = max(1, max(len(c) for c in chunks))
    mat = np.zeros((len(chunks), half), dtype=DTYPE)
    for i, c in enumerate(chunks):
        mat[i, : len(c)] = c.coeffs
    return field, mat


def plain_fold(chunks):
    """Sum of the chunks (the zeroth digit)."""
    field, mat = _chunks_matrix(chunks)
    tally("additions", (mat.shape[0] - 1) * mat.shape[1])
    return DensePoly._raw(field, field.total(mat, axis=0))


def digit(chunks, k):
    field, mat = _chunks_matrix(chunks)
    return DensePoly._raw(field, digit_row(field, mat, k))


def _check_half(field, half_size):
    if half_size < 1 or log_q(half_size, field.p) is None:
        raise ValueError(f"N'={half_size} is not a power of the characteristic {field.p}")


@dataclass(frozen=True)
class DigitDecomposition:
    """Digits d_0..d_{q-1} of one folding level; ``kstar`` indexes the first nonzero digit."""

    field: FieldSpec
    half_size: int
    digits: tuple
    kstar: int | None = dc_field(init=False)

    def __post_init__(self):
        if any(len(d) > self.half_size for d in self.digits):
            raise ValueError("digit degree must stay below N'")
        kstar = next((k for k, d in enumerate(self.digits) if not d.is_zero()), None)
        object.__setattr__(self, "kstar", kstar)


def decompose(f, half_size):
    """All q digits of ``f`` with respect to (x - 1)**half_size."""
    field = f.field
    _check_half(field, half_size)
    mat = chunk_matrix(f.coeffs, half_size, field.q)
    digits = tuple(DensePoly._raw(field, digit_row(field, mat, k)) for k in range(field.q))
    return DigitDecomposition(field, half_size, digits)


@lru_cache(maxsize=256)
def x_minus_one_power(field, m):
    """(x - 1)**m by repeated squaring (no Frobenius shortcut)."""
    return poly_pow(DensePoly.x_minus_one(field), m)


def reconstruct(dec):
    """Inverse of :func:`decompose`: sum_k (x - 1)**(k N') * d_k."""
    field = dec.field
    total = DensePoly.zero(field)
    for k, d in enumerate(dec.digits):
        if not d.is_zero():
            total = poly_add(total, poly_mul(x_minus_one_power(field, k * dec.half_size), d))
    return total


def folding_identity(f, half_size):
    """Right-hand side of the split used to prove the folding recursion.

    Returns sum_{i <= q-2} (1 - x^((q-1-i) N')) x^(i N') c_i + x^((q-1) N') d_0,
    which must equal ``f`` whenever deg f < q N'.
    """
    field = f.field
    q = field.q
    cs = chunk(f, half_size)
    total = poly_shift(plain_fold(cs), (q - 1) * half_size)
    for i in range(q - 1):
        lo = poly_shift(cs[i], i * half_size)
        hi = poly_shift(cs[i], (q - 1) * half_size)
        total = poly_add(total, poly_add(lo, -hi))
    return total
