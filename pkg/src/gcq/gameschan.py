"""Division-free logarithmic recursions for the minimal period and for the
multiplicity of (x - 1).

Every level folds the current block into its (x - 1)^N'-adic digits and
continues with the first nonzero one, so there is a single subproblem per
level and at most log_q N levels.  Only field additions and multiplications
by prime-subfield constants are used.

For q = 2 the digits are (c_0 + c_1, c_1), which gives the classical
halving rule; :func:`min_period_binary` and :func:`multiplicity_binary` run
that rule on bit-packed ``uint64`` words.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .counters import OpCounters, count_ops, tally
from .errors import BadPeriod, ZeroPolynomial
from .field import DTYPE
from .fold import PeriodicSequence, chunk_matrix, first_nonzero_digit, log_q
from .poly import DensePoly

__all__ = [
    "LevelRecord",
    "RecursionTrace",
    "OpCounters",
    "count_ops",
    "min_period",
    "multiplicity",
    "min_period_binary",
    "multiplicity_binary",
    "paper_literal_min_period",
    "pack_bits",
    "unpack_bits",
]


@dataclass(frozen=True)
class LevelRecord:
    level: int
    N: int
    kstar: int
    contribution: int


@dataclass
class RecursionTrace:
    """Per-level record of one recursion run.

    ``result == base + sum(level.contribution for level in levels)``.
    """

    kind: str
    q: int
    n: int
    levels: list = dc_field(default_factory=list)
    base: int = 0

    @property
    def result(self):
        return self.base + sum(lv.contribution for lv in self.levels)

    def to_dict(self, algorithm="corrected"):
        return {
            "q": self.q,
            "n": self.n,
            "algorithm": algorithm,
            "levels": [{"N": lv.N, "kstar": lv.kstar, "contribution": lv.contribution} for lv in self.levels],
            "base": self.base,
            "result": self.result,
        }


def _as_sequence(s):
    if not isinstance(s, PeriodicSequence):
        raise TypeError("expected a PeriodicSequence")
    return s


def min_period(s, shortcut=True):
    """Degree of the minimal polynomial of the q^n-periodic sequence ``s``.

    Returns ``(mp, trace)``.  With ``shortcut`` a block whose coefficient sum
    is nonzero returns N immediately; the result is the same either way.
    """
    s = _as_sequence(s)
    field = s.field
    q = field.q
    trace = RecursionTrace("min_period", q, s.n)
    block, N = s.block, s.period
    while True:
        if not block.any():
            trace.base = 0
            break
        if N == 1:
            trace.base = 1
            break
        if shortcut:
            tally("additions", N - 1)
            if field.total(block) != 0:
                trace.base = N
                break
        half = N // q
        kstar, d = first_nonzero_digit(field, block.reshape(q, half))
        trace.levels.append(LevelRecord(len(trace.levels), N, kstar, (q - 1 - kstar) * half))
        block, N = d, half
    return trace.result, trace


def multiplicity(f, shortcut=True):
    """Multiplicity of (x - 1) as a factor of the nonzero polynomial ``f``.

    Returns ``(pi, trace)``.
    """
    if not isinstance(f, DensePoly):
        raise TypeError("expected a DensePoly")
    if f.is_zero():
        raise ZeroPolynomial("the multiplicity of x - 1 in 0 is undefined")
    field = f.field
    q = field.q
    coeffs = f.coeffs
    top_n = _levels_above(f.degree, q)
    trace = RecursionTrace("multiplicity", q, top_n)
    while True:
        deg = len(coeffs) - 1
        if deg == 0:
            trace.base = 0
            break
        if shortcut:
            tally("additions", deg)
            if field.total(coeffs) != 0:
                trace.base = 0
                break
        N = q ** _levels_above(deg, q)
        half = N // q
        kstar, d = first_nonzero_digit(field, chunk_matrix(coeffs, half, q))
        trace.levels.append(LevelRecord(len(trace.levels), N, kstar, kstar * half))
        nz = np.flatnonzero(d)
        coeffs = d[: nz[-1] + 1]
    return trace.result, trace


def _levels_above(deg, q):
    """Smallest n with q**n > deg."""
    n, N = 0, 1
    while N <= deg:
        N *= q
        n += 1
    return n


# --- uncorrected variant


def paper_literal_min_period(s):
    """The uncorrected folding recursion, kept for comparison.

    When the plain fold vanishes this returns the maximum over the chunks
    c_0..c_{q-2}, each recursing with period N'.  It is correct for q = 2 and
    whenever the plain fold is nonzero at every level, and can be wrong for
    q > 2 (e.g. block (1, 2, 0) over GF(3) gives 1; the true value is 2).
    """
    s = _as_sequence(s)
    return _literal(s.field, s.block)


def _literal(field, block):
    N = block.size
    if not block.any():
        return 0
    if field.total(block) != 0:
        return N
    q = field.q
    half = N // q
    mat = block.reshape(q, half)
    fold = field.total(mat, axis=0)
    if not fold.any():
        return max(_literal(field, mat[i]) for i in range(q - 1))
    return _literal(field, fold) + (q - 1) * half


# --- bit-packed binary fast paths


def pack_bits(bits):
    """Pack a 0/1 sequence into little-endian ``uint64`` words (bit i of word j is s_{64j+i})."""
    b = np.asarray(bits, dtype=np.uint8).reshape(-1)
    nwords = max(1, -(-b.size // 64))
    padded = np.zeros(nwords * 64, dtype=np.uint8)
    padded[: b.size] = b
    return np.packbits(padded, bitorder="little").view("<u8").astype(np.uint64)


def unpack_bits(words, length):
    w = np.asarray(words, dtype=np.uint64)
    return np.unpackbits(w.astype("<u8").view(np.uint8), bitorder="little")[:length]


def _parity(x):
    return int(x).bit_count() & 1


def _mp_word(x, N, shortcut):
    # N <= 64 bits held in a python int
    acc = 0
    while True:
        if not x:
            return acc
        if N == 1:
            return acc + 1
        if shortcut and _parity(x):
            return acc + N
        h = N >> 1
        mask = (1 << h) - 1
        lo, hi = x & mask, x >> h
        d0 = lo ^ hi
        if d0:
            x = d0
            acc += h
        else:
            x = hi
        N = h


def min_period_binary(words, length, shortcut=True):
    """Minimal period of a binary block of ``length`` = 2^n bits packed by :func:`pack_bits`.

    Works in place on one scratch copy of the words; each level costs one XOR
    pass and one zero test over half of the active words.
    """
    if log_q(length, 2) is None:
        raise BadPeriod(f"block length {length} is not a power of 2")
    words = np.asarray(words, dtype=np.uint64)
    nwords = -(-length // 64)
    if words.size < nwords:
        raise BadPeriod(f"{words.size} words cannot hold {length} bits")
    if length <= 64:
        x = int(words[0]) & ((1 << length) - 1) if length < 64 else int(words[0])
        return _mp_word(x, length, shortcut)
    buf = words[:nwords].copy()
    cur = buf
    N, acc = length, 0
    if shortcut and _parity(np.bitwise_xor.reduce(cur)):
        return N
    while N > 64:
        hw = cur.size >> 1
        lo, hi = cur[:hw], cur[hw:]
        np.bitwise_xor(lo, hi, out=lo)
        N >>= 1
        if lo.any():
            # the plain fold keeps the (even) parity, so no shortcut check here
            cur = lo
            acc += N
        elif hi.any():
            cur = hi
            if shortcut and _parity(np.bitwise_xor.reduce(cur)):
                return acc + N
        else:
            return acc
    return acc + _mp_word(int(cur[0]), 64, shortcut)


def _top_bit(buf, upto):
    nz = np.flatnonzero(buf[:upto])
    if nz.size == 0:
        return None
    j = int(nz[-1])
    return 64 * j + int(buf[j]).bit_length() - 1


def _mult_word(x):
    acc = 0
    while True:
        deg = x.bit_length() - 1
        if deg == 0:
            return acc
        h = 1 << (deg.bit_length() - 1)  # N' with N = 2h the least power > deg
        lo, hi = x & ((1 << h) - 1), x >> h
        d0 = lo ^ hi
        if d0:
            x = d0
        else:
            x = hi
            acc += h


def multiplicity_binary(words, length=None, shortcut=True):
    """Multiplicity of x + 1 in the GF(2) polynomial whose coefficient bits are ``words``."""
    words = np.asarray(words, dtype=np.uint64)
    if length is not None:
        words = words[: -(-length // 64)].copy()
        if length % 64:
            words[-1] &= np.uint64((1 << (length % 64)) - 1)
    deg = _top_bit(words, words.size)
    if deg is None:
        raise ZeroPolynomial("the multiplicity of x + 1 in 0 is undefined")
    if shortcut and _parity(np.bitwise_xor.reduce(words)):
        return 0
    N = 1 << deg.bit_length()
    if N <= 64:
        return _mult_word(int(words[0]))
    buf = np.zeros(N // 64, dtype=np.uint64)
    buf[: min(words.size, buf.size)] = words[: buf.size]
    cur, acc = buf, 0
    while N > 64:
        hw = N // 128
        lo, hi = cur[:hw], cur[hw : 2 * hw]
        np.bitwise_xor(lo, hi, out=lo)
        if lo.any():
            cur = lo
        else:
            cur = hi
            acc += N >> 1
            if shortcut and _parity(np.bitwise_xor.reduce(cur)):
                return acc
        deg = _top_bit(cur, hw)
        if deg == 0:
            return acc
        N = 1 << deg.bit_length()
    return acc + _mult_word(int(cur[0]))
