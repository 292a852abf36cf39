"""Slow, independent ground truth for the folding recursions.

The minimal period comes from a Euclidean gcd with x^N - 1 and the
multiplicity from repeated exact division by x - 1; neither touches the
folding code.  :func:`discrepancy_search` sweeps whole block spaces (or
seeded samples of them) and reports every disagreement.
"""

import itertools
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BadPeriod, BoundTooSmall, BudgetExceeded, ZeroPolynomial, ZeroSequence
from .field import DTYPE, field_make
from .fold import PeriodicSequence
from .gameschan import min_period, paper_literal_min_period
from .poly import DensePoly, poly_divmod, poly_gcd, poly_mul, poly_pow, x_pow_minus_one

DEFAULT_SEED = 42
ORACLE_CAP = 1 << 14

ALGORITHMS = ("corrected", "paper-literal")


def make_rng(seed):
    """Counter-based generator (Philox) so sweeps replay exactly from the seed."""
    return np.random.Generator(np.random.Philox(seed))


def _check_period(s):
    if not isinstance(s, PeriodicSequence):
        raise BadPeriod("expected a PeriodicSequence")
    return s


def mp_oracle(s):
    """N - deg gcd(s(x), x^N - 1), and 0 for the zero sequence."""
    s = _check_period(s)
    if s.is_zero():
        return 0
    g = poly_gcd(s.block_poly, x_pow_minus_one(s.field, s.period))
    return s.period - g.degree


def minimal_polynomial(s):
    """Monic (x^N - 1) / gcd(s(x), x^N - 1)."""
    s = _check_period(s)
    if s.is_zero():
        raise ZeroSequence("minimal polynomial of the zero sequence is taken as 1 only by convention")
    xn = x_pow_minus_one(s.field, s.period)
    quot, rem = poly_divmod(xn, poly_gcd(s.block_poly, xn))
    assert rem.is_zero()
    return quot


def multiplicity_oracle(f):
    """Number of exact divisions of ``f`` by x - 1."""
    if f.is_zero():
        raise ZeroPolynomial("the multiplicity of x - 1 in 0 is undefined")
    xm1 = DensePoly.x_minus_one(f.field)
    count = 0
    while f.degree >= 1:
        quot, rem = poly_divmod(f, xm1)
        if not rem.is_zero():
            break
        f, count = quot, count + 1
    return count


def random_block(field, N, rng):
    return rng.integers(0, field.q, size=N, dtype=DTYPE)


def planted_instance(field, m, degree_bound, seed):
    """g * (x - 1)**m with a seeded random cofactor g satisfying g(1) != 0.

    The result has degree at most ``degree_bound``; its multiplicity is m by
    construction.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    budget = degree_bound - m
    if budget < 0:
        raise BoundTooSmall(f"degree bound {degree_bound} cannot hold (x-1)^{m}")
    rng = make_rng(seed)
    while True:
        dg = int(rng.integers(0, budget + 1))
        coeffs = random_block(field, dg + 1, rng)
        coeffs[dg] = rng.integers(1, field.q)
        g = DensePoly._raw(field, coeffs)
        if field.total(g.coeffs) != 0:
            break
    return poly_mul(g, poly_pow(DensePoly.x_minus_one(field), m))


@dataclass
class Mismatch:
    block: list
    expected: int
    got: int

    def to_dict(self):
        return {"block": self.block, "expected": self.expected, "got": self.got}


@dataclass
class VerificationReport:
    q: int
    n: int
    mode: str
    algorithm: str
    seed: int | None
    count: int
    mismatches: list = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self):
        return not self.mismatches

    @property
    def period(self):
        return self.q**self.n

    def to_dict(self, timing=False):
        out = {
            "q": self.q,
            "n": self.n,
            "N": self.period,
            "mode": self.mode,
            "algorithm": self.algorithm,
            "seed": self.seed,
            "count": self.count,
            "passed": self.passed,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _algorithm(name, shortcut):
    if name == "corrected":
        return lambda s: min_period(s, shortcut=shortcut)[0]
    if name == "paper-literal":
        return paper_literal_min_period
    raise ValueError(f"unknown algorithm {name!r}; choose from {ALGORITHMS}")


def iter_blocks(q, N, mode, count=1000, seed=DEFAULT_SEED, budget=10**6):
    """Blocks in lexicographic encoding order (exhaustive) or drawn from the seeded generator."""
    if mode == "exhaustive":
        if q**N > budget:
            raise BudgetExceeded(f"{q}^{N} blocks exceed the budget of {budget}")
        for t in itertools.product(range(q), repeat=N):
            yield np.array(t, dtype=DTYPE)
    elif mode == "random":
        rng = make_rng(seed)
        for _ in range(count):
            yield rng.integers(0, q, size=N, dtype=DTYPE)
    else:
        raise ValueError(f"unknown mode {mode!r}")


def discrepancy_search(q, n, mode="exhaustive", algorithm="corrected", budget=10**6,
                       seed=DEFAULT_SEED, count=1000, shortcut=True):
    """Compare ``algorithm`` with :func:`mp_oracle` on blocks of length q**n."""
    field = field_make(q)
    N = q**n
    if N > ORACLE_CAP:
        raise BudgetExceeded(f"N={N} exceeds the oracle cap {ORACLE_CAP}")
    algo = _algorithm(algorithm, shortcut)
    report = VerificationReport(q, n, mode, algorithm, seed if mode == "random" else None, 0)
    start = time.perf_counter()
    for block in iter_blocks(q, N, mode, count, seed, budget):
        s = PeriodicSequence(field, block)
        expected, got = mp_oracle(s), algo(s)
        report.count += 1
        if expected != got:
            report.mismatches.append(Mismatch(block.tolist(), expected, got))
    report.elapsed = time.perf_counter() - start
    return report
