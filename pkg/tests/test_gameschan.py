import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcq import (
    BadPeriod,
    DensePoly,
    PeriodicSequence,
    ZeroPolynomial,
    count_ops,
    field_make,
    min_period,
    min_period_binary,
    mp_oracle,
    multiplicity,
    multiplicity_binary,
    multiplicity_oracle,
    pack_bits,
    paper_literal_min_period,
    poly_mul,
)
from gcq.gameschan import unpack_bits


def seq(q, block):
    return PeriodicSequence(field_make(q), block)


def mp(q, block, **kw):
    return min_period(seq(q, block), **kw)[0]


@pytest.mark.parametrize("shortcut", [True, False])
def test_min_period_examples(shortcut):
    assert mp(3, [0, 0, 0], shortcut=shortcut) == 0
    assert mp(2, [1, 0, 1, 1], shortcut=shortcut) == 4
    assert mp(2, [1, 1, 0, 0, 1, 1, 0, 0], shortcut=shortcut) == 3
    assert mp(3, [1, 2, 0], shortcut=shortcut) == 2
    assert mp(3, [1, 1, 1], shortcut=shortcut) == 1


@pytest.mark.parametrize("shortcut", [True, False])
def test_multiplicity_examples(shortcut):
    assert multiplicity(DensePoly(field_make(2), [1, 1, 1, 1]), shortcut=shortcut)[0] == 3
    assert multiplicity(DensePoly(field_make(3), [1, 1, 1]), shortcut=shortcut)[0] == 2
    assert multiplicity(DensePoly(field_make(3), [1, 1]), shortcut=shortcut)[0] == 0
    with pytest.raises(ZeroPolynomial):
        multiplicity(DensePoly(field_make(3), []))


def test_binary_examples():
    assert min_period_binary(pack_bits([1, 0, 1, 1]), 4) == 4
    assert min_period_binary(pack_bits([1, 1, 0, 0, 1, 1, 0, 0]), 8) == 3
    assert multiplicity_binary(pack_bits([1, 1, 1, 1])) == 3
    with pytest.raises(BadPeriod):
        min_period_binary(pack_bits([1, 0, 1]), 3)
    with pytest.raises(ZeroPolynomial):
        multiplicity_binary(pack_bits([0, 0, 0, 0]))


def test_bad_period():
    with pytest.raises(BadPeriod):
        seq(3, [1, 2, 0, 1])


def test_literal_examples():
    assert paper_literal_min_period(seq(3, [1, 2, 0])) == 1
    assert mp_oracle(seq(3, [1, 2, 0])) == 2
    assert paper_literal_min_period(seq(3, [1, 1, 1])) == 1
    assert mp_oracle(seq(3, [1, 1, 1])) == 1


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 1)])
@pytest.mark.parametrize("shortcut", [True, False])
def test_exhaustive_oracle_equivalence(q, n, shortcut):
    f = field_make(q)
    for block in itertools.product(range(q), repeat=q**n):
        s = PeriodicSequence(f, block)
        assert min_period(s, shortcut=shortcut)[0] == mp_oracle(s), block


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_random_oracle_equivalence(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(200):
        n = int(rng.integers(0, 4 if q <= 5 else 3))
        block = rng.integers(0, q, size=q**n)
        # force deeper recursion on half the samples
        if rng.integers(0, 2):
            block[-1] = f.sub(0, f.total(block[:-1]))
        s = PeriodicSequence(f, block)
        assert min_period(s)[0] == mp_oracle(s)
        assert min_period(s, shortcut=False)[0] == mp_oracle(s)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_shortcut_soundness(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(300):
        s = PeriodicSequence(f, rng.integers(0, q, size=q ** int(rng.integers(0, 4))))
        if s.is_zero():
            continue
        full = min_period(s, shortcut=False)[0] == s.period
        assert full == (f.total(s.block) != 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_conversion_between_mp_and_multiplicity(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(300):
        N = q ** int(rng.integers(1, 4))
        coeffs = rng.integers(0, q, size=int(rng.integers(1, N + 1)))
        g = DensePoly(f, coeffs)
        if g.is_zero():
            continue
        s = PeriodicSequence(f, g.padded(N))
        assert multiplicity(g)[0] == N - min_period(s)[0]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_multiplicativity(q):
    f = field_make(q)
    xm1 = DensePoly.x_minus_one(f)
    rng = np.random.default_rng(q)
    for _ in range(200):
        a = DensePoly(f, rng.integers(0, q, size=int(rng.integers(1, 30))))
        b = DensePoly(f, rng.integers(0, q, size=int(rng.integers(1, 30))))
        if a.is_zero() or b.is_zero():
            continue
        pa, pb = multiplicity(a)[0], multiplicity(b)[0]
        assert pa == multiplicity_oracle(a)
        assert multiplicity(poly_mul(a, xm1))[0] == pa + 1
        assert multiplicity(poly_mul(a, b))[0] == pa + pb


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_scalar_and_rotation_invariance(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(200):
        block = rng.integers(0, q, size=q ** int(rng.integers(0, 4)))
        if rng.integers(0, 2):
            block[-1] = f.sub(0, f.total(block[:-1]))
        base = mp(q, block)
        c = int(rng.integers(1, q))
        assert mp(q, f.mul(np.full(block.size, c), block)) == base
        assert mp(q, np.roll(block, int(rng.integers(0, block.size)))) == base


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_lcm_max_rule(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(200):
        N = q ** int(rng.integers(1, 4))
        a, b = rng.integers(0, q, size=(2, N))
        for blk in (a, b):
            if rng.integers(0, 2):
                blk[-1] = f.sub(0, f.total(blk[:-1]))
        ma, mb = mp(q, a), mp(q, b)
        mab = mp(q, f.add(a, b))
        if ma != mb:
            assert mab == max(ma, mb)
        else:
            assert mab <= ma


def _zero_sum(f, rng, N):
    block = rng.integers(0, f.q, size=N)
    block[-1] = f.sub(0, f.total(block[:-1]))
    return block


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_structure_and_counters(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 5 if q < 9 else 4))
        s = PeriodicSequence(f, _zero_sum(f, rng, q**n))
        for shortcut in (True, False):
            with count_ops() as ops:
                result, trace = min_period(s, shortcut=shortcut)
            assert ops.divisions == 0 and ops.inversions == 0
            assert len(trace.levels) <= n
            assert trace.result == result
            worst = max(worst, ops.total / (q * s.period))
        g = DensePoly(f, s.block)
        if not g.is_zero():
            with count_ops() as ops:
                pi, trace = multiplicity(g)
            assert ops.divisions == 0 and ops.inversions == 0
            assert trace.result == pi
    # measured worst case is about 1.3
    assert worst <= 3.0


def test_oracle_does_count_divisions():
    s = seq(3, [1, 2, 0])
    with count_ops() as ops:
        mp_oracle(s)
    assert ops.divisions > 0 and ops.inversions > 0


@pytest.mark.parametrize("q", [2, 3, 5])
def test_full_depth_without_early_exit(q):
    # s(x) = 1 folds to itself all the way down to N == 1
    f = field_make(q)
    for n in range(1, 5):
        N = q**n
        s = PeriodicSequence(f, [1] + [0] * (N - 1))
        _, trace = min_period(s, shortcut=False)
        assert len(trace.levels) == n


def test_pack_round_trip():
    rng = np.random.default_rng(0)
    for length in (1, 5, 64, 65, 1000):
        bits = rng.integers(0, 2, size=length)
        assert np.array_equal(unpack_bits(pack_bits(bits), length), bits)


@pytest.mark.parametrize("shortcut", [True, False])
def test_binary_matches_generic(shortcut):
    f = field_make(2)
    rng = np.random.default_rng(5)
    for _ in range(400):
        n = int(rng.integers(0, 13))
        N = 1 << n
        bits = rng.integers(0, 2, size=N)
        mode = rng.integers(0, 3)
        if mode == 1:
            bits[-1] = bits[:-1].sum() % 2
        elif mode == 2 and N > 1:
            # repeated halves push the recursion down the kstar = 1 branch
            h = int(rng.integers(1, n + 1))
            part = rng.integers(0, 2, size=N >> h)
            bits = np.tile(part, 1 << h)
        words = pack_bits(bits)
        assert min_period_binary(words, N, shortcut) == min_period(PeriodicSequence(f, bits))[0]
        g = DensePoly(f, bits)
        if not g.is_zero():
            assert multiplicity_binary(words, shortcut=shortcut) == multiplicity(g)[0]


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=300))
def test_binary_multiplicity_property(bits):
    g = DensePoly(field_make(2), bits)
    if g.is_zero():
        return
    assert multiplicity_binary(pack_bits(bits)) == multiplicity_oracle(g)
    assert multiplicity_binary(pack_bits(bits), length=len(bits)) == multiplicity(g)[0]


def test_literal_agrees_for_binary():
    f = field_make(2)
    rng = np.random.default_rng(9)
    for _ in range(10_000):
        N = 1 << int(rng.integers(0, 9))
        s = PeriodicSequence(f, rng.integers(0, 2, size=N))
        assert paper_literal_min_period(s) == min_period(s)[0]


def test_literal_agrees_when_fold_nonzero():
    # if the plain fold is nonzero at every level the uncorrected variant is exact
    f = field_make(3)
    for block in itertools.product(range(3), repeat=9):
        s = PeriodicSequence(f, block)
        _, trace = min_period(s, shortcut=True)
        if all(lv.kstar == 0 for lv in trace.levels):
            assert paper_literal_min_period(s) == mp_oracle(s)
