import numpy as np
import pytest

from gcq import (
    BadPeriod,
    BoundTooSmall,
    BudgetExceeded,
    DensePoly,
    PeriodicSequence,
    ZeroPolynomial,
    ZeroSequence,
    discrepancy_search,
    field_make,
    minimal_polynomial,
    mp_oracle,
    multiplicity,
    multiplicity_oracle,
    planted_instance,
    poly_gcd,
)
from gcq.fold import x_minus_one_power


def seq(q, block):
    return PeriodicSequence(field_make(q), block)


def P(q, coeffs):
    return DensePoly(field_make(q), coeffs)


def test_mp_oracle_examples():
    assert mp_oracle(seq(2, [0, 0, 0, 0])) == 0
    assert mp_oracle(seq(3, [1, 2, 0])) == 2
    assert mp_oracle(seq(2, [1, 0, 1, 1])) == 4
    with pytest.raises(BadPeriod):
        mp_oracle([1, 2, 0])


def test_minimal_polynomial_examples():
    assert minimal_polynomial(seq(3, [1, 1, 1])) == P(3, [2, 1])
    assert minimal_polynomial(seq(2, [1, 0, 1, 1])) == P(2, [1, 0, 0, 0, 1])
    assert minimal_polynomial(seq(2, [1, 1, 1, 1])) == P(2, [1, 1])
    with pytest.raises(ZeroSequence):
        minimal_polynomial(seq(3, [0, 0, 0]))


def test_multiplicity_oracle_examples():
    assert multiplicity_oracle(P(2, [1, 1, 1, 1])) == 3
    assert multiplicity_oracle(P(3, [1, 1, 1])) == 2
    assert multiplicity_oracle(P(5, [4])) == 0
    with pytest.raises(ZeroPolynomial):
        multiplicity_oracle(P(5, []))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_minimal_polynomial_is_power_of_x_minus_one(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(100):
        s = PeriodicSequence(f, rng.integers(0, q, size=q ** int(rng.integers(0, 3))))
        m = mp_oracle(s)
        assert m <= s.period
        if s.is_zero():
            continue
        assert minimal_polynomial(s) == x_minus_one_power(f, m)
        assert (m == s.period) == (f.total(s.block) != 0)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_multiplicity_oracle_matches_gcd(q):
    f = field_make(q)
    rng = np.random.default_rng(q)
    for _ in range(100):
        g = DensePoly(f, rng.integers(0, q, size=int(rng.integers(1, 25))))
        if g.is_zero():
            continue
        K = g.degree + 1 + int(rng.integers(0, 5))
        assert multiplicity_oracle(g) == poly_gcd(g, x_minus_one_power(f, K)).degree


def test_planted_examples():
    f3 = field_make(3)
    g = planted_instance(f3, 0, 10, seed=1)
    assert f3.total(g.coeffs) != 0 and multiplicity_oracle(g) == 0
    with pytest.raises(BoundTooSmall):
        planted_instance(f3, 5, 4, seed=0)


def test_planted_with_unit_cofactor():
    # a zero degree budget leaves a nonzero constant cofactor; g = 1 gives (x-1)^2
    f3 = field_make(3)
    hs = [planted_instance(f3, 2, 2, seed) for seed in range(20)]
    for h in hs:
        assert h == x_minus_one_power(f3, 2) * h.lead
    assert P(3, [1, 1, 1]) in hs


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_planted_round_trip(q):
    f = field_make(q)
    for seed in range(1000 if q <= 3 else 300):
        m = seed % 40
        g = planted_instance(f, m, m + 30, seed)
        assert multiplicity(g)[0] == m
        if seed < 100:
            assert multiplicity_oracle(g) == m


def test_discrepancy_examples():
    r = discrepancy_search(3, 1, "exhaustive", "corrected")
    assert r.count == 27 and r.passed
    r = discrepancy_search(3, 1, "exhaustive", "paper-literal")
    assert not r.passed
    hit = [m for m in r.mismatches if m.block == [1, 2, 0]]
    assert hit and hit[0].got == 1 and hit[0].expected == 2
    r = discrepancy_search(2, 3, "exhaustive", "paper-literal")
    assert r.count == 256 and r.passed


def test_discrepancy_budget_and_determinism():
    with pytest.raises(BudgetExceeded):
        discrepancy_search(3, 2, "exhaustive", budget=1000)
    a = discrepancy_search(5, 2, "random", seed=7, count=50)
    b = discrepancy_search(5, 2, "random", seed=7, count=50)
    assert a.to_dict() == b.to_dict() and a.seed == 7 and a.count == 50
    assert "elapsed" in a.to_dict(timing=True)
    with pytest.raises(ValueError):
        discrepancy_search(3, 1, "exhaustive", "bogus")
    with pytest.raises(ValueError):
        discrepancy_search(3, 1, "sideways")


def test_literal_mismatches_at_depth_two():
    r = discrepancy_search(3, 2, "exhaustive", "paper-literal")
    assert r.count == 19683 and len(r.mismatches) > 0
    assert all(m.got != m.expected for m in r.mismatches)
