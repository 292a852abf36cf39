"""Logarithmic, division-free minimal periods of q^n-periodic sequences
over GF(q) and multiplicities of x - 1 in GF(q)[x]."""

from .counters import OpCounters, count_ops
from .errors import *  # noqa: F401,F403
from .field import (
    FieldElement,
    FieldSpec,
    binomial_mod_p,
    elem_add,
    elem_inv,
    elem_mul,
    elem_neg,
    field_make,
)
from .fold import (
    DigitDecomposition,
    PeriodicSequence,
    chunk,
    decompose,
    digit,
    folding_identity,
    plain_fold,
    reconstruct,
)
from .gameschan import (
    RecursionTrace,
    min_period,
    min_period_binary,
    multiplicity,
    multiplicity_binary,
    pack_bits,
    paper_literal_min_period,
)
from .oracle import (
    VerificationReport,
    discrepancy_search,
    minimal_polynomial,
    mp_oracle,
    multiplicity_oracle,
    planted_instance,
)
from .poly import (
    DensePoly,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_scalar,
    poly_shift,
)

__version__ = "0.1.0"
