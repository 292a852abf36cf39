"""Bit-packed GF(2) recursion: linear time up to millions of bits.

    python demos/03_binary_scaling.py
"""

import time

import numpy as np

from gcq import PeriodicSequence, field_make, min_period, min_period_binary, pack_bits

rng = np.random.default_rng(1)
print(f"{'N':>10} {'packed (ms)':>12} {'generic (ms)':>13}")
for n in range(12, 25, 2):
    N = 1 << n
    bits = rng.integers(0, 2, size=N, dtype=np.uint8)
    bits[-1] = bits[:-1].sum() & 1  # even weight: no early exit at the top
    words = pack_bits(bits)
    t = time.perf_counter()
    fast = min_period_binary(words, N)
    t_fast = time.perf_counter() - t
    generic = ""
    if n <= 18:
        t = time.perf_counter()
        assert min_period(PeriodicSequence(field_make(2), bits))[0] == fast
        generic = f"{(time.perf_counter() - t) * 1e3:13.2f}"
    print(f"{N:>10} {t_fast * 1e3:12.2f} {generic}")
