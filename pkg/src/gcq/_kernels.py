"""Compiled long division and Euclid over table-driven fields (q <= 256).

Arrays hold encodings, constant term first.  ``add``/``mul`` are q x q
tables, ``neg``/``inv`` length-q tables.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def _reduce(r, nr, b, nb, add, mul, neg, inv_lead, quot):
    # r[:nr] <- r mod b; quotient terms go to quot when it is non-empty
    for i in range(nr - 1, nb - 2, -1):
        c = r[i]
        if c == 0:
            continue
        c = mul[c, inv_lead]
        if quot.size:
            quot[i - nb + 1] = c
        nc = neg[c]
        base = i - nb + 1
        for j in range(nb):
            bj = b[j]
            if bj != 0:
                r[base + j] = add[r[base + j], mul[nc, bj]]
    n = min(nr, nb - 1)
    while n > 0 and r[n - 1] == 0:
        n -= 1
    return n


@numba.njit(cache=True)
def divmod_kernel(f, g, add, mul, neg, inv):
    nf, ng = f.size, g.size
    r = f.copy()
    nq = max(nf - ng + 1, 0)
    quot = np.zeros(max(nq, 1), dtype=np.int64)
    if nq == 0:
        return quot[:0], r
    nr = _reduce(r, nf, g, ng, add, mul, neg, inv[g[ng - 1]], quot)
    return quot, r[:nr]


@numba.njit(cache=True)
def _make_monic(a, n, mul, inv):
    lead = a[n - 1]
    if lead != 1:
        il = inv[lead]
        for i in range(n):
            a[i] = mul[a[i], il]


@numba.njit(cache=True)
def gcd_kernel(f, g, add, mul, neg, inv):
    """Monic gcd of two polynomials, not both zero; returns (gcd, division steps)."""
    a = f.copy()
    b = g.copy()
    na, nb = a.size, b.size
    empty = np.zeros(0, dtype=np.int64)
    if na:
        _make_monic(a, na, mul, inv)
    if nb:
        _make_monic(b, nb, mul, inv)
    steps = 0
    while nb > 0:
        na = _reduce(a, na, b, nb, add, mul, neg, 1, empty)
        steps += 1
        if na:
            _make_monic(a, na, mul, inv)
        a, b = b, a
        na, nb = nb, na
    return a[:na].copy(), steps
