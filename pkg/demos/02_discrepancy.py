"""Why the max-over-chunks recursion needs correcting when q > 2.

When the plain fold of the q chunks vanishes, taking the maximum of the chunk
periods loses information: the chunk sum being zero does not make the top
(x - 1)-adic digit the only one that matters.  Folding by digits instead keeps
the exact value.

    python demos/02_discrepancy.py
"""

from gcq import PeriodicSequence, discrepancy_search, field_make, min_period, mp_oracle, paper_literal_min_period

s = PeriodicSequence(field_make(3), [1, 2, 0])
print("block (1, 2, 0) over GF(3)")
print(f"  gcd oracle          {mp_oracle(s)}")
print(f"  corrected recursion {min_period(s)[0]}")
print(f"  uncorrected variant {paper_literal_min_period(s)}")

print("\nexhaustive sweeps, mismatches against the oracle:")
for q, n in [(2, 3), (2, 4), (3, 1), (3, 2)]:
    row = []
    for algorithm in ("corrected", "paper-literal"):
        r = discrepancy_search(q, n, "exhaustive", algorithm)
        row.append(f"{algorithm}: {len(r.mismatches):>5}")
    print(f"  q={q} N={q**n:<3} blocks={q ** q**n:<6} " + "  ".join(row))
