"""Recovering a planted factor (x - 1)^m from g (x - 1)^m, with operation counts.

    python demos/04_planted.py
"""

from gcq import count_ops, field_make, multiplicity, multiplicity_oracle, planted_instance

for q in (2, 3, 4, 9):
    f = field_make(q)
    for m in (0, 7, 150):
        g = planted_instance(f, m, m + 40, seed=m)
        with count_ops() as fast:
            pi, trace = multiplicity(g)
        with count_ops() as slow:
            ref = multiplicity_oracle(g)
        print(f"q={q} m={m:<3} deg={g.degree:<4} folding={pi:<3} ({len(trace.levels)} levels, "
              f"{fast.divisions} divisions)  oracle={ref:<3} ({slow.divisions} divisions)")
