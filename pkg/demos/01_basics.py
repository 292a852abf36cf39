"""A first tour: fields, polynomials and the minimal period of a short block.

    python demos/01_basics.py
"""

from gcq import DensePoly, PeriodicSequence, field_make, min_period, mp_oracle, multiplicity

gf9 = field_make(9)
print(f"GF(9): p={gf9.p}, e={gf9.e}, modulus encoding {gf9.modulus_encoding}")
a, b = gf9.element(3), gf9.element(7)
print(f"3 + 7 = {(a + b).value}, 3 * 7 = {(a * b).value}, 1/3 = {a.inverse().value}")

# the minimal period of a q^n-periodic sequence is a power of (x - 1)
gf3 = field_make(3)
s = PeriodicSequence(gf3, [1, 2, 0, 0, 1, 2, 2, 2, 2])
mp, trace = min_period(s)
print(f"\nblock {s.block.tolist()} has minimal period {mp} (oracle says {mp_oracle(s)})")
for lv in trace.levels:
    print(f"  level {lv.level}: N={lv.N:<3} kstar={lv.kstar} adds {lv.contribution}")
print(f"  base {trace.base}")

# multiplicity of x - 1 as a factor
x_minus_1 = DensePoly.x_minus_one(gf3)
g = DensePoly(gf3, [1, 0, 1]) * x_minus_1 * x_minus_1
print(f"\n(x^2 + 1) (x - 1)^2 = {g.coeffs.tolist()}; multiplicity {multiplicity(g)[0]}")
