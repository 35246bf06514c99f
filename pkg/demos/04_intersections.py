#!/usr/bin/env python3
"""Crossings of address curves inside the overlap, and what they imply.

Where two address curves meet at a point (s, z) inside the overlap triangle,
the point z acquires both addresses at the parameter s.  The orbit type of
the two sequences decides how many addresses z really has: two (both
sequences preperiodic), countably many (one periodic), or uncountably many
(both periodic).  In the last case the pair of cycle lengths (m, n) gives a
growth rate rho, and when rho exceeds 2s the local dimension at z drops
below 1, so the measure nu_s cannot have a bounded density.

Run:  python demos/04_intersections.py
"""

import bernconv as bc
from bernconv.cli import classify_intersection
from bernconv import IntegerPolynomial

PAIRS = [
    ((5, 12), (25, 48), "the smallest parameter with a two-address point"),
    ((5, 12), (13, 24), "a crossing exactly at the golden parameter"),
    ((5, 12), (8, 15), "countably many addresses on the same curve"),
    ((11, 24), (13, 24), "complementary pair: crossing pinned to y = 1/2"),
    ((3, 7), (8, 15), "two cycles (m, n) = (3, 4): unbounded density"),
    ((55, 127), (16, 31), "a Perron parameter with no bounded density"),
]

for pb, pc, caption in PAIRS:
    b, c = bc.from_rational(*pb), bc.from_rational(*pc)
    print(f"{pb[0]}/{pb[1]} x {pc[0]}/{pc[1]}: {caption}")
    for rec in classify_intersection(b, c):
        line = (f"  s = {rec['s']:.6f}, z = {rec['z']:.6f}, "
                f"case {rec['case']}, addresses {rec['addresses']}")
        if "singularity" in rec:
            sg = rec["singularity"]
            line += (f", growth {sg['growth_rate']:.4f}"
                     f"{' > 2s: no bounded density' if sg['singular'] else ''}"
                     f", local dimension <= {sg['dim_bound']:.3f}")
        print(line)
    print()

print("the Perron example in detail")
b, c = bc.from_rational(55, 127), bc.from_rational(16, 31)
rec = [r for r in bc.curve_intersection(b, c) if r.inside_D][0]
p9 = IntegerPolynomial([-1, 1, 0, 1, 1, 2, 1, 2, 1, 1])
nc = bc.classify_from_t_polynomial(p9)
print(f"  minimal polynomial of s: {p9}")
print(f"  divides the cleared intersection polynomial: "
      f"{p9.divides(rec.cleared_polynomial)}")
print(f"  beta = 1/s = {nc.beta:.6f} is {nc.tag}; largest conjugate modulus "
      f"{max(nc.conjugate_moduli):.6f} (so not Pisot)")
print(f"  degree-9 coefficient test: t < 2^(-9/10) = "
      f"{2 ** (-0.9):.4f}? {bc.feng_wang_test(9, rec.s)} "
      f"(the bounded-density exclusion needs the crossing analysis instead)")
sing = bc.singularity_test(7, 5, rec.s)
print(f"  cycles (7, 5): growth {bc.growth_rate(7, 5):.4f} > 2s = "
      f"{2 * rec.s:.4f}; local dimension <= {sing.dim_bound:.4f}")
