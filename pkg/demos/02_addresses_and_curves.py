#!/usr/bin/env python3
"""Symbolic addresses: itineraries, kneading sequences, and address curves.

A point of [0, 1] is encoded by the 01-sequence of contractions that reach
it.  Eventually periodic sequences are exact objects here: their values are
fractions, the doubling map is a digit shift, and each sequence b traces the
rational curve y_b(t) = (1-t)/t * sum b_k t^k across the parameter range.
Below the entry parameter t*(b) the curve is a quantile line of the whole
measure family: F_t(y_b(t)) = b.

Run:  python demos/02_addresses_and_curves.py
"""

import bernconv as bc

print("symbolics of a few rationals")
for p, q in [(1, 3), (5, 12), (8, 15), (25, 48), (55, 127)]:
    b = bc.from_rational(p, q)
    flag, run = b.is_itinerary()
    print(f"  {p}/{q} = .{b}   itinerary: {flag} (max run {run}), "
          f"kneading: {b.is_kneading()}")

print()
print("kneading sequences organize orbits:")
b = bc.from_rational(1, 6)
print(f"  1/6 = .{b} is not kneading; its orbit closes on "
      f".{b.kneading_of()} = {b.kneading_of().value()}")

print()
print("address curves and entry parameters")
for p, q in [(1, 3), (3, 7), (8, 15)]:
    b = bc.from_rational(p, q)
    curve = bc.curve_of(b)
    ts = bc.t_star(b)
    print(f"  y_{p}/{q}(t) = {curve}   t* = {ts:.6f}")

print()
print("quantile check: F_t(y_b(t)) = b for t below t*(b)")
b = bc.from_rational(5, 12)
curve = bc.curve_of(b)
ts = bc.t_star(b)
for t in (0.52, 0.54, 0.55):
    assert t < ts
    table = bc.cdf(bc.transfer_measure(t, 20000))
    y = curve.eval(t)
    print(f"  t = {t:.2f}: y = {y:.6f}, F_t(y) = {float(table(y)):.6f}, "
          f"b = {float(b.value()):.6f}")

print()
print("the 1/3-quantile curve t/(1+t) is the period-two unique-address point:")
rep = bc.unique_address_check(0.6, 0.6 / 1.6, depth=32)
print(f"  orbit at t = 0.6 starting from {0.6 / 1.6:.4f}: {rep.status}, "
      f"first steps {[round(x, 4) for x in rep.steps[:4]]}")
rep = bc.unique_address_check(0.63, 0.63 / 1.63, depth=32)
print(f"  at t = 0.63 (above the golden parameter) the same point: {rep.status}")
