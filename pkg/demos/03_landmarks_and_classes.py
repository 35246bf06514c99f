#!/usr/bin/env python3
"""Horn geometry and the algebraic landmark parameters it generates.

The overlap interval D = [1-t, t], seen as a region of the (t, y) plane, is
a triangle; its images under compositions of the two contractions are the
"horns" D_w with polynomial borders f_w(1-t) and f_w(t).  Crossings of an
upper border with a lower border of another horn pin down parameters where
overlaps of different levels coincide; the reciprocals 1/t are algebraic
integers, classically Pisot or Garsia numbers at low levels.

Run:  python demos/03_landmarks_and_classes.py
"""

import bernconv as bc

print("borders of the first horns (coefficients ascending in t)")
for w in ["", "0", "1", "00", "01", "10", "11"]:
    lo, hi = bc.horn_borders(w)
    name = w if w else "(empty)"
    print(f"  D_{name:7} lower = {str(lo):22}  upper = {hi}")

print()
print("landmark scan up to level 3, classified")
print(f"{'t':>10} {'beta':>10} {'class':>8}   minimal polynomial of beta")
for rec in bc.landmark_scan(3):
    try:
        nc = bc.classify_from_t_polynomial(rec.cleared_polynomial, t_root=rec.s)
        recip = nc.polynomial
        print(f"{rec.s:10.6f} {nc.beta:10.6f} {nc.tag:>8}   {recip}")
    except bc.DomainError as exc:
        print(f"{rec.s:10.6f} {'-':>10} {'?':>8}   ({exc})")

# Level <= 2 gives the classical Pisot/Garsia columns; from level 3 on other
# classes appear, including algebraic integers dominated by a conjugate pair
# (tag "None": not even weak Perron).

print()
print("number classes by conjugate moduli")
examples = [
    ("golden mean", (-1, -1, 1)),
    ("tribonacci", (-1, -1, -1, 1)),
    ("plastic number", (-1, -1, 0, 1)),
    ("sqrt(2) doubled", (-2, 0, 1)),
    ("Lehmer's Salem number", (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)),
]
for name, coeffs in examples:
    nc = bc.classify(bc.IntegerPolynomial(coeffs))
    top = max(nc.conjugate_moduli) if nc.conjugate_moduli else 0.0
    print(f"  {name:22} beta = {nc.beta:.6f}  {nc.tag:10} "
          f"largest conjugate modulus {top:.6f}")
