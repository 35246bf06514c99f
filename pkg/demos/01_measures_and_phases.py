#!/usr/bin/env python3
"""A tour of single measures across the five phases of the parameter range.

The family nu_t changes character as t = 1/beta decreases from 1 toward 1/2:
smooth bell-like densities first, then continuous but rough ones, then
countably many zeros, then uncountably many, and finally Cantor sets of
zeros.  This script computes one histogram per phase with all three engines,
prints summary statistics, and writes the transfer histograms as CSV.

Run:  python demos/01_measures_and_phases.py
"""

import pathlib

import numpy as np

import bernconv as bc

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

SPECIMENS = [0.75, 0.65, 0.58, 0.55, 0.52]
N = 5000

print("phase tour, N =", N)
print(f"{'t':>6} {'phase':>5} {'peak density':>13} {'zero bins <0.05':>16} "
      f"{'L1(transfer, chaos)':>20}")
for t in SPECIMENS:
    h = bc.transfer_measure(t, N)
    hc = bc.chaos_measure(t, N, samples=2 * 10 ** 6, seed=1)
    nzero = sum(int(round((hi - lo) * N)) for lo, hi in bc.zero_regions(h, 0.05))
    l1 = float(np.abs(h.weights - hc.weights).sum())
    print(f"{t:6.2f} {bc.phase_of(t):5d} {h.peak_density():13.3f} "
          f"{nzero:16d} {l1:20.4f}")
    (OUT / f"measure_t{t:.2f}.csv").write_text(h.to_csv())

print()
print("note the inversion: the zero-bin count above picks up only the thin")
print("margins near 0 and 1 (unique-address endpoints, density -> 0), which")
print("are widest in phase 1.  The countable and Cantor zero sets of phases")
print("3..5 are genuine but too thin to register in any finite histogram;")
print("they surface instead as the dark curves of the density field (demo 05).")

print()
print("the t = 1/2 endpoint is exactly Lebesgue measure:")
h = bc.transfer_measure(0.5, 1000)
print("  max |weight - 1/N| =", float(np.abs(h.weights - 1e-3).max()))

print()
print("histograms written to", OUT)
