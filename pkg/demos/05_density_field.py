#!/usr/bin/env python3
"""The two-dimensional density: a parameter sweep rendered as an image.

Stacking one histogram per parameter value turns the family nu_t into a
single field Phi(t, y).  The overlap triangle glows (both branches feed it),
address curves cut dark valleys through the glow, and horn borders organize
the landmark crossings.  The sweep below renders in a few seconds; scale
cols/bins up (e.g. 1000 x 20000) for a figure-quality image, the pipeline is
the same.

Run:  python demos/05_density_field.py
"""

import pathlib
import time

import bernconv as bc

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

COLS, BINS = 400, 2000

t0 = time.time()
field = bc.compute_field(0.5, 0.76, COLS, BINS, workers=4)
print(f"{COLS} x {BINS} field in {time.time() - t0:.1f}s")

raw = bc.export_raw(field)
(OUT / "field.batl").write_bytes(raw)
assert bc.export_raw(bc.import_raw(raw)) == raw
print(f"raw field: {len(raw)} bytes, lossless round trip OK")

plain = bc.render(field, bc.RenderSpec(height=1000))
(OUT / "field.ppm").write_bytes(plain)

overlays = (
    bc.from_rational(1, 3),      # the 1/3-quantile curve, dark below 0.618
    bc.from_rational(5, 12),
    bc.HornWord("0"), bc.HornWord("1"),
    bc.HornWord("00"), bc.HornWord("01"), bc.HornWord("10"), bc.HornWord("11"),
)
marked = bc.render(field, bc.RenderSpec(overlays=overlays, height=1000))
(OUT / "field_overlays.ppm").write_bytes(marked)

gray = bc.render(field, bc.RenderSpec(colormap="gray", gamma=0.6, height=500))
(OUT / "field.pgm").write_bytes(gray)

print("images written to", OUT)
print("  field.ppm           plain thermal rendering")
print("  field_overlays.ppm  with two address curves and six horn borders")
print("  field.pgm           grayscale, aggregated to 500 rows")

# the dark-curve phenomenon, quantified on the raw field
import numpy as np

curve = bc.curve_of(bc.from_rational(1, 3))
wins = total = 0
for i, t in enumerate(field.t_grid):
    if not 0.5 <= t < 0.615:
        continue
    j = int(curve.eval(float(t)) * BINS)
    total += 1
    wins += field.matrix[i, j - 1:j + 2].mean() < np.median(field.matrix[i])
print(f"1/3-quantile curve darker than its column median in {wins}/{total} "
      f"columns below the golden parameter")
