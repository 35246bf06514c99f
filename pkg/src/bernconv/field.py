"""Two-dimensional density fields: column sweeps, rendering, raw interchange.

A field stacks one measure histogram per parameter value over a uniform
t-grid, discretizing the function Phi(t, y) whose vertical sections are the
densities of the family.  Columns are independent, so a sweep parallelizes
over a process pool with no shared state; the merged result is byte
identical for any worker count.
"""

from __future__ import annotations

import json
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from .curves import HornWord, curve_of, horn_borders
from .errors import BernconvError, DomainError, FieldColumnError, ParseError
from .measure import (METHOD_CHAOS, METHOD_INVERSE, METHOD_TRANSFER,
                      Histogram, chaos_measure, inverse_measure,
                      transfer_measure)
from .sequences import BinarySequence

RAW_MAGIC = b"BATL1"


@dataclass(eq=False, frozen=True)
class DensityField:
    """Histogram columns over a strictly increasing t-grid.

    ``matrix[i]`` is the weight vector of column i (so every row sums to 1);
    ``provenance`` records the method, its parameters, and the normalization
    conventions used when the field was built.
    """

    t_grid: np.ndarray
    matrix: np.ndarray
    provenance: dict

    @property
    def cols(self) -> int:
        return len(self.t_grid)

    @property
    def y_bins(self) -> int:
        return self.matrix.shape[1]

    def column(self, i: int) -> Histogram:
        return Histogram(float(self.t_grid[i]), self.matrix[i],
                         self.provenance.get("method", METHOD_TRANSFER))

    def column_csv(self, i: int) -> str:
        return self.column(i).to_csv()


def _compute_one_column(args):
    """Worker body: returns (index, weights) or (index, error message)."""
    i, t, y_bins, method, params = args
    try:
        if method == METHOD_TRANSFER:
            h = transfer_measure(t, y_bins, tol=params.get("tol", 1e-10),
                                 max_iter=params.get("max_iter", 2000),
                                 refine=params.get("refine", 4))
        elif method == METHOD_CHAOS:
            h = chaos_measure(t, y_bins, samples=params.get("samples", 10 ** 6),
                              seed=params.get("seed", 0) + i,
                              burn_in=params.get("burn_in", 1000))
        elif method == METHOD_INVERSE:
            h = inverse_measure(t, y_bins, depth=params.get("depth", 18))
        else:
            return i, f"unknown method {method!r}"
        return i, h.weights
    except BernconvError as exc:
        return i, f"{type(exc).__name__}: {exc}"


def compute_field(t_lo: float, t_hi: float, cols: int, y_bins: int,
                  method: str = METHOD_TRANSFER, params: Optional[dict] = None,
                  workers: int = 1) -> DensityField:
    """Sweep the measure engine over a uniform t-grid, one column per value.

    Columns are computed independently (in this process for ``workers=1``,
    otherwise on a process pool) and merged by index, so the output does not
    depend on the worker count.  A failing column aborts the sweep with its
    index and parameter attached, plus the number of columns that completed.
    """
    if not 0.5 <= t_lo < t_hi < 1.0:
        raise DomainError(f"need 1/2 <= t_lo < t_hi < 1, got [{t_lo}, {t_hi}]")
    if cols < 2:
        raise DomainError("need at least 2 columns")
    params = dict(params or {})
    t_grid = np.linspace(t_lo, t_hi, cols)
    jobs = [(i, float(t), y_bins, method, params) for i, t in enumerate(t_grid)]
    results = [None] * cols
    if workers <= 1:
        hits = map(_compute_one_column, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        hits = pool.map(_compute_one_column, jobs,
                        chunksize=max(1, cols // (workers * 4)))
    done = 0
    try:
        for i, payload in hits:
            if isinstance(payload, str):
                raise FieldColumnError(
                    f"column {i} (t={t_grid[i]:.6g}) failed: {payload}; "
                    f"{done} columns completed before the failure",
                    column=i, t=float(t_grid[i]), completed=done)
            results[i] = payload
            done += 1
    finally:
        if workers > 1:
            pool.shutdown(cancel_futures=True)
    matrix = np.vstack(results)
    provenance = {
        "method": method,
        "params": params,
        "column_normalization": "probability",
        "color_scaling": "global",
    }
    return DensityField(t_grid, matrix, provenance)


# -- rendering --------------------------------------------------------------------


@dataclass(frozen=True)
class RenderSpec:
    """Raster options: named color ramp, global clip percentile, gamma, and
    overlays (address-curve sequences or horn words) drawn on top."""

    colormap: str = "thermal"
    clip_percentile: float = 99.5
    gamma: float = 0.8
    overlays: Tuple[Union[BinarySequence, HornWord], ...] = ()
    height: Optional[int] = None

    def __post_init__(self):
        if not 90.0 < self.clip_percentile <= 100.0:
            raise DomainError("clip percentile must lie in (90, 100]")
        if self.gamma <= 0:
            raise DomainError("gamma must be positive")


_RAMP_ANCHORS = {
    # position -> (r, g, b); a dark-blue to red thermal ramp
    "thermal": ((0.00, (8, 8, 64)), (0.35, (24, 96, 192)), (0.60, (40, 180, 100)),
                (0.82, (232, 220, 48)), (1.00, (216, 32, 32))),
}

_CURVE_COLOR = (255, 48, 48)
_HORN_COLOR = (255, 255, 255)


def _build_ramp(name: str) -> np.ndarray:
    anchors = _RAMP_ANCHORS[name]
    pos = np.array([a[0] for a in anchors])
    ramp = np.empty((256, 3), dtype=np.uint8)
    x = np.linspace(0.0, 1.0, 256)
    for ch in range(3):
        vals = np.array([a[1][ch] for a in anchors], dtype=float)
        ramp[:, ch] = np.rint(np.interp(x, pos, vals)).astype(np.uint8)
    return ramp


def _aggregate_rows(dens: np.ndarray, height: int) -> np.ndarray:
    """Average bins into ``height`` rows (never subsample, to keep thin
    valleys visible)."""
    y_bins = dens.shape[1]
    if height == y_bins:
        return dens
    if height > y_bins:
        raise DomainError("image height cannot exceed the bin count")
    edges = (np.arange(height + 1) * y_bins) // height
    widths = np.diff(edges)
    sums = np.add.reduceat(dens, edges[:-1], axis=1)
    return sums / widths


def render(field_: DensityField, spec: RenderSpec = RenderSpec()) -> bytes:
    """Render the field to a binary PGM (grayscale ramp) or PPM raster.

    Intensity is the per-column density, clipped at a global percentile and
    gamma-corrected; one pixel per (column, aggregated row), y increasing
    upward.  Output bytes are a pure function of the field and the spec.
    """
    dens = field_.matrix * field_.y_bins
    height = spec.height or field_.y_bins
    agg = _aggregate_rows(dens, height)
    clip = float(np.percentile(agg, spec.clip_percentile))
    if clip <= 0:
        clip = 1.0
    level = np.clip(agg / clip, 0.0, 1.0) ** spec.gamma
    shade = np.rint(level * 255).astype(np.uint8)
    # image rows run top-down; bin index runs bottom-up
    img_gray = shade.T[::-1]
    gray = spec.colormap == "gray"
    if gray:
        img = img_gray.copy()
    else:
        img = _build_ramp(spec.colormap)[img_gray]
    for overlay in spec.overlays:
        _draw_overlay(img, field_, overlay, height, gray)
    header = (b"P5" if gray else b"P6") + b"\n%d %d\n255\n" % (field_.cols, height)
    return header + img.tobytes()


def _draw_overlay(img, field_, overlay, height, gray):
    if isinstance(overlay, BinarySequence):
        tracks = [curve_of(overlay).eval(field_.t_grid)]
        color = 255 if gray else np.array(_CURVE_COLOR, dtype=np.uint8)
    elif isinstance(overlay, HornWord):
        lo, hi = horn_borders(overlay)
        tracks = [lo.eval_array(field_.t_grid), hi.eval_array(field_.t_grid)]
        color = 255 if gray else np.array(_HORN_COLOR, dtype=np.uint8)
    else:
        raise DomainError(f"unsupported overlay {overlay!r}")
    for track in tracks:
        for i, y in enumerate(track):
            if 0.0 <= y < 1.0:
                row = height - 1 - int(y * height)
                img[row, i] = color


# -- raw interchange ----------------------------------------------------------------

# Layout (little-endian):
#   bytes 0..4   magic "BATL1" (the digit is the format version)
#   byte  5      0x0A
#   uint64       cols
#   uint64       y_bins
#   uint32       L, length of the provenance JSON
#   L bytes      provenance JSON (UTF-8)
#   cols*8       t_grid, float64
#   cols*y_bins*8  matrix, float64, C order (column i contiguous)
# Total size = 26 + L + 8*cols*(1 + y_bins) bytes.


def export_raw(field_: DensityField) -> bytes:
    prov = json.dumps(field_.provenance, sort_keys=True).encode("utf-8")
    head = RAW_MAGIC + b"\n" + struct.pack("<QQI", field_.cols, field_.y_bins,
                                           len(prov))
    body = (field_.t_grid.astype("<f8").tobytes()
            + np.ascontiguousarray(field_.matrix).astype("<f8").tobytes())
    return head + prov + body


def import_raw(data: bytes) -> DensityField:
    if len(data) < 26:
        raise ParseError("raw field data is truncated")
    if data[:5] != RAW_MAGIC:
        raise ParseError(
            f"bad magic {data[:5]!r}; expected {RAW_MAGIC!r} (version mismatch?)")
    if data[5:6] != b"\n":
        raise ParseError("malformed raw header")
    cols, y_bins, plen = struct.unpack_from("<QQI", data, 6)
    off = 26
    expected = off + plen + 8 * cols * (1 + y_bins)
    if len(data) != expected:
        raise ParseError(f"raw field size {len(data)} != expected {expected}")
    try:
        provenance = json.loads(data[off:off + plen].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad provenance block: {exc}") from exc
    off += plen
    t_grid = np.frombuffer(data, dtype="<f8", count=cols, offset=off).copy()
    off += 8 * cols
    matrix = np.frombuffer(data, dtype="<f8", count=cols * y_bins,
                           offset=off).reshape(cols, y_bins).copy()
    return DensityField(t_grid, matrix, provenance)
