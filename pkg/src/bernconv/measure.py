"""Histogram engines for the overlap measures and their diagnostics.

The measure nu_t is the fixed point of

    nu(A) = 1/2 nu(g_0 A) + 1/2 nu(g_1 A),

equivalently the equal-weight self-similar measure of the contractions
f_0(x) = t x and f_1(x) = t x + 1 - t.  Three independent approximations are
provided: a binned push-forward iteration (deterministic fixed point), the
chaos game (seeded random orbit), and inverse iteration (exact enumeration
of the depth-n atom cloud).  On top of the histograms sit the cumulative
table with quantiles, the conjugacy check against the doubling map, local
dimension estimation, zero-region detection, and address diagnostics.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from scipy.signal import lfilter

from .errors import ConvergenceError, DomainError, ResourceError

# Phase boundaries on the t axis.  The outer two are exact algebraic values
# (reciprocals of sqrt 2 and the golden ratio); 0.5595 is the conventional
# 4-digit Komornik-Loreti parameter, and the last is the reciprocal
# Tribonacci constant, the root of t^3 + t^2 + t - 1.
SQRT2_T = 0.7071067811865476
GOLDEN_T = 0.6180339887498949
KOMORNIK_LORETI_T = 0.5595
TRIBONACCI_T = 0.5436890126920763

METHOD_TRANSFER = "transfer"
METHOD_CHAOS = "chaos"
METHOD_INVERSE = "inverse"

STATUS_UNIQUE = "UniqueUpToDepth"
STATUS_OVERLAP = "EntersOverlap"
STATUS_BOUNDARY = "OnBoundary"

_BOUNDARY_TOL = 1e-12
_MAX_INVERSE_DEPTH = 26
_SUFFIX_DEPTH = 20


def _check_t(t: float):
    if not 0.5 <= t < 1.0:
        raise DomainError(f"parameter t={t} outside [1/2, 1)")


@dataclass(eq=False, frozen=True)
class Histogram:
    """Binned approximation of nu_t on [0, 1]; bin i covers [i/N, (i+1)/N),
    the last bin closed.  Weights are non-negative and sum to 1."""

    t: float
    weights: np.ndarray
    method: str

    @property
    def bins(self) -> int:
        return len(self.weights)

    def density(self) -> np.ndarray:
        """Weights rescaled to density units (bin mass over bin width)."""
        return self.weights * self.bins

    def peak_density(self) -> float:
        """Largest density value at this resolution; resolution dependent,
        recorded rather than bounded."""
        return float(self.weights.max() * self.bins)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("t,method,N\n")
        out.write(f"{self.t:.12g},{self.method},{self.bins}\n")
        out.write("bin_lo,weight\n")
        for i, w in enumerate(self.weights):
            out.write(f"{i / self.bins:.12g},{w:.12g}\n")
        return out.getvalue()


@dataclass(eq=False, frozen=True)
class CDFTable:
    """Cumulative table F_i = nu_t[0, i/N] on the grid i = 0..N."""

    t: float
    values: np.ndarray
    method: str = METHOD_TRANSFER

    @property
    def bins(self) -> int:
        return len(self.values) - 1

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, len(self.values))

    def __call__(self, y):
        """F at arbitrary y by linear interpolation on the grid."""
        return np.interp(y, self.grid, self.values)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("t,method,N\n")
        out.write(f"{self.t:.12g},{self.method},{self.bins}\n")
        out.write("y,F\n")
        for y, v in zip(self.grid, self.values):
            out.write(f"{y:.12g},{v:.12g}\n")
        return out.getvalue()


@dataclass(frozen=True)
class OrbitReport:
    """Result of driving a point with the expanding branches outside the
    overlap; the orbit stops when it cannot continue single-valued."""

    point: float
    steps: List[float]
    status: str


# -- the three measure engines --------------------------------------------------


def transfer_measure(t: float, N: int, tol: float = 1e-10,
                     max_iter: int = 2000, refine: int = 4) -> Histogram:
    """Fixed point of the binned push-forward operator, from a uniform start.

    Each source bin's mass is split between the two image bins in exact
    proportion to interval overlap, which preserves total mass and avoids
    grid artifacts.  Proration still acts as a bin-width smoothing kernel on
    the fixed point, which biases rough measures (small t) at coarse N, so
    the iteration runs on a grid refined by ``refine`` and the result is
    aggregated back exactly; ``refine=1`` is the plain binned operator.
    Iteration stops when the L1 change drops below ``tol``.  Deterministic
    for fixed (t, N, tol, refine).
    """
    _check_t(t)
    if N < 2:
        raise DomainError("need at least 2 bins")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if refine < 1:
        raise DomainError("refine must be at least 1")
    n = N * refine
    idx = np.arange(n, dtype=np.float64)
    offsets = (0.0, (1.0 - t) * n)
    starts, fracs, seconds = [], [], []
    for off in offsets:
        a = t * idx + off
        j = np.floor(a).astype(np.int64)
        j = np.minimum(j, n - 1)
        f = np.minimum(j + 1.0 - a, t) / t
        starts.append(j)
        fracs.append(f)
        seconds.append(np.minimum(j + 1, n - 1))
    w = np.full(n, 1.0 / n)
    delta = math.inf
    for _ in range(max_iter):
        new = np.zeros(n)
        for j, f, j2 in zip(starts, fracs, seconds):
            m = 0.5 * w
            new += np.bincount(j, m * f, minlength=n)
            new += np.bincount(j2, m * (1.0 - f), minlength=n)
        new /= new.sum()
        delta = float(np.abs(new - w).sum())
        w = new
        if delta < tol:
            if refine > 1:
                w = w.reshape(N, refine).sum(axis=1)
            return Histogram(t, w, METHOD_TRANSFER)
    raise ConvergenceError(
        f"transfer operator did not reach tol={tol} at t={t}, N={N}",
        residual=delta, iterations=max_iter)


def chaos_measure(t: float, N: int, samples: int, seed: int,
                  burn_in: int = 1000) -> Histogram:
    """Random-orbit histogram: x <- f_s(x) with s a fair coin.

    The coin stream comes from numpy's PCG64 generator, so a fixed seed
    reproduces the histogram bit for bit.  The orbit recurrence
    x_k = t x_{k-1} + (1-t) s_k runs through an IIR filter in chunks; the
    first ``burn_in`` orbit points are discarded.
    """
    _check_t(t)
    if samples < 1:
        raise DomainError("need at least one sample")
    rng = np.random.Generator(np.random.PCG64(seed))
    b, a = [1.0 - t], [1.0, -t]
    zi = np.array([t * 0.5])          # orbit starts at x0 = 1/2
    counts = np.zeros(N, dtype=np.int64)
    todo = burn_in + samples
    skip = burn_in
    chunk = 1 << 20
    while todo > 0:
        k = min(chunk, todo)
        bits = rng.integers(0, 2, size=k).astype(np.float64)
        orbit, zi = lfilter(b, a, bits, zi=zi)
        todo -= k
        if skip >= k:
            skip -= k
            continue
        if skip:
            orbit = orbit[skip:]
            skip = 0
        pos = np.minimum((orbit * N).astype(np.int64), N - 1)
        counts += np.bincount(pos, minlength=N)
    return Histogram(t, counts / float(samples), METHOD_CHAOS)


def inverse_measure(t: float, N: int, depth: int) -> Histogram:
    """Exact atom cloud of depth n: the 2^n points f_w(1/2) with equal weight.

    The initial point does not matter in the limit; 1/2 is fixed for
    determinism.  Enumeration is split into prefix constants and a shared
    suffix array so memory stays bounded at large depth.
    """
    _check_t(t)
    if depth < 0:
        raise DomainError("depth must be non-negative")
    if depth > _MAX_INVERSE_DEPTH:
        raise ResourceError(
            f"depth {depth} exceeds the enumeration guard {_MAX_INVERSE_DEPTH}")
    sfx = min(depth, _SUFFIX_DEPTH)
    atoms = np.array([0.5])
    for _ in range(sfx):
        atoms = np.concatenate([t * atoms, t * atoms + (1.0 - t)])
    consts = np.array([0.0])
    for _ in range(depth - sfx):
        consts = np.concatenate([t * consts, t * consts + (1.0 - t)])
    scale = t ** (depth - sfx)
    counts = np.zeros(N, dtype=np.int64)
    for c in consts:
        pos = np.minimum(((scale * atoms + c) * N).astype(np.int64), N - 1)
        counts += np.bincount(pos, minlength=N)
    return Histogram(t, counts / float(2 ** depth), METHOD_INVERSE)


# -- CDF and quantiles ----------------------------------------------------------


def cdf(h: Histogram) -> CDFTable:
    vals = np.concatenate([[0.0], np.cumsum(h.weights)])
    vals[-1] = 1.0
    return CDFTable(h.t, vals, h.method)


def quantile(c: CDFTable, p: float) -> float:
    """Leftmost y with F(y) >= p, linearly interpolated inside the bin."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"quantile level {p} outside [0, 1]")
    if p <= 0.0:
        return 0.0
    vals = c.values
    i = int(np.searchsorted(vals, p, side="left"))
    if i >= len(vals):
        return 1.0
    n = c.bins
    lo, hi = vals[i - 1], vals[i]
    return ((i - 1) + (p - lo) / (hi - lo)) / n


# -- conjugacy with the doubling map ---------------------------------------------


def conjugacy_residual(t: float, c: CDFTable, sample_points) -> float:
    """max |F(g_t x) - frac(2 F(x))| over points outside the overlap interval.

    Outside [1-t, t] exactly one expanding branch applies (g_0 below, g_1
    above) and F conjugates it to the doubling map; the residual measures
    how far the binned F is from that identity.
    """
    _check_t(t)
    x = np.asarray(sample_points, dtype=float)
    if np.any((x >= 1.0 - t) & (x <= t)):
        raise DomainError("sample points must avoid the overlap interval [1-t, t]")
    if np.any((x < 0.0) | (x > 1.0)):
        raise DomainError("sample points must lie in [0, 1]")
    g = np.where(x < 1.0 - t, x / t, (x - (1.0 - t)) / t)
    lhs = c(g)
    rhs = np.mod(2.0 * c(x), 1.0)
    resid = np.abs(lhs - rhs)
    # frac() is discontinuous at integers: 2F slightly below 2 wraps against
    # F(g x) slightly above 0, so compare circularly.
    resid = np.minimum(resid, 1.0 - resid)
    return float(resid.max())


# -- local dimension --------------------------------------------------------------


@dataclass(frozen=True)
class LocalDimFit:
    """Least-squares fit of log nu(B(y, eps)) against log eps."""

    slope: float
    intercept: float
    eps: np.ndarray = field(repr=False, default=None)
    log_measures: np.ndarray = field(repr=False, default=None)
    residuals: np.ndarray = field(repr=False, default=None)
    zero_ball: bool = False


def local_dimension(c: CDFTable, y: float, eps_lo: float, eps_hi: float,
                    points: int = 16) -> LocalDimFit:
    """Local dimension estimate at y from a geometric ladder of ball radii.

    Ball masses come from the interpolated CDF; the slope of the log-log
    regression is the estimate.  A ball of zero mass anywhere on the ladder
    flags a zero-density region and reports an infinite slope.
    """
    n = c.bins
    if eps_lo < 2.0 / n:
        raise DomainError(f"eps_lo={eps_lo} below resolution 2/N={2.0 / n}")
    if eps_hi > 0.1:
        raise DomainError("eps_hi must not exceed 0.1")
    if eps_lo >= eps_hi:
        raise DomainError("need eps_lo < eps_hi")
    if points < 8:
        raise DomainError("need at least 8 ladder points")
    eps = np.geomspace(eps_lo, eps_hi, points)
    mass = c(y + eps) - c(y - eps)
    if np.any(mass <= 0.0):
        return LocalDimFit(math.inf, math.nan, eps, None, None, zero_ball=True)
    lx, ly = np.log(eps), np.log(mass)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return LocalDimFit(float(slope), float(intercept), eps, ly, resid)


# -- zeros, addresses, phases -----------------------------------------------------


def zero_regions(h: Histogram, threshold: float) -> List[Tuple[float, float]]:
    """Maximal bin runs whose density falls below ``threshold``, as [lo, hi)."""
    if threshold <= 0:
        raise DomainError("threshold must be positive")
    low = h.density() < threshold
    out = []
    n = h.bins
    start = None
    for i, flag in enumerate(low):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            out.append((start / n, i / n))
            start = None
    if start is not None:
        out.append((start / n, 1.0))
    return out


def unique_address_check(t: float, y: float, depth: int) -> OrbitReport:
    """Drive y with the single-valued expanding branch outside the overlap.

    Points that reach the open overlap (1-t, t) have multiple addresses;
    points that survive ``depth`` steps are unique at least to that depth.
    Landing within 1e-12 of an overlap endpoint stops with OnBoundary, since
    floating iteration cannot decide the branch there.
    """
    _check_t(t)
    if not 0.0 <= y <= 1.0 or depth < 1:
        raise DomainError("need y in [0, 1] and depth >= 1")
    x = float(y)
    steps = [x]
    for _ in range(depth):
        if abs(x - (1.0 - t)) <= _BOUNDARY_TOL or abs(x - t) <= _BOUNDARY_TOL:
            return OrbitReport(y, steps, STATUS_BOUNDARY)
        if 1.0 - t < x < t:
            return OrbitReport(y, steps, STATUS_OVERLAP)
        x = x / t if x < 1.0 - t else (x - (1.0 - t)) / t
        x = min(max(x, 0.0), 1.0)
        steps.append(x)
    return OrbitReport(y, steps, STATUS_UNIQUE)


def phase_of(t: float) -> int:
    """Coarse regime label 1..5 along the parameter axis.

    The labels follow the conventional boundaries sqrt(2), the golden ratio,
    the Komornik-Loreti parameter and the Tribonacci constant (given as t
    values); they describe typical behavior, not a theorem, and exceptional
    parameters inside each range exist.
    """
    _check_t(t)
    if t >= SQRT2_T:
        return 1
    if t > GOLDEN_T:
        return 2
    if t >= KOMORNIK_LORETI_T:
        return 3
    if t > TRIBONACCI_T:
        return 4
    return 5
