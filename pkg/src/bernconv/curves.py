"""Address curves, horn geometry, and the landmark parameters they generate.

An eventually periodic sequence b yields a rational curve

    y_b(t) = (1 - t)/t * sum_k b_k t^k,

the point of [0, 1] whose 01-address is b, traced across the contraction
ratio t.  The overlap interval D = [1-t, t] and its images under the two
contractions ("horns") bound the parameter regions where addresses collide.
Intersections of horn borders, and of address curves inside D, pin down
algebraic parameters; the solvers here clear denominators to integer
polynomials and isolate real roots in (1/2, 1).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Tuple, Union

import numpy as np

from .errors import DomainError
from .polynomial import (IntegerPolynomial, cyclotomic, one_minus_tq,
                         real_roots_in_interval, _divisors)
from .sequences import BinarySequence

MAX_HORN_LEVEL = 8
DEDUP_TOL = 1e-10
_PROBE_T = 0.75  # interior probe used to order horn borders numerically


@dataclass(frozen=True)
class HornWord:
    """Index word of a horn: the overlap interval pushed through f_w."""

    word: str

    def __post_init__(self):
        if set(self.word) - {"0", "1"}:
            raise DomainError("horn words may contain only '0' and '1'")

    def __str__(self):
        return self.word if self.word else "(empty)"


@dataclass(frozen=True)
class AddressCurve:
    """Rational function y_b(t) = numerator/denominator in lowest terms.

    The denominator divides 1 - t^q and is kept positive on (1/2, 1), so the
    curve is finite across the whole parameter range; at t = 1/2 the curve
    evaluates exactly to the binary value of its source sequence.
    """

    numerator: IntegerPolynomial
    denominator: IntegerPolynomial
    source: BinarySequence

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"

    def eval(self, t):
        """Evaluate at t in [1/2, 1); Horner form for both parts, then divide.

        Accepts floats, numpy arrays, or Fractions (exact in the last case).
        """
        if isinstance(t, Fraction):
            if not Fraction(1, 2) <= t < 1:
                raise DomainError(f"curve parameter {t} outside [1/2, 1)")
            return self.numerator(t) / self.denominator(t)
        arr = np.asarray(t, dtype=float)
        if np.any(arr < 0.5) or np.any(arr >= 1.0):
            raise DomainError(f"curve parameter {t} outside [1/2, 1)")
        num = self.numerator.eval_array(arr)
        den = self.denominator.eval_array(arr)
        out = num / den
        return float(out) if np.isscalar(t) or arr.ndim == 0 else out

    __call__ = eval


def _digit_poly(word: str) -> IntegerPolynomial:
    """sum of d_i t^i for a finite word d_1 d_2 ... (no constant term)."""
    return IntegerPolynomial([0] + [int(ch) for ch in word])


@lru_cache(maxsize=4096)
def curve_of(b: BinarySequence) -> AddressCurve:
    """Address curve of an eventually periodic sequence, in lowest terms.

    With preperiod u (length p) and period v (length q),

        sum_k b_k t^k = P_u(t) + t^p P_v(t) / (1 - t^q),

    and the standardizing factor (1-t)/t clears exactly because P_u, P_v
    have no constant term.  The result is reduced by the cyclotomic factors
    of 1 - t^q, which is squarefree, so the reduction reaches lowest terms.
    """
    p, q = len(b.preperiod), len(b.period)
    pu = _digit_poly(b.preperiod)
    pv = _digit_poly(b.period)
    den = one_minus_tq(q)
    series = pu * den + pv.shift_up(p)          # sum b_k t^k, over 1 - t^q
    num = IntegerPolynomial((1, -1)) * series.shift_down(1)
    for d in _divisors(q):
        phi = cyclotomic(d)
        if num and phi.divides(num):
            num, _ = num.divmod_exact(phi)
            den, _ = den.divmod_exact(phi)
    if num:
        g = gcd(num.content(), den.content())
        num = IntegerPolynomial(c // g for c in num.coeffs)
        den = IntegerPolynomial(c // g for c in den.coeffs)
    if den.eval_array(np.array(_PROBE_T)) < 0:
        num, den = -num, -den
    return AddressCurve(num, den, b)


# -- horns ---------------------------------------------------------------------


def _affine_of_word(word: str) -> Tuple[int, IntegerPolynomial]:
    """f_w(x) = t^n x + C(t) for the composition f_{w_1} o ... o f_{w_n},
    where f_0(x) = t x and f_1(x) = t x + 1 - t."""
    c = IntegerPolynomial(())
    for letter in reversed(word):
        c = c * IntegerPolynomial((0, 1))
        if letter == "1":
            c = c + IntegerPolynomial((1, -1))
    return len(word), c


@lru_cache(maxsize=2048)
def horn_borders(w: Union[HornWord, str]) -> Tuple[IntegerPolynomial, IntegerPolynomial]:
    """Lower and upper border polynomials of the horn indexed by ``w``.

    The borders are f_w(1-t) and f_w(t); which of the two runs below the
    other on (1/2, 1) depends on the word, so the pair is ordered by value
    at an interior probe point rather than by any parity rule.  Both have
    coefficients in {-1, 0, 1}.
    """
    word = w.word if isinstance(w, HornWord) else str(w)
    if set(word) - {"0", "1"}:
        raise DomainError("horn words may contain only '0' and '1'")
    n, c = _affine_of_word(word)
    at_t = IntegerPolynomial((0,) * (n + 1) + (1,)) + c       # t^n * t + C
    at_1mt = IntegerPolynomial((0,) * n + (1, -1)) + c        # t^n (1-t) + C
    if float(at_1mt(_PROBE_T)) <= float(at_t(_PROBE_T)):
        return at_1mt, at_t
    return at_t, at_1mt


def horn_contains(w: Union[HornWord, str], t: float, y: float) -> bool:
    """Whether (t, y) lies inside the horn (borders included)."""
    if not 0.5 <= t < 1.0:
        raise DomainError(f"parameter {t} outside [1/2, 1)")
    lower, upper = horn_borders(w)
    lo = float(lower.eval_array(np.array(t)))
    hi = float(upper.eval_array(np.array(t)))
    return min(lo, hi) <= y <= max(lo, hi)


# -- intersections -------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionRecord:
    """A solved crossing: parameter s, ordinate z, and the integer polynomial
    whose root s is; sources are the two curves' sequences or horn words."""

    s: float
    z: float
    inside_D: bool
    cleared_polynomial: IntegerPolynomial
    sources: tuple

    def as_dict(self):
        return {
            "s": self.s,
            "z": self.z,
            "inside_D": self.inside_D,
            "poly": list(self.cleared_polynomial.coeffs),
            "sources": [str(x) for x in self.sources],
        }


def _strip_trivial_factors(poly: IntegerPolynomial) -> IntegerPolynomial:
    """Remove origin and unit-circle (cyclotomic) factors, with multiplicity.

    Neither kind can carry a root in (1/2, 1), so the stripped polynomial
    annihilates exactly the same crossings while staying much closer to the
    minimal polynomial of each root, which keeps downstream classification
    honest.
    """
    k = 0
    while k <= poly.degree and poly.coeffs[k] == 0:
        k += 1
    if k:
        poly = poly.shift_down(k)
    for d in range(1, poly.degree + 1):
        phi = cyclotomic(d)
        # cyclotomic degrees are not monotone in d, so never break early
        while phi.degree <= poly.degree and phi.divides(poly):
            poly, _ = poly.divmod_exact(phi)
    return poly.normalized()


def _all_words(max_level: int):
    words = [""]
    for level in range(1, max_level + 1):
        words.extend("".join(bits) for bits in product("01", repeat=level))
    return words


def landmark_scan(max_level: int) -> list:
    """Crossings of upper and lower borders over all horn pairs up to a level.

    Every ordered pair (v, w) of distinct words of length <= max_level
    contributes the roots of upper_v - lower_w in (1/2, 1).  Records are
    sorted by (s, polynomial) and deduplicated by parameter within 1e-10,
    keeping the first record of each cluster.
    """
    if max_level > MAX_HORN_LEVEL:
        raise DomainError(f"max_level {max_level} exceeds guard {MAX_HORN_LEVEL}")
    words = _all_words(max_level)
    borders = {w: horn_borders(w) for w in words}
    records = []
    for v in words:
        upper_v = borders[v][1]
        for w in words:
            if v == w:
                continue
            poly = upper_v - borders[w][0]
            if poly.degree < 1:
                continue
            roots = real_roots_in_interval(poly)
            if not roots:
                continue
            stripped = _strip_trivial_factors(poly)
            for s in roots:
                z = float(upper_v.eval_array(np.array(s)))
                records.append(IntersectionRecord(
                    s=s, z=z, inside_D=(1.0 - s <= z <= s),
                    cleared_polynomial=stripped,
                    sources=(HornWord(v), HornWord(w))))
    records.sort(key=lambda r: (r.s, r.cleared_polynomial.coeffs))
    out = []
    for rec in records:
        if not out or rec.s - out[-1].s > DEDUP_TOL:
            out.append(rec)
    return out


def curve_intersection(b: BinarySequence, c: BinarySequence) -> list:
    """All crossings of two address curves with parameter in (1/2, 1).

    The difference y_b - y_c is cleared to an integer polynomial whose real
    roots in the interval are isolated and bisected to 1e-12; each crossing
    carries the ordinate and an inside-the-overlap flag.  The stored
    polynomial has origin and cyclotomic factors stripped (they cannot hold
    roots in (1/2, 1)).  Identical curves (equal sequences, or distinct
    sequences tracing one rational function) are rejected as degenerate.
    """
    if b == c:
        raise DomainError("identical sequences have no isolated intersection")
    cb, cc = curve_of(b), curve_of(c)
    cleared = cb.numerator * cc.denominator - cc.numerator * cb.denominator
    if not cleared:
        raise DomainError(f"curves of {b} and {c} coincide as rational functions")
    cleared = _strip_trivial_factors(cleared)
    records = []
    for s in real_roots_in_interval(cleared):
        z = float(cb.eval(s))
        records.append(IntersectionRecord(
            s=s, z=z, inside_D=(1.0 - s <= z <= s),
            cleared_polynomial=cleared, sources=(b, c)))
    return records


# -- entry parameters ----------------------------------------------------------


def t_star(b: BinarySequence) -> float:
    """Parameter where the address curve of b meets the overlap boundary.

    The boundary is y = 1 - t when the kneading sequence of b starts with 0
    and y = t when it starts with 1; the root is isolated in [1/2, 1) and
    bisected to 1e-12.  If several roots are bracketed the smallest is
    returned with a warning, so the caller sees the ambiguity.
    """
    ok, _ = b.is_itinerary()
    if not ok:
        raise DomainError(f"{b} has unbounded runs; no entry parameter")
    k = b.kneading_of()
    curve = curve_of(k)
    if k.first_digit() == "0":
        boundary = IntegerPolynomial((1, -1))      # 1 - t
    else:
        boundary = IntegerPolynomial((0, 1))       # t
    cleared = curve.numerator - boundary * curve.denominator
    roots = real_roots_in_interval(cleared, 0.5 - 1e-9, 1.0)
    roots = [r for r in roots if r >= 0.5]
    if not roots:
        raise DomainError(f"no boundary crossing found for {b} in [1/2, 1)")
    if len(roots) > 1:
        warnings.warn(
            f"t_star({b}): {len(roots)} candidate roots {roots}; returning the "
            f"smallest", stacklevel=2)
    return roots[0]


def orbit_outside_D(record: IntersectionRecord, margin: float = 1e-12) -> bool:
    """Whether the forward orbit of the crossing point stays out of the overlap.

    The forward images of z = y_b(s) = y_c(s) are the values y_{shift}(s)
    over the proper shifts of both source sequences; periodic sources return
    to the crossing point itself, which is excluded (it is inside D by
    construction, and the crossing analysis concerns the orbit strictly
    between returns).  True when no such value lies in the open interval
    (1-s, s).
    """
    b, c = record.sources
    if not (isinstance(b, BinarySequence) and isinstance(c, BinarySequence)):
        raise DomainError("orbit check needs a record with sequence sources")
    s = record.s
    shifts = set()
    for x in (b, c):
        for k in range(1, x.orbit_size() + 1):
            shifts.add(x.shift(k))
    shifts.discard(b)
    shifts.discard(c)
    lo, hi = 1.0 - s + margin, s - margin
    for seq in shifts:
        val = curve_of(seq).eval(s)
        if lo < val < hi:
            return False
    return True
