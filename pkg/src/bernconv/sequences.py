"""Eventually periodic binary sequences and the doubling map on them.

A sequence is a finite preperiod word followed by an infinitely repeated
period word; the text form "01(10)" denotes the digit stream 0,1,1,0,1,0,...
Everything in this module is exact: values are `fractions.Fraction`,
predicates reduce to integer comparisons, and no floating point is used.

Sequences are symbolic objects, not real numbers: the two binary expansions
of a dyadic rational, such as "1(0)" and "0(1)", are distinct sequences with
equal value.  Canonical storage (minimal period, shortest preperiod) makes
structural equality coincide with digit-stream equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import DomainError, ParseError

ONE_HALF = Fraction(1, 2)

_FLIP = str.maketrans("01", "10")
_TEXT_RE = re.compile(r"^([01]*)\(([01]+)\)$")


class ItineraryCheck(NamedTuple):
    """Bounded-run test result; ``max_run`` is None when a run is infinite."""

    is_itinerary: bool
    max_run: Optional[int]


def _minimal_period(word: str) -> str:
    """Shortest word whose repetition reproduces ``word``."""
    n = len(word)
    for d in range(1, n):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


@dataclass(frozen=True)
class BinarySequence:
    """A 01-sequence ``preperiod (period)^infinity`` in canonical form.

    Canonical means the stored period is minimal and the preperiod is the
    shortest one generating the same digit stream, so ``==`` is digit-stream
    equality.  The value of every constructible sequence lies in [0, 1]; the
    right endpoint occurs only for "(1)", the all-ones stream, which arises
    as the complement of "(0)".
    """

    preperiod: str
    period: str

    def __post_init__(self):
        pre, per = self.preperiod, self.period
        if not per:
            raise DomainError("period word must be non-empty")
        if set(pre) - {"0", "1"} or set(per) - {"0", "1"}:
            raise DomainError("sequence words may contain only '0' and '1'")
        per = _minimal_period(per)
        # Absorb a preperiod tail that merely repeats the period's last digit.
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def __str__(self):
        return f"{self.preperiod}({self.period})"

    def __repr__(self):
        return f"BinarySequence({str(self)!r})"

    # -- digits ----------------------------------------------------------

    def digits(self, n: int) -> str:
        """First ``n`` digits of the stream."""
        if n <= len(self.preperiod):
            return self.preperiod[:n]
        tail = n - len(self.preperiod)
        reps = -(-tail // len(self.period))
        return self.preperiod + (self.period * reps)[:tail]

    def first_digit(self) -> str:
        return self.preperiod[0] if self.preperiod else self.period[0]

    # -- exact value -----------------------------------------------------

    def value(self) -> Fraction:
        """Exact binary value .d1 d2 d3 ... of the digit stream."""
        p, q = len(self.preperiod), len(self.period)
        pre = int(self.preperiod, 2) if self.preperiod else 0
        per = int(self.period, 2)
        cyc = (1 << q) - 1
        return Fraction(pre * cyc + per, (1 << p) * cyc)

    # -- doubling-map calculus ---------------------------------------------

    def shift(self, k: int) -> BinarySequence:
        """Drop the first ``k`` digits: the k-fold doubling map mod 1.

        value(shift(b, k)) equals 2^k value(b) mod 1 for every sequence whose
        period is not the all-ones word; an all-ones tail keeps value 1 under
        shifting (the stream stays .111...) while mod-1 doubling gives 0.
        """
        if k < 0:
            raise DomainError("shift count must be non-negative")
        p = len(self.preperiod)
        if k <= p:
            return BinarySequence(self.preperiod[k:], self.period)
        r = (k - p) % len(self.period)
        return BinarySequence("", self.period[r:] + self.period[:r])

    def complement(self) -> BinarySequence:
        """Digitwise flip; the value maps to 1 minus the original value."""
        return BinarySequence(self.preperiod.translate(_FLIP),
                              self.period.translate(_FLIP))

    def orbit_size(self) -> int:
        """Number of distinct shifts (the k-th shift cycles for k beyond it)."""
        return len(self.preperiod) + len(self.period)

    # -- itineraries and kneading ----------------------------------------

    def is_itinerary(self) -> ItineraryCheck:
        """Whether runs of equal digits are bounded, and the longest run.

        The stream has bounded runs exactly when the minimal period is not a
        single repeated digit.  The longest run is found by scanning the
        preperiod followed by two period copies, which covers every run of
        the infinite stream once runs are finite.
        """
        if len(self.period) == 1:
            return ItineraryCheck(False, None)
        window = self.preperiod + self.period * 2
        best, run = 1, 1
        for a, b in zip(window, window[1:]):
            run = run + 1 if a == b else 1
            if run > best:
                best = run
        return ItineraryCheck(True, best)

    def is_kneading(self) -> bool:
        """True when no shift of the sequence is strictly nearer to 1/2.

        Distances are compared exactly: with value n/d, the k-th shift has
        value (2^k n mod d)/d and |v - 1/2| orders like |2n - d|.
        """
        v = self.value()
        n, d = v.numerator, v.denominator
        ref = abs(2 * n - d)
        for _ in range(self.orbit_size()):
            n = (2 * n) % d
            if abs(2 * n - d) < ref:
                return False
        return True

    def kneading_of(self) -> BinarySequence:
        """The orbit element nearest to 1/2 (the kneading sequence).

        The orbit of an eventually periodic sequence is finite, so the orbit
        closure is the orbit itself.  An exact distance tie between a value
        x and 1 - x is resolved toward the representative below 1/2.
        """
        ok, _ = self.is_itinerary()
        if not ok:
            raise DomainError(f"{self} has unbounded runs; kneading undefined")
        best = None
        best_key = None
        for k in range(self.orbit_size()):
            cand = self.shift(k)
            v = cand.value()
            key = (abs(v - ONE_HALF), v)
            if best_key is None or key < best_key:
                best, best_key = cand, key
        return best


def from_rational(p: int, q: int) -> BinarySequence:
    """Binary expansion of p/q by long division, in canonical form.

    The remainder at each step determines the whole future digit stream, so
    cutting at the first repeated remainder yields the minimal period and
    the shortest preperiod directly.
    """
    if q <= 0 or not 0 <= p < q:
        raise DomainError(f"need 0 <= p < q, got p={p}, q={q}")
    seen = [-1] * q
    digits = []
    r = p
    while seen[r] < 0:
        seen[r] = len(digits)
        r *= 2
        if r >= q:
            digits.append("1")
            r -= q
        else:
            digits.append("0")
    start = seen[r]
    return BinarySequence("".join(digits[:start]), "".join(digits[start:]))


def parse_sequence(text: str) -> BinarySequence:
    """Parse the text form "pre(per)", the inverse of ``str``."""
    m = _TEXT_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a sequence literal (expected like '01(10)'): {text!r}")
    return BinarySequence(m.group(1), m.group(2))


def format_rational(v: Fraction) -> str:
    """Print a fraction as 'p/q' (denominator kept even when 1)."""
    return f"{v.numerator}/{v.denominator}"
