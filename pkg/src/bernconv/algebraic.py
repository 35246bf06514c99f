"""Number-class tests for algebraic integers and singularity criteria.

A real algebraic integer beta > 1 is classified by the moduli of its
conjugates: Pisot (all below 1), Salem (all at most 1, one on the circle),
Garsia (all above 1 with constant term +-2), Perron (beta strictly
dominant), weak Perron (beta dominant, ties allowed).  The boundaries are
applied with a fixed tolerance because moduli arrive as floats; the raw
conjugate moduli are always carried along so callers can inspect edge cases.

The module also hosts the quantitative side of intersection analysis: the
address-growth rate at a crossing of two cycles, the local-dimension bound
it implies, and the degree-based bounded-density exclusion test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import DomainError
from .polynomial import IntegerPolynomial, all_roots, real_roots_in_interval

MODULUS_EPS = 1e-9

TAG_PISOT = "Pisot"
TAG_SALEM = "Salem"
TAG_GARSIA = "Garsia"
TAG_PERRON = "Perron"
TAG_WEAK_PERRON = "WeakPerron"
TAG_NONE = "None"


@dataclass(frozen=True)
class NumberClass:
    """Classification verdict for one real root beta > 1 of a monic polynomial."""

    tag: str
    beta: float
    conjugate_moduli: tuple
    minimality_verified: bool
    polynomial: IntegerPolynomial

    def as_dict(self):
        return {
            "tag": self.tag,
            "beta": self.beta,
            "moduli": list(self.conjugate_moduli),
            "minimality_verified": self.minimality_verified,
        }


def _has_rational_root(poly: IntegerPolynomial) -> bool:
    """Rational-root test for a monic integer polynomial (roots must be integers)."""
    const = poly.coeffs[0]
    if const == 0:
        return True
    cands = set()
    for d in range(1, abs(const) + 1):
        if const % d == 0:
            cands.update((d, -d))
    return any(poly(c) == 0 for c in cands)


def classify(poly: IntegerPolynomial,
             which_root: Union[str, float] = "largest",
             eps: float = MODULUS_EPS) -> NumberClass:
    """Classify a real root > 1 of a monic integer polynomial.

    ``which_root`` selects among real roots above 1: "largest", "smallest",
    or a float target matched to the nearest such root.  The tags are tried
    strongest first, so a number that is both Pisot and Perron reports Pisot.
    ``minimality_verified`` is True only in the cheaply checkable regime
    (degree at most 3 with no rational root); False is a flag, not a failure.
    """
    poly = poly.normalized()
    if poly.degree < 1:
        raise DomainError("classification needs degree >= 1")
    if poly.coeffs[-1] != 1:
        raise DomainError(
            f"algebraic-integer classification needs a monic polynomial, "
            f"got leading coefficient {poly.coeffs[-1]}")
    roots = all_roots(poly)
    real_gt1 = [i for i, r in enumerate(roots)
                if r.imag == 0.0 and r.real > 1.0]
    if not real_gt1:
        raise DomainError(f"{poly!r} has no real root greater than 1")
    if which_root == "largest":
        pick = max(real_gt1, key=lambda i: roots[i].real)
    elif which_root == "smallest":
        pick = min(real_gt1, key=lambda i: roots[i].real)
    else:
        target = float(which_root)
        pick = min(real_gt1, key=lambda i: abs(roots[i].real - target))
    beta = float(roots[pick].real)
    moduli = tuple(sorted((float(abs(r)) for i, r in enumerate(roots) if i != pick),
                          reverse=True))
    tag = _tag_from_moduli(beta, moduli, abs(poly.coeffs[0]), eps)
    minimal = poly.degree <= 3 and not _has_rational_root(poly)
    return NumberClass(tag, beta, moduli, minimal, poly)


def _tag_from_moduli(beta, moduli, const_abs, eps):
    if all(m < 1.0 - eps for m in moduli):
        return TAG_PISOT
    if moduli and all(m <= 1.0 + eps for m in moduli) \
            and any(abs(m - 1.0) <= eps for m in moduli):
        return TAG_SALEM
    if all(m > 1.0 + eps for m in moduli) and const_abs == 2:
        return TAG_GARSIA
    top = max(moduli, default=0.0)
    if beta > top + eps:
        return TAG_PERRON
    if beta >= top - eps:
        return TAG_WEAK_PERRON
    return TAG_NONE


def classify_from_t_polynomial(poly_t: IntegerPolynomial,
                               t_root: float = None,
                               eps: float = MODULUS_EPS) -> NumberClass:
    """Classify beta = 1/t for a root t in (1/2, 1) of an integer polynomial.

    The reciprocal polynomial (coefficients reversed, sign-normalized) has
    beta as a root; it must come out monic for the classification to apply.
    When ``t_root`` is omitted the polynomial must have exactly one root in
    (1/2, 1); otherwise the given root is validated and used.
    """
    roots = real_roots_in_interval(poly_t, 0.5, 1.0)
    if t_root is None:
        if not roots:
            raise DomainError(f"{poly_t!r} has no root in (1/2, 1)")
        if len(roots) > 1:
            raise DomainError(
                f"{poly_t!r} has several roots in (1/2, 1): {roots}; "
                f"pass t_root explicitly")
        t_root = roots[0]
    else:
        if not any(abs(r - t_root) < 1e-6 for r in roots):
            raise DomainError(f"t_root={t_root} is not a root of {poly_t!r}")
    recip = IntegerPolynomial(poly_t.coeffs[::-1]).normalized()
    return classify(recip, which_root=1.0 / t_root, eps=eps)


# -- intersection growth and singularity ---------------------------------------


def growth_rate(m: int, n: int) -> float:
    """Positive root r of r^-m + r^-n = 1, the address-count growth rate
    at a crossing of two cycles of lengths m and n."""
    if m < 1 or n < 1:
        raise DomainError("cycle lengths must be positive")
    f = lambda r: r ** (-m) + r ** (-n) - 1.0
    a, b = 1.0, 2.0
    fb = f(b)
    if fb == 0.0:
        return 2.0
    for _ in range(100):
        mid = 0.5 * (a + b)
        if f(mid) > 0.0:
            a = mid
        else:
            b = mid
        if b - a < 1e-13:
            break
    return 0.5 * (a + b)


def local_dim_bound(rho: float, beta: float) -> float:
    """log(2/rho) / log(beta): the local-dimension bound implied by growth rho."""
    return math.log(2.0 / rho) / math.log(beta)


def feng_wang_test(degree: int, t: float) -> bool:
    """Bounded-density exclusion for a degree-n root with coefficients 0, +-1:
    applies exactly when t < 2^(-n/(n+1)) (strict)."""
    if degree < 1:
        raise DomainError("degree must be positive")
    if not 0.5 < t < 1.0:
        raise DomainError("t must lie in (1/2, 1)")
    return t < 2.0 ** (-degree / (degree + 1.0))


class SingularityResult(NamedTuple):
    singular: bool
    dim_bound: float


def singularity_test(m: int, n: int, s: float) -> SingularityResult:
    """Crossing of two cycles of lengths m, n at parameter s.

    When (2s)^-m + (2s)^-n > 1 the local dimension at the crossing point is
    below 1 and the measure cannot have a bounded density.  Equivalently,
    the growth rate of the pair exceeds 2s.  The returned bound is
    log(2/rho) / log(1/s).
    """
    if m < 1 or n < 1:
        raise DomainError("cycle lengths must be positive")
    if not 0.5 < s < 1.0:
        raise DomainError("s must lie in (1/2, 1)")
    two_s = 2.0 * s
    singular = two_s ** (-m) + two_s ** (-n) > 1.0
    bound = local_dim_bound(growth_rate(m, n), 1.0 / s)
    return SingularityResult(singular, bound)
