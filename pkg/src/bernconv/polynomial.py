"""Dense integer polynomials with exact arithmetic and float root finding.

Coefficients are Python ints stored in ascending degree order, so arithmetic
(addition, multiplication, exact division by a monic divisor) never rounds.
Real roots on an interval are isolated by sign changes on a fixed uniform
grid and refined by bisection; the full complex root set is computed by the
Aberth-Ehrlich simultaneous iteration started from a deterministic circle,
so repeated runs agree bit for bit.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from .errors import ConvergenceError, DomainError


class IntegerPolynomial:
    """Immutable integer polynomial; ``coeffs[k]`` multiplies t^k.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntegerPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntegerPolynomial(x + y for x, y in zip(a, b))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self or not other:
            return IntegerPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def shift_up(self, k: int) -> "IntegerPolynomial":
        """Multiply by t^k."""
        if not self:
            return self
        return IntegerPolynomial((0,) * k + self.coeffs)

    def shift_down(self, k: int) -> "IntegerPolynomial":
        """Divide by t^k; the low coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise DomainError("polynomial is not divisible by t^k")
        return IntegerPolynomial(self.coeffs[k:])

    def derivative(self) -> "IntegerPolynomial":
        return IntegerPolynomial(k * c for k, c in enumerate(self.coeffs) if k > 0)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input, float otherwise."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_array(self, x: np.ndarray) -> np.ndarray:
        if not self.coeffs:
            return np.zeros_like(np.asarray(x, dtype=float))
        return np.polyval(np.array(self.coeffs[::-1], dtype=float), x)

    # -- normalization and division -------------------------------------------

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def normalized(self) -> "IntegerPolynomial":
        """Divide out the integer content and make the leading coefficient positive."""
        if not self:
            return self
        g = self.content()
        cs = [c // g for c in self.coeffs]
        if cs[-1] < 0:
            cs = [-c for c in cs]
        return IntegerPolynomial(cs)

    def divmod_exact(self, divisor: "IntegerPolynomial"):
        """Long division by a divisor with leading coefficient +-1.

        Such division stays inside the integers; the remainder has degree
        below the divisor's.
        """
        if not divisor:
            raise DomainError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise DomainError("exact division needs a divisor with leading +-1")
        rem = list(self.coeffs)
        dn = divisor.degree
        qn = len(rem) - 1 - dn
        if qn < 0:
            return IntegerPolynomial(()), self
        quo = [0] * (qn + 1)
        for k in range(qn, -1, -1):
            c = rem[k + dn] * lead  # lead is +-1 so this is exact
            quo[k] = c
            if c:
                for j, d in enumerate(divisor.coeffs):
                    rem[k + j] -= c * d
        return IntegerPolynomial(quo), IntegerPolynomial(rem)

    def divides(self, other: "IntegerPolynomial") -> bool:
        """Whether self (leading +-1) divides ``other`` exactly."""
        _, rem = other.divmod_exact(self)
        return not rem


def _coerce(x) -> IntegerPolynomial:
    if isinstance(x, IntegerPolynomial):
        return x
    if isinstance(x, int):
        return IntegerPolynomial((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to IntegerPolynomial")


ONE = IntegerPolynomial((1,))
T = IntegerPolynomial((0, 1))


def one_minus_tq(q: int) -> IntegerPolynomial:
    """The polynomial 1 - t^q."""
    return IntegerPolynomial((1,) + (0,) * (q - 1) + (-1,))


def _divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntegerPolynomial:
    """d-th cyclotomic polynomial, via t^d - 1 = product of cyclotomics."""
    poly = IntegerPolynomial((-1,) + (0,) * (d - 1) + (1,))
    for e in _divisors(d):
        if e < d:
            poly, rem = poly.divmod_exact(cyclotomic(e))
            assert not rem
    return poly


# -- real roots on an interval ------------------------------------------------

GRID_SUBINTERVALS = 4096
ROOT_TOL = 1e-12


def _horner_float(desc, x):
    acc = 0.0
    for c in desc:
        acc = acc * x + c
    return acc


def real_roots_in_interval(poly: IntegerPolynomial, lo: float = 0.5, hi: float = 1.0,
                           subintervals: int = GRID_SUBINTERVALS,
                           tol: float = ROOT_TOL) -> list:
    """Simple real roots of ``poly`` in the open interval (lo, hi).

    Sign changes are bracketed on a uniform grid and refined by bisection;
    roots of even multiplicity inside one subinterval are not detected, which
    is adequate for the moderate degrees used here.  Roots closer than
    ``tol`` to either endpoint are discarded so the interval stays open.
    """
    if not poly or poly.degree < 1:
        return []
    grid = np.linspace(lo, hi - 1e-9, subintervals + 1)
    vals = poly.eval_array(grid)
    desc = [float(c) for c in reversed(poly.coeffs)]
    roots = [float(g) for g, v in zip(grid, vals) if v == 0.0]
    sign = np.sign(vals)
    idx = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    for i in idx:
        a, b = float(grid[i]), float(grid[i + 1])
        fa = _horner_float(desc, a)
        while b - a > tol:
            m = 0.5 * (a + b)
            fm = _horner_float(desc, m)
            if fm == 0.0:
                a = b = m
                break
            if (fa < 0) != (fm < 0):
                b = m
            else:
                a, fa = m, fm
        roots.append(0.5 * (a + b))
    roots = sorted(r for r in roots if lo + tol < r < hi - tol)
    out = []
    for r in roots:
        if not out or r - out[-1] > tol:
            out.append(r)
    return out


# -- all complex roots ---------------------------------------------------------

RESIDUAL_BOUND = 1e-10


def all_roots(poly: IntegerPolynomial, max_iter: int = 400, tol: float = 5e-14) -> np.ndarray:
    """All complex roots by Aberth-Ehrlich simultaneous iteration.

    Starting points sit on a circle of deterministic radius with a fixed
    angular offset, so results are reproducible bit for bit.  After
    convergence the roots are Newton-polished and complex-conjugate pairs are
    matched exactly.  Raises ConvergenceError when the iteration cap is hit
    or a root fails the residual bound |p(r)| / (1 + |r|^deg) < 1e-10.
    """
    if poly.degree < 1:
        raise DomainError("root finding needs degree >= 1")
    coeffs = list(poly.coeffs)
    nzero = 0
    while coeffs[0] == 0:
        nzero += 1
        coeffs.pop(0)
    n = len(coeffs) - 1
    zero_roots = np.zeros(nzero, dtype=complex)
    if n == 0:
        roots = zero_roots
    elif n == 1:
        roots = np.concatenate([zero_roots, [-coeffs[0] / coeffs[1] + 0j]])
    else:
        c = np.array(coeffs, dtype=float)
        c /= c[-1]
        desc = c[::-1].copy()
        ddesc = np.polyder(desc)
        radius = max(abs(c[0]) ** (1.0 / n), 0.25)
        k = np.arange(n)
        z = radius * np.exp(2j * np.pi * (k + 0.35) / n)
        corr = np.full(n, np.inf)
        for _ in range(max_iter):
            pv = np.polyval(desc, z)
            dv = np.polyval(ddesc, z)
            dv = np.where(dv == 0, 1e-300, dv)
            w = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            srec = (1.0 / diff).sum(axis=1)
            corr = w / (1.0 - w * srec)
            z = z - corr
            if np.all(np.abs(corr) <= tol * (1.0 + np.abs(z))):
                break
        else:
            raise ConvergenceError(
                f"Aberth iteration did not settle within {max_iter} rounds "
                f"for {poly!r}",
                residual=float(np.max(np.abs(corr))), iterations=max_iter)
        for _ in range(2):
            pv = np.polyval(desc, z)
            dv = np.polyval(ddesc, z)
            dv = np.where(np.abs(dv) < 1e-300, 1e-300, dv)
            z = z - pv / dv
        roots = np.concatenate([zero_roots, _pair_conjugates(z)])
    scale = float(max(abs(c) for c in poly.coeffs))
    deg = poly.degree
    resid = np.abs(_eval_complex(poly, roots))
    rel = resid / (scale * (1.0 + np.abs(roots) ** deg))
    if np.any(rel > RESIDUAL_BOUND):
        raise ConvergenceError(
            f"root residuals too large for {poly!r}: max {rel.max():.3e}",
            residual=float(rel.max()))
    order = np.lexsort((roots.imag, roots.real))
    return roots[order]


def _eval_complex(poly, z):
    return np.polyval(np.array(poly.coeffs[::-1], dtype=complex), z)


def _pair_conjugates(z: np.ndarray, rtol: float = 5e-8) -> np.ndarray:
    """Snap near-real roots onto the axis and mirror conjugate pairs exactly.

    The snapping band is sized for the accuracy floor of multiple real roots
    (about sqrt of machine epsilon); genuine conjugate pairs of integer
    polynomials at the degrees used here sit far outside it.
    """
    realish = np.abs(z.imag) <= rtol * (1.0 + np.abs(z))
    reals = [complex(r, 0.0) for r in z.real[realish]]
    plus = sorted((complex(w) for w in z[~realish] if w.imag > 0),
                  key=lambda w: (w.real, w.imag))
    minus = [complex(w) for w in z[~realish] if w.imag < 0]
    while len(plus) != len(minus):
        # Odd strays can only be numerically real; snap the flattest one.
        pool = plus if len(plus) > len(minus) else minus
        flat = min(range(len(pool)), key=lambda i: abs(pool[i].imag))
        reals.append(complex(pool[flat].real, 0.0))
        pool.pop(flat)
    out = list(reals)
    # Match each upper root to its nearest mirrored partner; lexicographic
    # zipping would interleave clusters whose real parts differ only by
    # rounding noise.
    for a in plus:
        j = min(range(len(minus)), key=lambda i: abs(a - minus[i].conjugate()))
        b = minus.pop(j)
        m = 0.5 * (a + b.conjugate())
        out.extend([m, m.conjugate()])
    return np.array(out, dtype=complex)
