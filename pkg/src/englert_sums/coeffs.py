"""Exact polynomial closed forms for the even-summand families.

The even-summand series evaluate to polynomials in the centered
fractional part ``<z - shift>`` with rational coefficients.  The
coefficient rows are generated by a two-term recursion seeded from the
order-one row (-1/12, 1):

    c_0(n) = -abs_bernoulli_term(n - 1)
    c_i(n) = -2 c_{i-1}(n - 1) / (i (2i - 1)),   i = 1 .. n

Every row satisfies the closure constraint

    sum_i c_i(n) / (4^i (2i + 1)) = 0

which is exactly the condition for the odd antiderivative to stay
periodic (no staircase component survives the integration).  All
generation is exact in fractions.Fraction; floats appear only inside
eval_poly.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .bernoulli import abs_bernoulli_term
from .bracket import centered
from .errors import CapacityError, DomainError, InternalConsistencyError

__all__ = [
    "BracketPoly",
    "IntegratedPoly",
    "MAX_ORDER",
    "c_table",
    "constraint_check",
    "eval_poly",
    "integrate_bracket_poly",
    "poly_C",
    "poly_S",
    "sin_poly_variant",
]

ZERO = Fraction(0)
ONE_HALF = Fraction(1, 2)

# c_table(n) consumes |B_{2n}|, so the order cap tracks bernoulli.MAX_INDEX.
MAX_ORDER = 120


def _check_order(n, minimum, what="order"):
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{what} must be a plain integer, got {n!r}")
    if n < minimum:
        raise DomainError(f"{what} must be >= {minimum}, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"{what} {n} exceeds the supported cap {MAX_ORDER}")


@dataclass(frozen=True)
class BracketPoly:
    """Polynomial in the bracket variable w = <z - shift>.

    ``coefficients[i]`` multiplies w**i.  Trailing zero coefficients are
    stripped at construction so equal polynomials compare equal; the zero
    polynomial keeps a single zero entry.  Only shifts 0 and 1/2 are
    meaningful here because those are the two carriers the integration
    rules know about.
    """

    coefficients: tuple
    shift: Fraction = ZERO

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (ZERO,)
        shift = Fraction(self.shift)
        if shift not in (ZERO, ONE_HALF):
            raise DomainError(f"bracket shift must be 0 or 1/2, got {shift}")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "_float_coeffs", tuple(float(c) for c in coeffs))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def parity(self):
        """'even', 'odd' or 'mixed' under w -> -w; the zero poly counts as even."""
        has_even = any(c for i, c in enumerate(self.coefficients) if i % 2 == 0)
        has_odd = any(c for i, c in enumerate(self.coefficients) if i % 2 == 1)
        if has_even and has_odd:
            return "mixed"
        return "odd" if has_odd else "even"

    def with_shift(self, shift):
        """Same coefficients read in the bracket variable <z - shift>."""
        return BracketPoly(self.coefficients, Fraction(shift))

    def __call__(self, z):
        return eval_poly(self, z)


@dataclass(frozen=True)
class IntegratedPoly:
    """Antiderivative of a BracketPoly, taken from 0 to z.

    The primitive of a periodic polynomial need not be periodic: every
    even bracket power integrates to an odd power plus a rational
    multiple of the staircase z - <z - shift>, which increments by one
    each time the bracket wraps.  The staircase keeps the primitive
    continuous and zero at the origin; for shift 0 it equals
    floor(z + 1/2), for shift 1/2 it equals 1/2 + floor(z).
    """

    poly: BracketPoly
    nonperiodic: Fraction

    def __call__(self, z):
        periodic = eval_poly(self.poly, z)
        if self.nonperiodic == 0:
            return periodic
        shift = self.poly.shift
        if isinstance(z, Rational):
            zq = Fraction(z)
            return periodic + self.nonperiodic * (zq - centered(zq - shift))
        zf = float(z)
        carrier = zf - centered(zf - float(shift))
        return periodic + float(self.nonperiodic) * carrier


_table_lock = threading.Lock()
# _tables[m - 1] holds the row for order m; seeded from the order-one family.
_tables = [(Fraction(-1, 12), Fraction(1))]


def c_table(n):
    """Exact coefficient row [c_0(n), ..., c_n(n)] of the even cosine family.

    Order 0 has no polynomial form (the constant -1/2 family is handled in
    sums), so n must be >= 1.
    """
    _check_order(n, 1)
    with _table_lock:
        while len(_tables) < n:
            prev = _tables[-1]
            m = len(_tables) + 1
            row = [-abs_bernoulli_term(m - 1)]
            for i in range(1, m + 1):
                row.append(Fraction(-2, i * (2 * i - 1)) * prev[i - 1])
            _tables.append(tuple(row))
        return _tables[n - 1]


def constraint_check(n):
    """True iff sum_i c_i(n) / (2^{2i} (2i+1)) vanishes exactly."""
    row = c_table(n)
    total = sum(c / (Fraction(4) ** i * (2 * i + 1)) for i, c in enumerate(row))
    return total == 0


# reentrant: building the sine polynomial re-enters for its cosine source
_poly_lock = threading.RLock()
_poly_cache = {}


def poly_C(n):
    """Even bracket polynomial of the alternating cosine family, shift 0.

    poly_C(1) is <z>^2 - 1/12; higher orders follow from c_table(n) with
    c_i(n) at power 2i.
    """
    _check_order(n, 1)
    key = ("C", n)
    with _poly_lock:
        p = _poly_cache.get(key)
        if p is None:
            row = c_table(n)
            coeffs = [ZERO] * (2 * len(row) - 1)
            for i, c in enumerate(row):
                coeffs[2 * i] = c
            p = BracketPoly(tuple(coeffs))
            _poly_cache[key] = p
    return p


def poly_S(n):
    """Odd bracket polynomial of the alternating sine family, shift 0.

    poly_S(0) is -<z>.  For n >= 1 the polynomial is twice the
    antiderivative of poly_C(n); the closure constraint guarantees the
    antiderivative has no staircase component, and we verify that rather
    than assume it.
    """
    _check_order(n, 0)
    key = ("S", n)
    with _poly_lock:
        p = _poly_cache.get(key)
        if p is None:
            if n == 0:
                p = BracketPoly((ZERO, Fraction(-1)))
            else:
                anti = integrate_bracket_poly(poly_C(n))
                if anti.nonperiodic != 0:
                    raise InternalConsistencyError(
                        "antiderivative of the order-%d even polynomial kept a "
                        "nonperiodic coefficient %s; the closure constraint is "
                        "violated" % (n, anti.nonperiodic)
                    )
                p = BracketPoly(tuple(2 * c for c in anti.poly.coefficients))
            _poly_cache[key] = p
    return p


def sin_poly_variant(n):
    """As-printed general formula for the odd sine family, kept for arbitration.

    A published general expression for the order-n sine family reads

        2 sum_{i=1}^{n-1} c_i(n)/(2i+1) * [<z>^{2i} - 4^{-i}]

    which is even in <z> and empty at n=1, so it cannot equal the odd
    series it claims to describe.  It is retained verbatim as the losing
    candidate of the arbitration suite; poly_S carries the derived form.
    """
    _check_order(n, 1)
    row = c_table(n)
    coeffs = [ZERO] * max(2 * n - 1, 1)
    for i in range(1, n):
        w = 2 * row[i] / (2 * i + 1)
        coeffs[2 * i] += w
        coeffs[0] -= w / Fraction(4) ** i
    return BracketPoly(tuple(coeffs))


def integrate_bracket_poly(p):
    """Definite integral of p from 0 to z, exact in rational arithmetic.

    Odd powers integrate to pure bracket powers; the shift-1/2 case picks
    up the constant -2^-(j+1)/(j+1) that keeps the primitive zero at the
    origin.  Even powers (the constant included) integrate to an odd
    power plus the staircase carrier weighted by 4^(-j/2)/(j+1); at shift
    1/2 the carrier value 1/2 at the origin exactly cancels the bracket
    term there, so no further constant is needed.
    """
    if not isinstance(p, BracketPoly):
        raise DomainError(f"expected a BracketPoly, got {type(p).__name__}")
    coeffs = [ZERO] * (len(p.coefficients) + 1)
    nonper = ZERO
    half_shift = p.shift == ONE_HALF
    for j, c in enumerate(p.coefficients):
        if c == 0:
            continue
        term = Fraction(c, j + 1)
        coeffs[j + 1] += term
        if j % 2 == 0:
            nonper += term / Fraction(4) ** (j // 2)
        elif half_shift:
            coeffs[0] -= term * Fraction(1, 2 ** (j + 1))
    return IntegratedPoly(BracketPoly(tuple(coeffs), p.shift), nonper)


def eval_poly(p, z):
    """Horner evaluation of p at the bracket value centered(z - shift).

    Rational z keeps everything exact and returns a Fraction; floats use
    the cached float coefficients.  The float path's error is a few ulps
    because every coefficient is below one and the bracket variable
    stays inside [-1/2, 1/2).
    """
    if not isinstance(p, BracketPoly):
        raise DomainError(f"expected a BracketPoly, got {type(p).__name__}")
    if isinstance(z, Rational):
        w = centered(Fraction(z) - p.shift)
        acc = ZERO
        for c in reversed(p.coefficients):
            acc = acc * w + c
        return acc
    zf = float(z)
    if not math.isfinite(zf):
        raise DomainError(f"polynomial argument must be finite, got {z!r}")
    w = centered(zf - float(p.shift))
    acc = 0.0
    for c in reversed(p._float_coeffs):
        acc = acc * w + c
    return acc
