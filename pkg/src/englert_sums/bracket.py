"""Bracket (sawtooth) variables: fractional part and centered fractional part.

Two piecewise-linear period-1 maps underlie every closed form in this
package:

* ``frac(z)``     = z - floor(z),         with range [0, 1)
* ``centered(z)`` = z - floor(z + 1/2),   with range [-1/2, 1/2)

Both accept floats and exact Fractions.  For Fraction input the result
is exact.  The half-integer convention matters: ``centered`` maps every
half-odd-integer to -1/2 (floor is right-continuous), which is the
convention the closed forms in this package assume at jump points.

The two maps are related by an exact identity,

    frac(z) == centered(z - 1/2) + 1/2,

which holds not just mathematically but in floating point for |z| up to
around 1e6: z - 1/2 is exact there, and the wrap adjustments below keep
the two computations consistent even within an ulp of the jump lattice.
"""

import math
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

ONE_HALF = Fraction(1, 2)


def _check_finite(z):
    # Fractions are always finite; only floats can smuggle in nan/inf.
    if isinstance(z, float) and not math.isfinite(z):
        raise DomainError(f"bracket functions need a finite argument, got {z!r}")


def frac(z):
    """Fractional part z - floor(z), in [0, 1).

    Exact for Fraction input.  For float input the subtraction can round
    up to exactly 1.0 when z sits within an ulp below an integer (the
    classic example is z = -2**-54); the result is wrapped back by 1 so
    the documented range always holds.
    """
    _check_finite(z)
    r = z - math.floor(z)
    if isinstance(r, float):
        if r >= 1.0:
            r -= 1.0
        elif r < 0.0:
            r += 1.0
    return r


def centered(z):
    """Centered fractional part z - floor(z + 1/2), in [-1/2, 1/2).

    Half-odd-integers map to -1/2 exactly, for floats and Fractions
    alike.  This is the sawtooth that all odd bracket polynomials are
    built from.  Float input within an ulp of the jump lattice
    z = 1/2 (mod 1) is wrapped to keep the result inside the range.
    """
    _check_finite(z)
    if isinstance(z, Rational):
        return z - math.floor(z + ONE_HALF)
    r = z - math.floor(z + 0.5)
    if r >= 0.5:
        r -= 1.0
    elif r < -0.5:
        r += 1.0
    return r
