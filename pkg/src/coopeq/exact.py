"""Exact rational helpers shared by the solvers."""
from fractions import Fraction
from math import isqrt
from numbers import Rational

__all__ = ["to_fraction", "exact_value", "rational_sqrt", "fmt_number"]


def to_fraction(x):
    """Convert a money value to a Fraction without binary rounding.

    Floats go through their shortest decimal repr, so ``0.1`` becomes
    ``1/10`` rather than the nearest double. Strings such as ``"2/3"`` are
    accepted as well.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not money values")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def exact_value(x):
    """Like ``to_fraction`` but integral values come back as plain ints.

    Payoff tables are mostly integral and int comparisons are far cheaper
    than Fraction ones; callers that divide must wrap an operand in Fraction.
    """
    q = to_fraction(x)
    return q.numerator if q.denominator == 1 else q


def rational_sqrt(q):
    """Return sqrt(q) as a Fraction when it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def fmt_number(x, places=6):
    """Render ``p/q (decimal)`` for rationals, plain decimal otherwise."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return f"{x.numerator} ({float(x):.{places}f})"
        return f"{x.numerator}/{x.denominator} ({float(x):.{places}f})"
    if isinstance(x, int) and not isinstance(x, bool):
        return f"{x} ({float(x):.{places}f})"
    return f"{float(x):.{places}f}"
