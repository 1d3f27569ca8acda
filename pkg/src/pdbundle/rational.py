"""Exact rational arithmetic helpers.

All geometry and filtration values in this package are exact rationals.
gmpy2.mpq is used when available (roughly an order of magnitude faster than
fractions.Fraction); the stdlib Fraction is a drop-in fallback.
"""
from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rat(num, den=None):
        if den is None:
            return _mpq(num)
        return _mpq(num, den)

    RAT_ZERO = _mpq(0)
    RAT_ONE = _mpq(1)
except ImportError:  # pragma: no cover
    def rat(num, den=None):
        if den is None:
            return Fraction(num)
        return Fraction(num, den)

    RAT_ZERO = Fraction(0)
    RAT_ONE = Fraction(1)

INF = float("inf")


def parse_rational(text: str):
    """Parse an integer, exact decimal, or p/q literal into a rational.

    Examples: "3", "-1.25", "2/7". Raises ValueError on anything else
    (floats in scientific notation are deliberately rejected: inputs are
    required to be exactly representable).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty number")
    if "/" in s:
        num, _, den = s.partition("/")
        return rat(int(num), int(den))
    if "." in s:
        sign = -1 if s.startswith("-") else 1
        if s[0] in "+-":
            s = s[1:]
        whole, _, frac = s.partition(".")
        if not (whole or frac) or not (whole + frac).isdigit():
            raise ValueError(f"not an exact decimal: {text!r}")
        scale = 10 ** len(frac)
        return rat(sign * (int(whole or "0") * scale + int(frac or "0")), scale)
    try:
        return rat(int(s))
    except ValueError:
        raise ValueError(f"not an exact number: {text!r}") from None


def render_rational(value) -> str:
    """Render a rational as its shortest exact decimal, else as p/q.

    A denominator of the form 2^a * 5^b has an exact finite decimal
    expansion; anything else falls back to the p/q form. Integers render
    without a decimal point.
    """
    num = int(value.numerator)
    den = int(value.denominator)
    if den == 1:
        return str(num)
    d = den
    exp2 = 0
    while d % 2 == 0:
        d //= 2
        exp2 += 1
    exp5 = 0
    while d % 5 == 0:
        d //= 5
        exp5 += 1
    if d != 1:
        return f"{num}/{den}"
    digits = max(exp2, exp5)
    scaled = abs(num) * (10**digits) // den
    text = str(scaled).rjust(digits + 1, "0")
    sign = "-" if num < 0 else ""
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def render_extended(value) -> str:
    """Like render_rational but maps the +infinity death sentinel to 'inf'."""
    if value == INF:
        return "inf"
    return render_rational(value)
