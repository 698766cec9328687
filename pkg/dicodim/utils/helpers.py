"""Utility functions for dicodim."""

from fractions import Fraction


def fstr(x: Fraction | int) -> str:
    """Format a rational as ``num`` or ``num/den``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def integer_nth_root(x: int, n: int) -> int:
    """Largest integer r with r**n <= x."""
    if x < 0:
        raise ValueError("integer_nth_root needs a non-negative argument")
    if x < 2 or n == 1:
        return x
    # bit-length estimate, then Newton from above
    r = 1 << ((x.bit_length() + n - 1) // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def root_enclosure(x: Fraction | int, n: int, digits: int = 6) -> tuple[Fraction, Fraction]:
    """
    Rational interval [lo, hi] containing x**(1/n).

    The interval has width 10**-digits unless the root is exact at that
    precision, in which case lo == hi.

    Args:
        x: Non-negative rational.
        n: Root degree, n >= 1.
        digits: Decimal digits of precision.

    Returns:
        Tuple (lo, hi) of Fractions.
    """
    x = Fraction(x)
    if n < 1:
        raise ValueError(f"Root degree must be >= 1, got {n}")
    if x < 0:
        raise ValueError("root_enclosure needs a non-negative argument")
    scale = 10**digits
    # floor((x * scale**n) ** (1/n)) computed on integers
    num = x.numerator * scale**n
    r = integer_nth_root(num // x.denominator, n)
    # refine for the fractional part of num / den
    while Fraction(r + 1) ** n * x.denominator <= num:
        r += 1
    lo = Fraction(r, scale)
    if lo**n == x:
        return lo, lo
    return lo, Fraction(r + 1, scale)


def decimal_str(x: Fraction, digits: int = 6) -> str:
    """Human-readable decimal rendering of a rational (display only)."""
    scale = 10**digits
    q = round(x * scale)
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // scale}.{q % scale:0{digits}d}"
