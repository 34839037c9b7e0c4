"""Exact rationals, certified enclosures and decimal rendering.

Every scalar in the package is a :class:`fractions.Fraction`.  Quantities that
are only known as roots or limits are carried as an :class:`Enc`, a closed
rational interval guaranteed to contain the true value.  Nothing in here ever
touches a hardware float, so magnitudes such as ``10**-20180`` are handled the
same way as ``1/2``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import DomainError, PrecisionError, UsageError

Rat = Fraction
RatLike = Union[int, Fraction, str]

# Python caps int<->str conversion at a few thousand digits; numbers in the
# tables reach tens of thousands, so conversion is done in chunks below it.
_CHUNK_DIGITS = 2048


def as_rat(x: RatLike) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` or decimal strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


# ---------------------------------------------------------------------------
# integer helpers


def int_to_str(n: int) -> str:
    """Decimal string of an arbitrarily large int."""
    if n < 0:
        return "-" + int_to_str(-n)
    if n.bit_length() < 6000:
        return str(n)
    # split around a power of ten with roughly half the digits
    half = (n.bit_length() * 30103 // 100000) // 2
    hi, lo = divmod(n, 10**half)
    return int_to_str(hi) + int_to_str(lo).rjust(half, "0")


def str_to_int(s: str) -> int:
    """Inverse of :func:`int_to_str`."""
    s = s.strip()
    if s.startswith("-"):
        return -str_to_int(s[1:])
    if s.startswith("+"):
        s = s[1:]
    if not s.isdigit():
        raise UsageError(f"not an integer literal: {s[:40]!r}")
    if len(s) <= _CHUNK_DIGITS:
        return int(s)
    half = len(s) // 2
    tail = len(s) - half
    return str_to_int(s[:half]) * 10**tail + str_to_int(s[half:])


def iroot(n: int, r: int) -> int:
    """Floor of the real r-th root of a nonnegative integer."""
    if n < 0:
        raise DomainError("iroot of a negative integer")
    if r < 1:
        raise DomainError("root index must be positive")
    if n < 2 or r == 1:
        return n
    x = 1 << -(-n.bit_length() // r)  # >= true root
    while True:
        y = ((r - 1) * x + n // x ** (r - 1)) // r
        if y >= x:
            return x
        x = y


def floor_log2(q: Fraction) -> int:
    """Largest e with 2**e <= q, for q > 0."""
    a, b = q.numerator, q.denominator
    if a <= 0:
        raise DomainError("floor_log2 needs a positive argument")
    e = a.bit_length() - b.bit_length()
    if e >= 0:
        if a < b << e:
            e -= 1
    elif a << -e < b:
        e -= 1
    return e


def floor_log10(q: Fraction) -> int:
    """Largest e with 10**e <= q, for q > 0."""
    a, b = q.numerator, q.denominator
    if a <= 0:
        raise DomainError("floor_log10 needs a positive argument")
    e = (a.bit_length() - b.bit_length()) * 30103 // 100000

    def ge_pow(e):  # q >= 10**e
        return a >= b * 10**e if e >= 0 else a * 10**-e >= b

    while not ge_pow(e):
        e -= 1
    while ge_pow(e + 1):
        e += 1
    return e


def dyadic_floor(q: Fraction, bits: int) -> Fraction:
    """Round q toward -inf to a dyadic rational with `bits` significant bits."""
    if q == 0:
        return Fraction(0)
    if q < 0:
        return -dyadic_ceil(-q, bits)
    s = bits - 1 - floor_log2(q)
    a, b = q.numerator, q.denominator
    if s >= 0:
        return Fraction((a << s) // b, 1 << s)
    return Fraction((a // (b << -s)) << -s)


def dyadic_ceil(q: Fraction, bits: int) -> Fraction:
    """Round q toward +inf to a dyadic rational with `bits` significant bits."""
    if q == 0:
        return Fraction(0)
    if q < 0:
        return -dyadic_floor(-q, bits)
    s = bits - 1 - floor_log2(q)
    a, b = q.numerator, q.denominator
    if s >= 0:
        return Fraction(-((-(a << s)) // b), 1 << s)
    return Fraction((-((-a) // (b << -s))) << -s)


def bits_for(rel_width: Fraction) -> int:
    """Mantissa bits that resolve a relative width of `rel_width`."""
    rel_width = as_rat(rel_width)
    if rel_width <= 0:
        raise DomainError("relative width must be positive")
    return max(8, -floor_log2(rel_width) + 4)


# ---------------------------------------------------------------------------
# rationals


def rat_pow(x: RatLike, e: int) -> Fraction:
    """Exact ``x**e`` for any integer exponent."""
    x = as_rat(x)
    if e < 0 and x == 0:
        raise DomainError("zero raised to a negative power")
    return x**e


def rat_to_str(q: Fraction) -> str:
    """Exact ``p/q`` form (just ``p`` for integers)."""
    q = as_rat(q)
    if q.denominator == 1:
        return int_to_str(q.numerator)
    return f"{int_to_str(q.numerator)}/{int_to_str(q.denominator)}"


_DECIMAL_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


def parse_rat(s: str) -> Fraction:
    """Parse ``p/q``, an integer, or a decimal/scientific literal exactly."""
    s = s.strip()
    if "/" in s:
        p, _, q = s.partition("/")
        den = str_to_int(q)
        if den == 0:
            raise DomainError("zero denominator")
        return Fraction(str_to_int(p), den)
    if _DECIMAL_RE.match(s):
        return Fraction(s)
    raise UsageError(f"not a rational literal: {s[:40]!r}")


# ---------------------------------------------------------------------------
# enclosures


@dataclass(frozen=True)
class Enc:
    """Closed interval ``[lo, hi]`` certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rat(self.lo), as_rat(self.hi)
        if lo > hi:
            raise DomainError("enclosure with lo > hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def exact(cls, x: RatLike) -> "Enc":
        x = as_rat(x)
        return cls(x, x)

    @classmethod
    def of(cls, x: "RatLike | Enc") -> "Enc":
        return x if isinstance(x, Enc) else cls.exact(x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def rel_width(self):
        """Width relative to the endpoint nearest zero; ``inf`` across zero."""
        if self.lo == self.hi:
            return Fraction(0)
        if self.lo > 0:
            return self.width / self.lo
        if self.hi < 0:
            return self.width / -self.hi
        return math.inf

    def contains(self, x: "RatLike | Enc") -> bool:
        if isinstance(x, Enc):
            return self.lo <= x.lo and x.hi <= self.hi
        x = as_rat(x)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: "Enc") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def below(self, other: "Enc") -> bool:
        """True when every point of self is strictly below every point of other."""
        return self.hi < other.lo

    def map_increasing(self, f: Callable[[Fraction], Fraction]) -> "Enc":
        return Enc(f(self.lo), f(self.hi))

    def map_decreasing(self, f: Callable[[Fraction], Fraction]) -> "Enc":
        return Enc(f(self.hi), f(self.lo))

    def hull(self, other: "Enc") -> "Enc":
        return Enc(min(self.lo, other.lo), max(self.hi, other.hi))

    def outward(self, bits: int) -> "Enc":
        """Round both endpoints outward to dyadics with `bits` mantissa bits."""
        return Enc(dyadic_floor(self.lo, bits), dyadic_ceil(self.hi, bits))

    def __neg__(self):
        return Enc(-self.hi, -self.lo)

    def __add__(self, other):
        o = Enc.of(other)
        return Enc(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Enc.of(other))

    def __rsub__(self, other):
        return Enc.of(other) + (-self)

    def __mul__(self, other):
        o = Enc.of(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Enc(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Enc.of(other)
        if o.lo <= 0 <= o.hi:
            raise DomainError("division by an enclosure containing zero")
        return self * Enc(1 / o.hi, 1 / o.lo)

    def __str__(self):
        return f"[{rat_to_str(self.lo)}, {rat_to_str(self.hi)}]"


def root_enclosure(x: RatLike, r: int, rel_width: RatLike) -> Enc:
    """Enclose the real r-th root of ``x >= 0``.

    Perfect r-th powers of rationals come back as degenerate enclosures.
    Otherwise the root is bracketed by consecutive dyadics ``m/2**s`` and
    ``(m+1)/2**s`` from an integer root of ``floor(x * 2**(r*s))``.
    """
    x, rel_width = as_rat(x), as_rat(rel_width)
    if x < 0:
        raise DomainError("real root of a negative number")
    if r < 1:
        raise DomainError("root index must be >= 1")
    if rel_width <= 0:
        raise DomainError("relative width must be positive")
    if x == 0 or r == 1:
        return Enc.exact(x)
    a, b = x.numerator, x.denominator
    ra, rb = iroot(a, r), iroot(b, r)
    if ra**r == a and rb**r == b:
        return Enc.exact(Fraction(ra, rb))

    bits = bits_for(rel_width)
    s = bits - floor_log2(x) // r + 1
    while True:
        if s >= 0:
            big = (a << (r * s)) // b
        else:
            big = a // (b << (-r * s))
        m = iroot(big, r)
        if m > 0 and Fraction(1, m) <= rel_width:
            scale = Fraction(2) ** -s
            return Enc(m * scale, (m + 1) * scale)
        s += bits


# ---------------------------------------------------------------------------
# decimal rendering


@dataclass(frozen=True)
class SciDec:
    """A rounded decimal ``±d.ddd × 10^exp10``, optionally shown as ``1 - ...``."""

    sign: str
    mantissa: str
    exp10: int
    one_minus: bool = False

    def __str__(self):
        s = "-" if self.sign == "-" else ""
        prefix = "1 - " if self.one_minus else ""
        return f"{prefix}{s}{self.mantissa}e{self.exp10}"

    def to_rat(self) -> Fraction:
        digits = self.mantissa.replace(".", "")
        val = Fraction(int(digits)) * Fraction(10) ** (self.exp10 - (len(digits) - 1))
        if self.sign == "-":
            val = -val
        return 1 - val if self.one_minus else val


_SCIDEC_RE = re.compile(r"^(1 - )?([+-]?)(\d)(?:\.(\d*))?e([+-]?\d+)$")


def parse_scidec(s: str) -> SciDec:
    m = _SCIDEC_RE.match(s.strip())
    if not m:
        raise UsageError(f"not a SciDec string: {s!r}")
    one_minus, sign, lead, frac, exp = m.groups()
    mantissa = lead + ("." + frac if frac else "")
    return SciDec("-" if sign == "-" else "+", mantissa, int(exp), bool(one_minus))


def scidec_to_rat(s: str) -> Fraction:
    return parse_scidec(s).to_rat()


def _round_scidec(w: Fraction, digits: int) -> tuple[str, int, str]:
    """Half-even rounding of w to `digits` significant digits."""
    if w == 0:
        return "+", "0" + ("." + "0" * (digits - 1) if digits > 1 else ""), 0
    sign = "-" if w < 0 else "+"
    a = abs(w)
    e = floor_log10(a)
    shift = digits - 1 - e
    scaled = a * 10**shift if shift >= 0 else a / 10**-shift
    m = round(scaled)  # Fraction.__round__ is half-even
    if m == 10**digits:
        m //= 10
        e += 1
    ds = str(m)
    mantissa = ds[0] + ("." + ds[1:] if digits > 1 else "")
    return sign, mantissa, e


def _first_ambiguous_digit(lo: Fraction, hi: Fraction, digits: int) -> int:
    """Index (0 = leading digit) where the expansions of lo and hi first differ."""
    if lo <= 0 <= hi or lo == hi:
        return 0
    a, b = sorted((abs(lo), abs(hi)))
    e = floor_log10(b)
    if floor_log10(a) != e:
        return 0
    for i in range(digits):
        shift = i - e
        ta = math.floor(a * Fraction(10) ** shift)
        tb = math.floor(b * Fraction(10) ** shift)
        if ta != tb:
            return i
    return digits - 1


def to_scidec(v: "RatLike | Enc", digits: int = 3, one_minus: bool = False) -> SciDec:
    """Render an exact value or an enclosure with `digits` significant digits.

    For an enclosure both endpoints must round to the same string; otherwise a
    :class:`PrecisionError` names the first undetermined digit.  With
    ``one_minus`` the value must lie in (1/2, 1) and the digits describe
    ``1 - v``.
    """
    if digits < 1:
        raise UsageError("digits must be positive")
    if isinstance(v, Enc):
        if one_minus and not (Fraction(1, 2) < v.lo and v.hi < 1):
            raise DomainError("one-minus display needs 1/2 < v < 1")
        lo, hi = (1 - v.hi, 1 - v.lo) if one_minus else (v.lo, v.hi)
        r_lo = _round_scidec(lo, digits)
        r_hi = _round_scidec(hi, digits)
        if r_lo != r_hi:
            i = _first_ambiguous_digit(lo, hi, digits)
            raise PrecisionError(
                f"enclosure too wide for {digits} digits (digit {i} undetermined)",
                digit_index=i,
            )
        sign, mantissa, e = r_lo
        return SciDec(sign, mantissa, e, one_minus)
    v = as_rat(v)
    if one_minus:
        if not Fraction(1, 2) < v < 1:
            raise DomainError("one-minus display needs 1/2 < v < 1")
        v = 1 - v
    sign, mantissa, e = _round_scidec(v, digits)
    return SciDec(sign, mantissa, e, one_minus)


def format_enc(enc: Enc, digits: int = 3, one_minus: bool = False) -> str:
    """One SciDec when the digits agree, else both endpoints."""
    try:
        return str(to_scidec(enc, digits, one_minus))
    except PrecisionError:
        if one_minus:
            lo, hi = 1 - enc.hi, 1 - enc.lo
            return f"1 - [{to_scidec(lo, digits)}, {to_scidec(hi, digits)}]"
        return f"[{to_scidec(enc.lo, digits)}, {to_scidec(enc.hi, digits)}]"
