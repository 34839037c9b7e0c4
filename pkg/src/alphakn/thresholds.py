"""The scalar layer: gamma, the barrier h_{k,n}, its asymptote and inverse.

``h_{k,n}(x) = 1 / (1 - p(x))`` with ``p(x) = A x (1 + x/2k)^k`` and
``A = 10^(k+2) C_{k,n}``.  Both the asymptote ``delta`` (``p = 1``) and the
inverse ``h^-1(c)`` (``p = 1 - 1/c``) are roots of ``p(x) = t`` for some
``t`` in (0, 1], found by bisection on dyadic rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError
from .exact import Enc, RatLike, as_rat, bits_for, dyadic_ceil, dyadic_floor, root_enclosure
from .recurrences import Variant, c_kn

DEFAULT_DIGITS = 6
DEFAULT_REL_WIDTH = Fraction(1, 10 ** (DEFAULT_DIGITS + 3))

# re-round the bracket after this many halvings to cap operand growth
_REROUND_EVERY = 64


def gamma(c: RatLike, eps: RatLike, n: int) -> Fraction:
    """Volume-defect threshold ``[1 + (c/eps)^n]^-1``."""
    c, eps = as_rat(c), as_rat(eps)
    if eps <= 0 or n < 1:
        raise DomainError("gamma needs eps > 0 and n >= 1")
    if c <= 1:
        raise DomainError("gamma needs c > 1")
    r = (c / eps) ** n
    return 1 / (1 + r)


def gamma_enc(c: "Enc | RatLike", eps: "Enc | RatLike", n: int) -> Enc:
    """gamma over enclosures: decreasing in c, increasing in eps."""
    c, eps = Enc.of(c), Enc.of(eps)
    return Enc(gamma(c.hi, eps.lo, n), gamma(c.lo, eps.hi, n))


@dataclass(frozen=True)
class BarrierPoly:
    """``p(x) = A x (1 + x/2k)^k`` for one (k, n, variant)."""

    k: int
    n: int
    variant: Variant
    A: int

    @property
    def coefficients(self) -> list[Fraction]:
        """Power-basis coefficients of p, index j holding the x^j term."""
        k = self.k
        return [Fraction(0)] + [
            Fraction(self.A * comb(k, j), (2 * k) ** j) for j in range(k + 1)
        ]

    def __call__(self, x: RatLike) -> Fraction:
        x = as_rat(x)
        return self.A * x * (1 + x / (2 * self.k)) ** self.k

    def h(self, x: RatLike) -> Fraction:
        x = as_rat(x)
        if x < 0:
            raise DomainError("h is defined for x >= 0")
        p = self(x)
        if p >= 1:
            raise DomainError("x at or beyond the asymptote of h")
        return 1 / (1 - p)

    def solve(self, t: Fraction, rel_width: Fraction) -> Enc:
        """Enclose the unique x > 0 with ``p(x) = t``, for 0 < t.

        Since ``(1 + x/2k)^k >= 1``, ``x0 = t/A`` overshoots and
        ``x0 / (1 + x0/2k)^k`` undershoots, so the bracket starts with a
        relative width of about ``x0/2``.
        """
        if t <= 0:
            raise DomainError("target must be positive")
        bits = bits_for(rel_width)
        x_hi = t / self.A
        x_lo = x_hi / (1 + x_hi / (2 * self.k)) ** self.k
        lo, hi = dyadic_floor(x_lo, bits), dyadic_ceil(x_hi, bits)
        steps = 0
        while (hi - lo) > rel_width * lo:
            mid = (lo + hi) / 2
            pm = self(mid)
            if pm == t:
                return Enc.exact(mid)
            if pm < t:
                lo = mid
            else:
                hi = mid
            steps += 1
            if steps % _REROUND_EVERY == 0:
                lo, hi = dyadic_floor(lo, bits + 8), dyadic_ceil(hi, bits + 8)
        return Enc(lo, hi)


@lru_cache(maxsize=None)
def barrier(k: int, n: int, variant: "Variant | str" = Variant.SECTION3) -> BarrierPoly:
    variant = Variant.parse(variant)
    return BarrierPoly(k, n, variant, 10 ** (k + 2) * c_kn(k, n, k, variant))


def h_eval(k: int, n: int, variant: "Variant | str", x: RatLike) -> Fraction:
    """Exact ``h_{k,n}(x)``; raises past the asymptote."""
    return barrier(k, n, Variant.parse(variant)).h(x)


@lru_cache(maxsize=4096)
def _delta(k, n, variant, rel_width):
    return barrier(k, n, variant).solve(Fraction(1), rel_width)


def delta_kn(k: int, n: int, variant: "Variant | str" = Variant.SECTION3,
             rel_width: RatLike = DEFAULT_REL_WIDTH) -> Enc:
    """Enclosure of the asymptote delta_{k,n}, certified by p(lo) < 1 < p(hi)."""
    return _delta(k, n, Variant.parse(variant), as_rat(rel_width))


@lru_cache(maxsize=65536)
def _h_inv_point(k, n, variant, c, rel_width):
    return barrier(k, n, variant).solve((c - 1) / c, rel_width)


def h_inv(k: int, n: int, variant: "Variant | str", c: "RatLike | Enc",
          rel_width: RatLike = DEFAULT_REL_WIDTH) -> Enc:
    """Enclosure of ``h_{k,n}^-1(c)`` for c > 1 (an Enc maps endpoint-wise)."""
    variant = Variant.parse(variant)
    rel_width = as_rat(rel_width)
    c = Enc.of(c)
    if c.lo <= 1:
        raise DomainError("h^-1 is defined for c > 1")
    lo = _h_inv_point(k, n, variant, c.lo, rel_width)
    if c.is_exact:
        return lo
    hi = _h_inv_point(k, n, variant, c.hi, rel_width)
    return Enc(lo.lo, hi.hi)


def excess_bound(h: RatLike, s: RatLike, n: int, rel_width: RatLike = DEFAULT_REL_WIDTH) -> Enc:
    """Enclosure of the excess estimate ``8 (h^n / s)^(1/(n-1))``.

    Valid under the hypothesis ``0 <= h <= s/2`` with ``n >= 2``.
    """
    h, s = as_rat(h), as_rat(s)
    if n < 2:
        raise DomainError("excess bound needs n >= 2")
    if s <= 0 or h < 0:
        raise DomainError("need s > 0 and h >= 0")
    if h > s / 2:
        raise DomainError("hypothesis h <= s/2 violated")
    root = root_enclosure(h**n / s, n - 1, rel_width)
    return Enc(8 * root.lo, 8 * root.hi)
