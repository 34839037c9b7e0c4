"""Expansion of beta(k, c, n) into gamma-terms, and the limits eps / alpha.

Unrolling the recursion for beta gives one ``1 - gamma`` term per strictly
decreasing chain ``k = k_0 > k_1 > ... > k_m >= 1``.  Along a chain

    c_0 = c,   c_{j+1} = 1 + h^-1_{k_j}(c_j) / (2 k_j),

and the term is ``1 - gamma(c_m, h^-1_{k_m}(c_m), n)``.  Every map here is
monotone, so enclosures are pushed through endpoint by endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError
from .exact import Enc, RatLike, as_rat, format_enc
from .recurrences import Variant
from .thresholds import DEFAULT_REL_WIDTH, delta_kn, gamma_enc, h_inv

# each refinement divides the working relative width by this factor
_REFINE_FACTOR = Fraction(1, 1000)
MAX_REFINE = 3


@dataclass(frozen=True, order=True)
class TermChain:
    levels: tuple[int, ...]

    def __post_init__(self):
        lv = tuple(self.levels)
        if not lv or lv[-1] < 1 or any(a <= b for a, b in zip(lv, lv[1:])):
            raise DomainError(f"not a strictly decreasing chain of positive levels: {lv}")
        object.__setattr__(self, "levels", lv)

    @property
    def k(self) -> int:
        return self.levels[0]

    @property
    def is_leading(self) -> bool:
        return len(self.levels) == 1

    @property
    def is_full_descent(self) -> bool:
        return self.levels == tuple(range(self.k, 0, -1))

    def __str__(self):
        return "[" + ",".join(map(str, self.levels)) + "]"


def beta_terms(k: int) -> list[TermChain]:
    """All 2^(k-1) chains for level k, lexicographic (full descent last)."""
    if k < 1:
        raise DomainError("beta_terms needs k >= 1")
    lower = range(k - 1, 0, -1)
    chains = [
        TermChain((k,) + sub)
        for r in range(k)
        for sub in combinations(lower, r)
    ]
    return sorted(chains)


def step_c(level: int, n: int, variant: Variant, c: Enc, rel_width: Fraction) -> Enc:
    """c -> 1 + h^-1_{level}(c) / (2 level)."""
    x = h_inv(level, n, variant, c, rel_width)
    return Enc(1 + x.lo / (2 * level), 1 + x.hi / (2 * level))


def chain_gamma(chain: TermChain, n: int, c: "RatLike | Enc", variant: Variant,
                rel_width: Fraction) -> Enc:
    """Enclosure of the gamma value at the leaf of `chain`."""
    c = Enc.of(c)
    for level in chain.levels[:-1]:
        c = step_c(level, n, variant, c, rel_width)
    last = chain.levels[-1]
    return gamma_enc(c, h_inv(last, n, variant, c, rel_width), n)


def one_minus(e: Enc) -> Enc:
    return Enc(1 - e.hi, 1 - e.lo)


@dataclass(frozen=True)
class BetaResult:
    k: int
    n: int
    c: Fraction
    variant: Variant
    value: Enc
    terms: tuple[tuple[TermChain, Enc], ...]
    argmax: tuple[TermChain, ...]

    @property
    def tie(self) -> bool:
        return len(self.argmax) > 1


def _candidates(gammas: list[tuple[TermChain, Enc]]) -> tuple[TermChain, ...]:
    # beta maximises 1 - gamma, so the argmax chains are the gamma minimisers
    bound = min(g.hi for _, g in gammas)
    return tuple(ch for ch, g in gammas if g.lo <= bound)


def beta_eval(k: int, n: int, c: RatLike, variant: "Variant | str" = Variant.SECTION3,
              rel_width: RatLike = DEFAULT_REL_WIDTH, max_refine: int = MAX_REFINE) -> BetaResult:
    """Evaluate every chain of beta(k, c, n) and report the maximum.

    When enclosures leave the maximising chain ambiguous the working width is
    tightened up to `max_refine` times; remaining ambiguity is returned as a
    tie rather than broken arbitrarily.
    """
    variant = Variant.parse(variant)
    c, rel_width = as_rat(c), as_rat(rel_width)
    if k == 0:
        return BetaResult(0, n, c, variant, Enc.exact(0), (), ())
    if c <= 1:
        raise DomainError("beta needs c > 1")
    chains = beta_terms(k)
    for attempt in range(max_refine + 1):
        gammas = [(ch, chain_gamma(ch, n, c, variant, rel_width)) for ch in chains]
        best = _candidates(gammas)
        if len(best) == 1 or attempt == max_refine:
            break
        rel_width *= _REFINE_FACTOR
    terms = tuple((ch, one_minus(g)) for ch, g in gammas)
    value = Enc(max(t.lo for _, t in terms), max(t.hi for _, t in terms))
    return BetaResult(k, n, c, variant, value, terms, best)


def epsilon_kn(k: int, n: int, variant: "Variant | str" = Variant.SECTION3,
               rel_width: RatLike = DEFAULT_REL_WIDTH) -> Enc:
    """Enclosure of eps_{k,n}, the large-c limit of the full-descent gamma.

    For k = 1 this is ``gamma(2, h^-1_{1,n}(2), n)``.  For k >= 2 the first
    step uses the asymptote in place of ``h^-1_{k,n}(c)``.
    """
    variant = Variant.parse(variant)
    rel_width = as_rat(rel_width)
    if k < 1 or n < 1:
        raise DomainError("need k >= 1 and n >= 1")
    if k == 1:
        c = Enc.exact(2)
    else:
        d = delta_kn(k, n, variant, rel_width)
        c = Enc(1 + d.lo / (2 * k), 1 + d.hi / (2 * k))
        for level in range(k - 1, 1, -1):
            c = step_c(level, n, variant, c, rel_width)
    return gamma_enc(c, h_inv(1, n, variant, c, rel_width), n)


def alpha_kn(k: int, n: int, variant: "Variant | str" = Variant.SECTION3,
             rel_width: RatLike = DEFAULT_REL_WIDTH) -> Enc:
    """alpha(k, n) = 1 - eps_{k,n}; display with ``one_minus=True``."""
    return one_minus(epsilon_kn(k, n, variant, rel_width))


@dataclass(frozen=True)
class Overlay:
    """A revised-table cell: a dash, an exact value, or an alpha enclosure."""

    kind: str  # "dash", "exact" or "alpha"
    exact: Fraction | None = None
    enc: Enc | None = None

    def __str__(self):
        if self.kind == "dash":
            return "-"
        if self.kind == "exact":
            e = self.exact
            return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"
        return format_enc(self.enc, 3, one_minus=True)


def alpha_revised(k: int, n: int, variant: "Variant | str" = Variant.SECTION3,
                  rel_width: RatLike = DEFAULT_REL_WIDTH) -> Overlay:
    """Cell of the revised table, with results from the literature overlaid.

    Dimensions n <= 3 get 0, k = 1 with n >= 4 gets 1/2, (1,1) and k > n are
    dashes; everything else is alpha(k, n).
    """
    if not (1 <= k <= 3 and 1 <= n <= 10):
        raise DomainError("revised table covers 1 <= k <= 3, 1 <= n <= 10")
    if k > n or (k, n) == (1, 1):
        return Overlay("dash")
    if n <= 3:
        return Overlay("exact", Fraction(0))
    if k == 1:
        return Overlay("exact", Fraction(1, 2))
    return Overlay("alpha", enc=alpha_kn(k, n, variant, rel_width))
