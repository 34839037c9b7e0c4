"""Direct minimisation of beta(k, c, n) over c, as a check on alpha(k, n).

The profile c -> beta(k, c, n) is a maximum of monotone pieces and has a
single dip: a log-spaced grid locates it and ternary reduction shrinks the
bracket around the best grid point.  No derivatives are used.
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .beta import alpha_kn, beta_eval, epsilon_kn
from .errors import DomainError
from .exact import Enc, RatLike, as_rat, dyadic_floor, floor_log10, rat_to_str, root_enclosure, to_scidec
from .recurrences import Variant
from .thresholds import delta_kn, h_inv

SCAN_REL_WIDTH = Fraction(1, 10**15)
_GRID_BITS = 64


@dataclass(frozen=True)
class Grid:
    c_min: Fraction
    c_max: Fraction
    steps: int
    spacing: str = "log"  # "log" in c-1, "linear" in c, or "inverse" in 1/(c-1)

    def __post_init__(self):
        object.__setattr__(self, "c_min", as_rat(self.c_min))
        object.__setattr__(self, "c_max", as_rat(self.c_max))
        if self.c_min <= 1:
            raise DomainError("grid must start above c = 1")
        if self.c_max < self.c_min or self.steps < 1:
            raise DomainError("empty grid")
        if self.spacing not in ("log", "linear", "inverse"):
            raise DomainError(f"unknown spacing {self.spacing!r}")

    def points(self) -> list[Fraction]:
        if self.steps == 1 or self.c_min == self.c_max:
            return [self.c_min]
        m = self.steps - 1
        if self.spacing == "linear":
            return [self.c_min + (self.c_max - self.c_min) * i / m for i in range(self.steps)]
        if self.spacing == "inverse":
            u0, u1 = 1 / (self.c_min - 1), 1 / (self.c_max - 1)
            return [1 + 1 / (u0 + (u1 - u0) * i / m) for i in range(self.steps)]
        lo, ratio = self.c_min - 1, (self.c_max - 1) / (self.c_min - 1)
        pts = [self.c_min]
        for i in range(1, m):
            step = root_enclosure(ratio**i, m, Fraction(1, 2**_GRID_BITS)).lo
            pts.append(1 + dyadic_floor(lo * step, _GRID_BITS))
        pts.append(self.c_max)
        return pts


DEFAULT_GRID = Grid(1 + Fraction(1, 1000), 1 + 10**9, 25, "log")


@dataclass(frozen=True)
class ScanResult:
    k: int
    n: int
    variant: Variant
    grid: Grid
    best_c: Fraction
    best_beta: Enc
    profile: tuple[tuple[Fraction, Enc], ...]
    refined: bool
    warning: str | None = None

    def to_csv(self, digits: int = 6) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["c", "beta_lo", "beta_hi"])
        for c, b in self.profile:
            w.writerow([rat_to_str(c), _beta_str(b.lo, digits), _beta_str(b.hi, digits)])
        return buf.getvalue()


def _beta_str(v: Fraction, digits: int) -> str:
    return str(to_scidec(v, digits, one_minus=Fraction(1, 2) < v < 1))


def _key(e: Enc):
    return (e.hi, e.lo)


def _trend(a: Enc, b: Enc) -> int:
    if a.hi < b.lo:
        return 1
    if b.hi < a.lo:
        return -1
    return 0


def is_single_dip(values: list[Enc]) -> bool:
    """No certified rise followed later by a certified fall."""
    rising = False
    for a, b in zip(values, values[1:]):
        t = _trend(a, b)
        if t > 0:
            rising = True
        elif t < 0 and rising:
            return False
    return True


def scan(k: int, n: int, variant: "Variant | str" = Variant.SECTION3, grid: Grid = DEFAULT_GRID,
         rel_width: RatLike = SCAN_REL_WIDTH, refine_decades: int = 3) -> ScanResult:
    """Grid-scan beta(k, ., n) and refine around the best point.

    The bracket between the neighbours of the best grid point is reduced by
    ternary steps until it has shrunk by ``10**refine_decades`` or the two
    probes can no longer be told apart.  A profile that is not single-dip is
    returned unrefined, with a warning.
    """
    variant = Variant.parse(variant)
    rel_width = as_rat(rel_width)

    def beta(c):
        return beta_eval(k, n, c, variant, rel_width).value

    pts = grid.points()
    profile = [(c, beta(c)) for c in pts]
    i_best = min(range(len(profile)), key=lambda i: _key(profile[i][1]))
    best_c, best_b = profile[i_best]

    if not is_single_dip([b for _, b in profile]):
        msg = f"beta profile for k={k}, n={n} is not single-dip; returning raw profile"
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
        return ScanResult(k, n, variant, grid, best_c, best_b, tuple(profile), False, msg)
    if len(pts) < 3:
        return ScanResult(k, n, variant, grid, best_c, best_b, tuple(profile), False)

    lo = pts[max(i_best - 1, 0)]
    hi = pts[min(i_best + 1, len(pts) - 1)]
    target = (hi - lo) / 10**refine_decades
    while hi - lo > target:
        m1 = dyadic_floor(lo + (hi - lo) / 3, _GRID_BITS)
        m2 = dyadic_floor(hi - (hi - lo) / 3, _GRID_BITS)
        if not lo < m1 < m2 < hi:
            break
        b1, b2 = beta(m1), beta(m2)
        for c, b in ((m1, b1), (m2, b2)):
            if _key(b) < _key(best_b):
                best_c, best_b = c, b
        t = _trend(b1, b2)
        if t > 0:
            hi = m2
        elif t < 0:
            lo = m1
        else:
            lo, hi = m1, m2
    return ScanResult(k, n, variant, grid, best_c, best_b, tuple(profile), True)


def crossing_grid(k: int, n: int, variant: "Variant | str" = Variant.SECTION3, per_decade: int = 2) -> Grid:
    """A log grid reaching three decades past the estimated crossing c ~ delta / eps^(1/n)."""
    eps = epsilon_kn(k, n, variant)
    delta = delta_kn(k, n, variant)
    c_est = delta.hi / root_enclosure(eps.lo, n, Fraction(1, 100)).lo
    c_max = max(Fraction(10**9), 1000 * c_est)
    c_max = 1 + dyadic_floor(c_max, 16)
    decades = 4 + floor_log10(c_max)
    return Grid(1 + Fraction(1, 1000), c_max, decades * per_decade + 1, "log")


def certify_above_limit(k: int, n: int, variant: Variant, c: Fraction, max_digits: int = 400) -> bool:
    """Certify beta(k, c, n) > 1 - eps_{k,n} via h^-1_{k,n}(c) < delta_{k,n}.

    The full-descent term equals 1 - eps with h^-1_{k,n}(c) replaced by
    delta, and increases as that argument decreases, so separating the two
    enclosures is enough.
    """
    digits = 12
    while digits <= max_digits:
        w = Fraction(1, 10**digits)
        if h_inv(k, n, variant, c, w).hi < delta_kn(k, n, variant, w).lo:
            return True
        digits *= 2
    return False


@dataclass(frozen=True)
class GapReport:
    k: int
    n: int
    inf_estimate: Enc
    one_minus_eps: Enc
    relative_gap: Fraction  # (inf - (1 - eps)) / eps from enclosure midpoints
    certified_above: bool  # inf >= 1 - eps certified at every sampled c
    gap_certified_positive: bool
    scan: ScanResult


def gap_report(k: int, n: int, variant: "Variant | str" = Variant.SECTION3,
               grid: Grid | None = None) -> GapReport:
    """Compare the scanned infimum of beta with the limit value 1 - eps."""
    if k < 2:
        raise DomainError("gap report needs k >= 2")
    variant = Variant.parse(variant)
    grid = grid or crossing_grid(k, n, variant)
    res = scan(k, n, variant, grid)
    eps = epsilon_kn(k, n, variant, SCAN_REL_WIDTH)
    alpha = alpha_kn(k, n, variant, SCAN_REL_WIDTH)
    sampled = [c for c, _ in res.profile] + [res.best_c]
    certified = all(certify_above_limit(k, n, variant, c) for c in sampled)
    rel_gap = (res.best_beta.mid - alpha.mid) / eps.mid
    return GapReport(k, n, res.best_beta, alpha, rel_gap, certified,
                     res.best_beta.lo > alpha.hi, res)
