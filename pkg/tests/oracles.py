"""Reference computations that share no code with the package.

These run in mpmath floating point with a wide working precision and solve
``A x (1 + x/2k)^k = target`` by fixed-point iteration on the ratio
``y = x / (target/A)``, i.e. ``y = (1 + y x0/2k)^-k``.  Arguments of the
form ``c = 1 + t`` are passed as ``t`` so nothing is lost to ``1 + tiny``.
"""

from fractions import Fraction

import mpmath
from mpmath import mp, mpf

mp.dps = 60


def c_section3(k, n):
    c = 1
    for _ in range(k):
        c = (16 * k) ** (n - 1) * (1 + 10 * c**n + 3 + 10 * c)
    return c


def c_appendix(k, n):
    c = 1
    for _ in range(k):
        c = (16 * k) ** (n - 1) * (1 + 10 * c) ** n + 3 + 10 * c
    return c


def _A(k, n, cfun=c_section3):
    return mpf(10 ** (k + 2)) * mpf(cfun(k, n))


def solve_barrier(k, n, target, cfun=c_section3):
    x0 = target / _A(k, n, cfun)
    y = mpf(1)
    for _ in range(200):
        y_new = (1 + y * x0 / (2 * k)) ** (-k)
        if abs(y_new - y) <= mpf(10) ** (-mp.dps + 5):
            y = y_new
            break
        y = y_new
    return x0 * y


def delta(k, n, cfun=c_section3):
    return solve_barrier(k, n, mpf(1), cfun)


def h_inv_t(k, n, t, cfun=c_section3):
    """h^-1_{k,n}(1 + t)."""
    return solve_barrier(k, n, t / (1 + t), cfun)


def gamma_t(t, x, n):
    """gamma(1 + t, x, n)."""
    return 1 / (1 + ((1 + t) / x) ** n)


def epsilon(k, n, cfun=c_section3):
    if k == 1:
        return gamma_t(mpf(1), h_inv_t(1, n, mpf(1), cfun), n)
    t = delta(k, n, cfun) / (2 * k)
    for j in range(k - 1, 1, -1):
        t = h_inv_t(j, n, t, cfun) / (2 * j)
    return gamma_t(t, h_inv_t(1, n, t, cfun), n)


def to_mpf(q: Fraction):
    return mpf(q.numerator) / mpf(q.denominator)


def rel_diff(a, b):
    return abs(a - b) / abs(b)


def bisect_root(x: Fraction, r: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Plain rational bisection for y^r = x on [0, max(1, x)]."""
    lo, hi = Fraction(0), max(Fraction(1), x)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid**r <= x:
            lo = mid
        else:
            hi = mid
    return lo, hi


__all__ = ["mpmath", "mp", "mpf"]
