from fractions import Fraction

import pytest

import alphakn.search as search
from alphakn.beta import beta_eval, epsilon_kn
from alphakn.errors import DomainError
from alphakn.exact import Enc
from alphakn.recurrences import Variant
from alphakn.search import DEFAULT_GRID, Grid, crossing_grid, gap_report, is_single_dip, scan
from alphakn.thresholds import gamma_enc, h_inv

S3 = Variant.SECTION3


def gamma_part(b: Enc) -> Fraction:
    return 1 - b.mid


# grids

def test_default_grid_spans_twelve_decades():
    pts = DEFAULT_GRID.points()
    assert len(pts) == 25
    assert pts[0] == 1 + Fraction(1, 1000) and pts[-1] == 1 + 10**9
    assert all(a < b for a, b in zip(pts, pts[1:]))
    # half-decade steps in c - 1
    r = (pts[5] - 1) / (pts[4] - 1)
    assert abs(r * r - 10) < Fraction(1, 10**6)


@pytest.mark.parametrize("spacing", ["linear", "inverse", "log"])
def test_grid_spacings_are_increasing(spacing):
    pts = Grid(Fraction(11, 10), 50, 9, spacing).points()
    assert len(pts) == 9
    assert pts[0] == Fraction(11, 10) and pts[-1] == 50
    assert all(a < b for a, b in zip(pts, pts[1:]))


def test_grid_validation():
    with pytest.raises(DomainError):
        Grid(1, 5, 3)
    with pytest.raises(DomainError):
        Grid(3, 2, 3)
    with pytest.raises(DomainError):
        Grid(2, 3, 3, "cubic")


# scans

@pytest.mark.parametrize("n", range(1, 11))
def test_k1_minimiser_near_two(n):
    res = scan(1, n)
    assert res.refined
    assert abs(res.best_c - 2) <= Fraction(5, 100)
    closed = gamma_enc(2, h_inv(1, n, S3, 2), n)
    assert abs(gamma_part(res.best_beta) - closed.mid) <= closed.mid / 1000


def test_single_point_grid():
    c = Fraction(5, 2)
    res = scan(2, 4, grid=Grid(c, c, 1))
    assert res.best_c == c
    assert res.best_beta == beta_eval(2, 4, c, S3, search.SCAN_REL_WIDTH).value
    assert not res.refined


def test_scan_two_two_matches_epsilon():
    res = scan(2, 2)
    e = epsilon_kn(2, 2).mid
    assert abs(gamma_part(res.best_beta) - e) <= e / 1000


@pytest.mark.parametrize("k,n", [(1, 3), (2, 2), (3, 5)])
def test_profile_ends_increasing(k, n):
    # the grid must reach past the crossing, which for (3, 5) lies beyond 1e9
    res = scan(k, n, grid=crossing_grid(k, n))
    (_, a), (_, b) = res.profile[-2:]
    assert a.hi <= b.hi and a.lo <= b.lo


def test_best_is_below_every_profile_entry():
    res = scan(2, 3)
    assert all(res.best_beta.hi <= b.hi for _, b in res.profile)


def test_scan_is_deterministic():
    g = Grid(Fraction(3, 2), 10**6, 13)
    assert scan(2, 5, grid=g) == scan(2, 5, grid=g)


def test_scan_csv():
    res = scan(1, 2, grid=Grid(Fraction(3, 2), 3, 3, "linear"))
    lines = res.to_csv().splitlines()
    assert lines[0] == "c,beta_lo,beta_hi"
    assert lines[1].startswith("3/2,1 - ")
    assert len(lines) == 4


def test_single_dip_detection():
    up, down = Enc(2, 3), Enc(0, 1)
    assert is_single_dip([Enc(5, 6), up, down, down])
    assert is_single_dip([Enc(5, 6), down, up])
    assert not is_single_dip([down, up, down])


def test_non_single_dip_profile_is_returned_raw(monkeypatch):
    values = iter([Enc(1, 1), Enc(3, 3), Enc(2, 2), Enc(4, 4)])

    class Fake:
        def __init__(self, *args):
            self.value = next(values)

    monkeypatch.setattr(search, "beta_eval", Fake)
    with pytest.warns(RuntimeWarning):
        res = scan(1, 1, grid=Grid(2, 5, 4, "linear"))
    assert not res.refined and res.warning
    assert res.best_c == 2


# gap report

def test_gap_two_two():
    rep = gap_report(2, 2)
    assert rep.certified_above and rep.gap_certified_positive
    assert 0 < rep.relative_gap < Fraction(1, 1000)


def test_gap_two_three():
    rep = gap_report(2, 3)
    assert rep.gap_certified_positive and rep.relative_gap > 0


def test_gap_three_three_certified():
    rep = gap_report(3, 3)
    assert rep.certified_above
    assert rep.inf_estimate.hi >= rep.one_minus_eps.lo


def test_gap_needs_k2():
    with pytest.raises(DomainError):
        gap_report(1, 3)
