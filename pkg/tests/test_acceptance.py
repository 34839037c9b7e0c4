"""Acceptance criteria, one marked group of tests per criterion.

Each check compares against the printed tables at the tolerance the
criterion names.  The conftest prints a one-line verdict per criterion.
"""

import time
from fractions import Fraction

import pytest

from alphakn import recurrences, thresholds
from alphakn.beta import beta_terms, beta_eval, epsilon_kn
from alphakn.exact import floor_log10, parse_rat, parse_scidec, root_enclosure, to_scidec
from alphakn.published import PUBLISHED
from alphakn.recurrences import Variant, audit, c_kn
from alphakn.search import DEFAULT_GRID, gap_report, scan
from alphakn.tables import make_table, render
from alphakn.thresholds import delta_kn, gamma_enc, h_eval, h_inv

S3, APP = Variant.SECTION3, Variant.APPENDIX
CELLS = [(k, n) for k in range(1, 4) for n in range(1, 11) if k <= n]


def _cold():
    for fn in (thresholds._delta, thresholds._h_inv_point, thresholds.barrier, recurrences._c_sequence):
        fn.cache_clear()


def _timed(fn):
    _cold()
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _printed3(s: str) -> str:
    return str(to_scidec(parse_rat(s), 3))


@pytest.mark.criterion(1, "constants table: 27 cells, exact 3-digit match, < 1 s")
def test_criterion_1_constants():
    doc, secs = _timed(lambda: make_table("constants"))
    assert len(doc.cells) == 27
    bad = []
    for kn, printed in sorted(PUBLISHED["constants"].items()):
        got = doc.cell(*kn).value
        if got != _printed3(printed):
            bad.append(f"{kn}: computed {got} (exact {c_kn(*kn)}), printed {printed}")
    assert secs < 1, f"took {secs:.2f} s"
    assert not bad, "; ".join(bad)


@pytest.mark.criterion(2, "deltas table: 27 cells, exact 3-digit match, < 10 s")
def test_criterion_2_deltas():
    doc, secs = _timed(lambda: make_table("deltas"))
    assert len(doc.cells) == 27
    bad = []
    for kn, printed in sorted(PUBLISHED["deltas"].items()):
        cell = doc.cell(*kn)
        if cell.value != _printed3(printed):
            bad.append(f"{kn}: computed {cell.value} ({to_scidec(cell.enc, 6)}), printed {printed}")
    assert secs < 10, f"took {secs:.2f} s"
    assert not bad, "; ".join(bad)


def _eps_of(table_id, cell):
    e = cell.enc
    return Fraction(1) - e.mid if table_id == "alphas" else e.mid


@pytest.mark.criterion(3, "eps and alpha tables: 2 digits and exponent, (2,2) flagged near 1.19e-37, < 120 s")
def test_criterion_3_eps_alpha():
    def build():
        return make_table("epsilons"), make_table("alphas")

    (eps_doc, alpha_doc), secs = _timed(build)
    bad = []
    for table_id, doc in (("epsilons", eps_doc), ("alphas", alpha_doc)):
        assert len(doc.cells) == 27
        for kn, printed in sorted(PUBLISHED[table_id].items()):
            cell = doc.cell(*kn)
            ref = parse_scidec(printed)
            eps = _eps_of(table_id, cell)
            e = floor_log10(eps)
            mant = eps / Fraction(10) ** e
            if e != ref.exp10:
                bad.append(f"{table_id} {kn}: exponent {e} vs printed {ref.exp10}")
                continue
            if kn == (2, 2):
                if cell.flag != "erratum-suspect" or not cell.value.endswith("1.19e-37"):
                    bad.append(f"{table_id} (2,2): expected flagged 1.19e-37, got {cell.value} [{cell.flag}]")
                continue
            # within half a unit of the second significant digit
            if abs(mant - Fraction(ref.mantissa)) >= Fraction(5, 100):
                bad.append(f"{table_id} {kn}: mantissa {float(mant):.4f} vs printed {ref.mantissa}")
    assert alpha_doc.cell(3, 10).value == "1 - 1.24e-20180"
    assert secs < 120, f"took {secs:.2f} s"
    assert not bad, "; ".join(bad)


@pytest.mark.criterion(4, "revised table: exact 0 and 1/2 overlays, dashes where printed")
def test_criterion_4_overlay():
    doc = make_table("alphas-revised")
    printed = PUBLISHED["alphas-revised"]
    assert set(doc.cells) == set(printed)
    for (k, n), cell in doc.cells.items():
        if n <= 3:
            assert cell.value == "0", (k, n)
        elif k == 1:
            assert cell.value == "1/2", (k, n)
        if printed[(k, n)] in ("0", "1/2"):
            assert cell.value == printed[(k, n)]
    md = render(doc, "markdown")
    for k in range(1, 4):
        for n in range(1, 11):
            row = next(line for line in md.splitlines() if line.startswith(f"| n={n} |"))
            entry = row.split("|")[1 + k].strip()
            assert (entry == "-") == ((k, n) not in printed), (k, n, entry)


def _samples(k, n, variant):
    lo = delta_kn(k, n, variant).lo
    return [lo / 10, lo / 2, 9 * lo / 10]


@pytest.mark.criterion(5, "audit: appendix identities and inequalities, Ineq4 equality, section3 Ineq1 failure")
def test_criterion_5_audit():
    witness = None
    for k, n in [(k, n) for k in range(1, 4) for n in range(1, 11)]:
        for d0 in _samples(k, n, APP):
            rep = audit(k, n, APP, d0)
            for i in range(k):
                for check in ("Eq1", "Eq3"):
                    r = rep.get(check, i)
                    assert r.left == r.right, (check, k, n, i)
                for check in ("Ineq1", "Ineq2", "Ineq3"):
                    assert rep.get(check, i).passed, (check, k, n, i)
            r4 = rep.get("Ineq4")
            assert r4.left == r4.right, ("Ineq4 appendix", k, n)
        for d0 in _samples(k, n, S3):
            rep = audit(k, n, S3, d0)
            r4 = rep.get("Ineq4")
            assert r4.left == r4.right, ("Ineq4 section3", k, n)
            if n >= 2:
                assert not rep.get("Ineq1", 0).passed, ("section3 Ineq1 should fail", k, n)
            if (k, n) == (1, 2):
                r = rep.get("Ineq1", 0)
                witness = (r.left / d0, r.right / d0)
    assert witness == (11, Fraction(371, 176))


def _log_points(count=100, top=6):
    # c_i = 10^(top i / count), rounded down to a rational
    return [root_enclosure(Fraction(10) ** (top * i), count, Fraction(1, 10**20)).lo for i in range(1, count + 1)]


@pytest.mark.criterion(6, "inversion: round trip and monotonicity at 100 points, h_inv(1e9) near delta")
def test_criterion_6_inversion():
    cs = _log_points()
    assert 1 < cs[0] and cs[-1] == 10**6
    for k, n in CELLS:
        xs = [h_inv(k, n, S3, c) for c in cs]
        for c, x in zip(cs, xs):
            assert h_eval(k, n, S3, x.lo) <= c <= h_eval(k, n, S3, x.hi), (k, n, c)
        assert all(a.hi < b.lo for a, b in zip(xs, xs[1:])), (k, n)
        far, d = h_inv(k, n, S3, 10**9), delta_kn(k, n)
        assert abs(far.mid - d.mid) <= d.mid / 10**7, (k, n)


@pytest.mark.criterion(7, "expansion: 2^(k-1) chains, argmax always the leading or full-descent chain")
def test_criterion_7_expansion():
    for k in range(1, 13):
        assert len(beta_terms(k)) == 2 ** (k - 1)
    counterexamples = []
    for k, n in CELLS:
        allowed = {beta_terms(k)[0], beta_terms(k)[-1]}
        for c in DEFAULT_GRID.points():
            res = beta_eval(k, n, c)
            if not set(res.argmax) <= allowed:
                counterexamples.append(f"k={k} n={n} c={c}: {[str(ch) for ch in res.argmax]}")
    assert not counterexamples, "; ".join(counterexamples)


@pytest.mark.criterion(8, "infimum: k=1 minimiser near 2, scanned inf matches 1 - eps and stays above it")
def test_criterion_8_infimum():
    for n in range(1, 11):
        res = scan(1, n)
        assert abs(res.best_c - 2) <= Fraction(5, 100), (n, float(res.best_c))
        closed = gamma_enc(2, h_inv(1, n, S3, 2), n).mid
        assert abs((1 - res.best_beta.mid) - closed) <= closed / 1000, n
    for k, n in [(2, 2), (2, 3), (3, 3)]:
        rep = gap_report(k, n)
        eps = epsilon_kn(k, n).mid
        assert abs((1 - rep.inf_estimate.mid) - eps) <= eps / 1000, (k, n)
        assert rep.certified_above, (k, n)
