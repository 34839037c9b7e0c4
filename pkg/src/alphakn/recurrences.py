"""Integer constants C_{k,n}(i), the d_i/b_i scales, and their audit.

The constants come in two forms that agree only for n = 1:

* ``Variant.SECTION3``: ``C(i) = (16k)^(n-1) * (1 + 10 C(i-1)^n + 3 + 10 C(i-1))``.
  This is the form that produces the published table of C_{k,n}.
* ``Variant.APPENDIX``: ``C(i) = (16k)^(n-1) * (1 + 10 C(i-1))^n + 3 + 10 C(i-1)``.
  This is the form for which the d_i, b_i identities actually close.

Both start from ``C(0) = 1``.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, UsageError
from .exact import RatLike, as_rat, rat_to_str


class Variant(enum.Enum):
    SECTION3 = "section3"
    APPENDIX = "appendix"

    @classmethod
    def parse(cls, s: "str | Variant") -> "Variant":
        if isinstance(s, Variant):
            return s
        try:
            return cls(s.lower())
        except ValueError:
            raise UsageError(f"unknown variant {s!r}; use section3 or appendix") from None


def _check_kn(k: int, n: int):
    if k < 1 or n < 1:
        raise DomainError(f"need k >= 1 and n >= 1, got k={k}, n={n}")


@lru_cache(maxsize=None)
def _c_sequence(k: int, n: int, variant: Variant) -> tuple[int, ...]:
    base = (16 * k) ** (n - 1)
    seq = [1]
    for _ in range(k):
        prev = seq[-1]
        if variant is Variant.SECTION3:
            seq.append(base * (1 + 10 * prev**n + 3 + 10 * prev))
        else:
            seq.append(base * (1 + 10 * prev) ** n + 3 + 10 * prev)
    return tuple(seq)


def c_kn(k: int, n: int, i: int | None = None, variant: "Variant | str" = Variant.SECTION3) -> int:
    """The exact integer C_{k,n}(i); ``i`` defaults to k (the constant C_{k,n})."""
    _check_kn(k, n)
    variant = Variant.parse(variant)
    if i is None:
        i = k
    if not 0 <= i <= k:
        raise DomainError(f"index i must satisfy 0 <= i <= k, got i={i}")
    return _c_sequence(k, n, variant)[i]


def b_coefficient(k: int, n: int, c_i: int) -> Fraction:
    """b_i = [16k(1 + 10 C(i))]^-(n-1)."""
    return Fraction(1, (16 * k * (1 + 10 * c_i)) ** (n - 1))


def b_root(k: int, c_i: int) -> Fraction:
    """b_i^(1/(n-1)) in closed form, 1/(16k(1 + 10 C(i)))."""
    return Fraction(1, 16 * k * (1 + 10 * c_i))


@dataclass(frozen=True)
class SeqBundle:
    k: int
    n: int
    variant: Variant
    C: tuple[int, ...]
    b: tuple[Fraction, ...]

    @property
    def i_max(self) -> int:
        return len(self.C) - 1

    @property
    def d_coeff(self) -> tuple[int, ...]:
        """d_i / d_0; identical to C by construction."""
        return self.C

    def d(self, d0: RatLike) -> list[Fraction]:
        d0 = as_rat(d0)
        return [c * d0 for c in self.C]


def seq_bundle(k: int, n: int, variant: "Variant | str" = Variant.APPENDIX) -> SeqBundle:
    _check_kn(k, n)
    variant = Variant.parse(variant)
    C = _c_sequence(k, n, variant)
    return SeqBundle(k, n, variant, C, tuple(b_coefficient(k, n, c) for c in C))


# ---------------------------------------------------------------------------
# audit of the identity / inequality system


@dataclass(frozen=True)
class CheckRecord:
    check: str
    i: int | None
    left: Fraction
    right: Fraction
    relation: str  # "==", "<=" or "<"
    passed: bool

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def _record(check, i, left, right, relation) -> CheckRecord:
    ok = {"==": left == right, "<=": left <= right, "<": left < right}[relation]
    return CheckRecord(check, i, left, right, relation, ok)


@dataclass
class AuditReport:
    k: int
    n: int
    variant: Variant
    d0: Fraction
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def get(self, check: str, i: int | None = None) -> CheckRecord:
        for r in self.records:
            if r.check == check and r.i == i:
                return r
        raise KeyError((check, i))

    def to_text(self) -> str:
        lines = [f"audit k={self.k} n={self.n} variant={self.variant.value} d0={rat_to_str(self.d0)}"]
        for r in self.records:
            idx = "-" if r.i is None else str(r.i)
            line = f"{r.check:<10} i={idx:<2} {r.verdict}  (left {r.relation} right)"
            if not r.passed:
                line += f"  left/d0 = {rat_to_str(r.left / self.d0)}, right/d0 = {rat_to_str(r.right / self.d0)}"
            lines.append(line)
        bad = self.failures()
        lines.append("all checks pass" if not bad else f"{len(bad)} check(s) FAIL")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d0", "check", "i", "left", "right", "relation", "verdict"])
        for r in self.records:
            w.writerow([rat_to_str(self.d0), r.check, "" if r.i is None else r.i, rat_to_str(r.left),
                        rat_to_str(r.right), r.relation, r.verdict])
        return buf.getvalue()


def barrier_value(k: int, n: int, variant: Variant, x: Fraction) -> Fraction:
    """p(x) = 10^(k+2) C_{k,n} x (1 + x/2k)^k."""
    return 10 ** (k + 2) * c_kn(k, n, k, variant) * x * (1 + x / (2 * k)) ** k


def audit(k: int, n: int, variant: "Variant | str", d0: RatLike) -> AuditReport:
    """Evaluate Eq1, Eq3 and Ineq1 to Ineq4 exactly for ``d_i = C(i) d0``.

    ``d0`` must satisfy ``0 < d0 < delta_{k,n}``; this is checked exactly as
    ``p(d0) < 1`` since p is increasing with ``p(delta) = 1``.
    """
    variant = Variant.parse(variant)
    sb = seq_bundle(k, n, variant)
    d0 = as_rat(d0)
    if d0 <= 0:
        raise DomainError("d0 must be positive")
    p = barrier_value(k, n, variant, d0)
    if p >= 1:
        raise DomainError("d0 must lie below delta_{k,n}")
    c = 1 / (1 - p)  # h_{k,n}(d0)
    d = sb.d(d0)
    rep = AuditReport(k, n, variant, d0)

    for i in range(k):
        lhs = d0 + 10 * d[i]
        rhs1 = sb.b[i] * (d[i + 1] - 3 * d0 - 10 * d[i])
        lhs3 = 8 * b_root(k, sb.C[i]) * lhs
        rhs3 = d0 / (2 * k)
        rhs2 = sb.b[i] * (c - 1 + d0 * (2 - Fraction(i, k)))
        rep.records += [
            _record("Eq1", i, lhs, rhs1, "=="),
            _record("Eq3", i, lhs3, rhs3, "=="),
            _record("Ineq1", i, lhs, rhs1, "<="),
            _record("Ineq2", i, lhs, rhs2, "<="),
            _record("Ineq3", i, lhs3, rhs3, "<="),
        ]
    lhs4 = 10 * d[k]
    rhs4 = Fraction(1, 10 ** (k + 1)) / (1 + d0 / (2 * k)) ** k * (1 - 1 / c)
    rep.records.append(_record("Ineq4", None, lhs4, rhs4, "=="))
    rep.records.append(_record("d_k<1", None, d[k], Fraction(1), "<"))
    mono = all(d[i] < d[i + 1] for i in range(k))
    rep.records.append(CheckRecord("d_mono", None, d[0], d[k], "<", mono))
    return rep


# ---------------------------------------------------------------------------
# optimality of the canonical constants


@dataclass(frozen=True)
class A2Report:
    hypotheses_ok: bool
    dominance_ok: bool
    message: str
    first_violation: tuple[str, int] | None = None

    @property
    def ok(self) -> bool:
        return self.hypotheses_ok and self.dominance_ok


def lemma_a2_check(k: int, n: int, d_seq, b_seq) -> A2Report:
    """Check that sequences obeying Ineq1 and Ineq3 dominate the canonical ones.

    ``d_seq`` has k+1 entries normalised to ``d_seq[0] == 1``; ``b_seq`` has k.
    Ineq3 is tested in the root-free form
    ``8^(n-1) b_i (d0 + 10 d_i)^(n-1) <= (d0/2k)^(n-1)``; at n = 1 it carries no
    information about b_i and is skipped.
    """
    _check_kn(k, n)
    d_seq = [as_rat(x) for x in d_seq]
    b_seq = [as_rat(x) for x in b_seq]
    if len(d_seq) != k + 1 or len(b_seq) != k:
        raise UsageError(f"expected {k + 1} d values and {k} b values")
    if d_seq[0] != 1:
        raise UsageError("d sequence must be normalised to d_0 = 1")
    d0 = d_seq[0]
    for i in range(k):
        lhs = d0 + 10 * d_seq[i]
        if not lhs <= b_seq[i] * (d_seq[i + 1] - 3 * d0 - 10 * d_seq[i]):
            return A2Report(False, False, f"hypotheses not satisfied: Ineq1 fails at i={i}", ("Ineq1", i))
        if n > 1 and not 8 ** (n - 1) * b_seq[i] * lhs ** (n - 1) <= (d0 / (2 * k)) ** (n - 1):
            return A2Report(False, False, f"hypotheses not satisfied: Ineq3 fails at i={i}", ("Ineq3", i))
    canon = seq_bundle(k, n, Variant.APPENDIX)
    for i in range(k + 1):
        if d_seq[i] < canon.C[i]:
            return A2Report(True, False, f"d_{i} below C({i})", ("d", i))
    for i in range(k):
        if b_seq[i] > canon.b[i]:
            return A2Report(True, False, f"b_{i} above the canonical value", ("b", i))
    return A2Report(True, True, "hypotheses hold; sequences dominate the canonical constants")
