"""Assemble the five tables and render them as CSV or Markdown."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .beta import alpha_kn, alpha_revised, epsilon_kn
from .errors import PrecisionError, UsageError
from .exact import Enc, SciDec, floor_log10, scidec_to_rat, to_scidec
from .published import PUBLISHED
from .recurrences import Variant, c_kn
from .thresholds import DEFAULT_REL_WIDTH, delta_kn

TABLE_IDS = ("constants", "deltas", "epsilons", "alphas", "alphas-revised")

# tables whose printed digits are exact consequences of the definitions
_EXACT_TABLES = ("constants", "deltas")
_MAX_REFINE = 4


@dataclass(frozen=True)
class Cell:
    value: str
    flag: str = "ok"  # "ok", "erratum-suspect" or "overlay"
    published: str | None = None
    enc: Enc | None = None


@dataclass
class TableDoc:
    table_id: str
    kmax: int
    nmax: int
    variant: Variant
    digits: int
    cells: dict[tuple[int, int], Cell] = field(default_factory=dict)
    metadata: dict[str, str] = field(default_factory=dict)

    def cell(self, k: int, n: int) -> Cell | None:
        return self.cells.get((k, n))

    def flagged(self) -> list[tuple[int, int]]:
        return [kn for kn, c in sorted(self.cells.items()) if c.flag == "erratum-suspect"]


def refined_scidec(compute, digits: int, one_minus: bool = False,
                   rel_width: Fraction = DEFAULT_REL_WIDTH) -> tuple[SciDec, Enc]:
    """Tighten `compute(rel_width)` until its enclosure fixes `digits` digits."""
    for _ in range(_MAX_REFINE + 1):
        enc = compute(rel_width)
        try:
            return to_scidec(enc, digits, one_minus), enc
        except PrecisionError:
            rel_width /= 1000
    raise PrecisionError(f"could not determine {digits} digits after {_MAX_REFINE} refinements")


def _agrees(table_id: str, value: "Enc | Fraction", published: str) -> bool:
    """Whether a computed value agrees with a printed one.

    For the constants and deltas the printed three digits are checked exactly.
    The eps/alpha tables are compared on the defect 1 - alpha = eps to within
    half a unit in the second significant digit.
    """
    if table_id in _EXACT_TABLES:
        ref = str(to_scidec(scidec_to_rat(_normalise(published)), 3))
        return str(to_scidec(value, 3)) == ref
    ref = scidec_to_rat(_normalise(published))
    if table_id in ("alphas", "alphas-revised"):
        ref, value = 1 - ref, Enc(1 - value.hi, 1 - value.lo)
    e = floor_log10(ref)
    return abs(value.mid - ref) < Fraction(5, 100) * Fraction(10) ** e


def _normalise(s: str) -> str:
    # published integers such as "24" have no exponent
    if s.isdigit():
        return f"{s[0]}.{s[1:] or '0'}e{len(s) - 1}"
    return s


def _populated(table_id: str, k: int, n: int) -> bool:
    if k > n:
        return False
    return not (table_id == "alphas-revised" and (k, n) == (1, 1))


def make_table(table_id: str, kmax: int = 3, nmax: int = 10,
               variant: "Variant | str" = Variant.SECTION3, digits: int = 3) -> TableDoc:
    """Compute every populated cell of one table.

    Cells are flagged ``erratum-suspect`` when the published value (compared
    only for the section3 variant) disagrees with the computed one; flagged
    cells carry both.
    """
    if table_id not in TABLE_IDS:
        raise UsageError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    if kmax < 1 or nmax < 1:
        raise UsageError("kmax and nmax must be positive")
    variant = Variant.parse(variant)
    doc = TableDoc(table_id, kmax, nmax, variant, digits, metadata={
        "table": table_id,
        "variant": variant.value,
        "digits": str(digits),
        "working_rel_width": f"1e-{floor_log10(1 / DEFAULT_REL_WIDTH)}",
        "version": __version__,
    })
    published = PUBLISHED[table_id] if variant is Variant.SECTION3 else {}
    for k in range(1, kmax + 1):
        for n in range(1, nmax + 1):
            if not _populated(table_id, k, n):
                continue
            doc.cells[(k, n)] = _make_cell(table_id, k, n, variant, digits, published.get((k, n)))
    return doc


def _make_cell(table_id, k, n, variant, digits, published) -> Cell:
    if table_id == "constants":
        val = Fraction(c_kn(k, n, k, variant))
        enc = Enc.exact(val)
        text = str(to_scidec(val, digits))
    elif table_id == "alphas-revised":
        ov = alpha_revised(k, n, variant)
        if ov.kind == "exact":
            return Cell(str(ov), "overlay", published)
        sd, enc = refined_scidec(lambda w: alpha_kn(k, n, variant, w), digits, one_minus=True)
        text = str(sd)
    else:
        fn = {"deltas": delta_kn, "epsilons": epsilon_kn, "alphas": alpha_kn}[table_id]
        sd, enc = refined_scidec(lambda w: fn(k, n, variant, w), digits,
                                 one_minus=table_id == "alphas")
        text = str(sd)
    flag = "ok"
    if published is not None and not _agrees(table_id, enc, published):
        flag = "erratum-suspect"
    return Cell(text, flag, published, enc)


def render(doc: TableDoc, fmt: str = "csv") -> str:
    """CSV (``k,n,value,flag``, one row per populated cell) or a Markdown grid."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "n", "value", "flag"])
        for (k, n), cell in sorted(doc.cells.items()):
            w.writerow([k, n, cell.value, cell.flag])
        return buf.getvalue()
    if fmt == "markdown":
        ks = range(1, doc.kmax + 1)
        meta = ", ".join(f"{key}={val}" for key, val in doc.metadata.items())
        lines = [f"**{doc.table_id}** ({meta})", "",
                 "|  | " + " | ".join(f"k={k}" for k in ks) + " |",
                 "|---|" + "---|" * len(ks)]
        for n in range(1, doc.nmax + 1):
            row = []
            for k in ks:
                cell = doc.cells.get((k, n))
                if cell is None:
                    row.append("-")
                elif cell.flag == "erratum-suspect":
                    row.append(f"{cell.value} (published: {_normalise(cell.published)}) [erratum-suspect]")
                else:
                    row.append(cell.value)
            lines.append(f"| n={n} | " + " | ".join(row) + " |")
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown table format {fmt!r}")
