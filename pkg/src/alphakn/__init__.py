"""Certified volume-growth thresholds alpha(k, n) in exact rational arithmetic."""

__version__ = "0.1.0"

from .beta import (  # noqa: E402
    BetaResult,
    Overlay,
    TermChain,
    alpha_kn,
    alpha_revised,
    beta_eval,
    beta_terms,
    epsilon_kn,
)
from .errors import AlphaError, DomainError, PrecisionError, UsageError  # noqa: E402
from .exact import (  # noqa: E402
    Enc,
    Rat,
    SciDec,
    format_enc,
    parse_rat,
    parse_scidec,
    rat_pow,
    root_enclosure,
    to_scidec,
)
from .recurrences import AuditReport, SeqBundle, Variant, audit, c_kn, lemma_a2_check, seq_bundle  # noqa: E402
from .search import DEFAULT_GRID, Grid, ScanResult, gap_report, scan  # noqa: E402
from .tables import TABLE_IDS, TableDoc, make_table, render  # noqa: E402
from .thresholds import BarrierPoly, barrier, delta_kn, excess_bound, gamma, h_eval, h_inv  # noqa: E402
