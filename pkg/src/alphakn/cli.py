"""Command-line front end.

Exit status: 0 success, 2 usage error, 3 domain error, 4 precision cap or
unresolved argmax tie.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from fractions import Fraction

from .beta import alpha_kn, beta_eval, epsilon_kn
from .errors import DomainError, PrecisionError, UsageError
from .exact import format_enc, int_to_str, parse_rat, rat_to_str, to_scidec
from .recurrences import Variant, audit, c_kn
from .search import DEFAULT_GRID, Grid, scan
from .tables import TABLE_IDS, make_table, render
from .thresholds import delta_kn, gamma, h_inv

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_PRECISION = 0, 2, 3, 4


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _rat(s: str) -> Fraction:
    try:
        return parse_rat(s)
    except (UsageError, DomainError, ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=3, help="significant digits shown (default 3)")
    common.add_argument("--work-digits", type=int, default=6,
                        help="working precision: relative width 10^-(w+3) (default 6)")
    common.add_argument("--variant", choices=[v.value for v in Variant], default=None,
                        help="recurrence variant (default section3; appendix for audit)")
    common.add_argument("--format", dest="fmt", default="text",
                        choices=["text", "json", "csv", "markdown"])

    p = _ArgumentParser(prog="alphakn", description="Certified alpha(k, n) volume-growth thresholds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def kn(sp):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("constants", parents=[common], help="C_{k,n}(i)")
    kn(sp)
    sp.add_argument("--i", type=int, default=None)
    sp.add_argument("--exact", action="store_true", help="print the full integer")

    kn(sub.add_parser("delta", parents=[common], help="asymptote delta_{k,n}"))
    sp = sub.add_parser("h-inv", parents=[common], help="inverse barrier h^-1_{k,n}(c)")
    kn(sp)
    sp.add_argument("--c", type=_rat, required=True)

    sp = sub.add_parser("gamma", parents=[common], help="gamma(c, eps, n)")
    sp.add_argument("--c", type=_rat, required=True)
    sp.add_argument("--eps", type=_rat, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("beta", parents=[common], help="beta(k, c, n) with chain diagnostics")
    kn(sp)
    sp.add_argument("--c", type=_rat, required=True)

    kn(sub.add_parser("epsilon", parents=[common], help="eps_{k,n}"))
    kn(sub.add_parser("alpha", parents=[common], help="alpha(k, n) = 1 - eps_{k,n}"))

    sp = sub.add_parser("scan", parents=[common], help="grid scan of beta over c")
    kn(sp)
    sp.add_argument("--c-min", type=_rat, default=DEFAULT_GRID.c_min)
    sp.add_argument("--c-max", type=_rat, default=DEFAULT_GRID.c_max)
    sp.add_argument("--steps", type=int, default=DEFAULT_GRID.steps)
    sp.add_argument("--spacing", choices=["log", "linear", "inverse"], default="log")

    sp = sub.add_parser("audit", parents=[common], help="exact audit of the d_i/b_i system")
    kn(sp)
    sp.add_argument("--d0", type=_rat, default=None,
                    help="sample point; default delta/10, delta/2 and 9 delta/10")

    sp = sub.add_parser("tables", parents=[common], help="reproduce the published tables")
    sp.add_argument("--table", choices=list(TABLE_IDS) + ["all"], default="all")
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--nmax", type=int, default=10)
    return p


def _emit_value(args, quantity, enc, one_minus=False, extra=None):
    text = format_enc(enc, args.digits, one_minus)
    if args.fmt == "json":
        lo, hi = (1 - enc.hi, 1 - enc.lo) if one_minus else (enc.lo, enc.hi)
        rec = {"quantity": quantity, "k": args.k, "n": args.n, "variant": args.variant,
               "value": text, "lo": str(to_scidec(lo, args.digits + 3)),
               "hi": str(to_scidec(hi, args.digits + 3)), "one_minus": one_minus}
        rec.update(extra or {})
        print(json.dumps(rec, indent=2))
    else:
        print(text)


def _run(args) -> int:
    cmd = args.command
    if args.variant is None:
        args.variant = "appendix" if cmd == "audit" else "section3"
    variant = Variant.parse(args.variant)
    w = Fraction(1, 10 ** (args.work_digits + 3))

    if cmd == "constants":
        val = c_kn(args.k, args.n, args.i, variant)
        print(int_to_str(val) if args.exact else to_scidec(val, args.digits))
    elif cmd == "delta":
        _emit_value(args, "delta", delta_kn(args.k, args.n, variant, w))
    elif cmd == "h-inv":
        _emit_value(args, "h_inv", h_inv(args.k, args.n, variant, args.c, w), extra={"c": rat_to_str(args.c)})
    elif cmd == "gamma":
        print(to_scidec(gamma(args.c, args.eps, args.n), args.digits))
    elif cmd == "epsilon":
        _emit_value(args, "epsilon", epsilon_kn(args.k, args.n, variant, w))
    elif cmd == "alpha":
        _emit_value(args, "alpha", alpha_kn(args.k, args.n, variant, w), one_minus=True)
    elif cmd == "beta":
        res = beta_eval(args.k, args.n, args.c, variant, w)
        chains = [{"chain": str(ch), "value": format_enc(t, args.digits, True)} for ch, t in res.terms]
        argmax = [str(ch) for ch in res.argmax]
        if args.fmt == "json":
            _emit_value(args, "beta", res.value, True, {"c": rat_to_str(args.c), "chains": chains, "argmax": argmax})
        else:
            print(format_enc(res.value, args.digits, True))
            for ch in chains:
                print(f"  {ch['chain']:<12} {ch['value']}")
            print(f"  argmax: {' '.join(argmax)}" + ("  (tie)" if res.tie else ""))
        if res.tie:
            return EXIT_PRECISION
    elif cmd == "scan":
        grid = Grid(args.c_min, args.c_max, args.steps, args.spacing)
        res = scan(args.k, args.n, variant, grid)
        if args.fmt == "csv":
            sys.stdout.write(res.to_csv(max(args.digits, 6)))
        else:
            print(f"best c ~ {to_scidec(res.best_c, args.digits + 3)}")
            print(f"min beta = {format_enc(res.best_beta, args.digits, True)}")
            if res.warning:
                print(f"warning: {res.warning}")
    elif cmd == "audit":
        if args.d0 is not None:
            samples = [args.d0]
        else:
            lo = delta_kn(args.k, args.n, variant, w).lo
            samples = [lo / 10, lo / 2, 9 * lo / 10]
        for i, d0 in enumerate(samples):
            rep = audit(args.k, args.n, variant, d0)
            if args.fmt == "csv":
                text = rep.to_csv()
                sys.stdout.write(text if i == 0 else text.split("\n", 1)[1])
            else:
                sys.stdout.write(rep.to_text())
    elif cmd == "tables":
        ids = TABLE_IDS if args.table == "all" else (args.table,)
        fmt = args.fmt if args.fmt in ("csv", "markdown") else "markdown"
        for i, tid in enumerate(ids):
            if i:
                print()
            doc = make_table(tid, args.kmax, args.nmax, variant, args.digits)
            if fmt == "csv" and len(ids) > 1:
                print(f"# {tid}")
            sys.stdout.write(render(doc, fmt))
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except SystemExit as e:  # --help
        return int(e.code or 0)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except PrecisionError as e:
        print(f"precision error: {e}", file=sys.stderr)
        return EXIT_PRECISION


def cli_dispatch(argv) -> tuple[int, str]:
    """Run the CLI on `argv`, returning the exit status and captured stdout."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        status = main(list(argv))
    return status, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
