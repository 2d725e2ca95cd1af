"""``curvesym`` command line.

    curvesym detect --input curve.json [--closure] [--json out.json] [--svg out.svg]
    curvesym detect --expr "(t^2, t^3, t^4)" --dim 3
    curvesym corpus [corpus.json] [--auto]

Exit codes: 0 ok, 1 degenerate or improper input, 2 internal verification
failure (including a corpus count mismatch), 3 usage or parse error.
"""

import argparse
import json
import sys
from fractions import Fraction

from ..closure import ClosureOverflowError
from ..curve import DegenerateCurveError, GeneralPositionError, moebius_from_rf
from ..detect import DetectOptions, ImproperCurveError, VerificationError, detect_all
from .corpus import format_rows, run_corpus
from .numeric import verify_numeric
from .parse import ParseError, parse_curve_expression, parse_expression
from .report import classify_report, emit_report
from .schema import SchemaError, curve_from_doc
from .svg import emit_svg

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 3
NUMERIC_TOL = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="curvesym", description="Exact symmetries of rational plane and space curves.")
    sub = p.add_subparsers(dest="command")
    d = sub.add_parser("detect", help="detect the symmetries of one curve")
    d.add_argument("--input", help="curve JSON document, or - for stdin")
    d.add_argument("--expr", help='curve expression such as "(t^2, t^3, t^4)"')
    d.add_argument("--dim", type=int, choices=(2, 3))
    d.add_argument("--name")
    d.add_argument("--reparam", help="pin the general-position map u(t), e.g. \"1/(t+1)\"")
    d.add_argument("--branches", choices=("all", "involutions", "rotations"), default="all")
    d.add_argument("--closure", action="store_true", help="close the result under composition")
    d.add_argument("--skip-properness", action="store_true")
    d.add_argument("--refine-width", default="1e-12", help="width of reported enclosures")
    d.add_argument("--timings", action="store_true", help="include wall times in the JSON")
    d.add_argument("--json", dest="json_out", help="write the report here instead of stdout")
    d.add_argument("--svg", dest="svg_out", help="write a picture of the curve and its elements")
    d.add_argument("--projection", choices=("xy", "xz", "yz"), default="xy")
    c = sub.add_parser("corpus", help="reproduce the symmetry counts of a corpus")
    c.add_argument("file", nargs="?", help="corpus JSON (default: the bundled corpus)")
    c.add_argument("--auto", action="store_true",
                   help="ignore pinned reparametrizations and search automatically")
    c.add_argument("--only", action="append", help="run only the named curve (repeatable)")
    return p


def _width(text):
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("bad --refine-width %r" % text) from None
    if w <= 0:
        raise UsageError("--refine-width must be positive")
    return w


def _load_curve(args):
    if bool(args.input) == bool(args.expr):
        raise UsageError("give exactly one of --input and --expr")
    pinned = None
    if args.expr:
        curve = parse_curve_expression(args.expr, args.dim, args.name)
    else:
        fh = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise SchemaError("input is not valid JSON: %s" % e) from None
        finally:
            if fh is not sys.stdin:
                fh.close()
        curve, pinned = curve_from_doc(doc)
    if args.reparam:
        pinned = moebius_from_rf(parse_expression(args.reparam))
    return curve, pinned


def cmd_detect(args, out):
    width = _width(args.refine_width)
    curve, pinned = _load_curve(args)
    opts = DetectOptions(branches=args.branches, closure=args.closure,
                         skip_properness=args.skip_properness, reparam=pinned)
    report = detect_all(curve, opts)
    numeric = {}
    for sym in list(report.union) + list(report.closure_added):
        numeric[id(sym)] = verify_numeric(report.working_curve, sym) < NUMERIC_TOL
    data = emit_report(report, width, args.timings, numeric)
    if args.json_out:
        with open(args.json_out, "wb") as fh:
            fh.write(data)
        rot, inv = report.table_counts()
        out.write("%s: %d symmetries (#rot %s, #inv %d)\n" % (
            curve.name or "curve", len(report.union), "-" if rot is None else rot, inv))
    else:
        out.write(data.decode("ascii"))
    if args.svg_out:
        union, added = classify_report(report)
        proj = args.projection
        with open(args.svg_out, "wb") as fh:
            fh.write(emit_svg(report.working_curve, union + added, projection=proj))
    if not all(numeric.values()):
        raise VerificationError("floating-point cross-check failed")
    return EXIT_OK


def cmd_corpus(args, out):
    rows = run_corpus(args.file, "auto" if args.auto else "pinned", args.only)
    out.write(format_rows(rows) + "\n")
    out.write("total %.3f s\n" % sum(r.seconds for r in rows))
    return EXIT_OK if all(r.ok for r in rows) else EXIT_VERIFY


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing command (detect or corpus)")
        if args.command == "detect":
            return cmd_detect(args, out)
        return cmd_corpus(args, out)
    except (UsageError, ParseError, SchemaError, OSError) as e:
        err.write("curvesym: error: %s\n" % e)
        return EXIT_USAGE
    except (DegenerateCurveError, ImproperCurveError, GeneralPositionError) as e:
        err.write("curvesym: input rejected: %s\n" % e)
        return EXIT_INPUT
    except (VerificationError, ClosureOverflowError, AssertionError) as e:
        err.write("curvesym: verification failure: %s\n" % e)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
