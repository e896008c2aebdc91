"""Command-line driver: ``boundent {scan,classify,volume,curves}``.

Exit codes: 0 success (an ``Unphysical`` label is a result, not an error),
1 usage error, 2 numerical failure, 3 IO or input-file failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import csvio
from .bell import BeyondLineParams, LineParams
from .classify import Label, classify_beyond_line, classify_line, classify_matrix
from .errors import BoundentError, NoConvergence, ParseError
from .sampling import REFERENCE_STATE, VolumeConfig, histograms, summarize, volume_experiment
from .scan import ScanConfig, curve_rows, grid_values, run_scan
from .state import load_matrix_file

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def real(text: str) -> float:
    """Float that also accepts fractions such as ``-1/12``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def eps_list(text: str) -> list[float]:
    return [real(t) for t in text.split(",") if t.strip()]


_FAMILY = {"line": "Line", "beyond-line": "BeyondLine"}


def _sibling(path: Path, suffix: str) -> Path:
    return path.with_name(f"{path.stem}.{suffix}.csv")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="boundent", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("scan", help="classify every cell of an alpha-beta grid")
    s.add_argument("--family", choices=sorted(_FAMILY), default="line")
    s.add_argument("--gamma", type=real, required=True)
    s.add_argument("--alpha", type=real, nargs=3, metavar=("START", "STOP", "STEP"), required=True)
    s.add_argument("--beta", type=real, nargs=3, metavar=("START", "STOP", "STEP"), required=True)
    s.add_argument("--path", choices=("analytic", "generic"), default="analytic")
    s.add_argument("--output", type=Path, required=True)
    s.add_argument("--overlay-curves", action="store_true",
                   help="also write borderline curves to <output>.curves.csv (line family)")
    s.add_argument("--threads", type=int, default=1)

    c = sub.add_parser("classify", help="classify one state")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=sorted(_FAMILY))
    src.add_argument("--matrix", type=Path, help="JSON matrix file")
    c.add_argument("--alpha", type=real, default=0.0)
    c.add_argument("--beta", type=real, default=0.0)
    c.add_argument("--gamma", type=real, default=0.0)
    c.add_argument("--path", choices=("analytic", "generic"), default="analytic")

    v = sub.add_parser("volume", help="mix the base state with Hilbert-Schmidt noise")
    v.add_argument("--seed", type=int, required=True)
    v.add_argument("--eps", type=eps_list, action="append",
                   help="comma-separated eps values; repeatable (default: 201-point grid on [0, 1])")
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--bins", type=int, default=50)
    v.add_argument("--base", type=real, nargs=3, metavar=("ALPHA", "BETA", "GAMMA"),
                   default=[REFERENCE_STATE.alpha, REFERENCE_STATE.beta, REFERENCE_STATE.gamma])
    v.add_argument("--output", type=Path, required=True)
    v.add_argument("--summary", type=Path, help="default: <output>.summary.csv")
    v.add_argument("--histogram", type=Path, help="default: <output>.hist.csv")
    v.add_argument("--threads", type=int, default=1)

    k = sub.add_parser("curves", help="sample the borderline curves of the line family")
    k.add_argument("--gamma", type=real, required=True)
    k.add_argument("--alpha", type=real, nargs=3, metavar=("START", "STOP", "STEP"), required=True)
    k.add_argument("--output", type=Path, required=True)
    return p


def _fmt_line(result) -> str:
    return json.dumps({
        "label": result.tag.value,
        "cqp": result.cqp_value,
        "negativity": result.negativity,
        "purity": result.purity,
    })


def cmd_scan(args) -> int:
    cfg = ScanConfig(_FAMILY[args.family], args.gamma, tuple(args.alpha), tuple(args.beta), args.path)
    cells = run_scan(cfg, threads=args.threads)
    csvio.write_scan(args.output, cells)
    if args.overlay_curves and cfg.family == "Line":
        csvio.write_curves(_sibling(args.output, "curves"), curve_rows(cfg.alphas, cfg.gamma))
    n_be = sum(c.result.tag is Label.BOUND_ENTANGLED for c in cells)
    print(f"cells={len(cells)} bound_entangled={n_be} output={args.output}")
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.matrix is not None:
        mat, da, db = load_matrix_file(args.matrix)
        result = classify_matrix(mat, da, db)
    elif args.family == "line":
        result = classify_line(LineParams(args.alpha, args.beta, args.gamma), path=args.path)
    else:
        result = classify_beyond_line(BeyondLineParams(args.alpha, args.beta, args.gamma), path=args.path)
    print(_fmt_line(result))
    return EXIT_OK


def cmd_volume(args) -> int:
    kwargs = {}
    if args.eps:
        kwargs["eps_values"] = tuple(sorted({e for group in args.eps for e in group}))
    cfg = VolumeConfig(seed=args.seed, base=LineParams(*args.base), samples_per_eps=args.samples,
                       histogram_bins=args.bins, **kwargs)
    records = volume_experiment(cfg, threads=args.threads)
    csvio.write_volume(args.output, records)
    summary = summarize(records)
    csvio.write_dicts(args.summary or _sibling(args.output, "summary"), csvio.SUMMARY_COLUMNS, summary)
    csvio.write_dicts(args.histogram or _sibling(args.output, "hist"), csvio.HISTOGRAM_COLUMNS,
                      histograms(records, cfg.histogram_bins))
    print(",".join(csvio.SUMMARY_COLUMNS))
    for row in summary:
        print(",".join(csvio.fmt(row[c]) for c in csvio.SUMMARY_COLUMNS))
    return EXIT_OK


def cmd_curves(args) -> int:
    csvio.write_curves(args.output, curve_rows(grid_values(*args.alpha), args.gamma))
    return EXIT_OK


_COMMANDS = {"scan": cmd_scan, "classify": cmd_classify, "volume": cmd_volume, "curves": cmd_curves}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NoConvergence as exc:
        print(f"boundent: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (OSError, ParseError) as exc:
        print(f"boundent: {exc}", file=sys.stderr)
        return EXIT_IO
    except (BoundentError, ValueError) as exc:
        print(f"boundent: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
