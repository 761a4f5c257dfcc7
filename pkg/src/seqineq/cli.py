"""Command-line front end: one analysis per invocation, report on stdout.

Usage::

    seqineq [--abs-tol X] [--rel-tol Y] [--format json|csv] <command> <file> [options]

Commands

* ``check-convex FILE``   convexity certificate; exit 0 if convex, 1 if not
* ``support FILE``        support (subgradient) sequence
* ``spline FILE``         local quadratic pieces and sampled plot data
* ``lagrange FILE``       global interpolant coefficients and its convexity class
* ``hull FILE``           subadditive hull with witness partitions
* ``epsilon FILE``        smallest eps for approximate subadditivity, as a bare number
* ``decompose FILE``      split u into subadditive part plus remainder
* ``check-subadd FILE``   pairwise test, or hull test against ``--eps``; exit 0/1

Exit code 2 means the input could not be used (unreadable file, malformed
numbers, wrong index base, unknown flags); a one-line diagnostic goes to
stderr.  Reports are JSON documents with a fixed key set (see
``schemas/report.schema.json``); ``--format csv`` flattens the same report
into key,value rows, except for ``spline`` where CSV emits plot data.
Numbers are serialized with shortest round-trip formatting.
"""

from __future__ import annotations

import argparse
import csv
import importlib.resources
import json
import sys

from . import __version__
from .convexity import certify_convexity, support_sequence
from .core import DEFAULT_TOLERANCE, Sequence, ToleranceConfig, classify
from .interpolation import lagrange_polynomial, polynomial_convexity_on_interval, quadratic_piece, spline_eval
from .sequence_io import read_sequence, write_sequence
from .subadditivity import (
    decompose,
    epsilon_star,
    is_subadditive_pairwise,
    subadditive_hull,
)

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_ERROR = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Exit code 2 wants a one-line diagnostic, not argparse's usage dump.
    def error(self, message):
        raise _UsageError(message)


def load_report_schema() -> dict:
    """The JSON schema that every report document conforms to."""
    text = (
        importlib.resources.files("seqineq")
        .joinpath("schemas/report.schema.json")
        .read_text()
    )
    return json.loads(text)


def _build_parser() -> argparse.ArgumentParser:
    # Shared options are declared on the main parser and on every subparser
    # (with SUPPRESS defaults) so they are accepted in either position.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--abs-tol",
        type=float,
        default=argparse.SUPPRESS,
        help="absolute slack for inequality checks (default 1e-9)",
    )
    common.add_argument(
        "--rel-tol",
        type=float,
        default=argparse.SUPPRESS,
        help="relative slack for inequality checks (default 1e-9)",
    )
    common.add_argument(
        "--format",
        choices=("json", "csv"),
        default=argparse.SUPPRESS,
        help="report style (default json)",
    )

    parser = _Parser(
        prog="seqineq",
        parents=[common],
        description="Analyze a finite real sequence for convexity and subadditivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("check-convex", parents=[common], help="certify or refute convexity")
    p.add_argument("file")

    p = sub.add_parser("support", parents=[common], help="support (subgradient) sequence")
    p.add_argument("file")

    p = sub.add_parser("spline", parents=[common], help="local quadratic pieces and samples")
    p.add_argument("file")
    p.add_argument(
        "--samples",
        type=int,
        default=16,
        help="samples per unit interval (default 16)",
    )

    p = sub.add_parser("lagrange", parents=[common], help="global interpolant coefficients")
    p.add_argument("file")

    p = sub.add_parser("hull", parents=[common], help="subadditive hull with witnesses")
    p.add_argument("file")

    p = sub.add_parser("epsilon", parents=[common], help="smallest eps for approximate subadditivity")
    p.add_argument("file")

    p = sub.add_parser("decompose", parents=[common], help="split into subadditive part plus remainder")
    p.add_argument("file")
    p.add_argument("--out-v", help="write the subadditive part to this sequence file")
    p.add_argument("--out-w", help="write the remainder to this sequence file")

    p = sub.add_parser("check-subadd", parents=[common], help="pairwise or approximate subadditivity test")
    p.add_argument("file")
    p.add_argument("--eps", type=float, help="test approximate subadditivity at this eps")

    return parser


def _base_report(command: str, u: Sequence, tol: ToleranceConfig) -> dict:
    return {
        "tool": {"name": "seqineq", "version": __version__},
        "command": command,
        "tolerance": {"abs_tol": tol.abs_tol, "rel_tol": tol.rel_tol},
        "input": {"length": len(u), "start_index": u.start_index},
    }


def _flatten(prefix: str, node, rows: list[tuple[str, str]]) -> None:
    if isinstance(node, dict):
        for key, value in node.items():
            _flatten(f"{prefix}.{key}" if prefix else key, value, rows)
    else:
        rows.append((prefix, json.dumps(node)))


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    rows: list[tuple[str, str]] = []
    _flatten("", report, rows)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("key", "value"))
    writer.writerows(rows)


def _cmd_check_convex(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    cert = certify_convexity(u, tol)
    report = _base_report("check-convex", u, tol)
    report["classification"] = classify(u, tol).as_dict()
    report["convexity"] = {
        "is_convex": cert.is_convex,
        "defining_violations": [[n, defect] for n, defect in cert.defining.violations],
        "slopes_ok": cert.slopes_ok,
        "first_violating_triple": list(cert.slope_violation) if cert.slope_violation else None,
        "support_ok": cert.support_ok,
    }
    _emit(report, fmt)
    return EXIT_OK if cert.is_convex else EXIT_PROPERTY_FAILED


def _cmd_support(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    s = support_sequence(u)
    report = _base_report("support", u, tol)
    report["support"] = {
        "first_index": s.first_index,
        "last_index": s.last_index,
        "values": list(s.values),
        "witness_pairs": [list(pair) for pair in (s.witness_pairs or ())],
    }
    _emit(report, fmt)
    return EXIT_OK


def _cmd_spline(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    per_unit = args.samples
    if per_unit < 1:
        raise ValueError("--samples must be at least 1")
    if len(u) < 3:
        raise ValueError("sequence too short")
    pieces = [quadratic_piece(u, n) for n in range(u.start_index + 1, u.last_index)]
    xs = [
        i + t / per_unit
        for i in range(u.start_index, u.last_index)
        for t in range(per_unit)
    ]
    xs.append(float(u.last_index))
    samples = [(x, spline_eval(u, x)) for x in xs]
    if fmt == "csv":
        for piece in pieces:
            print(
                f"# piece center={piece.center} a={piece.a!r} b={piece.b!r} c={piece.c!r}"
            )
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(("x", "y"))
        writer.writerows((repr(x), repr(y)) for x, y in samples)
        return EXIT_OK
    report = _base_report("spline", u, tol)
    report["spline"] = {
        "pieces": [
            {"center": piece.center, "a": piece.a, "b": piece.b, "c": piece.c}
            for piece in pieces
        ],
        "samples_per_unit": per_unit,
        "samples": [[x, y] for x, y in samples],
    }
    _emit(report, fmt)
    return EXIT_OK


def _cmd_lagrange(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    p = lagrange_polynomial(u)
    if len(u) >= 2:
        lo, hi = float(u.start_index), float(u.last_index)
        interval = [lo, hi]
        convexity_class = polynomial_convexity_on_interval(p, lo, hi, tol)
    else:
        interval = None
        convexity_class = None
    report = _base_report("lagrange", u, tol)
    report["lagrange"] = {
        "coefficients": list(p.coefficients),
        "degree": p.degree,
        "interval": interval,
        "convexity_class": convexity_class,
    }
    _emit(report, fmt)
    return EXIT_OK


def _cmd_hull(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    result = subadditive_hull(u)
    report = _base_report("hull", u, tol)
    report["hull"] = {
        "v": list(result.v.values),
        "witnesses": [list(w.parts) for w in result.witnesses],
    }
    _emit(report, fmt)
    return EXIT_OK


def _cmd_epsilon(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    print(repr(epsilon_star(u)))
    return EXIT_OK


def _cmd_decompose(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    split = decompose(u)
    witnesses = subadditive_hull(u).witnesses
    report = _base_report("decompose", u, tol)
    report["decomposition"] = {
        "v": list(split.v.values),
        "w": list(split.w.values),
        "epsilon_star": split.epsilon_star,
        "witnesses": [list(w.parts) for w in witnesses],
    }
    if args.out_v:
        write_sequence(args.out_v, split.v)
    if args.out_w:
        write_sequence(args.out_w, split.w)
    _emit(report, fmt)
    return EXIT_OK


def _cmd_check_subadd(args, tol: ToleranceConfig, fmt: str) -> int:
    u = read_sequence(args.file)
    report = _base_report("check-subadd", u, tol)
    report["classification"] = classify(u, tol).as_dict()
    if args.eps is not None:
        if args.eps < 0.0:
            raise ValueError("epsilon must be finite and nonnegative")
        gap = epsilon_star(u)
        ok = gap <= args.eps
        report["subadditivity"] = {
            "mode": "approx",
            "ok": ok,
            "violations": None,
            "epsilon": args.eps,
            "epsilon_star": gap,
        }
    else:
        check = is_subadditive_pairwise(u, tol)
        ok = check.ok
        report["subadditivity"] = {
            "mode": "pairwise",
            "ok": ok,
            "violations": [list(pair) for pair in check.violations],
            "epsilon": None,
            "epsilon_star": None,
        }
    _emit(report, fmt)
    return EXIT_OK if ok else EXIT_PROPERTY_FAILED


_COMMANDS = {
    "check-convex": _cmd_check_convex,
    "support": _cmd_support,
    "spline": _cmd_spline,
    "lagrange": _cmd_lagrange,
    "hull": _cmd_hull,
    "epsilon": _cmd_epsilon,
    "decompose": _cmd_decompose,
    "check-subadd": _cmd_check_subadd,
}


def run_cli(argv: list[str]) -> int:
    """Run one command line; returns the exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        tol = ToleranceConfig(
            getattr(args, "abs_tol", DEFAULT_TOLERANCE.abs_tol),
            getattr(args, "rel_tol", DEFAULT_TOLERANCE.rel_tol),
        )
        fmt = getattr(args, "format", "json")
        return _COMMANDS[args.command](args, tol, fmt)
    except SystemExit as exc:
        # --help and --version exit through argparse with code 0.
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    except (_UsageError, ValueError, IndexError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    raise SystemExit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
