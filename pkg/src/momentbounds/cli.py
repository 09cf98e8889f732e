"""Command-line front end.

Exit codes: 0 success, 1 a verified bound was violated (or fuzzing found a
counterexample), 2 the input could not be parsed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence

from . import io
from .errors import BoundsError, InputError, RealRootednessViolation
from .fuzz import SPREAD_ATOL, run_fuzz
from .inequalities import SLACK_RTOL, Direction, run_suite
from .moments import compute_moments, shape_stats
from .span import BRACKET_RTOL, BoundViolationError, span_report
from .spread import all_estimates

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE = 0, 1, 2


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        if math.isnan(x):
            return "-"
        return f"{x:.6g}"
    return str(x)


def _table(headers: Sequence[str], rows: List[Sequence]) -> str:
    cells = [[_fmt(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in cells)
    return "\n".join(lines)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_moments(args) -> int:
    sample = io.load_sample(args.sample, renormalize=args.renormalize)
    mom = compute_moments(sample, 4)
    payload = {
        "n": mom.n,
        "interval": list(sample.interval),
        "mean": mom.mean,
        "central": {str(k): v for k, v in mom.central.items()},
        "raw": {str(k): v for k, v in mom.raw.items()},
        "shape": None,
    }
    rows = [("mean", mom.mean)]
    rows += [(f"mu_{k}", v) for k, v in mom.central.items() if k > 1]
    rows += [(f"mu'_{k}", v) for k, v in mom.raw.items()]
    if mom.mu(2) > 0:
        st = shape_stats(mom, sample.interval)
        payload["shape"] = st.__dict__.copy()
        rows += [
            ("skewness", st.skewness),
            ("kurtosis", st.kurtosis),
            ("studentized_range", st.studentized_range),
            ("std_dev", st.std_dev),
        ]
    _emit(args, payload, _table(["quantity", "value"], rows))
    return EXIT_OK


def cmd_check(args) -> int:
    sample = io.load_sample(args.sample, renormalize=args.renormalize)
    tol = args.tol if args.tol is not None else SLACK_RTOL
    reports = run_suite(sample)
    bad = [r for r in reports if not r.holds(tol)]
    payload = [r.to_dict() for r in reports]
    rows = [
        (r.name, r.direction.value, r.lhs, r.rhs, r.slack, r.applicable, r.note or "")
        for r in reports
    ]
    _emit(args, payload, _table(
        ["bound", "dir", "lhs", "rhs", "slack", "applicable", "note"], rows))
    if args.verify and bad:
        print(f"violated: {', '.join(r.name for r in bad)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _sort_key(est):
    return (0 if est.direction is Direction.LOWER else 1, est.value, est.label)


def cmd_spread(args) -> int:
    from .oracles.jacobi import hermitian_eigenvalues

    A = io.load_matrix(args.matrix)
    tol = args.tol if args.tol is not None else SPREAD_ATOL
    est = sorted(all_estimates(A), key=_sort_key)
    exact = None
    bad = []
    if args.verify and A.is_hermitian:
        ev = hermitian_eigenvalues(A)
        exact = ev[-1] - ev[0]
        for e in est:
            if e.direction is Direction.LOWER and e.value > exact + tol:
                bad.append(e)
            if e.direction is Direction.UPPER and e.value < exact - tol:
                bad.append(e)
    lowers = [e for e in est if e.direction is Direction.LOWER]
    uppers = [e for e in est if e.direction is Direction.UPPER]
    payload = {
        "dim": A.dim,
        "hermitian": A.is_hermitian,
        "estimates": [e.to_dict() for e in est],
        "best_lower": max((e.value for e in lowers), default=None),
        "best_upper": min(e.value for e in uppers),
        "exact": exact,
    }
    headers = ["bound", "functional", "r", "dir", "value"]
    rows = [
        (e.name, e.functional.label if e.functional else "", e.parameter or "",
         e.direction.value, e.value)
        for e in est
    ]
    if args.verify:
        headers.append("oracle")
        rows = [row + ("n/a" if exact is None else exact,) for row in rows]
    text = _table(headers, rows)
    text += f"\nbest lower {_fmt(payload['best_lower'])}  best upper {_fmt(payload['best_upper'])}"
    if args.verify:
        text += f"\noracle spread {_fmt(exact) if exact is not None else 'n/a (non-Hermitian)'}"
    _emit(args, payload, text)
    if bad:
        print(f"violated: {', '.join(e.label for e in bad)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_span(args) -> int:
    p = io.load_polynomial(args.poly)
    try:
        report = span_report(p, verify=args.verify)
    except BoundViolationError as exc:
        print(f"violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.tol is not None and report.violations(args.tol):
        print("violated: " + ", ".join(b.name for b in report.violations(args.tol)),
              file=sys.stderr)
        return EXIT_VIOLATION
    headers = ["bound", "dir", "value", "applicable", "note"]
    rows = [(b.name, b.direction.value, b.value, b.applicable, b.note or "")
            for b in report.bounds]
    if args.verify:
        headers.append("oracle")
        rows = [row + (report.exact,) for row in rows]
    text = _table(headers, rows)
    text += f"\nshift {_fmt(report.shift)}"
    if report.exact is not None:
        text += f"\noracle span {_fmt(report.exact)}"
    _emit(args, report.to_dict(), text)
    return EXIT_OK


def cmd_verify(args) -> int:
    args.verify = True
    if args.matrix is not None:
        return cmd_spread(args)
    if args.poly is not None:
        return cmd_span(args)
    return cmd_check(args)


def cmd_fuzz(args) -> int:
    count = args.count
    matrices = args.matrices if args.matrices is not None else max(1, count // 10)
    polys = args.polys if args.polys is not None else max(1, count // 10)
    tol = args.tol if args.tol is not None else SLACK_RTOL
    summary = run_fuzz(args.seed, count, matrices, polys, rtol=tol)
    text = (
        f"seed {summary.seed}: {summary.samples} samples, {summary.matrices} matrices, "
        f"{summary.polynomials} polynomials, {summary.checks} checks, "
        f"{len(summary.failures)} failures"
    )
    if summary.first_failure is not None:
        f = summary.first_failure
        text += f"\nfirst counterexample: {f.kind} seed={f.seed} index={f.index} {f.check}: {f.detail}"
    _emit(args, summary.to_dict(), text)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentbounds",
        description="Moment inequalities, spread bounds and span bounds with oracle checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, verify=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--tol", type=_positive_float, default=None, help="tolerance override")
        if verify:
            p.add_argument("--verify", action="store_true", help="check bounds against oracles")

    p = sub.add_parser("moments", help="moments and shape statistics of a sample")
    p.add_argument("--sample", required=True, help="JSON/CSV file or inline JSON")
    p.add_argument("--renormalize", action="store_true")
    common(p, verify=False)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("check", help="run the moment inequality suite")
    p.add_argument("--sample", required=True)
    p.add_argument("--renormalize", action="store_true")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("spread", help="eigenvalue spread bounds of a matrix")
    p.add_argument("--matrix", required=True, help="JSON file, inline JSON or 'a,b;c,d'")
    common(p)
    p.set_defaults(func=cmd_spread)

    p = sub.add_parser("span", help="root span bounds of a polynomial")
    p.add_argument("--poly", required=True, help="JSON file or '1,a1,...,an'")
    common(p)
    p.set_defaults(func=cmd_span)

    p = sub.add_parser("verify", help="bounds plus oracle values; exit 1 on violation")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix")
    src.add_argument("--poly")
    src.add_argument("--sample")
    p.add_argument("--renormalize", action="store_true")
    common(p, verify=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="randomized soundness checks")
    p.add_argument("--count", type=_positive_int, default=10_000, help="number of samples")
    p.add_argument("--matrices", type=_positive_int, default=None)
    p.add_argument("--polys", type=_positive_int, default=None)
    p.add_argument("--seed", type=int, default=0)
    common(p, verify=False)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RealRootednessViolation as exc:
        print(f"violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except BoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
