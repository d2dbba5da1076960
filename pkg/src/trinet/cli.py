"""Command-line entry point: ``trinet count|sequence|verify|enumerate``.

Exit codes: 0 success (or verification passed), 1 verification mismatch,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Sequence

from . import formulas
from .oracle import PolygonClass, count_by_class, enumerate_polygons
from .validation import cross_validate, formula_only_validate

log = logging.getLogger("trinet")

ORACLE_WARN_N = 40
ENUMERATE_WARN_N = 15
METHODS = ("closed", "recurrence", "oracle")

_CLOSED = {
    PolygonClass.PENTAGON: formulas.pentagon_closed,
    PolygonClass.HEXAGON: formulas.hexagon_closed,
}
_RECURRENCE = {
    PolygonClass.PENTAGON: formulas.PENTAGON_RECURRENCE,
    PolygonClass.HEXAGON: formulas.HEXAGON_RECURRENCE,
}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _polygon_class(text: str) -> PolygonClass:
    try:
        return PolygonClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _class_list(text: str) -> list[PolygonClass]:
    return [_polygon_class(part) for part in text.split(",") if part.strip()]


def _threads(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("TRINET_THREADS")
    if env:
        try:
            return _positive(env)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"TRINET_THREADS: {exc}") from None
    return 1


def _resolve_method(method: str | None, cls: PolygonClass) -> str:
    if method is None:
        return "closed" if cls in _CLOSED else "oracle"
    if method != "oracle" and cls not in _CLOSED:
        raise UsageError(f"only --method oracle can count {cls.label}s")
    return method


def _sequence(cls: PolygonClass, n_max: int, method: str, threads: int) -> list[int]:
    if method == "closed":
        return [_CLOSED[cls](n) for n in range(1, n_max + 1)]
    if method == "recurrence":
        return formulas.recurrence_sequence(_RECURRENCE[cls], n_max)
    if n_max > ORACLE_WARN_N:
        log.warning("oracle enumeration above n=%d may take a long time", ORACLE_WARN_N)
    return [count_by_class(n, workers=threads)[cls] for n in range(1, n_max + 1)]


def _write_csv(rows: Sequence[Sequence[object]], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerows(rows)


def _write_table(rows: Sequence[Sequence[object]], out) -> None:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    for row in cells:
        out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def cmd_count(args, out) -> int:
    classes = args.classes
    methods = {c: _resolve_method(args.method, c) for c in classes}
    threads = _threads(args.threads)
    if "oracle" in methods.values() and args.n > ORACLE_WARN_N:
        log.warning("oracle enumeration above n=%d may take a long time", ORACLE_WARN_N)
    table = None
    counts = {}
    for c in classes:
        m = methods[c]
        if m == "closed":
            counts[c] = _CLOSED[c](args.n)
        elif m == "recurrence":
            counts[c] = formulas.solve_order2(_RECURRENCE[c], args.n)
        else:
            if table is None:
                table = count_by_class(args.n, workers=threads)
            counts[c] = table[c]
    if args.format == "json":
        payload = {
            "n": args.n,
            "counts": {c.label: counts[c] for c in classes},
            "methods": {c.label: methods[c] for c in classes},
        }
        out.write(json.dumps(payload) + "\n")
    else:
        rows = [("n", "class", "method", "count")]
        rows += [(args.n, c.label, methods[c], counts[c]) for c in classes]
        (_write_csv if args.format == "csv" else _write_table)(rows, out)
    return 0


def cmd_sequence(args, out) -> int:
    method = _resolve_method(args.method, args.cls)
    values = _sequence(args.cls, args.n_max, method, _threads(args.threads))
    if args.format == "bfile":
        for n, v in enumerate(values, 1):
            out.write(f"{n} {v}\n")
    elif args.format == "json":
        out.write(json.dumps({"class": args.cls.label, "method": method, "values": values}) + "\n")
    else:
        rows = [("n", "count")] + list(enumerate(values, 1))
        (_write_csv if args.format == "csv" else _write_table)(rows, out)
    return 0


def cmd_verify(args, out) -> int:
    if args.formula_only:
        report = formula_only_validate(args.n_max)
    else:
        if args.n_max > ORACLE_WARN_N:
            log.warning("oracle enumeration above n=%d may take a long time", ORACLE_WARN_N)
        report = cross_validate(args.n_max, workers=_threads(args.threads))
    timing = not args.no_timing
    if args.format == "json":
        out.write(report.to_json(timing=timing) + "\n")
    elif args.format == "csv":
        out.write(report.to_csv())
    else:
        rows = [("n", "class", "oracle", "closed", "recurrence", "f/g oracle", "f/g closed", "agree")]
        for r in report.records:
            rows.append((
                r.n, r.cls, "-" if r.oracle is None else r.oracle, r.closed, r.recurrence,
                "-" if r.forcing_oracle is None else r.forcing_oracle, r.forcing_closed,
                "yes" if r.agree else "NO",
            ))
        _write_table(rows, out)
        for msg in report.identity_failures:
            out.write(f"identity failure: {msg}\n")
        if timing:
            out.write("timing: " + ", ".join(f"{k}={v:.3f}s" for k, v in report.timing.items()) + "\n")
        out.write(f"verdict: {'PASS' if report.verdict else 'FAIL'}\n")
    return 0 if report.verdict else 1


def cmd_enumerate(args, out) -> int:
    if args.n > ENUMERATE_WARN_N:
        log.warning("enumerating polygons above n=%d produces a lot of output", ENUMERATE_WARN_N)
    polys = enumerate_polygons(args.n, args.cls)
    if args.format == "json":
        out.write(json.dumps([p.to_record() for p in polys]) + "\n")
        return 0
    rows = [("lo_alpha", "lo_beta", "lo_gamma", "cut_alpha", "cut_beta", "cut_gamma",
             "class", "vertices", "touches_OA", "touches_OB", "touches_AB")]
    for p in polys:
        verts = ";".join(f"{a} {b} {c}" for a, b, c in p.vertices)
        rows.append((*p.bounds, p.cls.label, verts,
                     *(str(x).lower() for x in p.touches)))
    if args.format == "csv":
        _write_csv(rows, out)
    elif len(rows) > 1:
        _write_table(rows, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trinet",
        description="Count convex polygons in an n-triangular net.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="per-class counts for one n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--classes", type=_class_list, default=[PolygonClass.PENTAGON, PolygonClass.HEXAGON],
                   help="comma-separated, e.g. pentagon,hexagon")
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--threads", type=_positive)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sequence", help="counts for n = 1..n_max")
    p.add_argument("--class", dest="cls", type=_polygon_class, required=True)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--format", choices=("table", "csv", "json", "bfile"), default="table")
    p.add_argument("--threads", type=_positive)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", help="cross-check oracle, closed forms and recurrences")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--formula-only", action="store_true", help="skip enumeration")
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--threads", type=_positive)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="dump every polygon of one class")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--class", dest="cls", type=_polygon_class, required=True)
    p.add_argument("--format", choices=("table", "csv", "json"), default="json")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    logging.basicConfig(format="%(name)s: %(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"trinet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
