"""Cross-checks between the enumeration oracle, closed forms and recurrences.

A :class:`VerificationReport` holds one record per ``(n, class)`` pair.
Mismatches are recorded, never raised, so a single run always produces a
full report.  Reports serialize to JSON and CSV.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable

from . import formulas
from .net import Side, check_size
from .oracle import PolygonClass, count_by_class, count_touching, enumerate_polygons

__all__ = [
    "CSV_COLUMNS",
    "Record",
    "VerificationReport",
    "angle_law_violations",
    "cross_validate",
    "formula_only_validate",
    "identity_failures",
]

CSV_COLUMNS = (
    "n", "class", "oracle", "closed", "recurrence",
    "f_or_g_oracle", "f_or_g_closed", "agree",
)

# Classes that have a closed form and a recurrence.
FORMULA_CLASSES = (PolygonClass.PENTAGON, PolygonClass.HEXAGON)

_CLOSED = {
    PolygonClass.PENTAGON: formulas.pentagon_closed,
    PolygonClass.HEXAGON: formulas.hexagon_closed,
}
_FORCING = {
    PolygonClass.PENTAGON: formulas.f_closed,
    PolygonClass.HEXAGON: formulas.g_closed,
}
_RECURRENCE = {
    PolygonClass.PENTAGON: formulas.PENTAGON_RECURRENCE,
    PolygonClass.HEXAGON: formulas.HEXAGON_RECURRENCE,
}


@dataclass
class Record:
    n: int
    cls: str
    closed: int | None
    recurrence: int
    forcing_closed: int | None
    oracle: int | None = None
    forcing_oracle: int | None = None
    angle_law: bool | None = None
    agree: bool = field(init=False)

    def __post_init__(self) -> None:
        self.agree = self._compare()

    def _compare(self) -> bool:
        if self.closed is None or self.forcing_closed is None:
            return False
        if self.closed != self.recurrence:
            return False
        if self.oracle is not None and self.oracle != self.closed:
            return False
        if self.forcing_oracle is not None and self.forcing_oracle != self.forcing_closed:
            return False
        return self.angle_law is not False

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "Record":
        d = dict(d)
        agree = d.pop("agree", None)
        rec = cls(**d)
        if agree is not None and agree != rec.agree:
            raise ValueError(f"record for n={rec.n} {rec.cls}: stored verdict disagrees")
        return rec


@dataclass
class VerificationReport:
    n_min: int
    n_max: int
    mode: str
    records: list[Record]
    identity_failures: list[str] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return not self.identity_failures and all(r.agree for r in self.records)

    @property
    def mismatches(self) -> list[Record]:
        return [r for r in self.records if not r.agree]

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "n_range": [self.n_min, self.n_max],
            "mode": self.mode,
            "verdict": self.verdict,
            "records": [r.to_dict() for r in self.records],
            "identity_failures": list(self.identity_failures),
        }
        if timing:
            d["timing"] = dict(self.timing)
        return d

    def to_json(self, timing: bool = True, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        report = cls(
            n_min=d["n_range"][0],
            n_max=d["n_range"][1],
            mode=d["mode"],
            records=[Record.from_dict(r) for r in d["records"]],
            identity_failures=list(d.get("identity_failures", [])),
            timing=dict(d.get("timing", {})),
        )
        if "verdict" in d and d["verdict"] != report.verdict:
            raise ValueError("stored verdict disagrees with records")
        return report

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.records:
            writer.writerow([
                r.n, r.cls, _cell(r.oracle), _cell(r.closed), r.recurrence,
                _cell(r.forcing_oracle), _cell(r.forcing_closed), str(r.agree).lower(),
            ])
        return buf.getvalue()


def _cell(v: int | None) -> str:
    return "" if v is None else str(v)


def _safe(fn, n: int) -> int | None:
    try:
        return fn(n)
    except formulas.InexactDivisionError:
        return None


def angle_law_violations(n: int) -> dict[PolygonClass, int]:
    """Polygons of the n-net whose count of 60-degree angles is not ``6 - class``."""
    bad = {c: 0 for c in PolygonClass}
    for poly in enumerate_polygons(n):
        acute = poly.interior_angles().count(60)
        if acute != 6 - poly.cls or len(poly.vertices) != poly.cls:
            bad[poly.cls] += 1
    return bad


def _oracle_row(args: tuple[int, tuple[PolygonClass, ...], bool]) -> tuple[int, dict, dict, dict | None, dict]:
    n, classes, angles = args
    timing = {}
    t0 = time.perf_counter()
    table = count_by_class(n, workers=1)
    touching = {c: count_touching(n, c, (Side.OA, Side.OB)) for c in classes}
    timing["oracle"] = time.perf_counter() - t0
    bad = None
    if angles:
        t0 = time.perf_counter()
        bad = angle_law_violations(n)
        timing["angles"] = time.perf_counter() - t0
    return n, {c: table[c] for c in classes}, touching, bad, timing


def _parse_classes(classes: Iterable[PolygonClass | str] | None) -> tuple[PolygonClass, ...]:
    if classes is None:
        return FORMULA_CLASSES
    parsed = sorted({PolygonClass.parse(c) for c in classes})
    for c in parsed:
        if c not in FORMULA_CLASSES:
            raise ValueError(f"no closed form is available for {c.label}s")
    return tuple(parsed)


def cross_validate(
    n_max: int,
    classes: Iterable[PolygonClass | str] | None = None,
    check_angles: bool = True,
    workers: int = 1,
) -> VerificationReport:
    """Three-way comparison for every ``n <= n_max``.

    Full enumeration grows roughly like ``n**6``; beyond ``n = 40`` expect
    long runs.  Per-n oracle work is independent and may be spread over
    ``workers`` processes.
    """
    check_size(n_max)
    classes = _parse_classes(classes)
    timing = {"oracle": 0.0, "closed": 0.0, "recurrence": 0.0}
    if check_angles:
        timing["angles"] = 0.0

    jobs = [(n, classes, check_angles) for n in range(1, n_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_oracle_row, jobs))
    else:
        rows = [_oracle_row(j) for j in jobs]
    rows.sort(key=lambda r: r[0])

    records = []
    for n, oracle, touching, bad, row_timing in rows:
        for k, v in row_timing.items():
            timing[k] += v
        for c in classes:
            t0 = time.perf_counter()
            closed = _safe(_CLOSED[c], n)
            forcing = _safe(_FORCING[c], n)
            timing["closed"] += time.perf_counter() - t0
            t0 = time.perf_counter()
            rec = formulas.solve_order2(_RECURRENCE[c], n)
            timing["recurrence"] += time.perf_counter() - t0
            records.append(Record(
                n=n, cls=c.label, closed=closed, recurrence=rec,
                forcing_closed=forcing, oracle=oracle[c],
                forcing_oracle=touching[c],
                angle_law=None if bad is None else bad[c] == 0,
            ))
    return VerificationReport(1, n_max, "full", records, timing=timing)


def identity_failures(n_max: int) -> list[str]:
    """Check divisibility and the first-difference identities up to ``n_max``.

    Returns a description of every failure; an empty list means all hold.
    """
    check_size(n_max)
    failures = []
    P, H, f, g = {}, {}, {}, {}
    for n in range(1, n_max + 1):
        for name, fn, store in (
            ("P", formulas.pentagon_closed, P), ("H", formulas.hexagon_closed, H),
            ("f", formulas.f_closed, f), ("g", formulas.g_closed, g),
        ):
            try:
                store[n] = fn(n)
            except formulas.InexactDivisionError as exc:
                failures.append(f"{name}({n}): {exc}")

    def check(label: str, lhs: int | None, rhs: int) -> None:
        if lhs != rhs:
            failures.append(f"{label}: {lhs} != {rhs}")

    for k in range(1, n_max // 2 + 1):
        e, o = 2 * k, 2 * k - 1
        if e in P and o in P:
            check(f"P({e})-P({o})", P[e] - P[o], 3 * k**4 - 4 * k**3 + k)
        if e in H and o in H:
            num = k * (12 * k**4 - 15 * k**3 + 5 * k**2 - 2)
            check(f"30*(H({e})-H({o}))", 30 * (H[e] - H[o]), num)
            if num % 30:
                failures.append(f"H difference at k={k} not divisible by 30")
        if e in f and o in f:
            check(f"f({e})-f({o})", f[e] - f[o], 3 * (3 * k**2 - 5 * k + 2))
        if e in g and o in g:
            check(f"2*(g({e})-g({o}))", 2 * (g[e] - g[o]), (k - 1) * (4 * k**2 - 5 * k + 2))
    for k in range(1, (n_max - 1) // 2 + 1):
        o, e = 2 * k + 1, 2 * k
        if o in P and e in P:
            check(f"2*(P({o})-P({e}))", 2 * (P[o] - P[e]), 6 * k**4 + 4 * k**3 - 3 * k**2 - k)
        if o in H and e in H:
            num = k * (12 * k**4 + 15 * k**3 + 5 * k**2 - 2)
            check(f"30*(H({o})-H({e}))", 30 * (H[o] - H[e]), num)
            if num % 30:
                failures.append(f"H difference at k={k} not divisible by 30")
        if o in f and e in f:
            check(f"f({o})-f({e})", f[o] - f[e], 3 * (3 * k**2 - 2 * k))
        if o in g and e in g:
            check(f"2*(g({o})-g({e}))", 2 * (g[o] - g[e]), k * (4 * k**2 - 3 * k + 1))
    return failures


def formula_only_validate(n_max: int, identities: bool = True) -> VerificationReport:
    """Closed forms against telescoped recurrences, no enumeration."""
    check_size(n_max)
    timing = {"closed": 0.0, "recurrence": 0.0}
    seqs, closed, forcing = {}, {}, {}
    for c in FORMULA_CLASSES:
        t0 = time.perf_counter()
        seqs[c] = formulas.recurrence_sequence(_RECURRENCE[c], n_max)
        timing["recurrence"] += time.perf_counter() - t0
        t0 = time.perf_counter()
        closed[c] = [_safe(_CLOSED[c], n) for n in range(1, n_max + 1)]
        forcing[c] = [_safe(_FORCING[c], n) for n in range(1, n_max + 1)]
        timing["closed"] += time.perf_counter() - t0
    records = [
        Record(n=n, cls=c.label, closed=closed[c][n - 1], recurrence=seqs[c][n - 1],
               forcing_closed=forcing[c][n - 1])
        for n in range(1, n_max + 1)
        for c in FORMULA_CLASSES
    ]
    failures = []
    if identities:
        t0 = time.perf_counter()
        failures = identity_failures(n_max)
        timing["identities"] = time.perf_counter() - t0
    return VerificationReport(1, n_max, "formula_only", records, failures, timing)
