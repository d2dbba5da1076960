"""Brute-force enumeration of convex grid polygons in an n-triangular net.

Every convex polygon drawn on net segments is the intersection of six
half-planes, two per line family::

    lo_alpha <= alpha <= hi_alpha,  lo_beta <= beta <= hi_beta,
    lo_gamma <= gamma <= hi_gamma

with all bounds tight.  Writing ``t = n - (lo_alpha + lo_beta + lo_gamma)``
for the side of the smallest enclosing upward triangle, the upper bounds are
recorded as corner-cut depths ``cut_x = t - (hi_x - lo_x)``.  The resulting
:class:`BoundSextuple` is a canonical name for the polygon, so enumerating
all admissible sextuples visits every polygon exactly once.
"""

from __future__ import annotations

import enum
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from .net import (
    DIRECTIONS,
    Side,
    TriCoord,
    check_size,
    direction_of,
    interior_angle,
)

__all__ = [
    "BoundSextuple",
    "CountTable",
    "DegenerateRegionError",
    "LatticePolygon",
    "PolygonClass",
    "Touches",
    "bounds_from_vertices",
    "classify_bounds",
    "count_by_class",
    "count_touching",
    "enumerate_polygons",
    "iter_bounds",
    "polygon_from_bounds",
]


class DegenerateRegionError(ValueError):
    """A bound sextuple does not describe a polygon of positive area."""


class PolygonClass(enum.IntEnum):
    TRIANGLE = 3
    QUADRILATERAL = 4
    PENTAGON = 5
    HEXAGON = 6

    @classmethod
    def parse(cls, name: str | int | "PolygonClass") -> "PolygonClass":
        if isinstance(name, cls):
            return name
        if isinstance(name, int):
            return cls(name)
        key = name.strip().upper()
        if key.isdigit():
            return cls(int(key))
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown polygon class {name!r}") from None

    @property
    def label(self) -> str:
        return self.name.lower()


class BoundSextuple(NamedTuple):
    lo_alpha: int
    lo_beta: int
    lo_gamma: int
    cut_alpha: int
    cut_beta: int
    cut_gamma: int

    def side(self, n: int) -> int:
        """Side length ``t`` of the enclosing upward triangle."""
        return n - self.lo_alpha - self.lo_beta - self.lo_gamma

    def edge_lengths(self, n: int) -> tuple[int, int, int, int, int, int]:
        """Cut edges first, then the edges lying on the three lower-bound lines."""
        t = self.side(n)
        ca, cb, cg = self.cut_alpha, self.cut_beta, self.cut_gamma
        return (ca, cb, cg, t - cb - cg, t - ca - cg, t - ca - cb)

    def ccw_lengths(self, n: int) -> tuple[int, int, int, int, int, int]:
        """Edge lengths indexed by lattice direction 0..5."""
        ca, cb, cg, la, lb, lg = self.edge_lengths(n)
        return (la, cg, lb, ca, lg, cb)


class Touches(NamedTuple):
    oa: bool
    ob: bool
    ab: bool

    def includes(self, sides: Iterable[Side]) -> bool:
        return all(self[_SIDE_SLOT[s]] for s in sides)


_SIDE_SLOT = {Side.OA: 0, Side.OB: 1, Side.AB: 2}


def _validate(b: BoundSextuple, n: int) -> tuple[int, ...]:
    check_size(n)
    if min(b) < 0:
        raise DegenerateRegionError(f"negative entry in {tuple(b)}")
    t = b.side(n)
    if t < 1:
        raise DegenerateRegionError(f"{tuple(b)} leaves no room in the {n}-net (t={t})")
    lengths = b.edge_lengths(n)
    if min(lengths) < 0:
        raise DegenerateRegionError(f"corner cuts of {tuple(b)} overlap (t={t})")
    if sum(1 for x in lengths if x > 0) < 3:
        raise DegenerateRegionError(f"{tuple(b)} encloses zero area")
    return lengths


def classify_bounds(b: BoundSextuple, n: int) -> PolygonClass:
    """Class of the polygon named by ``b``: its number of positive edges."""
    lengths = _validate(b, n)
    return PolygonClass(sum(1 for x in lengths if x > 0))


@dataclass(frozen=True)
class LatticePolygon:
    bounds: BoundSextuple
    cls: PolygonClass
    vertices: tuple[TriCoord, ...]
    touches: Touches

    @property
    def edge_directions(self) -> list[int]:
        vs = self.vertices
        return [direction_of(_sub(vs[(i + 1) % len(vs)], vs[i]))[0] for i in range(len(vs))]

    def interior_angles(self) -> list[int]:
        """Interior angle at each vertex, in the order of ``vertices``."""
        dirs = self.edge_directions
        return [interior_angle(dirs[i - 1], dirs[i]) for i in range(len(dirs))]

    def to_record(self) -> dict:
        return {
            "bounds": list(self.bounds),
            "class": self.cls.label,
            "vertices": [list(v) for v in self.vertices],
            "touches": {"OA": self.touches.oa, "OB": self.touches.ob, "AB": self.touches.ab},
        }


def _sub(p: Sequence[int], q: Sequence[int]) -> tuple[int, int, int]:
    return (p[0] - q[0], p[1] - q[1], p[2] - q[2])


def polygon_from_bounds(b: BoundSextuple, n: int) -> LatticePolygon:
    """Build the counterclockwise vertex cycle of the polygon named by ``b``.

    The walk starts at the corner where the ``beta``-cut meets the bottom
    line ``alpha = lo_alpha`` and follows the six support lines in direction
    order, skipping edges of zero length.
    """
    lengths = _validate(b, n)
    ccw = b.ccw_lengths(n)
    t = b.side(n)
    a, bb, c = b.lo_alpha, b.lo_beta + t - b.cut_beta, b.lo_gamma + b.cut_beta
    vertices = []
    for d, step in enumerate(ccw):
        if step:
            vertices.append(TriCoord(a, bb, c))
            da, db, dc = DIRECTIONS[d]
            a, bb, c = a + step * da, bb + step * db, c + step * dc
    assert (a, bb, c) == (b.lo_alpha, b.lo_beta + t - b.cut_beta, b.lo_gamma + b.cut_beta)
    cls = PolygonClass(sum(1 for x in lengths if x > 0))
    touches = Touches(b.lo_gamma == 0, b.lo_beta == 0, b.lo_alpha == 0)
    return LatticePolygon(b, cls, tuple(vertices), touches)


def bounds_from_vertices(vertices: Iterable[Sequence[int]], n: int) -> BoundSextuple:
    """Recover the canonical sextuple from any point set spanning the polygon."""
    pts = list(vertices)
    lo = [min(p[i] for p in pts) for i in range(3)]
    hi = [max(p[i] for p in pts) for i in range(3)]
    t = n - sum(lo)
    return BoundSextuple(*lo, *(t - (hi[i] - lo[i]) for i in range(3)))


def _cuts(t: int) -> Iterator[tuple[int, int, int, int]]:
    """Admissible corner cuts for side ``t`` with the resulting class."""
    for ca in range(t + 1):
        for cb in range(t - ca + 1):
            for cg in range(t - max(ca, cb) + 1):
                k = (
                    (ca > 0) + (cb > 0) + (cg > 0)
                    + (t - cb - cg > 0) + (t - ca - cg > 0) + (t - ca - cb > 0)
                )
                if k >= 3:
                    yield ca, cb, cg, k


def iter_bounds(n: int) -> Iterator[BoundSextuple]:
    """Every admissible sextuple of the n-net in lexicographic order."""
    check_size(n)
    for la in range(n + 1):
        for lb in range(n - la + 1):
            for lg in range(n - la - lb + 1):
                t = n - la - lb - lg
                if t < 1:
                    continue
                for ca, cb, cg, _ in _cuts(t):
                    yield BoundSextuple(la, lb, lg, ca, cb, cg)


def enumerate_polygons(
    n: int, cls: PolygonClass | None = None
) -> Iterator[LatticePolygon]:
    """Yield each convex grid polygon of the n-net once, in sextuple order."""
    for b in iter_bounds(n):
        if cls is not None and classify_bounds(b, n) != cls:
            continue
        yield polygon_from_bounds(b, n)


@dataclass(frozen=True)
class CountTable:
    n: int
    counts: dict[PolygonClass, int] = field(default_factory=dict)

    def __getitem__(self, cls: PolygonClass | str | int) -> int:
        return self.counts.get(PolygonClass.parse(cls), 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@lru_cache(maxsize=None)
def _shape_histogram(t: int) -> tuple[int, int, int, int]:
    """Number of cut patterns of side ``t`` per class 3..6."""
    hist = [0, 0, 0, 0]
    for *_, k in _cuts(t):
        hist[k - 3] += 1
    return tuple(hist)


def _count_slice(n: int, lo_alphas: Sequence[int]) -> list[int]:
    totals = [0, 0, 0, 0]
    for la in lo_alphas:
        for t in range(1, n - la + 1):
            # (lo_beta, lo_gamma) pairs summing to n - la - t
            mult = n - la - t + 1
            for i, h in enumerate(_shape_histogram(t)):
                totals[i] += mult * h
    return totals


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("TRINET_THREADS", "1") or 1)
    return max(1, workers)


def count_by_class(n: int, workers: int | None = None) -> CountTable:
    """Per-class polygon counts without materializing any polygon.

    The work is split over disjoint ``lo_alpha`` ranges; with ``workers > 1``
    the slices run in separate processes and are summed in slice order.
    """
    check_size(n)
    workers = _resolve_workers(workers)
    lo_alphas = list(range(n))
    if workers == 1 or n < 2:
        totals = _count_slice(n, lo_alphas)
    else:
        slices = [lo_alphas[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_slice, [n] * workers, slices))
        totals = [sum(p[i] for p in parts) for i in range(4)]
    return CountTable(n, {PolygonClass(i + 3): c for i, c in enumerate(totals)})


def count_touching(
    n: int, cls: PolygonClass | str, required_sides: Iterable[Side | str]
) -> int:
    """Count polygons of ``cls`` that reach every side in ``required_sides``."""
    check_size(n)
    cls = PolygonClass.parse(cls)
    sides = {s if isinstance(s, Side) else Side[s.upper()] for s in required_sides}
    free = 3 - len(sides)
    total = 0
    for t in range(1, n + 1):
        s = n - t
        # lower-bound triples summing to s with the required coordinates zero
        if free == 0:
            mult = 1 if s == 0 else 0
        else:
            mult = comb(s + free - 1, free - 1)
        total += mult * _shape_histogram(t)[cls - 3]
    return total
