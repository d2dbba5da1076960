"""The n-triangular net: lattice points, grid lines and exact angle arithmetic.

A net vertex is addressed by an integer triple ``(alpha, beta, gamma)`` with
``alpha + beta + gamma == n``.  The corners are ``O = (n, 0, 0)``,
``A_n = (0, n, 0)`` and ``B_n = (0, 0, n)``, so side ``OA_n`` is
``gamma == 0``, side ``OB_n`` is ``beta == 0`` and side ``A_nB_n`` is
``alpha == 0``.

The six unit lattice directions are numbered counterclockwise starting from
the direction ``A_n -> B_n``.  Angles are multiples of 60 degrees and are
computed from direction indices only, never from floating point.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterator, NamedTuple

__all__ = [
    "DIRECTIONS",
    "DegenerateVertexError",
    "Family",
    "GridLine",
    "InvalidCoordinateError",
    "PlanarPoint",
    "Side",
    "TriCoord",
    "check_size",
    "direction_of",
    "embed",
    "grid_lines",
    "interior_angle",
    "lattice_points",
    "opposite",
]


class InvalidCoordinateError(ValueError):
    """A coordinate triple does not belong to the net it was used with."""


class DegenerateVertexError(ValueError):
    """Two consecutive edge directions are equal or opposite."""


class TriCoord(NamedTuple):
    alpha: int
    beta: int
    gamma: int

    @property
    def n(self) -> int:
        return self.alpha + self.beta + self.gamma

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta},{self.gamma})"


class Family(enum.IntEnum):
    ALPHA = 0
    BETA = 1
    GAMMA = 2


class Side(enum.Enum):
    """Sides of the outer triangle, keyed by the coordinate that vanishes on them."""

    OA = Family.GAMMA
    OB = Family.BETA
    AB = Family.ALPHA


class GridLine(NamedTuple):
    family: Family
    index: int

    def contains(self, p: TriCoord) -> bool:
        return p[self.family] == self.index


class PlanarPoint(NamedTuple):
    """Exact point ``(x, y_root3 * sqrt(3))`` of the equilateral embedding."""

    x: Fraction
    y_root3: Fraction

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y_root3) * 3 ** 0.5


# Coordinate deltas of the six unit steps, counterclockwise from A_n -> B_n.
DIRECTIONS: tuple[TriCoord, ...] = (
    TriCoord(0, -1, 1),
    TriCoord(1, -1, 0),
    TriCoord(1, 0, -1),
    TriCoord(0, 1, -1),
    TriCoord(-1, 1, 0),
    TriCoord(-1, 0, 1),
)


def check_size(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"net size must be an integer >= 1, got {n!r}")
    return n


def lattice_points(n: int) -> list[TriCoord]:
    """All ``(n+1)(n+2)/2`` net vertices, ordered lexicographically by (alpha, beta)."""
    check_size(n)
    return [
        TriCoord(a, b, n - a - b) for a in range(n + 1) for b in range(n - a + 1)
    ]


def grid_lines(n: int) -> Iterator[GridLine]:
    check_size(n)
    for family in Family:
        for i in range(n + 1):
            yield GridLine(family, i)


def embed(p: TriCoord, n: int) -> PlanarPoint:
    """Map a net vertex onto the unit equilateral triangle.

    ``A_n`` goes to (0, 0), ``B_n`` to (1, 0) and ``O`` to (1/2, sqrt(3)/2).
    """
    check_size(n)
    if min(p) < 0 or sum(p) != n:
        raise InvalidCoordinateError(f"{tuple(p)} is not a vertex of the {n}-net")
    alpha, _, gamma = p
    return PlanarPoint(Fraction(2 * gamma + alpha, 2 * n), Fraction(alpha, 2 * n))


def opposite(d: int) -> int:
    return (d + 3) % 6


def direction_of(delta: tuple[int, int, int]) -> tuple[int, int]:
    """Return ``(direction, length)`` of a lattice step along one grid line."""
    length = max(abs(c) for c in delta)
    if length == 0:
        raise DegenerateVertexError("zero-length step has no direction")
    unit = tuple(c // length for c in delta)
    if any(c * length != d for c, d in zip(unit, delta)):
        raise ValueError(f"step {tuple(delta)} does not lie on a grid line")
    try:
        return DIRECTIONS.index(unit), length
    except ValueError:
        raise ValueError(f"step {tuple(delta)} does not lie on a grid line") from None


def interior_angle(prev_dir: int, next_dir: int) -> int:
    """Interior angle in degrees at a counterclockwise convex vertex.

    ``prev_dir`` is the direction of the incoming edge, ``next_dir`` that of
    the outgoing one.  The exterior turn is ``60 * ((next - prev) mod 6)``.
    """
    turn = (next_dir - prev_dir) % 6
    if turn == 0 or turn == 3:
        raise DegenerateVertexError(
            f"directions {prev_dir} -> {next_dir} are collinear or reversing"
        )
    if turn > 3:
        raise DegenerateVertexError(
            f"directions {prev_dir} -> {next_dir} make a reflex (clockwise) turn"
        )
    return 180 - 60 * turn
