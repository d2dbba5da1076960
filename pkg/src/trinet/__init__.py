"""Exact counts of convex polygons in an n-triangular net."""

from .formulas import (
    Order2Recurrence,
    f_closed,
    g_closed,
    hexagon_closed,
    hexagon_recurrence,
    pentagon_closed,
    pentagon_recurrence,
    solve_order2,
)
from .net import Side, TriCoord, embed, interior_angle, lattice_points
from .oracle import (
    BoundSextuple,
    CountTable,
    LatticePolygon,
    PolygonClass,
    classify_bounds,
    count_by_class,
    count_touching,
    enumerate_polygons,
    polygon_from_bounds,
)
from .validation import VerificationReport, cross_validate, formula_only_validate

__version__ = "0.1.0"

__all__ = [
    "BoundSextuple",
    "CountTable",
    "LatticePolygon",
    "Order2Recurrence",
    "PolygonClass",
    "Side",
    "TriCoord",
    "VerificationReport",
    "classify_bounds",
    "count_by_class",
    "count_touching",
    "cross_validate",
    "embed",
    "enumerate_polygons",
    "f_closed",
    "formula_only_validate",
    "g_closed",
    "hexagon_closed",
    "hexagon_recurrence",
    "interior_angle",
    "lattice_points",
    "pentagon_closed",
    "pentagon_recurrence",
    "polygon_from_bounds",
    "solve_order2",
]
