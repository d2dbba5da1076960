from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hull_grid_polygons
from trinet.net import Side, TriCoord
from trinet.oracle import (
    BoundSextuple,
    DegenerateRegionError,
    PolygonClass,
    bounds_from_vertices,
    classify_bounds,
    count_by_class,
    count_touching,
    enumerate_polygons,
    iter_bounds,
    polygon_from_bounds,
)

# Per-class totals (triangle, quadrilateral, pentagon, hexagon); n <= 4 are
# confirmed by the subset-hull search in test_hull_search_matches_oracle.
KNOWN = {
    1: (1, 0, 0, 0),
    2: (5, 6, 0, 0),
    3: (13, 33, 3, 1),
    4: (27, 102, 21, 7),
    5: (48, 243, 78, 29),
}


def test_classify_examples():
    assert classify_bounds(BoundSextuple(0, 0, 0, 0, 0, 0), 3) is PolygonClass.TRIANGLE
    b = BoundSextuple(0, 0, 0, 1, 1, 1)
    assert b.edge_lengths(3) == (1, 1, 1, 1, 1, 1)
    assert classify_bounds(b, 3) is PolygonClass.HEXAGON
    b = BoundSextuple(0, 0, 0, 1, 1, 0)
    assert b.edge_lengths(3) == (1, 1, 0, 2, 2, 1)
    assert classify_bounds(b, 3) is PolygonClass.PENTAGON


@pytest.mark.parametrize(
    "b, n",
    [
        (BoundSextuple(1, 1, 1, 0, 0, 0), 3),  # t = 0
        (BoundSextuple(0, 0, 0, 2, 2, 0), 3),  # overlapping cuts
        (BoundSextuple(0, 0, 0, 1, 0, 0), 1),  # a segment
        (BoundSextuple(0, -1, 0, 0, 0, 0), 3),
    ],
)
def test_degenerate_rejected(b, n):
    with pytest.raises(DegenerateRegionError):
        classify_bounds(b, n)
    with pytest.raises(DegenerateRegionError):
        polygon_from_bounds(b, n)


def test_polygon_from_bounds_examples():
    tri = polygon_from_bounds(BoundSextuple(0, 0, 0, 0, 0, 0), 1)
    assert set(tri.vertices) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert tri.cls is PolygonClass.TRIANGLE

    hexa = polygon_from_bounds(BoundSextuple(0, 0, 0, 1, 1, 1), 3)
    assert hexa.cls is PolygonClass.HEXAGON
    assert set(hexa.vertices) == {
        (0, 1, 2), (0, 2, 1), (1, 0, 2), (2, 0, 1), (1, 2, 0), (2, 1, 0)
    }

    quad = polygon_from_bounds(BoundSextuple(0, 0, 0, 1, 1, 0), 2)
    assert quad.cls is PolygonClass.QUADRILATERAL
    assert set(quad.vertices) == {(0, 1, 1), (0, 0, 2), (1, 0, 1), (1, 1, 0)}


def test_vertices_are_counterclockwise():
    from trinet.net import embed

    for poly in enumerate_polygons(4):
        pts = [embed(v, 4) for v in poly.vertices]
        twice_area = sum(
            p.x * q.y_root3 - q.x * p.y_root3 for p, q in zip(pts, pts[1:] + pts[:1])
        )
        assert twice_area > 0


@pytest.mark.parametrize("n", sorted(KNOWN))
def test_known_counts(n):
    table = count_by_class(n)
    assert tuple(table[c] for c in PolygonClass) == KNOWN[n]
    streamed = Counter(p.cls for p in enumerate_polygons(n))
    assert tuple(streamed[c] for c in PolygonClass) == KNOWN[n]


def test_enumerate_filters():
    assert len(list(enumerate_polygons(1))) == 1
    assert len(list(enumerate_polygons(3, PolygonClass.PENTAGON))) == 3
    assert len(list(enumerate_polygons(3, PolygonClass.HEXAGON))) == 1
    assert list(enumerate_polygons(2, PolygonClass.PENTAGON)) == []


def test_enumeration_deterministic():
    assert list(enumerate_polygons(5)) == list(enumerate_polygons(5))
    bounds = [p.bounds for p in enumerate_polygons(5)]
    assert bounds == sorted(bounds)


@pytest.mark.parametrize("n", range(1, 9))
def test_bijection_round_trip(n):
    generated = list(iter_bounds(n))
    assert len(set(generated)) == len(generated)
    recovered = [bounds_from_vertices(p.vertices, n) for p in enumerate_polygons(n)]
    assert recovered == generated


@pytest.mark.parametrize("n", range(1, 5))
def test_hull_search_matches_oracle(n):
    oracle = {frozenset(p.vertices) for p in enumerate_polygons(n)}
    assert hull_grid_polygons(n) == oracle


@pytest.mark.parametrize("n", range(1, 9))
def test_polygon_shape_invariants(n):
    for poly in enumerate_polygons(n):
        assert len(poly.vertices) == poly.cls
        assert all(min(v) >= 0 and sum(v) == n for v in poly.vertices)
        angles = poly.interior_angles()
        assert set(angles) <= {60, 120}
        assert angles.count(60) == 6 - poly.cls
        assert sum(angles) == 180 * (poly.cls - 2)
        # at most two edges per line family, on opposite sides
        dirs = poly.edge_directions
        assert len(set(dirs)) == len(dirs)


def test_touching_examples():
    sides = {Side.OA, Side.OB}
    assert count_touching(3, PolygonClass.PENTAGON, sides) == 3
    assert count_touching(3, PolygonClass.HEXAGON, sides) == 1
    assert count_touching(4, PolygonClass.PENTAGON, sides) == 15
    assert count_touching(4, "hexagon", ["oa", "ob"]) == 5
    for n in (1, 2):
        assert count_touching(n, PolygonClass.PENTAGON, sides) == 0
        assert count_touching(n, PolygonClass.HEXAGON, sides) == 0


def test_touch_flags():
    for poly in enumerate_polygons(5):
        lo = poly.bounds[:3]
        assert poly.touches.ab == any(v.alpha == 0 for v in poly.vertices) == (lo[0] == 0)
        assert poly.touches.ob == any(v.beta == 0 for v in poly.vertices) == (lo[1] == 0)
        assert poly.touches.oa == any(v.gamma == 0 for v in poly.vertices) == (lo[2] == 0)


SIDE_SETS = [set(), {Side.OA}, {Side.OB}, {Side.AB}, {Side.OA, Side.OB},
             {Side.OA, Side.AB}, {Side.OB, Side.AB}, {Side.OA, Side.OB, Side.AB}]


@pytest.mark.parametrize("n", range(1, 8))
def test_touching_matches_filtered_stream(n):
    polys = list(enumerate_polygons(n))
    for cls in PolygonClass:
        for sides in SIDE_SETS:
            expected = sum(1 for p in polys if p.cls == cls and p.touches.includes(sides))
            assert count_touching(n, cls, sides) == expected


@given(st.integers(1, 14), st.sampled_from(list(PolygonClass)),
       st.sampled_from(SIDE_SETS), st.sampled_from(SIDE_SETS))
def test_touching_monotone(n, cls, a, b):
    small, big = a & b, a | b
    assert count_touching(n, cls, big) <= count_touching(n, cls, small)


@pytest.mark.parametrize("cls", [PolygonClass.PENTAGON, PolygonClass.HEXAGON])
@pytest.mark.parametrize("n", range(2, 10))
def test_forcing_step_counts_three_side_polygons(n, cls):
    both = {Side.OA, Side.OB}
    step = count_touching(n, cls, both) - count_touching(n - 1, cls, both)
    assert step == count_touching(n, cls, both | {Side.AB})


@settings(max_examples=200)
@given(st.integers(1, 9), st.data())
def test_random_sextuple_round_trip(n, data):
    la = data.draw(st.integers(0, n - 1))
    lb = data.draw(st.integers(0, n - 1 - la))
    lg = data.draw(st.integers(0, n - 1 - la - lb))
    t = n - la - lb - lg
    ca = data.draw(st.integers(0, t))
    cb = data.draw(st.integers(0, t - ca))
    cg = data.draw(st.integers(0, t - max(ca, cb)))
    b = BoundSextuple(la, lb, lg, ca, cb, cg)
    if sum(x > 0 for x in b.edge_lengths(n)) < 3:
        with pytest.raises(DegenerateRegionError):
            polygon_from_bounds(b, n)
        return
    poly = polygon_from_bounds(b, n)
    assert bounds_from_vertices(poly.vertices, n) == b
    assert poly.cls == classify_bounds(b, n)


def test_parallel_count_matches_serial():
    assert count_by_class(11, workers=3) == count_by_class(11, workers=1)


def test_polygon_class_parse():
    assert PolygonClass.parse("Pentagon") is PolygonClass.PENTAGON
    assert PolygonClass.parse("6") is PolygonClass.HEXAGON
    with pytest.raises(ValueError):
        PolygonClass.parse("heptagon")


def test_count_table_n1():
    table = count_by_class(1)
    assert table.total == 1
    assert all(table[c] == 0 for c in (4, 5, 6))
    assert TriCoord(1, 0, 0) in polygon_from_bounds(BoundSextuple(0, 0, 0, 0, 0, 0), 1).vertices
