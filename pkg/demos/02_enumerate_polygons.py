"""
Enumerating convex grid polygons
================================

Every convex polygon drawn on net segments is named by a bound sextuple:
three coordinate minima plus three corner-cut depths.  Walking all
admissible sextuples lists each polygon once.
"""

from collections import Counter

from trinet.oracle import PolygonClass, count_by_class, enumerate_polygons

n = 4

# The pentagons of the 4-net, with their vertices and the 60-degree corner.
for poly in enumerate_polygons(n, PolygonClass.PENTAGON):
    angles = poly.interior_angles()
    acute = poly.vertices[angles.index(60)]
    print(tuple(poly.bounds), " ".join(map(str, poly.vertices)), "acute at", acute)

# Streaming counts agree with the histogram-based counter.
streamed = Counter(p.cls for p in enumerate_polygons(n))
table = count_by_class(n)
for cls in PolygonClass:
    print(f"{cls.label:>13}: {streamed[cls]:4d} {table[cls]:4d}")
