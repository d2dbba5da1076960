"""
Closed forms against recurrences
================================

Pentagon and hexagon counts from the parity-split polynomials, from the
order-2 recurrence driven by the forcing terms f and g, and from direct
enumeration.
"""

from trinet import formulas
from trinet.net import Side
from trinet.oracle import PolygonClass, count_by_class, count_touching

print(" n   P closed  P rec  P enum   f  f enum |  H closed  H rec  H enum   g  g enum")
for n in range(1, 13):
    table = count_by_class(n)
    f_enum = count_touching(n, PolygonClass.PENTAGON, {Side.OA, Side.OB})
    g_enum = count_touching(n, PolygonClass.HEXAGON, {Side.OA, Side.OB})
    print(
        f"{n:2d} {formulas.pentagon_closed(n):9d} {formulas.pentagon_recurrence(n):6d}"
        f" {table[PolygonClass.PENTAGON]:7d} {formulas.f_closed(n):3d} {f_enum:7d} |"
        f" {formulas.hexagon_closed(n):9d} {formulas.hexagon_recurrence(n):6d}"
        f" {table[PolygonClass.HEXAGON]:7d} {formulas.g_closed(n):3d} {g_enum:7d}"
    )

# Python integers never wrap: H(10^4) is past 2^64.
big = formulas.hexagon_closed(10**4)
print(f"H(10^4) = {big}  ({big.bit_length()} bits)")
