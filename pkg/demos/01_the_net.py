"""
The n-triangular net
====================

Lattice points, side conventions and exact geometry of a small net.
"""

from trinet.net import Side, embed, lattice_points

n = 3
points = lattice_points(n)
print(f"{len(points)} vertices in the {n}-net")

# Each vertex is (alpha, beta, gamma) with alpha + beta + gamma == n.
# O = (n,0,0) sits at the top, A_n = (0,n,0) bottom left, B_n = (0,0,n) bottom right.
for p in points:
    x, y = embed(p, n).to_float()
    print(f"  {p}  ->  ({x:.3f}, {y:.3f})")

# A side is reached exactly when one coordinate vanishes.
on_oa = [p for p in points if p.gamma == 0]
on_ob = [p for p in points if p.beta == 0]
print(f"side {Side.OA.name}: {[str(p) for p in on_oa]}")
print(f"side {Side.OB.name}: {[str(p) for p in on_ob]}")
