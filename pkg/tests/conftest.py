import itertools

import pytest

from trinet.net import lattice_points

_acceptance_lines = []


def hull_grid_polygons(n):
    """Vertex sets of convex grid polygons found by hulling every point subset.

    Works in the (beta, gamma) plane, an affine image of the net, so
    convexity and collinearity are unchanged.  Independent of the sextuple
    encoding used by the oracle module.
    """
    pts = lattice_points(n)
    found = set()
    for r in range(3, len(pts) + 1):
        for subset in itertools.combinations(pts, r):
            hull = _hull(subset)
            if len(hull) < 3:
                continue
            ok = True
            for i in range(len(hull)):
                d = [hull[(i + 1) % len(hull)][j] - hull[i][j] for j in range(3)]
                if 0 not in d:
                    ok = False
                    break
            if ok:
                found.add(frozenset(hull))
    return found


def _cross(o, a, b):
    return (a[1] - o[1]) * (b[2] - o[2]) - (a[2] - o[2]) * (b[1] - o[1])


def _hull(points):
    pts = sorted(set(points), key=lambda p: (p[1], p[2]))
    if len(pts) < 3:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@pytest.fixture
def acceptance_line():
    def record(label, ok, detail=""):
        _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {label}{'  ' + detail if detail else ''}")
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
