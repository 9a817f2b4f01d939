"""General-position point sets and their exact Delaunay ground truth.

Coordinates are 3-decimal values in the unit square. Generation rejects
any collinear triple and any co-circular quadruple with exact integer
arithmetic, which makes the Delaunay triangulation unique; ground truth
is then simply every triple with an empty circumcircle.
"""

from __future__ import annotations

from ..geom2d import DegenerateGeometryError, Point2, incircle_test, orient
from .rng import Stream


def gen_point_set(n: int, stream: Stream) -> list[Point2]:
    if n < 3:
        raise ValueError("need at least 3 points")
    points: list[Point2] = []
    attempts = 0
    while len(points) < n:
        attempts += 1
        if attempts > 10000 * n:
            raise RuntimeError("point sampling failed to converge")
        cand = Point2.of(stream.randint(0, 1000) / 1000.0, stream.randint(0, 1000) / 1000.0)
        if cand in points:
            continue
        ok = True
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                if orient(points[i], points[j], cand) == 0:
                    ok = False
                    break
                for k in range(j + 1, len(points)):
                    if incircle_test(points[i], points[j], points[k], cand) == "on":
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            points.append(cand)
    return points


def delaunay_triangles(points: list[Point2]) -> list[tuple[int, int, int]]:
    """All index triples whose circumcircle is empty, sorted.

    For a general-position set this is exactly the (unique) Delaunay
    triangulation.
    """
    n = len(points)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                try:
                    verdict_all_outside = all(
                        incircle_test(points[i], points[j], points[k], points[m]) == "outside"
                        for m in range(n)
                        if m not in (i, j, k)
                    )
                except DegenerateGeometryError:
                    continue
                if verdict_all_outside:
                    out.append((i, j, k))
    return out


def points_as_floats(points: list[Point2]) -> list[list[float]]:
    return [[float(p.x), float(p.y)] for p in points]
