"""Unit-tetra transforms, pairwise intersection, and shadow scoring.

The shadow scorer rasterizes projected coverage against an analytic 2D
target, subtracts spill and redundancy, applies the quaternion and
intersection penalties, and renormalizes by the subtask's attainable
fraction before clamping to [0, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..geom2d import CoverageResult, RasterGrid, rasterize_coverage
from .quat import InvalidRotationError, RigidTransform

SQRT3 = math.sqrt(3.0)

#: Regular unit tetra resting on z=0 with an edge along x (prompt frame).
CANONICAL_VERTICES = np.array(
    [
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [0.5, SQRT3 / 2.0, 0.0],
        [0.5, SQRT3 / 6.0, math.sqrt(2.0 / 3.0)],
    ]
)

QUATERNION_PENALTY = 0.25   # -75%
INTERSECTION_PENALTY = 0.5  # -50%
_EPS = 1e-9


@dataclass(frozen=True)
class TetraInstance:
    transform: RigidTransform

    @staticmethod
    def from_seven(values) -> "TetraInstance":
        return TetraInstance(RigidTransform.from_seven(values))

    def world_points(self) -> np.ndarray:
        return self.transform.apply(CANONICAL_VERTICES)

    def quaternion_normalized(self) -> bool:
        return self.transform.rotation.is_normalized()


def _hull_2d(points: np.ndarray) -> list[tuple[float, float]]:
    pts = sorted({(float(x), float(y)) for x, y in points})
    if len(pts) == 1:
        return [pts[0]] * 3
    if len(pts) == 2:
        return [pts[0], pts[1], pts[0]]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def transform_tetra(t: TetraInstance) -> tuple[np.ndarray, list[tuple[float, float]]]:
    """World-space vertices and the vertical-projection shadow polygon."""
    pts = t.world_points()
    shadow = _hull_2d(pts[:, :2])
    return pts, shadow


def _project(points: np.ndarray, axis: np.ndarray) -> tuple[float, float]:
    d = points @ axis
    return float(d.min()), float(d.max())


def tetra_pair_intersect(a: TetraInstance, b: TetraInstance) -> bool:
    """Separating-axis test; touching faces do not count as intersection."""
    pa = a.world_points()
    pb = b.world_points()

    # Quick centroid bound: unit tetra circumradius is sqrt(3/8) < 1.
    if np.linalg.norm(pa.mean(axis=0) - pb.mean(axis=0)) > 2.0:
        return False

    faces = [(0, 2, 1), (0, 1, 3), (1, 2, 3), (2, 0, 3)]
    axes = []
    for pts in (pa, pb):
        for i, j, k in faces:
            n = np.cross(pts[j] - pts[i], pts[k] - pts[i])
            if np.linalg.norm(n) > _EPS:
                axes.append(n)
    edges_a = [pa[j] - pa[i] for i in range(4) for j in range(i + 1, 4)]
    edges_b = [pb[j] - pb[i] for i in range(4) for j in range(i + 1, 4)]
    for ea in edges_a:
        for eb in edges_b:
            n = np.cross(ea, eb)
            if np.linalg.norm(n) > _EPS:
                axes.append(n)

    for axis in axes:
        axis = axis / np.linalg.norm(axis)
        lo1, hi1 = _project(pa, axis)
        lo2, hi2 = _project(pb, axis)
        if min(hi1, hi2) - max(lo1, lo2) <= _EPS:
            return False
    return True


# ---------------------------------------------------------------------------
# Target shapes (all centered at the origin)
# ---------------------------------------------------------------------------


class PolygonTarget:
    def __init__(self, points: list[tuple[float, float]]):
        self.points = points

    @property
    def area(self) -> float:
        s = 0.0
        for i in range(len(self.points)):
            x0, y0 = self.points[i]
            x1, y1 = self.points[(i + 1) % len(self.points)]
            s += x0 * y1 - y0 * x1
        return abs(s) / 2.0

    def bounds(self) -> tuple[float, float, float, float]:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    def contains(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        # Even-odd rule, vectorized over the sampling grid.
        inside = np.zeros(x.shape, dtype=bool)
        pts = self.points
        for i in range(len(pts)):
            x0, y0 = pts[i]
            x1, y1 = pts[(i + 1) % len(pts)]
            crosses = (y0 > y) != (y1 > y)
            with np.errstate(divide="ignore", invalid="ignore"):
                xint = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
            inside ^= crosses & (x < np.where(crosses, xint, 0.0))
        return inside


class CircleTarget:
    def __init__(self, radius: float):
        self.radius = radius

    @property
    def area(self) -> float:
        return math.pi * self.radius**2

    def bounds(self):
        r = self.radius
        return -r, -r, r, r

    def contains(self, x, y):
        return x * x + y * y <= self.radius**2


class AnnulusTarget:
    def __init__(self, outer: float, inner: float):
        self.outer = outer
        self.inner = inner

    @property
    def area(self) -> float:
        return math.pi * (self.outer**2 - self.inner**2)

    def bounds(self):
        r = self.outer
        return -r, -r, r, r

    def contains(self, x, y):
        r2 = x * x + y * y
        return (r2 <= self.outer**2) & (r2 >= self.inner**2)


def _regular_polygon(n: int, circumradius: float, phase: float = 0.0):
    return [
        (circumradius * math.cos(phase + 2 * math.pi * k / n),
         circumradius * math.sin(phase + 2 * math.pi * k / n))
        for k in range(n)
    ]


TARGET_NAMES = (
    "Square", "Circle", "Triangle", "Hexagon", "Star", "Cross",
    "Diamond", "L-shape", "T-shape", "Chevron", "Arrow", "Annulus",
)


def make_target(name: str, size: float):
    """Named target shape scaled by ``size`` (the overall footprint)."""
    s = size
    if name == "Square":
        h = s / 2
        return PolygonTarget([(-h, -h), (h, -h), (h, h), (-h, h)])
    if name == "Circle":
        return CircleTarget(s / 2)
    if name == "Triangle":
        # Equilateral, side s, centroid at origin.
        h = s * SQRT3 / 2
        return PolygonTarget([(-s / 2, -h / 3), (s / 2, -h / 3), (0.0, 2 * h / 3)])
    if name == "Hexagon":
        return PolygonTarget(_regular_polygon(6, s / 2))
    if name == "Star":
        outer = s / 2
        inner = outer * 0.45
        pts = []
        for k in range(5):
            a_out = math.pi / 2 + 2 * math.pi * k / 5
            a_in = a_out + math.pi / 5
            pts.append((outer * math.cos(a_out), outer * math.sin(a_out)))
            pts.append((inner * math.cos(a_in), inner * math.sin(a_in)))
        return PolygonTarget(pts)
    if name == "Cross":
        a = s / 2
        t = s / 6
        return PolygonTarget([
            (-t, -a), (t, -a), (t, -t), (a, -t), (a, t), (t, t),
            (t, a), (-t, a), (-t, t), (-a, t), (-a, -t), (-t, -t),
        ])
    if name == "Diamond":
        h = s / 2
        return PolygonTarget([(h, 0.0), (0.0, h), (-h, 0.0), (0.0, -h)])
    if name == "L-shape":
        a = s / 2
        t = s / 3
        return PolygonTarget([(-a, -a), (a, -a), (a, -a + t), (-a + t, -a + t), (-a + t, a), (-a, a)])
    if name == "T-shape":
        a = s / 2
        t = s / 3
        return PolygonTarget([
            (-a, a), (a, a), (a, a - t), (t / 2, a - t),
            (t / 2, -a), (-t / 2, -a), (-t / 2, a - t), (-a, a - t),
        ])
    if name == "Chevron":
        a = s / 2
        t = s / 3
        return PolygonTarget([(-a, a), (0.0, 0.0), (a, a), (a, a - t), (0.0, -t), (-a, a - t)])
    if name == "Arrow":
        a = s / 2
        w = s / 6
        return PolygonTarget([
            (-a, w), (0.0, w), (0.0, 2 * w), (a, 0.0),
            (0.0, -2 * w), (0.0, -w), (-a, -w),
        ])
    if name == "Annulus":
        return AnnulusTarget(s / 2, s / 4)
    raise ValueError(f"unknown target shape {name!r}")


@dataclass(frozen=True)
class ShadowScore:
    score: float
    base: float
    coverage: CoverageResult
    all_quaternions_normalized: bool
    any_intersection: bool


def shadow_coverage_score(
    tetras: list[TetraInstance],
    target,
    subtask_norm: float = 1.0,
    resolution: int = 512,
) -> ShadowScore:
    """Coverage minus spill/redundancy, with the two structural penalties."""
    if not tetras:
        empty = CoverageResult(0.0, 0.0, 0, target.area, 0.0)
        return ShadowScore(0.0, 0.0, empty, True, False)

    shadows = []
    normalized = True
    for t in tetras:
        if not t.quaternion_normalized():
            normalized = False
        _, shadow = transform_tetra(t)
        shadows.append(shadow)

    bx0, by0, bx1, by1 = target.bounds()
    for shadow in shadows:
        for x, y in shadow:
            bx0, by0 = min(bx0, x), min(by0, y)
            bx1, by1 = max(bx1, x), max(by1, y)
    grid = RasterGrid.covering((bx0, by0, bx1, by1), resolution)
    cov = rasterize_coverage(shadows, target, grid)

    base = (cov.covered_area - cov.excess_area - cov.overlap_area) / max(cov.target_area, 1e-12)
    base = max(0.0, base)

    intersecting = False
    for i in range(len(tetras)):
        for j in range(i + 1, len(tetras)):
            if tetra_pair_intersect(tetras[i], tetras[j]):
                intersecting = True
                break
        if intersecting:
            break

    adjusted = base
    if not normalized:
        adjusted *= QUATERNION_PENALTY
    if intersecting:
        adjusted *= INTERSECTION_PENALTY
    score = min(1.0, adjusted / subtask_norm)
    return ShadowScore(score, base, cov, normalized, intersecting)
