"""Exact planar predicates, constructions and a deterministic rasterizer.

All predicates run in rational arithmetic: decimal inputs convert exactly
(``0.444`` becomes 444/1000), so circumcircle and orientation signs never
depend on an epsilon. The rasterizer is the deliberate exception: it is
the sampling substitute for 2D CSG area arithmetic and is deterministic
for a fixed grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

import numpy as np

Scalar = Fraction

#: Endpoints this close to the unit-square boundary snap onto it.
BOUNDARY_SNAP = Fraction(1, 10**9)

#: Cells per axis used when callers do not configure the raster.
DEFAULT_RASTER_RESOLUTION = 512

MIN_RASTER_RESOLUTION = 64


class GeometryError(ValueError):
    """Base class for geometric input failures."""


class DegenerateGeometryError(GeometryError):
    """Collinear / coincident input where a nondegenerate figure is required."""


class PlacementError(GeometryError):
    """Input points violate a required placement (e.g. off the square boundary)."""


class RasterConfigError(GeometryError):
    """Raster grid configured below the supported resolution."""


def to_scalar(value) -> Fraction:
    """Convert a number to an exact rational.

    Floats are converted through their shortest decimal repr, so JSON
    values like 0.444 keep their printed decimal meaning instead of the
    binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GeometryError("boolean is not a coordinate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise GeometryError(f"non-finite coordinate {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value)
    raise GeometryError(f"unsupported coordinate type {type(value).__name__}")


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x, y) -> "Point2":
        return Point2(to_scalar(x), to_scalar(y))

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def cross(self, other: "Point2") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Point2") -> Fraction:
        return self.x * other.x + self.y * other.y

    def as_floats(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))


@dataclass(frozen=True)
class Segment2:
    a: Point2
    b: Point2

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateGeometryError("segment endpoints coincide")

    @staticmethod
    def of(ax, ay, bx, by) -> "Segment2":
        return Segment2(Point2.of(ax, ay), Point2.of(bx, by))


@dataclass(frozen=True)
class Polygon2:
    """Ordered vertex loop; ``ccw`` records the stored winding."""

    vertices: tuple[Point2, ...]
    ccw: bool = True

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise DegenerateGeometryError("polygon needs at least 3 vertices")

    def signed_area(self) -> Fraction:
        total = Fraction(0)
        verts = self.vertices
        for i in range(len(verts)):
            total += verts[i].cross(verts[(i + 1) % len(verts)])
        return total / 2

    def area(self) -> Fraction:
        return abs(self.signed_area())


def orient(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the signed area of (a, b, c): +1 ccw, -1 cw, 0 collinear."""
    det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (det > 0) - (det < 0)


def incircle_test(a: Point2, b: Point2, c: Point2, p: Point2) -> str:
    """Exact circumcircle containment: 'inside', 'on' or 'outside'.

    The determinant sign is normalized by triangle orientation, so the
    answer does not depend on how (a, b, c) are ordered.
    """
    o = orient(a, b, c)
    if o == 0:
        raise DegenerateGeometryError("circumcircle of collinear points")

    rows = []
    for q in (a, b, c):
        dx = q.x - p.x
        dy = q.y - p.y
        rows.append((dx, dy, dx * dx + dy * dy))
    (ax, ay, aw), (bx, by, bw), (cx, cy, cw) = rows
    det = (
        ax * (by * cw - bw * cy)
        - ay * (bx * cw - bw * cx)
        + aw * (bx * cy - by * cx)
    )
    det *= o
    if det > 0:
        return "inside"
    if det < 0:
        return "outside"
    return "on"


@dataclass(frozen=True)
class SegmentIntersection:
    """Classification of how two segments meet.

    kind: 'none', 'point' or 'overlap'. For 'point', ``point`` is exact,
    ``proper`` means interior to both segments, and the endpoint flags say
    whether the meeting point is an endpoint of each operand.
    """

    kind: str
    point: Point2 | None = None
    proper: bool = False
    at_endpoint_1: bool = False
    at_endpoint_2: bool = False


def _on_segment_collinear(p: Point2, s: Segment2) -> bool:
    return (
        min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
        and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y)
    )


def segment_intersection(s1: Segment2, s2: Segment2) -> SegmentIntersection:
    """Exact segment/segment classification, symmetric in its arguments."""
    p, q = s1.a, s1.b
    r, s = s2.a, s2.b
    o1 = orient(p, q, r)
    o2 = orient(p, q, s)
    o3 = orient(r, s, p)
    o4 = orient(r, s, q)

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        # Collinear: overlap interval may be empty, a point, or a segment.
        axis = "x" if p.x != q.x else "y"
        key = (lambda pt: pt.x) if axis == "x" else (lambda pt: pt.y)
        lo1, hi1 = sorted((p, q), key=key)
        lo2, hi2 = sorted((r, s), key=key)
        start = lo1 if key(lo1) >= key(lo2) else lo2
        end = hi1 if key(hi1) <= key(hi2) else hi2
        if key(start) > key(end):
            return SegmentIntersection("none")
        if start == end:
            return SegmentIntersection(
                "point",
                start,
                proper=False,
                at_endpoint_1=start in (p, q),
                at_endpoint_2=start in (r, s),
            )
        return SegmentIntersection("overlap")

    if o1 * o2 < 0 and o3 * o4 < 0:
        # Proper crossing: solve exactly.
        d1 = q - p
        d2 = s - r
        denom = d1.cross(d2)
        t = (r - p).cross(d2) / denom
        point = Point2(p.x + d1.x * t, p.y + d1.y * t)
        return SegmentIntersection("point", point, proper=True)

    # Touching cases: an endpoint of one lies on the other.
    for cand, own in ((r, 2), (s, 2), (p, 1), (q, 1)):
        if own == 2:
            collinear = orient(p, q, cand) == 0
            seg = s1
        else:
            collinear = orient(r, s, cand) == 0
            seg = s2
        if collinear and _on_segment_collinear(cand, seg):
            return SegmentIntersection(
                "point",
                cand,
                proper=False,
                at_endpoint_1=cand in (p, q),
                at_endpoint_2=cand in (r, s),
            )
    return SegmentIntersection("none")


def convex_hull(points: Sequence[Point2]) -> Polygon2:
    """CCW convex hull with collinear vertices dropped (monotone chain)."""
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if len(pts) < 3:
        raise DegenerateGeometryError("hull needs at least 3 distinct points")

    def half(seq):
        chain: list[Point2] = []
        for pt in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], pt) <= 0:
                chain.pop()
            chain.append(pt)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateGeometryError("all points collinear")
    return Polygon2(tuple(hull), ccw=True)


# ---------------------------------------------------------------------------
# Unit-square partition by two chords
# ---------------------------------------------------------------------------

_SQUARE_CORNERS = (
    Point2(Fraction(0), Fraction(0)),
    Point2(Fraction(1), Fraction(0)),
    Point2(Fraction(1), Fraction(1)),
    Point2(Fraction(0), Fraction(1)),
)


@dataclass(frozen=True)
class Region:
    polygon: Polygon2
    vertex_count: int
    kind: str


_KIND_NAMES = {3: "triangle", 4: "quadrilateral", 5: "pentagon", 6: "hexagon", 7: "heptagon"}


def _snap_to_boundary(p: Point2) -> Point2:
    def snap(v: Fraction) -> Fraction:
        if abs(v) <= BOUNDARY_SNAP:
            return Fraction(0)
        if abs(v - 1) <= BOUNDARY_SNAP:
            return Fraction(1)
        return v

    return Point2(snap(p.x), snap(p.y))


def _require_on_boundary(p: Point2) -> None:
    on_x = p.x in (Fraction(0), Fraction(1)) and Fraction(0) <= p.y <= Fraction(1)
    on_y = p.y in (Fraction(0), Fraction(1)) and Fraction(0) <= p.x <= Fraction(1)
    if not (on_x or on_y):
        raise PlacementError(f"endpoint {p.as_floats()} is not on the unit-square boundary")


def _boundary_order_key(p: Point2) -> Fraction:
    """Position of a boundary point along the perimeter, ccw from (0,0)."""
    if p.y == 0:
        return p.x
    if p.x == 1:
        return 1 + p.y
    if p.y == 1:
        return 3 - p.x
    return 4 - p.y


def _angle_sort_key(direction: tuple[Fraction, Fraction]):
    # Exact ccw angular order from the +x axis: split into half-planes,
    # then compare by cross product within a half.
    def cmp(u, v):
        def half_id(d):
            if d[1] > 0 or (d[1] == 0 and d[0] > 0):
                return 0
            return 1

        hu, hv = half_id(u), half_id(v)
        if hu != hv:
            return -1 if hu < hv else 1
        cross = u[0] * v[1] - u[1] * v[0]
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return cmp_to_key(cmp)(direction)


def partition_square(s1: Segment2, s2: Segment2) -> list[Region]:
    """Arrangement of the unit square boundary plus two chords.

    Returns the bounded faces with their vertex counts after merging
    collinear runs, so a quadrilateral with a redundant midpoint classifies
    as a triangle.
    """
    chords = []
    for seg in (s1, s2):
        a = _snap_to_boundary(seg.a)
        b = _snap_to_boundary(seg.b)
        if a == b:
            raise DegenerateGeometryError("chord collapsed to a point after snapping")
        _require_on_boundary(a)
        _require_on_boundary(b)
        chords.append((a, b))

    inter = segment_intersection(
        Segment2(chords[0][0], chords[0][1]), Segment2(chords[1][0], chords[1][1])
    )
    if inter.kind == "overlap":
        raise DegenerateGeometryError("chords are coincident")

    # Vertex pool: corners, chord endpoints, chord/chord meeting point.
    vertices: set[Point2] = set(_SQUARE_CORNERS)
    for a, b in chords:
        vertices.add(a)
        vertices.add(b)
    if inter.kind == "point":
        vertices.add(inter.point)

    edges: set[tuple[Point2, Point2]] = set()

    def add_edge(u: Point2, v: Point2) -> None:
        if u != v:
            edges.add((u, v) if (u.x, u.y) <= (v.x, v.y) else (v, u))

    boundary_pts = sorted(
        (p for p in vertices if _is_on_boundary(p)), key=_boundary_order_key
    )
    for i, p in enumerate(boundary_pts):
        add_edge(p, boundary_pts[(i + 1) % len(boundary_pts)])

    for a, b in chords:
        onto = [p for p in vertices if _point_on_chord(p, a, b)]
        d = b - a
        onto.sort(key=lambda p: (p.x - a.x) * d.x + (p.y - a.y) * d.y)
        for u, v in zip(onto, onto[1:]):
            add_edge(u, v)

    regions, _counts = _faces_of_arrangement(vertices, edges)
    return regions


def _is_on_boundary(p: Point2) -> bool:
    return (
        (p.x in (Fraction(0), Fraction(1)) and Fraction(0) <= p.y <= Fraction(1))
        or (p.y in (Fraction(0), Fraction(1)) and Fraction(0) <= p.x <= Fraction(1))
    )


def _point_on_chord(p: Point2, a: Point2, b: Point2) -> bool:
    if orient(a, b, p) != 0:
        return False
    return _on_segment_collinear(p, Segment2(a, b))


def arrangement_counts(s1: Segment2, s2: Segment2) -> tuple[int, int, int]:
    """(V, E, F) of the square+chords arrangement, F counting the outer face."""
    regions = partition_square(s1, s2)
    # Recompute the raw graph for counting; partition_square validated input.
    chords = [(_snap_to_boundary(s.a), _snap_to_boundary(s.b)) for s in (s1, s2)]
    inter = segment_intersection(
        Segment2(chords[0][0], chords[0][1]), Segment2(chords[1][0], chords[1][1])
    )
    vertices: set[Point2] = set(_SQUARE_CORNERS)
    for a, b in chords:
        vertices.update((a, b))
    if inter.kind == "point":
        vertices.add(inter.point)
    edges: set[tuple[Point2, Point2]] = set()
    boundary_pts = sorted((p for p in vertices if _is_on_boundary(p)), key=_boundary_order_key)
    for i, p in enumerate(boundary_pts):
        u, v = p, boundary_pts[(i + 1) % len(boundary_pts)]
        if u != v:
            edges.add((u, v) if (u.x, u.y) <= (v.x, v.y) else (v, u))
    for a, b in chords:
        onto = [p for p in vertices if _point_on_chord(p, a, b)]
        d = b - a
        onto.sort(key=lambda p: (p.x - a.x) * d.x + (p.y - a.y) * d.y)
        for u, v in zip(onto, onto[1:]):
            if u != v:
                edges.add((u, v) if (u.x, u.y) <= (v.x, v.y) else (v, u))
    return len(vertices), len(edges), len(regions) + 1


def _faces_of_arrangement(
    vertices: set[Point2], edges: set[tuple[Point2, Point2]]
) -> tuple[list[Region], tuple[int, int]]:
    # Half-edge walk: at each vertex order outgoing directions ccw, then
    # next(he) is the cw-neighbour of the reversed edge, which traces each
    # face with the interior on the left.
    outgoing: dict[Point2, list[Point2]] = {v: [] for v in vertices}
    for u, v in edges:
        outgoing[u].append(v)
        outgoing[v].append(u)
    for v, nbrs in outgoing.items():
        nbrs.sort(key=lambda w: _angle_sort_key((w.x - v.x, w.y - v.y)))

    visited: set[tuple[Point2, Point2]] = set()
    faces: list[list[Point2]] = []
    for u, v in edges:
        for he in ((u, v), (v, u)):
            if he in visited:
                continue
            loop = []
            cur = he
            while cur not in visited:
                visited.add(cur)
                loop.append(cur[0])
                src, dst = cur
                nbrs = outgoing[dst]
                idx = nbrs.index(src)
                nxt = nbrs[(idx - 1) % len(nbrs)]
                cur = (dst, nxt)
            faces.append(loop)

    regions = []
    for loop in faces:
        poly = Polygon2(tuple(loop), ccw=True)
        if poly.signed_area() <= 0:
            continue  # outer face
        merged = _merge_collinear(loop)
        kind = _KIND_NAMES.get(len(merged), f"{len(merged)}-gon")
        regions.append(Region(Polygon2(tuple(merged), ccw=True), len(merged), kind))
    regions.sort(key=lambda r: (-r.polygon.area(), r.vertex_count))
    return regions, (len(vertices), len(edges))


def _merge_collinear(loop: list[Point2]) -> list[Point2]:
    out = []
    n = len(loop)
    for i in range(n):
        prev, cur, nxt = loop[i - 1], loop[i], loop[(i + 1) % n]
        if orient(prev, cur, nxt) != 0:
            out.append(cur)
    return out


def region_kind_multiset(regions: Iterable[Region]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for r in regions:
        counts[r.kind] = counts.get(r.kind, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Raster coverage (sampling replacement for 2D CSG areas)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RasterGrid:
    """Square sampling lattice: ``resolution`` cells per axis over a box."""

    resolution: int = DEFAULT_RASTER_RESOLUTION
    origin: tuple[float, float] = (-1.0, -1.0)
    extent: float = 2.0

    def __post_init__(self):
        if self.resolution < MIN_RASTER_RESOLUTION:
            raise RasterConfigError(
                f"raster resolution {self.resolution} below minimum {MIN_RASTER_RESOLUTION}"
            )
        if self.extent <= 0:
            raise RasterConfigError("raster extent must be positive")

    @staticmethod
    def covering(bounds: tuple[float, float, float, float],
                 resolution: int = DEFAULT_RASTER_RESOLUTION,
                 margin: float = 0.05) -> "RasterGrid":
        x0, y0, x1, y1 = bounds
        size = max(x1 - x0, y1 - y0, 1e-9)
        pad = size * margin
        side = size + 2 * pad
        return RasterGrid(resolution, (x0 - pad, y0 - pad), side)

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        step = self.extent / self.resolution
        axis = self.origin[0] + (np.arange(self.resolution) + 0.5) * step
        ays = self.origin[1] + (np.arange(self.resolution) + 0.5) * step
        xs, ys = np.meshgrid(axis, ays, indexing="ij")
        return xs, ys

    @property
    def cell_area(self) -> float:
        step = self.extent / self.resolution
        return step * step


@dataclass(frozen=True)
class CoverageResult:
    covered_area: float
    excess_area: float
    overlap_count: int
    target_area: float
    overlap_area: float


def _convex_mask(poly_pts: Sequence[tuple[float, float]], xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    pts = list(poly_pts)
    # Normalize to ccw so the half-plane tests share a sign.
    area2 = 0.0
    for i in range(len(pts)):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % len(pts)]
        area2 += x0 * y1 - y0 * x1
    if area2 < 0:
        pts = pts[::-1]
    mask = np.ones(xs.shape, dtype=bool)
    for i in range(len(pts)):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % len(pts)]
        mask &= (x1 - x0) * (ys - y0) - (y1 - y0) * (xs - x0) >= 0.0
        if not mask.any():
            break
    return mask


def rasterize_coverage(shadows, target, grid: RasterGrid) -> CoverageResult:
    """Sampled areas of target coverage, excess spill and shadow overlap.

    ``shadows`` are convex polygons (Polygon2 or float vertex sequences);
    ``target`` needs ``contains(xs, ys) -> bool array``. ``overlap_count``
    is the number of cells covered by two or more shadows, which feeds the
    redundancy penalty.
    """
    xs, ys = grid.cell_centers()
    cover_count = np.zeros(xs.shape, dtype=np.int32)
    for shadow in shadows:
        if isinstance(shadow, Polygon2):
            pts = [v.as_floats() for v in shadow.vertices]
        else:
            pts = [(float(x), float(y)) for x, y in shadow]
        cover_count += _convex_mask(pts, xs, ys).astype(np.int32)

    in_target = target.contains(xs, ys)
    in_any = cover_count > 0
    cell = grid.cell_area
    covered = float(np.count_nonzero(in_any & in_target)) * cell
    excess = float(np.count_nonzero(in_any & ~in_target)) * cell
    overlap_cells = int(np.count_nonzero(cover_count >= 2))
    return CoverageResult(
        covered_area=covered,
        excess_area=excess,
        overlap_count=overlap_cells,
        target_area=float(np.count_nonzero(in_target)) * cell,
        overlap_area=overlap_cells * cell,
    )
