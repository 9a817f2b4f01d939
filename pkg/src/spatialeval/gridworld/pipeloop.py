"""Closed unit-pipe loop verification under the full constraint menu.

Stage 1 validates the loop structure, stage 2 analyses the segments, and
stage 3 applies whichever constraints the subtask activates, reporting
the first failure by name. Endpoint tangency between non-adjacent
segments counts as touching; proper interior crossings count toward the
crossing budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Absolute geometric tolerance: forgiving of 3-decimal artefacts.
GEOM_TOL = 1e-3

_TOUCH_EPS = 1e-9


@dataclass(frozen=True)
class PipeConstraints:
    crossings: int | None = None
    angle_range: tuple[float, float] | None = None
    centroid_box: tuple[float, float, float, float] | None = None  # fractions of the side
    touch_edges: tuple[str, ...] | None = None
    min_turns: int | None = None
    max_straight_run: float | None = None
    quadrants: bool = False
    margin: float | None = None
    min_hull_area: float | None = None
    fixed_start: tuple[float, float] | None = None
    min_separation: float | None = None


@dataclass(frozen=True)
class PipeVerdict:
    ok: bool
    failure: str | None = None


def _seg_intersect_info(p1, p2, p3, p4):
    """(proper_crossing, touching) for two open segments."""

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    o1, o2 = orient(p1, p2, p3), orient(p1, p2, p4)
    o3, o4 = orient(p3, p4, p1), orient(p3, p4, p2)
    eps = _TOUCH_EPS

    if ((o1 > eps and o2 < -eps) or (o1 < -eps and o2 > eps)) and (
        (o3 > eps and o4 < -eps) or (o3 < -eps and o4 > eps)
    ):
        return True, False

    # Not properly crossing: the closest approach is at an endpoint, so
    # endpoint-to-segment distances decide tangency.
    def point_seg_dist(p, a, b):
        ax, ay = b[0] - a[0], b[1] - a[1]
        denom = ax * ax + ay * ay
        t = 0.0 if denom == 0 else max(0.0, min(1.0, ((p[0] - a[0]) * ax + (p[1] - a[1]) * ay) / denom))
        qx, qy = a[0] + t * ax, a[1] + t * ay
        return math.hypot(p[0] - qx, p[1] - qy)

    gap = min(
        point_seg_dist(p3, p1, p2),
        point_seg_dist(p4, p1, p2),
        point_seg_dist(p1, p3, p4),
        point_seg_dist(p2, p3, p4),
    )
    return False, gap <= GEOM_TOL


def _hull_area(points) -> float:
    pts = sorted(set(points))
    if len(pts) < 3:
        return 0.0

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    hull = chain(pts)[:-1] + chain(reversed(pts))[:-1]
    area = 0.0
    for i in range(len(hull)):
        x0, y0 = hull[i]
        x1, y1 = hull[(i + 1) % len(hull)]
        area += x0 * y1 - y0 * x1
    return abs(area) / 2.0


def verify_pipe_loop(
    points,
    n_pipes: int,
    square_size: float,
    constraints: PipeConstraints | None = None,
) -> PipeVerdict:
    cons = constraints or PipeConstraints()
    tol = GEOM_TOL

    # Stage 1: structure.
    if not isinstance(points, (list, tuple)) or len(points) < 3:
        return PipeVerdict(False, "point-count")
    pts: list[tuple[float, float]] = []
    for p in points:
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            return PipeVerdict(False, "malformed-point")
        try:
            x, y = float(p[0]), float(p[1])
        except (TypeError, ValueError):
            return PipeVerdict(False, "malformed-point")
        if not (math.isfinite(x) and math.isfinite(y)):
            return PipeVerdict(False, "malformed-point")
        pts.append((x, y))
    if len(pts) != n_pipes:
        return PipeVerdict(False, f"point-count: {len(pts)} != {n_pipes}")

    for i, (x, y) in enumerate(pts):
        if not (-tol <= x <= square_size + tol and -tol <= y <= square_size + tol):
            return PipeVerdict(False, f"bounds: point {i}")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if math.dist(pts[i], pts[j]) < _TOUCH_EPS:
                return PipeVerdict(False, f"duplicate-vertex: {i} and {j}")

    segments = [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
    for i, (a, b) in enumerate(segments):
        if abs(math.dist(a, b) - 1.0) > tol:
            return PipeVerdict(False, f"segment-length: segment {i}")

    # Stage 2: crossings and tangency among non-adjacent segments.
    crossings = 0
    touching = False
    n = len(segments)
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            proper, touch = _seg_intersect_info(*segments[i], *segments[j])
            if proper:
                crossings += 1
            elif touch:
                touching = True

    # Stage 3: active constraints, first failure wins.
    if cons.crossings is not None:
        if touching:
            return PipeVerdict(False, "touching: non-adjacent segments in contact")
        if crossings != cons.crossings:
            return PipeVerdict(
                False, f"crossings: {crossings} != required {cons.crossings}"
            )

    turn_angles = []
    for i in range(n):
        ax, ay = segments[i - 1][1][0] - segments[i - 1][0][0], segments[i - 1][1][1] - segments[i - 1][0][1]
        bx, by = segments[i][1][0] - segments[i][0][0], segments[i][1][1] - segments[i][0][1]
        dot = ax * bx + ay * by
        cross = ax * by - ay * bx
        ang = math.degrees(abs(math.atan2(cross, dot)))
        turn_angles.append(ang)
    turns = sum(1 for a in turn_angles if a > 1e-6)

    if cons.angle_range is not None:
        lo, hi = cons.angle_range
        for ang in turn_angles:
            if ang <= 1e-6:
                continue  # straight continuation, not a turn
            if not (lo - 1e-6 <= ang <= hi + 1e-6):
                return PipeVerdict(False, f"angle-range: {ang:.2f} not in [{lo}, {hi}]")

    if cons.centroid_box is not None:
        cx = sum(x for x, _ in pts) / len(pts)
        cy = sum(y for _, y in pts) / len(pts)
        fx0, fy0, fx1, fy1 = cons.centroid_box
        if not (
            fx0 * square_size - tol <= cx <= fx1 * square_size + tol
            and fy0 * square_size - tol <= cy <= fy1 * square_size + tol
        ):
            return PipeVerdict(False, "centroid: outside the required box")

    if cons.touch_edges:
        for edge in cons.touch_edges:
            if edge == "left":
                hit = any(abs(x) <= tol for x, _ in pts)
            elif edge == "right":
                hit = any(abs(x - square_size) <= tol for x, _ in pts)
            elif edge == "bottom":
                hit = any(abs(y) <= tol for _, y in pts)
            elif edge == "top":
                hit = any(abs(y - square_size) <= tol for _, y in pts)
            else:
                raise ValueError(f"unknown edge {edge!r}")
            if not hit:
                return PipeVerdict(False, f"boundary-touch: edge {edge} untouched")

    if cons.min_turns is not None and turns < cons.min_turns:
        return PipeVerdict(False, f"turns: {turns} < required {cons.min_turns}")

    if cons.max_straight_run is not None:
        # Vertex i is a turn between segments i-1 and i; the straight run
        # length (in pipes, = metres) is the circular gap between turns.
        turn_idx = [i for i in range(n) if turn_angles[i] > 1e-6]
        if not turn_idx:
            longest = float(n)
        else:
            gaps = [
                (turn_idx[(k + 1) % len(turn_idx)] - turn_idx[k]) % n or n
                for k in range(len(turn_idx))
            ]
            longest = float(max(gaps))
        if longest > cons.max_straight_run + tol:
            return PipeVerdict(
                False, f"straight-run: {longest:.0f} exceeds {cons.max_straight_run}"
            )

    if cons.quadrants:
        half = square_size / 2.0
        quads = {(x > half, y > half) for x, y in pts}
        if len(quads) < 4:
            return PipeVerdict(False, "quadrants: not all four visited")

    if cons.margin is not None:
        m = cons.margin
        for i, (x, y) in enumerate(pts):
            if not (m - tol <= x <= square_size - m + tol and m - tol <= y <= square_size - m + tol):
                return PipeVerdict(False, f"margin: point {i} outside the inner box")

    if cons.min_hull_area is not None:
        if _hull_area(pts) < cons.min_hull_area - tol:
            return PipeVerdict(False, "hull-area: below the minimum")

    if cons.fixed_start is not None:
        if math.dist(pts[0], cons.fixed_start) > tol:
            return PipeVerdict(False, "fixed-start: first point misplaced")

    if cons.min_separation is not None:
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                adjacent = (j == i + 1) or (i == 0 and j == len(pts) - 1)
                if adjacent:
                    continue
                if math.dist(pts[i], pts[j]) < cons.min_separation - tol:
                    return PipeVerdict(False, f"separation: points {i} and {j} too close")

    return PipeVerdict(True)
