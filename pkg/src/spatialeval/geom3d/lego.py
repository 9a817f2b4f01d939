"""Physical validity of interlocked 2x4 brick assemblies.

Rules mirror the build physics: every brick reaches the ground through
stud connections, engaged bricks sit on the 8 mm stud lattice with a
rotation difference that is a multiple of 90 degrees, shells never share
volume, each connected component balances over its ground footprint, and
bricks stay inside the shell band they are supposed to approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

BRICK_LENGTH = 32.0   # assembled, along the 4-stud axis at rotation 0
BRICK_WIDTH = 16.0
BRICK_HEIGHT = 9.6
STUD_PITCH = 8.0

_POS_TOL = 1e-3       # mm; artefacts arrive as floats
_ANGLE_TOL = 1e-3     # degrees


class LegoFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LegoBrick:
    x: float
    y: float
    z: float
    rotation: float  # degrees about +z

    @staticmethod
    def from_json(obj) -> "LegoBrick":
        try:
            cx, cy, cz = (float(v) for v in obj["Centroid"])
            rot = float(obj.get("RotationDegrees", 0.0))
        except (KeyError, TypeError, ValueError) as exc:
            raise LegoFormatError(f"malformed brick: {exc}") from exc
        if not all(math.isfinite(v) for v in (cx, cy, cz, rot)):
            raise LegoFormatError("non-finite brick values")
        return LegoBrick(cx, cy, cz, rot)

    @property
    def bottom(self) -> float:
        return self.z - BRICK_HEIGHT / 2.0

    @property
    def top(self) -> float:
        return self.z + BRICK_HEIGHT / 2.0

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        rad = math.radians(self.rotation)
        u = np.array([math.cos(rad), math.sin(rad)])   # length axis
        v = np.array([-math.sin(rad), math.cos(rad)])  # width axis
        return u, v

    def corners_xy(self) -> np.ndarray:
        u, v = self.axes()
        c = np.array([self.x, self.y])
        hu = u * (BRICK_LENGTH / 2.0)
        hv = v * (BRICK_WIDTH / 2.0)
        return np.array([c + hu + hv, c + hu - hv, c - hu - hv, c - hu + hv])

    def stud_positions(self) -> np.ndarray:
        u, v = self.axes()
        c = np.array([self.x, self.y])
        studs = []
        for a in (-12.0, -4.0, 4.0, 12.0):
            for b in (-4.0, 4.0):
                studs.append(c + u * a + v * b)
        return np.array(studs)

    def contains_xy(self, pts: np.ndarray, inset: float = 0.0) -> np.ndarray:
        u, v = self.axes()
        rel = pts - np.array([self.x, self.y])
        du = rel @ u
        dv = rel @ v
        return (np.abs(du) <= BRICK_LENGTH / 2.0 - inset) & (
            np.abs(dv) <= BRICK_WIDTH / 2.0 - inset
        )


def _obb_overlap_xy(a: LegoBrick, b: LegoBrick, shrink: float = 1e-6) -> bool:
    """Separating-axis test for two rotated rectangles (strict interiors)."""
    for brick in (a, b):
        u, v = brick.axes()
        for axis in (u, v):
            pa = a.corners_xy() @ axis
            pb = b.corners_xy() @ axis
            if min(pa.max(), pb.max()) - max(pa.min(), pb.min()) <= shrink:
                return False
    return True


@dataclass
class LegoViolation:
    rule: str
    bricks: tuple[int, ...]
    detail: str


@dataclass
class LegoReport:
    valid: bool
    violations: list[LegoViolation] = field(default_factory=list)
    components: list[list[int]] = field(default_factory=list)


def _mod_distance(value: float, modulus: float) -> float:
    r = value % modulus
    return min(r, modulus - r)


def verify_lego_assembly(
    bricks: list[LegoBrick],
    inner_radius_mm: float | None = None,
    outer_radius_mm: float | None = None,
    stability_margin_mm: float = 0.0,
) -> LegoReport:
    violations: list[LegoViolation] = []
    n = len(bricks)
    if n == 0:
        return LegoReport(False, [LegoViolation("empty", (), "no bricks")], [])

    grounded = [abs(b.bottom) <= _POS_TOL for b in bricks]
    for i, b in enumerate(bricks):
        if b.bottom < -_POS_TOL:
            violations.append(LegoViolation("below-ground", (i,), f"bottom at {b.bottom:.2f} mm"))

    # Vertical stud engagement: exact one-brick-height stacking.
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    order = sorted(range(n), key=lambda i: (bricks[i].x, bricks[i].y))
    for ai in range(n):
        for bi in range(ai + 1, n):
            a, b = bricks[ai], bricks[bi]
            if abs(abs(a.z - b.z) - BRICK_HEIGHT) > _POS_TOL:
                continue
            lower, lower_i, upper, upper_i = (
                (a, ai, b, bi) if a.z < b.z else (b, bi, a, ai)
            )
            studs = lower.stud_positions()
            engaged = upper.contains_xy(studs, inset=1e-6)
            if not engaged.any():
                continue
            rot_ok = _mod_distance(a.rotation - b.rotation, 90.0) <= _ANGLE_TOL
            dx_ok = _mod_distance(a.x - b.x, STUD_PITCH) <= _POS_TOL
            dy_ok = _mod_distance(a.y - b.y, STUD_PITCH) <= _POS_TOL
            if rot_ok and dx_ok and dy_ok:
                union(ai, bi)
            else:
                violations.append(
                    LegoViolation(
                        "stud-grid",
                        (lower_i, upper_i),
                        "studs engaged off the 8 mm lattice"
                        if (rot_ok and not (dx_ok and dy_ok))
                        else "stud engagement with incompatible rotation",
                    )
                )

    # Volume overlap between shells.
    for ai in range(n):
        for bi in range(ai + 1, n):
            a, b = bricks[ai], bricks[bi]
            z_overlap = min(a.top, b.top) - max(a.bottom, b.bottom)
            if z_overlap <= _POS_TOL:
                continue
            if _obb_overlap_xy(a, b):
                violations.append(
                    LegoViolation("volume-overlap", (ai, bi), f"{z_overlap:.2f} mm shared height")
                )

    # Ground reachability through the connection graph.
    comp_map: dict[int, list[int]] = {}
    for i in range(n):
        comp_map.setdefault(find(i), []).append(i)
    components = sorted(comp_map.values(), key=lambda c: c[0])
    for comp in components:
        if not any(grounded[i] for i in comp):
            violations.append(
                LegoViolation("connectivity", tuple(comp), "component never reaches the ground")
            )

    # Static stability: component COM over its ground footprint.
    for comp in components:
        ground_corners = []
        for i in comp:
            if grounded[i]:
                ground_corners.extend(bricks[i].corners_xy())
        if not ground_corners:
            continue  # already a connectivity violation
        com = np.mean([[bricks[i].x, bricks[i].y] for i in comp], axis=0)
        if not _point_in_hull(com, np.asarray(ground_corners), stability_margin_mm):
            violations.append(
                LegoViolation(
                    "stability",
                    tuple(comp),
                    f"centre of mass {com.round(2).tolist()} outside ground footprint",
                )
            )

    # Shell band containment.
    if inner_radius_mm is not None and outer_radius_mm is not None:
        for i, b in enumerate(bricks):
            corners = _brick_corners_3d(b)
            dists = np.linalg.norm(corners, axis=1)
            if (dists < inner_radius_mm - _POS_TOL).all():
                violations.append(
                    LegoViolation("inside-inner-shell", (i,), "entirely within the inner shell")
                )
                continue
            if _min_distance_to_origin(b) > outer_radius_mm + _POS_TOL:
                violations.append(
                    LegoViolation("outside-outer-shell", (i,), "entirely outside the outer shell")
                )

    return LegoReport(not violations, violations, components)


def _brick_corners_3d(b: LegoBrick) -> np.ndarray:
    xy = b.corners_xy()
    out = []
    for z in (b.bottom, b.top):
        for cx, cy in xy:
            out.append((cx, cy, z))
    return np.asarray(out)


def _min_distance_to_origin(b: LegoBrick) -> float:
    """Distance from the origin to the brick's solid box."""
    u, v = b.axes()
    rel = -np.array([b.x, b.y])
    du = np.clip(rel @ u, -BRICK_LENGTH / 2.0, BRICK_LENGTH / 2.0)
    dv = np.clip(rel @ v, -BRICK_WIDTH / 2.0, BRICK_WIDTH / 2.0)
    closest_xy = np.array([b.x, b.y]) + u * du + v * dv
    dz = min(max(0.0, b.bottom), b.top) if b.bottom > 0 else (0.0 if b.top > 0 else b.top)
    return float(math.hypot(np.linalg.norm(closest_xy), dz))


def _point_in_hull(point: np.ndarray, corners: np.ndarray, margin: float) -> bool:
    """Point inside (or on) the convex hull of corners, eroded by margin."""
    pts = sorted({(float(x), float(y)) for x, y in corners})
    if len(pts) == 1:
        return bool(np.linalg.norm(point - np.asarray(pts[0])) <= max(0.0, -margin))
    if len(pts) == 2:
        return False

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
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return False
    px, py = float(point[0]), float(point[1])
    for i in range(len(hull)):
        x0, y0 = hull[i]
        x1, y1 = hull[(i + 1) % len(hull)]
        edge = math.hypot(x1 - x0, y1 - y0)
        if edge < 1e-12:
            continue
        # Signed distance to the ccw edge; inside is non-negative.
        d = ((x1 - x0) * (py - y0) - (y1 - y0) * (px - x0)) / edge
        if d < margin - 1e-9:
            return False
    return True


class BrickUnion:
    """Occupancy of a brick list on a sampling lattice (volume scoring)."""

    def __init__(self, bricks: list[LegoBrick]):
        self.bricks = bricks

    def contains_grid(self, xs: np.ndarray, ys: np.ndarray, zs: np.ndarray) -> np.ndarray:
        out = np.zeros((len(xs), len(ys), len(zs)), dtype=bool)
        if not self.bricks:
            return out
        half_diag = math.hypot(BRICK_LENGTH, BRICK_WIDTH) / 2.0
        for b in self.bricks:
            i0 = int(np.searchsorted(xs, b.x - half_diag))
            i1 = int(np.searchsorted(xs, b.x + half_diag, side="right"))
            j0 = int(np.searchsorted(ys, b.y - half_diag))
            j1 = int(np.searchsorted(ys, b.y + half_diag, side="right"))
            k0 = int(np.searchsorted(zs, b.bottom))
            k1 = int(np.searchsorted(zs, b.top, side="right"))
            if i0 >= i1 or j0 >= j1 or k0 >= k1:
                continue
            gx, gy = np.meshgrid(xs[i0:i1], ys[j0:j1], indexing="ij")
            pts = np.stack([gx.ravel(), gy.ravel()], axis=-1)
            mask = b.contains_xy(pts).reshape(gx.shape)
            out[i0:i1, j0:j1, k0:k1] |= mask[:, :, None]
        return out
