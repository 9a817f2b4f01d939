"""Reference tetra arrangements: exact shadow tilings.

Two projection modes give clean shadow tiles: the canonical resting pose
projects to a unit equilateral triangle (up or, rotated half a turn,
down), and the edge-on pose projects to an axis-aligned square of side
1/sqrt(2). Targets are parameterized on those lattices where exact
tiling is possible; curved/concave targets are filled with in-shape
triangles and renormalized. Every tetra gets its own z level, so no two
ever intersect.
"""

from __future__ import annotations

import math

from ..geom3d.quat import Quaternion, RigidTransform
from ..geom3d.tetra import (
    CANONICAL_VERTICES,
    TetraInstance,
    make_target,
    shadow_coverage_score,
    transform_tetra,
)

SQRT3 = math.sqrt(3.0)
SQUARE_SIDE = 1.0 / math.sqrt(2.0)
TRI_H = SQRT3 / 2.0

#: Rotation taking the opposite-edge axis to +z, then 45 deg about z:
#: the shadow becomes an axis-aligned square of side 1/sqrt(2).
_EDGE_UP = Quaternion.from_axis_angle((1, 0, 0), math.atan(math.sqrt(2.0)))
_SQUARE_ROT = Quaternion.from_axis_angle((0, 0, 1), math.pi / 4).compose(_EDGE_UP)
_DOWN_ROT = Quaternion.from_axis_angle((0, 0, 1), math.pi)

_LAYER_STEP = 1.1  # taller than the tetra, so stacked levels never touch


def _shadow_offset(rotation: Quaternion) -> tuple[float, float]:
    pts = TetraInstance(RigidTransform((0, 0, 0), rotation)).world_points()
    xs = pts[:, 0]
    ys = pts[:, 1]
    return (float(xs.min() + xs.max()) / 2.0, float(ys.min() + ys.max()) / 2.0)


_SQUARE_CENTER = _shadow_offset(_SQUARE_ROT)


def square_tile_transform(cx: float, cy: float, level: int) -> list[float]:
    """Tetra whose shadow is the axis-aligned square centered at (cx, cy)."""
    q = _SQUARE_ROT
    tx = cx - _SQUARE_CENTER[0]
    ty = cy - _SQUARE_CENTER[1]
    return [tx, ty, level * _LAYER_STEP, q.w, q.x, q.y, q.z]


def up_triangle_transform(corner_x: float, corner_y: float, level: int) -> list[float]:
    """Resting tetra; shadow corners (x, y), (x+1, y), (x+0.5, y+h)."""
    return [corner_x, corner_y, level * _LAYER_STEP, 1.0, 0.0, 0.0, 0.0]


def down_triangle_transform(corner_x: float, corner_y: float, level: int) -> list[float]:
    """Half-turned tetra; shadow corners (x, y), (x-1, y), (x-0.5, y-h)."""
    q = _DOWN_ROT
    return [corner_x, corner_y, level * _LAYER_STEP, q.w, q.x, q.y, q.z]


def _square_grid_tiling(target, side_units: float) -> list[list[float]]:
    """Axis-aligned square tiles covering the target's bounding box,
    keeping only tiles fully inside the target."""
    x0, y0, x1, y1 = target.bounds()
    s = SQUARE_SIDE
    out = []
    level = 0
    nx = int(round((x1 - x0) / s))
    ny = int(round((y1 - y0) / s))
    import numpy as np

    for i in range(nx):
        for j in range(ny):
            cx = x0 + (i + 0.5) * s
            cy = y0 + (j + 0.5) * s
            probe_x = np.array([cx - s * 0.49, cx + s * 0.49, cx, cx, cx])
            probe_y = np.array([cy, cy, cy - s * 0.49, cy + s * 0.49, cy])
            if bool(target.contains(probe_x, probe_y).all()):
                out.append(square_tile_transform(cx, cy, level))
                level += 1
    return out


def _tile_fits(target, corners) -> bool:
    import numpy as np

    cx = sum(p[0] for p in corners) / len(corners)
    cy = sum(p[1] for p in corners) / len(corners)
    pull = 0.02
    xs = [cx] + [p[0] + pull * (cx - p[0]) for p in corners]
    ys = [cy] + [p[1] + pull * (cy - p[1]) for p in corners]
    # Edge midpoints, pulled inward too.
    n = len(corners)
    for i in range(n):
        mx = (corners[i][0] + corners[(i + 1) % n][0]) / 2
        my = (corners[i][1] + corners[(i + 1) % n][1]) / 2
        xs.append(mx + pull * (cx - mx))
        ys.append(my + pull * (cy - my))
    return bool(target.contains(np.asarray(xs), np.asarray(ys)).all())


def _triangle_lattice_tiling(target) -> list[list[float]]:
    """Unit-triangle lattice anchored at the target's lower-left bound,
    so lattice-parameterized targets tile exactly."""
    x0, y0, x1, y1 = target.bounds()
    out = []
    level = 0
    rows = int(math.ceil((y1 - y0) / TRI_H)) + 1
    for j in range(rows):
        base_y = y0 + j * TRI_H
        offset = 0.5 * (j % 2)
        cols = int(math.ceil(x1 - x0)) + 2
        for i in range(-1, cols):
            bx = x0 + i + offset
            up = ((bx, base_y), (bx + 1, base_y), (bx + 0.5, base_y + TRI_H))
            if _tile_fits(target, up):
                out.append(up_triangle_transform(bx, base_y, level))
                level += 1
            down = ((bx + 0.5, base_y + TRI_H), (bx + 1.5, base_y + TRI_H), (bx + 1, base_y))
            if _tile_fits(target, down):
                out.append(down_triangle_transform(bx + 1.5, base_y + TRI_H, level))
                level += 1
    return out


#: (shape, size, norm, tiling) per subtask; sizes sit on the tile
#: lattices so the rectilinear targets tile exactly.
U6 = 6 * SQUARE_SIDE
U12 = 12 * SQUARE_SIDE

TETRA_SUBTASKS = [
    {"shape": "Square", "size": 4 * SQUARE_SIDE, "norm": 1.0, "tiling": "square"},
    {"shape": "Circle", "size": 12.0, "norm": 0.90, "tiling": "triangle"},
    {"shape": "Triangle", "size": 4.0, "norm": 1.0, "tiling": "triangle"},
    {"shape": "Hexagon", "size": 4.0, "norm": 1.0, "tiling": "triangle"},
    {"shape": "Star", "size": 14.0, "norm": 0.78, "tiling": "triangle"},
    {"shape": "Cross", "size": U6, "norm": 1.0, "tiling": "square"},
    {"shape": "Diamond", "size": 14.0, "norm": 0.85, "tiling": "triangle"},
    {"shape": "L-shape", "size": U6, "norm": 1.0, "tiling": "square"},
    {"shape": "T-shape", "size": U6, "norm": 1.0, "tiling": "square"},
    {"shape": "Chevron", "size": 13.0, "norm": 0.80, "tiling": "triangle"},
    {"shape": "Arrow", "size": 13.0, "norm": 0.80, "tiling": "triangle"},
    {"shape": "Annulus", "size": 16.0, "norm": 0.80, "tiling": "triangle"},
    {"shape": "Square", "size": 8 * SQUARE_SIDE, "norm": 1.0, "tiling": "square"},
    {"shape": "Triangle", "size": 8.0, "norm": 1.0, "tiling": "triangle"},
    {"shape": "Hexagon", "size": 6.0, "norm": 1.0, "tiling": "triangle"},
    {"shape": "Circle", "size": 16.0, "norm": 0.90, "tiling": "triangle"},
    {"shape": "Diamond", "size": 20.0, "norm": 0.88, "tiling": "triangle"},
    {"shape": "Cross", "size": U12, "norm": 1.0, "tiling": "square"},
    {"shape": "L-shape", "size": U12, "norm": 1.0, "tiling": "square"},
    {"shape": "Annulus", "size": 22.0, "norm": 0.84, "tiling": "triangle"},
]


def reference_transforms(subtask: dict) -> list[list[float]]:
    target = make_target(subtask["shape"], subtask["size"])
    if subtask["tiling"] == "square":
        return _square_grid_tiling(target, subtask["size"])
    return _triangle_lattice_tiling(target, True)


def reference_score(subtask: dict, resolution: int = 512) -> float:
    target = make_target(subtask["shape"], subtask["size"])
    transforms = reference_transforms(subtask)
    tetras = [TetraInstance.from_seven(t) for t in transforms]
    return shadow_coverage_score(tetras, target, subtask["norm"], resolution).score
