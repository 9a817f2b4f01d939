"""Voxel terrain, rock settling, raindrop simulation and water analysis.

Drop mechanics: a drop falls while there is air below; resting on rock or
water it flood-fills its z-level through air and water looking for an
air voxel one level down, and descends into the nearest one (BFS
distance, ties broken by (x, y)). If a lateral boundary cell of the
region is strictly closer than every such hole, the water runs off the
edge and is lost; reaching the bottom of the world also loses it. With
nowhere to go, the drop pools where it stands. This reproduces the
flat-world total-runoff and the 9-voxel ring capture worked example.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

AIR = 0
ROCK = 1
WATER = 2

_MATERIALS = {"Air": AIR, "Rock": ROCK}


class EarthworksError(ValueError):
    pass


@dataclass(frozen=True)
class EarthworksOp:
    xyz_min: tuple[int, int, int]
    xyz_max: tuple[int, int, int]
    material: int

    @staticmethod
    def from_json(obj) -> "EarthworksOp":
        try:
            lo = tuple(int(v) for v in obj["xyzMin"])
            hi = tuple(int(v) for v in obj["xyzMax"])
            mat = _MATERIALS[str(obj["material"])]
        except (KeyError, TypeError, ValueError) as exc:
            raise EarthworksError(f"malformed earthworks op: {exc}") from exc
        if len(lo) != 3 or len(hi) != 3:
            raise EarthworksError("xyzMin/xyzMax must be 3-vectors")
        if any(a > b for a, b in zip(lo, hi)):
            raise EarthworksError("xyzMin must be <= xyzMax componentwise")
        return EarthworksOp(lo, hi, mat)


class VoxelWorld:
    """(W, W, H) material grid indexed [x, y, z], z up."""

    def __init__(self, width: int, height: int = 8, rock_layers: int = 3):
        self.w = width
        self.h = height
        self.grid = np.full((width, width, height), AIR, dtype=np.uint8)
        self.grid[:, :, :rock_layers] = ROCK

    def copy(self) -> "VoxelWorld":
        out = VoxelWorld.__new__(VoxelWorld)
        out.w = self.w
        out.h = self.h
        out.grid = self.grid.copy()
        return out

    def in_bounds(self, x: int, y: int, z: int) -> bool:
        return 0 <= x < self.w and 0 <= y < self.w and 0 <= z < self.h

    def water_count(self) -> int:
        return int(np.count_nonzero(self.grid == WATER))


def apply_earthworks(world: VoxelWorld, ops: list[EarthworksOp]) -> VoxelWorld:
    """Paint boxes in order, then drop unsupported rock straight down."""
    out = world.copy()
    for op in ops:
        lo, hi = op.xyz_min, op.xyz_max
        if not (out.in_bounds(*lo) and out.in_bounds(*hi)):
            raise EarthworksError(f"earthworks box {lo}..{hi} out of bounds")
        out.grid[lo[0]:hi[0] + 1, lo[1]:hi[1] + 1, lo[2]:hi[2] + 1] = op.material
    _settle_rock(out)
    return out


_ORTHO6 = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))


def _settle_rock(world: VoxelWorld) -> None:
    grid = world.grid
    while True:
        rock_cells = list(zip(*np.nonzero(grid == ROCK)))
        seen: set[tuple[int, int, int]] = set()
        moved = False
        for start in rock_cells:
            if start in seen:
                continue
            component = []
            supported = False
            queue = deque([start])
            seen.add(start)
            while queue:
                cx, cy, cz = queue.popleft()
                component.append((cx, cy, cz))
                if cz == 0:
                    supported = True
                for dx, dy, dz in _ORTHO6:
                    nx, ny, nz = cx + dx, cy + dy, cz + dz
                    if (
                        world.in_bounds(nx, ny, nz)
                        and grid[nx, ny, nz] == ROCK
                        and (nx, ny, nz) not in seen
                    ):
                        seen.add((nx, ny, nz))
                        queue.append((nx, ny, nz))
            if supported:
                continue
            cells = set(component)
            landing = any(
                grid[cx, cy, cz - 1] == ROCK and (cx, cy, cz - 1) not in cells
                for cx, cy, cz in component
            )
            if landing:
                continue  # rests on another component; merges next sweep
            for cx, cy, cz in component:
                grid[cx, cy, cz] = AIR
            for cx, cy, cz in component:
                grid[cx, cy, cz - 1] = ROCK
            moved = True
        if not moved:
            return


@dataclass
class RainReport:
    retained: int = 0
    drained: int = 0

    @property
    def total(self) -> int:
        return self.retained + self.drained


def _drop(world: VoxelWorld, x: int, y: int) -> bool:
    """Simulate one drop entering above (x, y); True when it pools."""
    grid = world.grid
    w, h = world.w, world.h
    z = h - 1
    if grid[x, y, z] != AIR:
        return False  # column sealed or brim-full at the sky: sheds off

    while True:
        while z > 0 and grid[x, y, z - 1] == AIR:
            z -= 1
        if z == 0:
            return False  # bottom of the world

        # Flood the current level through air/water.
        dist = {(x, y): 0}
        queue = deque([(x, y)])
        best_hole: tuple[int, int, int] | None = None  # (dist, x, y)
        best_edge: int | None = None
        while queue:
            cx, cy = queue.popleft()
            d = dist[(cx, cy)]
            if best_hole is not None and d > best_hole[0]:
                break  # deeper cells cannot improve the nearest hole
            if grid[cx, cy, z - 1] == AIR:
                cand = (d, cx, cy)
                if best_hole is None or cand < best_hole:
                    best_hole = cand
            if cx in (0, w - 1) or cy in (0, w - 1):
                if best_edge is None:
                    best_edge = d
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                nx, ny = cx + dx, cy + dy
                if 0 <= nx < w and 0 <= ny < w and (nx, ny) not in dist \
                        and grid[nx, ny, z] != ROCK:
                    dist[(nx, ny)] = d + 1
                    queue.append((nx, ny))

        if best_hole is not None and (best_edge is None or best_hole[0] <= best_edge):
            _, hx, hy = best_hole
            x, y, z = hx, hy, z - 1
            continue
        if best_edge is not None:
            return False  # runs off the side
        grid[x, y, z] = WATER
        return True


def simulate_rain(world: VoxelWorld, schedule) -> tuple[VoxelWorld, RainReport]:
    """Run drops to completion; returns the settled world and the tally."""
    out = world.copy()
    report = RainReport()
    for x, y in schedule:
        if not (0 <= x < out.w and 0 <= y < out.w):
            raise EarthworksError(f"rain column ({x}, {y}) outside the world")
        if _drop(out, int(x), int(y)):
            report.retained += 1
        else:
            report.drained += 1
    return out, report


def default_rain_schedule(world_width: int, drops: int, stream) -> list[tuple[int, int]]:
    """Mostly-centred rainfall: 80% on the centre column, 20% uniform."""
    cx = cy = world_width // 2
    out = []
    for _ in range(drops):
        if stream.uniform() < 0.8:
            out.append((cx, cy))
        else:
            out.append((stream.randint(0, world_width - 1), stream.randint(0, world_width - 1)))
    return out


# ---------------------------------------------------------------------------
# Water analysis
# ---------------------------------------------------------------------------


@dataclass
class WaterBody:
    voxels: list[tuple[int, int, int]]
    volume: int
    surface_area: int
    z_levels: tuple[int, ...]
    surface_z: int
    depth: int
    visible_from_above: bool
    has_2x2_layer: bool
    is_ring: bool


@dataclass
class WaterReport:
    bodies: list[WaterBody] = field(default_factory=list)
    total: int = 0
    visible_from_above: bool = False
    levels: set[int] = field(default_factory=set)


def analyze_water(world: VoxelWorld) -> WaterReport:
    grid = world.grid
    w, h = world.w, world.h
    report = WaterReport()
    seen: set[tuple[int, int, int]] = set()

    water_cells = list(zip(*np.nonzero(grid == WATER)))
    report.total = len(water_cells)
    report.levels = {int(z) for _, _, z in water_cells}

    for start in water_cells:
        if start in seen:
            continue
        component = []
        queue = deque([start])
        seen.add(start)
        while queue:
            c = queue.popleft()
            component.append(tuple(int(v) for v in c))
            for dx, dy, dz in _ORTHO6:
                n = (c[0] + dx, c[1] + dy, c[2] + dz)
                if (
                    world.in_bounds(*n)
                    and grid[n] == WATER
                    and n not in seen
                ):
                    seen.add(n)
                    queue.append(n)
        report.bodies.append(_describe_body(world, component))

    report.visible_from_above = any(b.visible_from_above for b in report.bodies)
    return report


def _describe_body(world: VoxelWorld, voxels: list[tuple[int, int, int]]) -> WaterBody:
    grid = world.grid
    h = world.h
    cells = set(voxels)
    z_levels = tuple(sorted({z for _, _, z in voxels}))

    surface = 0
    visible = False
    depth = 0
    columns: dict[tuple[int, int], list[int]] = {}
    for x, y, z in voxels:
        columns.setdefault((x, y), []).append(z)
        if z == h - 1 or grid[x, y, z + 1] != WATER:
            surface += 1
            if all(grid[x, y, zz] == AIR for zz in range(z + 1, h)):
                visible = True
    for zs in columns.values():
        zs.sort()
        run = best = 1
        for a, b in zip(zs, zs[1:]):
            run = run + 1 if b == a + 1 else 1
            best = max(best, run)
        depth = max(depth, best)

    has_2x2 = False
    by_level: dict[int, set[tuple[int, int]]] = {}
    for x, y, z in voxels:
        by_level.setdefault(z, set()).add((x, y))
    for layer in by_level.values():
        if any(
            (x + 1, y) in layer and (x, y + 1) in layer and (x + 1, y + 1) in layer
            for x, y in layer
        ):
            has_2x2 = True
            break

    return WaterBody(
        voxels=sorted(cells),
        volume=len(cells),
        surface_area=surface,
        z_levels=z_levels,
        surface_z=max(z_levels),
        depth=depth,
        visible_from_above=visible,
        has_2x2_layer=has_2x2,
        is_ring=_is_ring(world, cells),
    )


def _is_ring(world: VoxelWorld, cells: set[tuple[int, int, int]]) -> bool:
    """Body projection encloses a dry region containing a 3x3 square."""
    w = world.w
    proj = {(x, y) for x, y, _ in cells}
    if not proj:
        return False
    outside: set[tuple[int, int]] = set()
    queue = deque()
    for x in range(w):
        for y in (0, w - 1):
            for c in ((x, y), (y, x)):
                if c not in proj and c not in outside:
                    outside.add(c)
                    queue.append(c)
    while queue:
        cx, cy = queue.popleft()
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            n = (cx + dx, cy + dy)
            if 0 <= n[0] < w and 0 <= n[1] < w and n not in proj and n not in outside:
                outside.add(n)
                queue.append(n)
    enclosed = {
        (x, y)
        for x in range(w)
        for y in range(w)
        if (x, y) not in proj and (x, y) not in outside
    }
    for x, y in enclosed:
        if all((x + dx, y + dy) in enclosed for dx in range(3) for dy in range(3)):
            return True
    return False


FLUID_TARGET_DESCRIPTIONS = {
    1: "a lake of at least 36 voxels in surface area",
    2: "3 unconnected bodies of water, each at least 2x2",
    3: "a lake of at least 2 voxels at z > 5",
    4: "an underground lake of at least 10 voxels, no water visible from above",
    5: "3 lakes on 3 different z levels",
    6: "a lake at least 6 voxels deep",
    7: "2 lakes, each over 200 voxels in volume",
    8: "a ring-shaped lake around a dry centre of at least 3x3",
    9: "water at z=3 and z=6 but none at z=4 or z=5",
    10: "exactly 100 voxels of water in total",
    11: "4 separate underground lakes, each at least 5 voxels, none visible",
}


def verify_fluid_target(report: WaterReport, target_id: int) -> bool:
    if target_id == 1:
        return any(b.surface_area >= 36 for b in report.bodies)
    if target_id == 2:
        return sum(1 for b in report.bodies if b.has_2x2_layer) >= 3
    if target_id == 3:
        return any(sum(1 for _, _, z in b.voxels if z > 5) >= 2 for b in report.bodies)
    if target_id == 4:
        return (not report.visible_from_above) and any(b.volume >= 10 for b in report.bodies)
    if target_id == 5:
        return len({b.surface_z for b in report.bodies}) >= 3 and len(report.bodies) >= 3
    if target_id == 6:
        return any(b.depth >= 6 for b in report.bodies)
    if target_id == 7:
        return sum(1 for b in report.bodies if b.volume > 200) >= 2
    if target_id == 8:
        return any(b.is_ring for b in report.bodies)
    if target_id == 9:
        return (
            3 in report.levels and 6 in report.levels
            and 4 not in report.levels and 5 not in report.levels
        )
    if target_id == 10:
        return report.total == 100
    if target_id == 11:
        return sum(1 for b in report.bodies if b.volume >= 5 and not b.visible_from_above) >= 4
    raise ValueError(f"unknown fluid target {target_id}")
