"""N-dimensional snake path validation and coverage scoring."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class SnakeConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SnakeConfig:
    extents: tuple[int, ...]
    start: tuple[int, ...]
    walls: tuple[tuple[int, ...], ...] = ()
    food: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        dims = len(self.extents)
        if dims == 0 or any(e <= 0 for e in self.extents):
            raise SnakeConfigError("extents must be positive")
        cells = [self.start, *self.walls, *self.food]
        for c in cells:
            if len(c) != dims or any(not (0 <= v < e) for v, e in zip(c, self.extents)):
                raise SnakeConfigError(f"cell {c} outside extents {self.extents}")
        pool = {self.start, *self.walls, *self.food}
        if len(pool) != 1 + len(self.walls) + len(self.food):
            raise SnakeConfigError("start, walls and food must be distinct")

    @property
    def visitable(self) -> int:
        total = 1
        for e in self.extents:
            total *= e
        return total - len(self.walls)


@dataclass
class SnakeResult:
    score: Fraction
    visited: int
    missed_food: int
    failure: str | None = None
    failed_step: int | None = None


def verify_snake(path, cfg: SnakeConfig) -> SnakeResult:
    """Structural checks then coverage scoring.

    score = (visited / visitable) / (1 + missed food), divided by 0.98
    when walls exist, clamped to 1. Structural violations zero the score
    and report the offending step.
    """
    dims = len(cfg.extents)
    zero = Fraction(0)
    if not isinstance(path, (list, tuple)) or not path:
        return SnakeResult(zero, 0, len(cfg.food), "empty-path", None)

    cells: list[tuple[int, ...]] = []
    for i, step in enumerate(path):
        if not isinstance(step, (list, tuple)) or len(step) != dims:
            return SnakeResult(zero, 0, len(cfg.food), "wrong-dimensionality", i)
        try:
            cell = tuple(int(v) for v in step)
        except (TypeError, ValueError):
            return SnakeResult(zero, 0, len(cfg.food), "non-integer-coordinate", i)
        cells.append(cell)

    if cells[0] != tuple(cfg.start):
        return SnakeResult(zero, 0, len(cfg.food), "wrong-start", 0)

    walls = set(cfg.walls)
    seen: set[tuple[int, ...]] = set()
    for i, cell in enumerate(cells):
        if any(not (0 <= v < e) for v, e in zip(cell, cfg.extents)):
            return SnakeResult(zero, 0, len(cfg.food), "out-of-bounds", i)
        if cell in walls:
            return SnakeResult(zero, 0, len(cfg.food), "wall-hit", i)
        if cell in seen:
            return SnakeResult(zero, 0, len(cfg.food), "self-collision", i)
        seen.add(cell)
        if i > 0:
            diffs = [abs(a - b) for a, b in zip(cell, cells[i - 1])]
            if sorted(diffs) != [0] * (dims - 1) + [1]:
                return SnakeResult(zero, 0, len(cfg.food), "illegal-step", i)

    missed = sum(1 for f in cfg.food if tuple(f) not in seen)
    score = Fraction(len(seen), cfg.visitable) / (1 + missed)
    if cfg.walls:
        score = score / Fraction(98, 100)
    return SnakeResult(min(score, Fraction(1)), len(seen), missed, None, None)


def serpentine_path(cfg: SnakeConfig) -> list[tuple[int, ...]]:
    """Boustrophedon traversal of the full grid starting at a corner.

    Generator-side helper: visits every cell exactly once when the start
    is a lattice corner. Walls are handled by the caller (walls are laid
    on the path's tail, then the path is truncated before them).
    """
    extents = cfg.extents
    start = tuple(cfg.start)
    if any(s not in (0, e - 1) for s, e in zip(start, extents)):
        raise SnakeConfigError("serpentine start must be a lattice corner")

    dims = len(extents)
    path = []
    idx = [0] * dims

    def walk(axis: int):
        if axis == dims - 1:
            rng = range(extents[axis])
            for v in (rng if _forward(axis) else reversed(rng)):
                idx[axis] = v
                path.append(tuple(idx))
            return
        rng = range(extents[axis])
        for v in (rng if _forward(axis) else reversed(rng)):
            idx[axis] = v
            walk(axis + 1)

    # Direction per axis flips with the parity of the indices of the
    # slower axes, producing adjacent consecutive cells everywhere.
    def _forward(axis: int) -> bool:
        parity = sum(idx[a] for a in range(axis))
        return parity % 2 == 0

    walk(0)

    # Reorient so the path starts at the requested corner.
    mapped = []
    for cell in path:
        out = []
        for v, s, e in zip(cell, start, extents):
            out.append(v if s == 0 else e - 1 - v)
        mapped.append(tuple(out))
    return mapped
