"""Pipe-loop subtask parameters and crenellated reference loops.

References are centered rectangles with inward teeth. A tooth at slot
``pos`` spans two units of its side and digs ``d`` units in, adding 2d
pipes; capping d by min(pos, span-2-pos, (perpendicular-1)//2) keeps
teeth from ever crossing each other or the opposite wall. The 3-pipe
opener is a unit equilateral triangle.
"""

from __future__ import annotations

import math

from ..gridworld import PipeConstraints, verify_pipe_loop


def triangle_loop(size: float) -> list[list[float]]:
    h = math.sqrt(3) / 2
    x0 = (size - 1.0) / 2.0
    y0 = (size - h) / 2.0
    return [[x0, y0], [x0 + 1.0, y0], [x0 + 0.5, y0 + h]]


_INWARD = {0: (0, 1), 1: (-1, 0), 2: (0, -1), 3: (1, 0)}


def _side_corner(side: int, pos: int, w: int, h: int, ox: int, oy: int) -> tuple[int, int]:
    if side == 0:
        return (ox + pos, oy)
    if side == 1:
        return (ox + w, oy + pos)
    if side == 2:
        return (ox + w - pos, oy + h)
    return (ox, oy + h - pos)


def _slots(side: int, w: int, h: int) -> list[int]:
    span = w if side % 2 == 0 else h
    return list(range(2, span - 2, 2))


def _depth_cap(side: int, pos: int, w: int, h: int) -> int:
    span = w if side % 2 == 0 else h
    perp = h if side % 2 == 0 else w
    return max(0, min(pos, span - 2 - pos, (perp - 1) // 2))


def crenellated_loop(
    n_pipes: int,
    w: int,
    h: int,
    origin: tuple[int, int],
    spread_teeth: bool = False,
) -> list[list[float]] | None:
    """Closed rectilinear loop with exactly n_pipes unit segments, or
    None when the budget cannot be allocated."""
    if n_pipes % 2 or n_pipes < 2 * (w + h):
        return None
    budget = (n_pipes - 2 * (w + h)) // 2  # total tooth depth

    slot_list = [(side, pos) for side in range(4) for pos in _slots(side, w, h)]
    caps = {sp: _depth_cap(sp[0], sp[1], w, h) for sp in slot_list}
    slot_list = [sp for sp in slot_list if caps[sp] > 0]
    if budget > sum(caps[sp] for sp in slot_list):
        return None

    depths = {sp: 0 for sp in slot_list}
    if spread_teeth and budget >= 1:
        # One tooth roughly every four units on every side first.
        for side in range(4):
            for pos in _slots(side, w, h):
                if pos % 4 == 2 and (side, pos) in depths and budget > 0:
                    depths[(side, pos)] = 1
                    budget -= 1
    # Round-robin the remaining depth to keep the loop balanced.
    while budget > 0:
        progressed = False
        for sp in slot_list:
            if budget == 0:
                break
            if depths[sp] < caps[sp]:
                depths[sp] += 1
                budget -= 1
                progressed = True
        if not progressed:
            return None

    ox, oy = origin
    pts: list[tuple[int, int]] = []
    for side in range(4):
        span = w if side % 2 == 0 else h
        inward = _INWARD[side]
        pos = 0
        while pos < span:
            pts.append(_side_corner(side, pos, w, h, ox, oy))
            d = depths.get((side, pos), 0)
            if d > 0:
                a = _side_corner(side, pos + 1, w, h, ox, oy)
                b = _side_corner(side, pos + 2, w, h, ox, oy)
                pts.append(a)
                for k in range(1, d + 1):
                    pts.append((a[0] + inward[0] * k, a[1] + inward[1] * k))
                for k in range(d, 0, -1):
                    pts.append((b[0] + inward[0] * k, b[1] + inward[1] * k))
                pos += 2
            else:
                pos += 1

    if len(pts) != n_pipes or len(set(pts)) != len(pts):
        return None
    return [[float(x), float(y)] for x, y in pts]


def pipe_subtasks() -> list[dict]:
    """The 40-subtask table: pipe counts, square sizes, constraint menu."""
    table = []
    n_values = [
        3, 4, 6, 8, 12, 16, 20, 24, 28, 32,
        36, 40, 48, 56, 64, 72, 80, 88, 96, 104,
        112, 124, 136, 148, 160, 176, 192, 208, 224, 240,
        256, 276, 296, 316, 336, 356, 376, 396, 408, 420,
    ]
    sizes = [
        1, 2, 3, 3, 4, 4, 5, 5, 6, 6,
        6, 7, 8, 9, 10, 11, 11, 12, 13, 14,
        15, 16, 18, 19, 20, 22, 24, 26, 28, 29,
        31, 33, 36, 38, 40, 43, 45, 47, 49, 50,
    ]
    for idx, (n, size) in enumerate(zip(n_values, sizes)):
        cons: dict = {}
        if idx >= 2:
            cons["crossings"] = 0
        if idx >= 4:
            cons["quadrants"] = True
        if idx >= 6:
            cons["min_turns"] = 4
        if idx >= 8:
            cons["min_separation"] = 0.25
        if idx >= 10:
            cons["centroid_box"] = [0.42, 0.42, 0.58, 0.58]
        if idx >= 12:
            cons["angle_range"] = [45.0, 135.0]
        if idx >= 14:
            cons["margin"] = 1.0
        if idx >= 16:
            cons["min_hull_area"] = round(0.05 * size * size, 3)
        if idx >= 18:
            cons["max_straight_run"] = 6.0
        if 20 <= idx < 24:
            cons["min_turns"] = 12
        table.append({"subtask": idx, "n_pipes": n, "size": float(size), "constraints": cons})
    return table


def reference_loop(spec: dict) -> list[list[float]]:
    n = spec["n_pipes"]
    size = spec["size"]
    cons = constraints_from_dict(spec["constraints"])
    if n == 3:
        loop = triangle_loop(size)
        verdict = verify_pipe_loop(loop, n, size, cons)
        if not verdict.ok:
            raise ValueError(f"triangle reference fails: {verdict.failure}")
        return loop

    margin = int(math.ceil(cons.margin)) if cons.margin else 0
    usable = int(size) - 2 * margin
    spread = cons.max_straight_run is not None
    # Prefer near-square rectangles; centre them in the square.
    shapes = sorted(
        (
            (abs(w - h), -(w * h), w, h)
            for w in range(1, usable + 1)
            for h in range(1, usable + 1)
            if 2 * (w + h) <= n
        ),
    )
    for _, _, w, h in shapes:
        ox = margin + (usable - w) // 2
        oy = margin + (usable - h) // 2
        loop = crenellated_loop(n, w, h, (ox, oy), spread_teeth=spread)
        if loop is None:
            continue
        verdict = verify_pipe_loop(loop, n, size, cons)
        if verdict.ok:
            return loop
    raise ValueError(f"no reference loop found for subtask {spec['subtask']}")


def constraints_from_dict(data: dict) -> PipeConstraints:
    kwargs = dict(data)
    if "centroid_box" in kwargs:
        kwargs["centroid_box"] = tuple(kwargs["centroid_box"])
    if "angle_range" in kwargs:
        kwargs["angle_range"] = tuple(kwargs["angle_range"])
    if "touch_edges" in kwargs:
        kwargs["touch_edges"] = tuple(kwargs["touch_edges"])
    if "fixed_start" in kwargs:
        kwargs["fixed_start"] = tuple(kwargs["fixed_start"])
    return PipeConstraints(**kwargs)
