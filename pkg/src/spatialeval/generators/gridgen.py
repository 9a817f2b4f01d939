"""Certified instances for shikaku, hamiltonian, snake and maze families."""

from __future__ import annotations

from ..gridworld import (
    SnakeConfig,
    serpentine_path,
    solve_hamiltonian,
    verify_hamiltonian,
    verify_maze,
    verify_snake,
)
from .rng import Stream


# ---------------------------------------------------------------------------
# Shikaku: partition-first, solvable by construction
# ---------------------------------------------------------------------------


def gen_shikaku_instance(stream: Stream, width: int, height: int, min_rects: int):
    rects = [(0, 0, width - 1, height - 1)]
    guard = 0
    while len(rects) < min_rects and guard < 500:
        guard += 1
        idx = stream.randint(0, len(rects) - 1)
        x0, y0, x1, y1 = rects[idx]
        w, h = x1 - x0 + 1, y1 - y0 + 1
        if w <= 1 and h <= 1:
            continue
        if (w >= h and w > 1) or h <= 1:
            cut = stream.randint(x0, x1 - 1)
            a, b = (x0, y0, cut, y1), (cut + 1, y0, x1, y1)
        else:
            cut = stream.randint(y0, y1 - 1)
            a, b = (x0, y0, x1, cut), (x0, cut + 1, x1, y1)
        rects[idx] = a
        rects.append(b)

    clues = {}
    for x0, y0, x1, y1 in rects:
        cx = stream.randint(x0, x1)
        cy = stream.randint(y0, y1)
        clues[(cx, cy)] = (x1 - x0 + 1) * (y1 - y0 + 1)
    return {
        "width": width,
        "height": height,
        "clues": [[x, y, v] for (x, y), v in sorted(clues.items())],
        "certificate_rects": [list(r) for r in sorted(rects)],
    }


# ---------------------------------------------------------------------------
# Hamiltonian loops
# ---------------------------------------------------------------------------


def gen_hamiltonian_instance(stream: Stream, width: int, height: int, n_obstacles: int):
    """Obstacles placed then certified; chunk-aligned on larger grids."""
    use_chunks = width % 2 == 0 and height % 2 == 0 and width >= 10 and n_obstacles % 4 == 0
    for attempt in range(400):
        sub = stream.split("attempt", attempt)
        blocked: set[tuple[int, int]] = set()
        if use_chunks:
            chunks = [(cx, cy) for cx in range(width // 2) for cy in range(height // 2)]
            sub.shuffle(chunks)
            for cx, cy in chunks[: n_obstacles // 4]:
                blocked.update(
                    {
                        (2 * cx + 1, 2 * cy + 1), (2 * cx + 2, 2 * cy + 1),
                        (2 * cx + 1, 2 * cy + 2), (2 * cx + 2, 2 * cy + 2),
                    }
                )
        else:
            cells = [(x, y) for x in range(1, width + 1) for y in range(1, height + 1)]
            sub.shuffle(cells)
            blocked = set(cells[:n_obstacles])
        status, loop = solve_hamiltonian(width, height, sorted(blocked), node_budget=400_000)
        if status == "solved":
            assert verify_hamiltonian(loop, width, height, sorted(blocked)).ok
            return {
                "width": width,
                "height": height,
                "blocked": [list(b) for b in sorted(blocked)],
                "certificate_path": [list(c) for c in loop],
            }
    raise RuntimeError("hamiltonian instance generation failed to converge")


def hamiltonian_ascii(width: int, height: int, blocked) -> str:
    blocked_set = {tuple(b) for b in blocked}
    rows = []
    for y in range(1, height + 1):
        rows.append("".join("X" if (x, y) in blocked_set else "." for x in range(1, width + 1)))
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# Hyper-snake
# ---------------------------------------------------------------------------


def gen_snake_instance(stream: Stream, extents, n_walls: int, n_food: int):
    """Walls sit on the serpentine's tail, so the truncated serpentine is
    a perfect-score certificate by construction."""
    extents = tuple(extents)
    start = tuple(
        0 if stream.randint(0, 1) == 0 else e - 1 for e in extents
    )
    probe = SnakeConfig(extents, start)
    path = serpentine_path(probe)
    walls = tuple(path[len(path) - n_walls:]) if n_walls else ()
    body = path[: len(path) - n_walls] if n_walls else path
    food_positions = []
    if n_food:
        step = max(1, len(body) // (n_food + 1))
        for k in range(1, n_food + 1):
            food_positions.append(body[min(k * step, len(body) - 1)])
    cfg = SnakeConfig(extents, start, walls, tuple(food_positions))
    result = verify_snake([list(c) for c in body], cfg)
    assert result.failure is None and result.score == 1, result
    return {
        "extents": list(extents),
        "start": list(start),
        "walls": [list(w) for w in walls],
        "food": [list(f) for f in food_positions],
        "certificate_path": [list(c) for c in body],
    }


# ---------------------------------------------------------------------------
# Heightfield mazes
# ---------------------------------------------------------------------------


def _serpentine_corridor(width: int, height: int) -> list[tuple[int, int]]:
    cells = []
    for y in range(0, height, 2):
        xs = range(width) if (y // 2) % 2 == 0 else range(width - 1, -1, -1)
        cells.extend((x, y) for x in xs)
        if y + 2 < height:
            cells.append((cells[-1][0], y + 1))
    return cells


def gen_maze_instance(stream: Stream, width: int, height: int, min_jumps: int):
    """Corridor maze: a serpentine walk with carved jump canyons, sealed
    by high shoulder cells; far filler balances the histogram."""
    for attempt in range(200):
        sub = stream.split("maze", attempt)
        corridor = _serpentine_corridor(width, height)
        elev: dict[tuple[int, int], int] = {}

        # Corridor elevations wander over {3, 4, 5}.
        level = 4
        profile = []
        for cell in corridor:
            if sub.uniform() < 0.25:
                level = min(5, max(3, level + (1 if sub.randint(0, 1) else -1)))
            profile.append(level)
            elev[cell] = level

        # Jump canyons: replace interior corridor cells on straight runs
        # whose two neighbours share an elevation.
        jump_cells = []
        candidates = []
        for i in range(2, len(corridor) - 2):
            a, b, c = corridor[i - 1], corridor[i], corridor[i + 1]
            straight = (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1])
            if straight and profile[i - 1] == profile[i + 1]:
                candidates.append(i)
        sub.shuffle(candidates)
        chosen: list[int] = []
        for i in candidates:
            if len(chosen) == min_jumps:
                break
            if all(abs(i - j) > 2 for j in chosen):
                chosen.append(i)
        if len(chosen) < min_jumps:
            continue
        for i in chosen:
            elev[corridor[i]] = max(0, profile[i - 1] - 4)
            jump_cells.append(corridor[i])

        # Shoulders: cells next to the corridor get high values.
        highs = (7, 8, 9)
        h_idx = 0
        for x in range(width):
            for y in range(height):
                if (x, y) in elev:
                    continue
                touches = any(
                    (x + dx, y + dy) in elev and (x + dx, y + dy) not in jump_cells
                    and elev[(x + dx, y + dy)] >= 3
                    for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))
                )
                if touches:
                    elev[(x, y)] = highs[h_idx % 3]
                    h_idx += 1

        # Remaining filler balances the histogram under the 30% cap.
        cap = int(0.30 * width * height)
        counts: dict[int, int] = {}
        for v in elev.values():
            counts[v] = counts.get(v, 0) + 1
        for x in range(width):
            for y in range(height):
                if (x, y) in elev:
                    continue
                value = min(range(10), key=lambda v: (counts.get(v, 0), v))
                elev[(x, y)] = value
                counts[value] = counts.get(value, 0) + 1
        if max(counts.values()) > cap:
            continue

        a_cell, b_cell = corridor[0], corridor[-1]
        rows = []
        for y in range(height):
            row = []
            for x in range(width):
                if (x, y) == a_cell:
                    row.append("A")
                elif (x, y) == b_cell:
                    row.append("B")
                else:
                    row.append(str(elev[(x, y)]))
            rows.append("".join(row))
        text = "\n".join(rows)
        report = verify_maze(text, width, height, min_jumps, elev[a_cell], elev[b_cell])
        if report.ok:
            return {
                "width": width,
                "height": height,
                "min_jumps": min_jumps,
                "start_elev": elev[a_cell],
                "end_elev": elev[b_cell],
                "certificate_text": text,
            }
    raise RuntimeError("maze generation failed to converge")
