"""Heightfield maze validation with jump mechanics.

Moves: walk to a 4-neighbour within +/-1 elevation, or jump in a straight
line across a run of cells at least 2 below, landing on the first cell at
the jumper's own elevation. Solution uniqueness means every start-to-end
path uses the identical cell sequence, certified by checking that every
edge of the found path is a bridge of the reachable move graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

MAX_ELEVATION_FRACTION = 0.30
MIN_VISIT_FRACTION = 0.20


class MazeFormatError(ValueError):
    pass


@dataclass
class MazeReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    path: list[tuple[int, int]] = field(default_factory=list)
    jumps: int = 0
    elevation_counts: dict[int, int] = field(default_factory=dict)

    def diagnostics(self) -> tuple:
        """Everything a mutation can observably change."""
        return (tuple(self.failures), tuple(self.path), self.jumps,
                tuple(sorted(self.elevation_counts.items())))


def parse_maze(text: str) -> list[str]:
    rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise MazeFormatError("empty maze")
    return rows


def _elevations(rows, start_elev, end_elev):
    grid = {}
    a = b = None
    for y, row in enumerate(rows):
        for x, ch in enumerate(row):
            if ch == "A":
                a = (x, y)
                grid[(x, y)] = start_elev
            elif ch == "B":
                b = (x, y)
                grid[(x, y)] = end_elev
            elif ch.isdigit():
                grid[(x, y)] = int(ch)
            else:
                raise MazeFormatError(f"bad cell {ch!r} at ({x}, {y})")
    return grid, a, b


_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def maze_moves(grid: dict, width: int, height: int, cell: tuple[int, int]):
    """Yield (target, is_jump) moves available from a cell."""
    e = grid[cell]
    x, y = cell
    for dx, dy in _DIRS:
        nx, ny = x + dx, y + dy
        if (nx, ny) not in grid:
            continue
        ne = grid[(nx, ny)]
        if abs(ne - e) <= 1:
            yield (nx, ny), False
        elif ne <= e - 2:
            # Scan the line for the first cell back at our elevation.
            k = 2
            while True:
                qx, qy = x + dx * k, y + dy * k
                if (qx, qy) not in grid:
                    break
                qe = grid[(qx, qy)]
                if qe <= e - 2:
                    k += 1
                    continue
                if qe == e:
                    yield (qx, qy), True
                break


def verify_maze(
    text: str,
    width: int,
    height: int,
    min_jumps: int,
    start_elev: int,
    end_elev: int,
) -> MazeReport:
    failures: list[str] = []
    try:
        rows = parse_maze(text)
        if len(rows) != height or any(len(r) != width for r in rows):
            return MazeReport(False, [f"dimensions: expected {width}x{height}"])
        grid, a, b = _elevations(rows, start_elev, end_elev)
    except MazeFormatError as exc:
        return MazeReport(False, [str(exc)])

    flat = "".join(rows)
    if flat.count("A") != 1 or flat.count("B") != 1:
        return MazeReport(False, ["endpoints: need exactly one A and one B"])

    total = width * height
    counts: dict[int, int] = {}
    for e in grid.values():
        counts[e] = counts.get(e, 0) + 1
    for e, c in sorted(counts.items()):
        if c > MAX_ELEVATION_FRACTION * total:
            failures.append(f"elevation-distribution: value {e} fills {c}/{total} cells")

    # Move graph over cells reachable from A.
    adjacency: dict[tuple[int, int], list[tuple[tuple[int, int], bool]]] = {}
    reachable = {a}
    queue = deque([a])
    while queue:
        cell = queue.popleft()
        moves = list(maze_moves(grid, width, height, cell))
        adjacency[cell] = moves
        for target, _ in moves:
            if target not in reachable:
                reachable.add(target)
                queue.append(target)

    if b not in reachable:
        failures.append("no-solution: B unreachable from A")
        return MazeReport(False, failures, elevation_counts=counts)

    # BFS shortest path (moves are symmetric: walks trivially, jumps
    # land at equal elevation over the same low run).
    prev: dict[tuple[int, int], tuple[int, int]] = {}
    seen = {a}
    queue = deque([a])
    while queue:
        cell = queue.popleft()
        if cell == b:
            break
        for target, _ in adjacency.get(cell) or maze_moves(grid, width, height, cell):
            if target not in seen:
                seen.add(target)
                prev[target] = cell
                queue.append(target)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()

    # Uniqueness: every path edge must be a bridge of the reachable graph.
    bridges = _bridges(adjacency)
    edge_set = {tuple(sorted(e)) for e in zip(path, path[1:])}
    non_bridges = [e for e in edge_set if e not in bridges]
    if non_bridges:
        failures.append(f"multiple-solutions: {len(non_bridges)} path edges lie on cycles")

    jumps = 0
    for u, v in zip(path, path[1:]):
        if abs(u[0] - v[0]) + abs(u[1] - v[1]) > 1:
            jumps += 1
    if jumps < min_jumps:
        failures.append(f"jumps: {jumps} < required {min_jumps}")

    if len(path) <= MIN_VISIT_FRACTION * total:
        failures.append(f"coverage: path visits {len(path)}/{total} cells")

    return MazeReport(not failures, failures, path, jumps, counts)


def _bridges(adjacency) -> set[tuple[tuple[int, int], tuple[int, int]]]:
    """Tarjan bridge finding on the undirected reachable move graph."""
    graph: dict = {}
    for u, moves in adjacency.items():
        for v, _ in moves:
            graph.setdefault(u, set()).add(v)
            graph.setdefault(v, set()).add(u)

    index = {}
    low = {}
    bridges: set = set()
    counter = [0]

    for root in graph:
        if root in index:
            continue
        stack = [(root, None, iter(sorted(graph[root])))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            node, parent, it = stack[-1]
            advanced = False
            for child in it:
                if child == parent:
                    continue
                if child in index:
                    low[node] = min(low[node], index[child])
                    continue
                index[child] = low[child] = counter[0]
                counter[0] += 1
                stack.append((child, node, iter(sorted(graph[child]))))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            if stack:
                pnode = stack[-1][0]
                low[pnode] = min(low[pnode], low[node])
                if low[node] > index[pnode]:
                    bridges.add(tuple(sorted((pnode, node))))
    return bridges
