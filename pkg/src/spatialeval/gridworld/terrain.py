"""Heightmap buildability metric and the levelling score formula.

Only the largest-city metric and the score formula live here; blast
dynamics are outside this library's scope.
"""

from __future__ import annotations

from collections import deque

import numpy as np

CITY_STEP_TOLERANCE = 0.2


def largest_city(heights: np.ndarray, tol: float = CITY_STEP_TOLERANCE) -> tuple[int, np.ndarray]:
    """Largest 4-connected region whose adjacent steps stay within tol.

    Edge-wise flood fill: a tall internal cliff is fine as long as a
    gentle path connects both sides somewhere else.
    """
    h = np.asarray(heights, dtype=float)
    tol = tol + 1e-9  # absorb binary-float noise in nominal 0.2 steps
    rows, cols = h.shape
    seen = np.zeros_like(h, dtype=bool)
    best_size = 0
    best_mask = np.zeros_like(seen)

    for sy in range(rows):
        for sx in range(cols):
            if seen[sy, sx]:
                continue
            mask = np.zeros_like(seen)
            mask[sy, sx] = True
            seen[sy, sx] = True
            size = 1
            queue = deque([(sy, sx)])
            while queue:
                cy, cx = queue.popleft()
                for dy, dx in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    ny, nx = cy + dy, cx + dx
                    if 0 <= ny < rows and 0 <= nx < cols and not seen[ny, nx]:
                        if abs(h[ny, nx] - h[cy, cx]) <= tol:
                            seen[ny, nx] = True
                            mask[ny, nx] = True
                            size += 1
                            queue.append((ny, nx))
            if size > best_size:
                best_size = size
                best_mask = mask
    return best_size, best_mask


def terrain_score(before: int, after: int, total_cells: int) -> float:
    """(after - before) / min(total/2, total - before), clamped to [0, 1]."""
    denom = min(total_cells / 2, total_cells - before)
    if denom <= 0:
        return 0.0
    return max(0.0, min(1.0, (after - before) / denom))
