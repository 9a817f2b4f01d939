"""Analytic line-of-sight scoring for the crowd-hiding task.

The rendered-pixel count is replaced by a 15x40 sample lattice over each
person's sniper-facing silhouette: one sample stands in for one pixel of
the roughly 600-pixel person, and each visible sample costs 0.005.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SNIPER_POSITION = (100.0, 100.0, 20.0)
PERSON_SIZE = (0.5, 0.5, 2.0)
BUILDING_HEIGHT = 10.0
MAX_DISTANCE_FROM_CENTER = 30.0
VISIBLE_SAMPLE_PENALTY = 0.005
SAMPLE_GRID = (15, 40)


def _segment_hits_aabb(origins: np.ndarray, targets: np.ndarray, lo, hi) -> np.ndarray:
    """Slab test: does the open segment origin->target cross the box?"""
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    if (hi <= lo).any():
        return np.zeros(len(targets), dtype=bool)
    d = targets - origins
    tmin = np.zeros(len(targets))
    tmax = np.ones(len(targets))
    ok = np.ones(len(targets), dtype=bool)
    for axis in range(3):
        da = d[:, axis]
        oa = origins[:, axis]
        parallel = np.abs(da) < 1e-15
        outside = parallel & ((oa < lo[axis]) | (oa > hi[axis]))
        ok &= ~outside
        with np.errstate(divide="ignore", invalid="ignore"):
            t1 = (lo[axis] - oa) / da
            t2 = (hi[axis] - oa) / da
        t_lo = np.minimum(t1, t2)
        t_hi = np.maximum(t1, t2)
        t_lo = np.where(parallel, 0.0, t_lo)
        t_hi = np.where(parallel, 1.0, t_hi)
        tmin = np.maximum(tmin, t_lo)
        tmax = np.minimum(tmax, t_hi)
    return ok & (tmin < tmax) & (tmax > 0.0) & (tmin < 1.0)


def person_occluded(
    sniper,
    person_xy,
    building_half_width: float,
    samples: tuple[int, int] = SAMPLE_GRID,
) -> float:
    """Fraction of silhouette samples visible to the sniper (0 = hidden).

    The silhouette is the vertical billboard through the person's centre
    facing the sniper, 0.5 m wide by 2 m tall.
    """
    sx, sy, sz = sniper
    px, py = person_xy
    dx, dy = sx - px, sy - py
    norm = math.hypot(dx, dy)
    if norm < 1e-12:
        rx, ry = 1.0, 0.0
    else:
        rx, ry = -dy / norm, dx / norm

    nu, nv = samples
    u = (np.arange(nu) + 0.5) / nu - 0.5  # [-0.5, 0.5)
    v = (np.arange(nv) + 0.5) / nv        # (0, 1)
    uu, vv = np.meshgrid(u * PERSON_SIZE[0], v * PERSON_SIZE[2], indexing="ij")
    pts = np.stack(
        [px + uu * rx, py + uu * ry, vv],
        axis=-1,
    ).reshape(-1, 3)

    origins = np.broadcast_to(np.asarray(sniper, dtype=float), pts.shape).copy()
    if building_half_width <= 0.0:
        return 1.0
    lo = (-building_half_width, -building_half_width, 0.0)
    hi = (building_half_width, building_half_width, BUILDING_HEIGHT)
    blocked = _segment_hits_aabb(origins, pts, lo, hi)
    return float(np.count_nonzero(~blocked)) / len(pts)


@dataclass(frozen=True)
class HideSeekResult:
    score: float
    visible_samples: int
    failure: str | None

    @property
    def passed_hard_checks(self) -> bool:
        return self.failure is None


def verify_hide_and_seek(
    positions,
    n_people: int,
    building_width: float,
    sniper=SNIPER_POSITION,
) -> HideSeekResult:
    """Hard placement checks, then the per-visible-sample penalty score."""
    if not isinstance(positions, (list, tuple)):
        return HideSeekResult(0.0, 0, "positions-not-a-list")
    if len(positions) != n_people:
        return HideSeekResult(0.0, 0, f"expected {n_people} people, got {len(positions)}")

    parsed = []
    for i, pos in enumerate(positions):
        if not isinstance(pos, (list, tuple)) or len(pos) != 2:
            return HideSeekResult(0.0, 0, f"person {i} is not a 2D position")
        try:
            x, y = float(pos[0]), float(pos[1])
        except (TypeError, ValueError):
            return HideSeekResult(0.0, 0, f"person {i} has non-numeric coordinates")
        if not (math.isfinite(x) and math.isfinite(y)):
            return HideSeekResult(0.0, 0, f"person {i} has non-finite coordinates")
        parsed.append((x, y))

    half_w = building_width / 2.0
    half_person = PERSON_SIZE[0] / 2.0
    for i, (x, y) in enumerate(parsed):
        if math.hypot(x, y) > MAX_DISTANCE_FROM_CENTER:
            return HideSeekResult(0.0, 0, f"person {i} farther than 30 m from the building")
        if abs(x) < half_w + half_person and abs(y) < half_w + half_person:
            return HideSeekResult(0.0, 0, f"person {i} overlaps the building")

    for i in range(len(parsed)):
        for j in range(i + 1, len(parsed)):
            if (
                abs(parsed[i][0] - parsed[j][0]) < PERSON_SIZE[0]
                and abs(parsed[i][1] - parsed[j][1]) < PERSON_SIZE[1]
            ):
                return HideSeekResult(0.0, 0, f"people {i} and {j} overlap")

    total_samples = SAMPLE_GRID[0] * SAMPLE_GRID[1]
    visible = 0
    for x, y in parsed:
        frac = person_occluded(sniper, (x, y), half_w)
        visible += round(frac * total_samples)
    score = max(0.0, 1.0 - VISIBLE_SAMPLE_PENALTY * visible)
    return HideSeekResult(score, visible, None)
