"""Lattice-sampled volume comparison between two queryable solids.

This is the sampling replacement for CSG boolean volume arithmetic:
both solids answer membership on the same regular lattice, so the
intersection/symmetric-difference measures are consistent by
construction and deterministic for a fixed resolution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_RESOLUTION = 128


class VolumeConfigError(ValueError):
    pass


@dataclass(frozen=True)
class VolumeComparison:
    intersection: float
    union: float
    sym_difference: float
    candidate_volume: float
    reference_volume: float
    accuracy: float


def _axes(bounds, resolution: int):
    lo = np.asarray(bounds[0], dtype=float)
    hi = np.asarray(bounds[1], dtype=float)
    if (hi <= lo).any():
        raise VolumeConfigError("empty sampling bounds")
    steps = (hi - lo) / resolution
    axes = [lo[i] + (np.arange(resolution) + 0.5) * steps[i] for i in range(3)]
    cell = float(steps[0] * steps[1] * steps[2])
    return axes, cell


def volume_compare(candidate, reference, bounds, resolution: int = DEFAULT_RESOLUTION) -> VolumeComparison:
    """Compare two solids exposing ``contains_grid(xs, ys, zs) -> bool[...]``.

    accuracy = 1 - sym_difference / reference_volume, floored at 0. An
    empty reference on the lattice is a configuration error, not a score.
    """
    (xs, ys, zs), cell = _axes(bounds, resolution)
    ref_mask = reference.contains_grid(xs, ys, zs)
    ref_count = int(np.count_nonzero(ref_mask))
    if ref_count == 0:
        raise VolumeConfigError("reference solid is empty on the sampling lattice")
    cand_mask = candidate.contains_grid(xs, ys, zs)

    inter = int(np.count_nonzero(cand_mask & ref_mask))
    union = int(np.count_nonzero(cand_mask | ref_mask))
    sym = union - inter
    accuracy = max(0.0, 1.0 - sym / ref_count)
    return VolumeComparison(
        intersection=inter * cell,
        union=union * cell,
        sym_difference=sym * cell,
        candidate_volume=int(np.count_nonzero(cand_mask)) * cell,
        reference_volume=ref_count * cell,
        accuracy=accuracy,
    )


@dataclass(frozen=True)
class EmptySolid:
    """Candidate stand-in when parsing produced nothing placeable."""

    def contains_grid(self, xs, ys, zs) -> np.ndarray:
        return np.zeros((len(xs), len(ys), len(zs)), dtype=bool)
