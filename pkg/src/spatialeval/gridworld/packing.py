"""Rectangular prism packing: verification, perfect-packing feasibility,
and the greedy extreme-point reference packer used as the grading
denominator on instances without a perfect solution."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class PrismClass:
    dims: tuple[int, int, int]
    count: int

    @property
    def volume(self) -> int:
        a, b, c = self.dims
        return a * b * c


@dataclass(frozen=True)
class PackVerdict:
    score: Fraction
    efficiency: Fraction
    perfect_feasible: bool
    failure: str | None = None


def total_volume(classes: list[PrismClass]) -> int:
    return sum(c.volume * c.count for c in classes)


def perfect_packing_feasible(classes: list[PrismClass]) -> bool:
    """Necessary-condition screen: the total volume must factor as
    x*y*z with every factor > 1 and the largest prism fitting inside."""
    v = total_volume(classes)
    if v <= 0:
        return False
    largest = max((tuple(sorted(c.dims)) for c in classes), default=(0, 0, 0))
    x = 2
    while x * x * x <= v:
        if v % x == 0:
            rest = v // x
            y = x
            while y * y <= rest:
                if rest % y == 0:
                    z = rest // y
                    box = tuple(sorted((x, y, z)))
                    if box[0] > 1 and all(a <= b for a, b in zip(largest, box)):
                        return True
                y += 1
        x += 1
    return False


def _boxes_overlap(a, b) -> bool:
    (ax0, ay0, az0, ax1, ay1, az1) = a
    (bx0, by0, bz0, bx1, by1, bz1) = b
    return (
        ax0 < bx1 and bx0 < ax1
        and ay0 < by1 and by0 < ay1
        and az0 < bz1 and bz0 < az1
    )


def verify_packing(
    boxes,
    classes: list[PrismClass],
    reference_efficiency: Fraction | None = None,
) -> PackVerdict:
    """Grade a placement: multiset match, no overlap, efficiency.

    score = efficiency when a perfect packing is theoretically possible,
    otherwise efficiency scaled by the greedy reference efficiency.
    """
    zero = Fraction(0)
    feasible = perfect_packing_feasible(classes)

    parsed = []
    for i, box in enumerate(boxes):
        if not isinstance(box, (list, tuple)) or len(box) != 6:
            return PackVerdict(zero, zero, feasible, f"malformed-box: {i}")
        try:
            vals = [int(round(float(v))) for v in box]
        except (TypeError, ValueError):
            return PackVerdict(zero, zero, feasible, f"malformed-box: {i}")
        x0, y0, z0, x1, y1, z1 = vals
        if x0 >= x1 or y0 >= y1 or z0 >= z1:
            return PackVerdict(zero, zero, feasible, f"inverted-box: {i}")
        parsed.append((x0, y0, z0, x1, y1, z1))

    expected: dict[tuple[int, int, int], int] = {}
    for c in classes:
        key = tuple(sorted(c.dims))
        expected[key] = expected.get(key, 0) + c.count
    got: dict[tuple[int, int, int], int] = {}
    for box in parsed:
        dims = tuple(sorted((box[3] - box[0], box[4] - box[1], box[5] - box[2])))
        got[dims] = got.get(dims, 0) + 1
    if got != expected:
        return PackVerdict(zero, zero, feasible, "size-multiset-mismatch")

    for i in range(len(parsed)):
        for j in range(i + 1, len(parsed)):
            if _boxes_overlap(parsed[i], parsed[j]):
                return PackVerdict(zero, zero, feasible, f"overlap: boxes {i} and {j}")

    lo = [min(b[k] for b in parsed) for k in range(3)]
    hi = [max(b[k + 3] for b in parsed) for k in range(3)]
    bbox = (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2])
    efficiency = Fraction(total_volume(classes), bbox)

    if feasible:
        score = efficiency
    else:
        if reference_efficiency is None:
            _, reference_efficiency = greedy_pack_reference(classes)
        score = min(Fraction(1), efficiency / reference_efficiency)
    return PackVerdict(min(score, Fraction(1)), efficiency, feasible)


_ORIENTATIONS = (
    (0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0),
)


def allowed_orientations(dims, box_dims) -> list[tuple[int, int, int]]:
    """Distinct axis-assignments of a prism that fit inside a box."""
    out = []
    for o in _ORIENTATIONS:
        d = (dims[o[0]], dims[o[1]], dims[o[2]])
        if d not in out and all(a <= b for a, b in zip(d, box_dims)):
            out.append(d)
    return out


def _pack_skyline(items, width: int, depth: int):
    """Tetris-style stacking over a fixed footprint.

    Placement candidates are the corner coordinates of already-placed
    boxes; each candidate scores by (new top, trapped air, z, y, x), so
    flat exact fits win. Returns (placements, bbox_volume).
    """
    import numpy as np

    height = np.zeros((width, depth), dtype=np.int64)
    placements: list[tuple[int, int, int, int, int, int]] = []
    xs = {0}
    ys = {0}

    for dims in items:
        best = None
        for d in allowed_orientations(dims, (width, depth, 10**9)):
            dx, dy, dz = d
            for x in sorted(xs):
                if x + dx > width:
                    continue
                for y in sorted(ys):
                    if y + dy > depth:
                        continue
                    region = height[x:x + dx, y:y + dy]
                    z = int(region.max())
                    waste = z * dx * dy - int(region.sum())
                    key = (z + dz, waste, z, y, x, d)
                    if best is None or key < best:
                        best = key
        if best is None:
            return None
        top, _, z, y, x, (dx, dy, dz) = best
        height[x:x + dx, y:y + dy] = top
        placements.append((x, y, z, x + dx, y + dy, z + dz))
        xs.add(x + dx)
        ys.add(y + dy)

    used_w = max(p[3] for p in placements)
    used_d = max(p[4] for p in placements)
    used_h = max(p[5] for p in placements)
    return placements, used_w * used_d * used_h


def _footprint_candidates(classes: list[PrismClass]) -> list[tuple[int, int]]:
    """Footprints anchored on multiples of the dominant class's dims.

    Near-cube footprints that let the volume-dominant prisms tile whole
    layers waste the least; a slimmer aspect (about 0.6 of the cube side)
    is also tried because tall stacks sometimes pack the remainder better.
    """
    v = total_volume(classes)
    side = max(2, round(v ** (1 / 3)))
    longest = max(max(c.dims) for c in classes)
    dominant = max(classes, key=lambda c: c.volume * c.count)

    near_side = {max(side, longest), max(side + 1, longest)}
    slim = set()
    for d in set(dominant.dims):
        near_side.add(max(d, round(side / d)) if d > side else max(1, round(side / d)) * d)
        slim.add(max(1, round(side * 0.62 / d)) * d)
    near_side = {s for s in near_side if s >= longest}
    slim = {s for s in slim if s >= longest * 0.5}

    out = set()
    for w in near_side | slim:
        for d in near_side:
            if max(w, d) >= longest:
                out.add((w, d))
    for w in slim:
        for d in slim:
            if max(w, d) >= longest:
                out.add((w, d))
    if not out:
        out.add((max(longest, side), max(longest, side)))
    return sorted(out)


def greedy_pack_reference(
    classes: list[PrismClass],
) -> tuple[list[tuple[int, int, int, int, int, int]], Fraction]:
    """Deterministic skyline packer swept over candidate footprints.

    Prisms go in largest-volume first; the best footprint by final
    bounding-box volume wins. Serves as the grading denominator on
    instances without a perfect packing.
    """
    items: list[tuple[int, int, int]] = []
    for c in sorted(classes, key=lambda c: (-c.volume, tuple(sorted(c.dims)))):
        items.extend([c.dims] * c.count)

    total = total_volume(classes)
    best: tuple[int, list] | None = None
    for width, depth in _footprint_candidates(classes):
        result = _pack_skyline(items, width, depth)
        if result is None:
            continue
        placements, bbox = result
        if best is None or bbox < best[0]:
            best = (bbox, placements)
    if best is None:
        raise ValueError("no footprint could host the prisms")
    bbox, placements = best
    return placements, Fraction(total, bbox)
