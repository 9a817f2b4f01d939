"""Reference constructions for the triple-projection voxel task.

A Latin-square base covers all three projections with N^2 voxels;
digit-rule repairs and seeded noise voxels plug rule violations, pad the
count, and break every cube symmetry. The construction is verified with
the same checker candidates face.
"""

from __future__ import annotations

from ..gridworld.voxelproj import DIGIT_RULES, verify_voxel_projection
from .rng import Stream


def build_reference_voxels(n: int, count: int, digit_rule: str | None, stream: Stream):
    rule = DIGIT_RULES[digit_rule] if digit_rule else (lambda v: True)
    cells: set[tuple[int, int, int]] = set()

    # Latin base: z = (x + y) mod n, repaired for the digit rule.
    for x in range(n):
        for y in range(n):
            z = (x + y) % n
            for shift in range(n):
                cand = (x, y, (z + shift) % n)
                if rule(cand):
                    cells.add(cand)
                    break

    def missing_pairs(keep):
        seen = {(v[keep[0]], v[keep[1]]) for v in cells}
        return [(a, b) for a in range(n) for b in range(n) if (a, b) not in seen]

    # Repair the xz and yz projections.
    for keep, free_axis in (((0, 2), 1), ((1, 2), 0)):
        for a, b in missing_pairs(keep):
            for v_free in range(n):
                cand = [0, 0, 0]
                cand[keep[0]] = a
                cand[keep[1]] = b
                cand[free_axis] = v_free
                cand = tuple(cand)
                if cand not in cells and rule(cand):
                    cells.add(cand)
                    break

    if len(cells) > count:
        raise ValueError(f"count {count} too small for a {n}^3 construction")

    base = set(cells)

    # Noise voxels pad the count and break symmetry.
    attempts = 0
    while len(cells) < count:
        attempts += 1
        if attempts > 100000:
            raise RuntimeError("noise sampling failed to converge")
        cand = (stream.randint(0, n - 1), stream.randint(0, n - 1), stream.randint(0, n - 1))
        if cand not in cells and rule(cand):
            cells.add(cand)

    voxels = sorted(cells)
    report = verify_voxel_projection(voxels, n, count, digit_rule)
    swaps = 0
    while not report.ok and swaps < 200:
        # Symmetric by chance: swap one noise voxel for a fresh one.
        swaps += 1
        noise = sorted(cells - base)
        if not noise:
            break
        victim = noise[stream.randint(0, len(noise) - 1)]
        cells.discard(victim)
        while True:
            cand = (stream.randint(0, n - 1), stream.randint(0, n - 1), stream.randint(0, n - 1))
            if cand not in cells and rule(cand):
                cells.add(cand)
                break
        voxels = sorted(cells)
        report = verify_voxel_projection(voxels, n, count, digit_rule)
    if not report.ok:
        raise RuntimeError(f"voxel construction failed: {report.failures}")
    return voxels
