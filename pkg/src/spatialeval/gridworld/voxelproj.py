"""Triple-projection voxel construction checks with asymmetry testing.

The symmetry group is the full octahedral group acting on the discrete
cube [0, N-1]^3: all 48 signed axis permutations, 47 of them non-identity.
A valid solution must not be invariant under any non-identity element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product


def octahedral_transforms(n: int):
    """All 48 (perm, signs) actions mapping the discrete cube onto itself."""
    out = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            out.append((perm, signs))
    return out


def apply_cube_transform(voxel, perm, signs, n: int) -> tuple[int, int, int]:
    out = []
    for axis in range(3):
        v = voxel[perm[axis]]
        out.append(v if signs[axis] == 1 else n - 1 - v)
    return tuple(out)


def no_digit_seven(voxel) -> bool:
    return "7" not in str(sum(voxel))


DIGIT_RULES = {"no-7-in-coordinate-sum": no_digit_seven}


@dataclass
class ProjectionReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    invariant_transforms: list[str] = field(default_factory=list)


def verify_voxel_projection(
    voxels,
    n: int,
    required_count: int,
    digit_rule: str | None = None,
) -> ProjectionReport:
    failures: list[str] = []

    parsed: list[tuple[int, int, int]] = []
    for i, v in enumerate(voxels):
        try:
            x, y, z = (int(c) for c in v)
        except (TypeError, ValueError):
            failures.append(f"voxel {i} is not an integer triple")
            return ProjectionReport(False, failures)
        parsed.append((x, y, z))

    if len(parsed) != required_count:
        failures.append(f"count: expected {required_count}, got {len(parsed)}")
    cells = set(parsed)
    if len(cells) != len(parsed):
        failures.append("repeat: duplicate voxel coordinates")
    if any(not all(0 <= c < n for c in v) for v in parsed):
        failures.append(f"bounds: coordinates outside [0, {n - 1}]")

    if failures:
        return ProjectionReport(False, failures)

    for name, keep in (("xy", (0, 1)), ("xz", (0, 2)), ("yz", (1, 2))):
        proj = {(v[keep[0]], v[keep[1]]) for v in cells}
        if len(proj) != n * n:
            failures.append(f"projection-{name}: {n * n - len(proj)} holes")

    if digit_rule is not None:
        rule = DIGIT_RULES[digit_rule]
        bad = [v for v in cells if not rule(v)]
        if bad:
            failures.append(f"digit-rule: {len(bad)} voxels violate {digit_rule}")

    invariant = []
    for perm, signs in octahedral_transforms(n):
        if perm == (0, 1, 2) and signs == (1, 1, 1):
            continue
        image = {apply_cube_transform(v, perm, signs, n) for v in cells}
        if image == cells:
            invariant.append(f"perm={perm} signs={signs}")
    if invariant:
        failures.append(f"symmetry: invariant under {len(invariant)} transforms")

    return ProjectionReport(not failures, failures, invariant)
