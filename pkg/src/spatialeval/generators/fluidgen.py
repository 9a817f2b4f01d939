"""Reference earthworks for each fluid target on the 17x17x8 world.

Every design is verified end-to-end at generation time: apply, rain,
analyze, check the target predicate. Targets 4 and 11 use roofed pits
fed through offset two-stage shafts so no resting water is ever visible
from above, with overflow channels carved to the map edge.
"""

from __future__ import annotations

from ..gridworld import EarthworksOp, ROCK, AIR

WORLD_WIDTH = 17
WORLD_HEIGHT = 8
RAIN_DROPS = 5000


def _op(lo, hi, material):
    return {"xyzMin": list(lo), "xyzMax": list(hi), "material": material}


def _rock(lo, hi):
    return _op(lo, hi, "Rock")


def _air(lo, hi):
    return _op(lo, hi, "Air")


def _hidden_lake(cx: int, cy: int, channel: str) -> list[dict]:
    """Roofed pit with a two-stage offset shaft and an overflow channel."""
    ops = [
        _air((cx - 1, cy - 1, 1), (cx + 1, cy + 1, 2)),            # pit
        _rock((cx - 2, cy - 2, 3), (cx + 2, cy + 2, 3)),           # lower roof
        _air((cx - 1, cy, 3), (cx - 1, cy, 3)),                    # offset hole
        _rock((cx - 2, cy - 2, 4), (cx + 2, cy + 2, 4)),           # attic ring
        _air((cx - 1, cy - 1, 4), (cx + 1, cy + 1, 4)),
        _rock((cx - 2, cy - 2, 5), (cx + 2, cy + 2, 5)),           # upper roof
        _air((cx, cy, 5), (cx, cy, 5)),                            # shaft
        _rock((cx - 2, cy - 2, 6), (cx + 2, cy + 2, 6)),           # catch tray
        _air((cx - 1, cy - 1, 6), (cx + 1, cy + 1, 6)),
    ]
    last = WORLD_WIDTH - 1
    if channel == "y0":
        ops.append(_air((cx, 0, 2), (cx, cy - 2, 2)))
    elif channel == "y1":
        ops.append(_air((cx, cy + 2, 2), (cx, last, 2)))
    elif channel == "x0":
        ops.append(_air((0, cy, 2), (cx - 2, cy, 2)))
    else:
        ops.append(_air((cx + 2, cy, 2), (last, cy, 2)))
    return ops


def reference_earthworks(target_id: int) -> list[dict]:
    if target_id == 1:
        return [_rock((4, 4, 3), (12, 12, 3)), _air((5, 5, 3), (11, 11, 3))]
    if target_id == 2:
        return [
            _rock((6, 6, 3), (10, 10, 3)), _air((7, 7, 3), (9, 9, 3)),
            _rock((1, 1, 3), (5, 5, 3)), _air((2, 2, 3), (4, 4, 3)),
            _rock((11, 1, 3), (15, 5, 3)), _air((12, 2, 3), (14, 4, 3)),
        ]
    if target_id == 3:
        return [
            _rock((7, 7, 3), (10, 10, 5)),
            _rock((7, 7, 6), (10, 10, 6)), _air((8, 8, 6), (9, 9, 6)),
        ]
    if target_id == 4:
        # Wider centre variant of the hidden-lake design; the rain column
        # lands straight in the shaft so no catch tray is needed.
        return [
            _air((6, 6, 1), (10, 10, 2)),                     # pit
            _rock((5, 5, 3), (11, 11, 3)), _air((6, 8, 3), (6, 8, 3)),
            _rock((5, 5, 4), (11, 11, 4)), _air((6, 6, 4), (10, 10, 4)),
            _rock((5, 5, 5), (11, 11, 5)), _air((8, 8, 5), (8, 8, 5)),
            _air((8, 11, 2), (8, 16, 2)),                     # overflow
        ]
    if target_id == 5:
        return [
            _rock((1, 1, 3), (5, 5, 3)), _air((2, 2, 3), (4, 4, 3)),
            _rock((11, 1, 3), (15, 5, 4)), _air((12, 2, 4), (14, 4, 4)),
            _rock((11, 11, 3), (15, 15, 5)), _air((12, 12, 5), (14, 14, 5)),
        ]
    if target_id == 6:
        return [
            _air((7, 7, 1), (9, 9, 2)),
            _rock((6, 6, 3), (10, 10, 6)), _air((7, 7, 3), (9, 9, 6)),
        ]
    if target_id == 7:
        return [
            _air((1, 1, 1), (15, 6, 2)),
            _rock((0, 0, 3), (16, 7, 3)), _air((1, 1, 3), (15, 6, 3)),
            _air((1, 10, 1), (15, 15, 2)),
            _rock((0, 9, 3), (16, 16, 3)), _air((1, 10, 3), (15, 15, 3)),
        ]
    if target_id == 8:
        return [
            _rock((3, 3, 3), (13, 13, 4)), _air((4, 4, 3), (12, 12, 4)),
            _rock((6, 6, 3), (10, 10, 4)),
        ]
    if target_id == 9:
        return [
            _rock((2, 2, 3), (6, 6, 3)), _air((3, 3, 3), (5, 5, 3)),
            _rock((10, 10, 3), (14, 14, 6)), _air((11, 11, 6), (13, 13, 6)),
        ]
    if target_id == 10:
        return [_air((4, 4, 2), (13, 13, 2))]
    if target_id == 11:
        ops = []
        for cx, cy, channel in ((3, 3, "y0"), (3, 13, "y1"), (13, 3, "x0"), (13, 13, "x1")):
            ops.extend(_hidden_lake(cx, cy, channel))
        return ops
    raise ValueError(f"unknown fluid target {target_id}")


def parse_earthworks(payload) -> list[EarthworksOp]:
    if not isinstance(payload, dict) or "earthworks" not in payload:
        raise ValueError("expected {'earthworks': [...]}")
    return [EarthworksOp.from_json(o) for o in payload["earthworks"]]
