"""Shikaku grid-dissection verification: rectangles tile the grid, each
contains exactly one clue, and each area equals its clue."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ShikakuVerdict:
    ok: bool
    failure: str | None = None


def verify_shikaku(rects, width: int, height: int, clues: dict[tuple[int, int], int]) -> ShikakuVerdict:
    parsed = []
    for i, r in enumerate(rects):
        if not isinstance(r, (list, tuple)) or len(r) != 4:
            return ShikakuVerdict(False, f"malformed-rect: {i}")
        try:
            x0, y0, x1, y1 = (int(v) for v in r)
        except (TypeError, ValueError):
            return ShikakuVerdict(False, f"malformed-rect: {i}")
        if x0 > x1 or y0 > y1:
            return ShikakuVerdict(False, f"inverted-rect: {i}")
        if x0 < 0 or y0 < 0 or x1 >= width or y1 >= height:
            return ShikakuVerdict(False, f"bounds: rect {i}")
        parsed.append((x0, y0, x1, y1))

    covered: dict[tuple[int, int], int] = {}
    for i, (x0, y0, x1, y1) in enumerate(parsed):
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                if (x, y) in covered:
                    return ShikakuVerdict(False, f"overlap: rects {covered[(x, y)]} and {i}")
                covered[(x, y)] = i
    if len(covered) != width * height:
        return ShikakuVerdict(False, f"gaps: {width * height - len(covered)} cells uncovered")

    for i, (x0, y0, x1, y1) in enumerate(parsed):
        inside = [
            value for (cx, cy), value in clues.items()
            if x0 <= cx <= x1 and y0 <= cy <= y1
        ]
        if len(inside) != 1:
            return ShikakuVerdict(False, f"clue-count: rect {i} contains {len(inside)} clues")
        area = (x1 - x0 + 1) * (y1 - y0 + 1)
        if area != inside[0]:
            return ShikakuVerdict(False, f"area: rect {i} has {area}, clue says {inside[0]}")

    return ShikakuVerdict(True)
