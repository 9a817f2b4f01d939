"""Two-segment square partition instances, generated solution-first:
sample chords, compute the region-type multiset, and ask for it."""

from __future__ import annotations

from ..geom2d import (
    DegenerateGeometryError,
    PlacementError,
    Point2,
    Segment2,
    partition_square,
    region_kind_multiset,
)
from .rng import Stream


def _boundary_point(stream: Stream) -> Point2:
    edge = stream.randint(0, 3)
    t = stream.randint(1, 999) / 1000.0
    if edge == 0:
        return Point2.of(t, 0)
    if edge == 1:
        return Point2.of(1, t)
    if edge == 2:
        return Point2.of(t, 1)
    return Point2.of(0, t)


def gen_two_segments_instance(stream: Stream, want_crossing: bool | None = None):
    """Sample a valid chord pair and freeze its region multiset as target."""
    for _ in range(500):
        try:
            s1 = Segment2(_boundary_point(stream), _boundary_point(stream))
            s2 = Segment2(_boundary_point(stream), _boundary_point(stream))
            regions = partition_square(s1, s2)
        except (DegenerateGeometryError, PlacementError):
            continue
        crossing = len(regions) == 4
        if want_crossing is not None and crossing != want_crossing:
            continue
        target = region_kind_multiset(regions)
        segments = [
            [[float(s.a.x), float(s.a.y)], [float(s.b.x), float(s.b.y)]]
            for s in (s1, s2)
        ]
        return {"target": dict(sorted(target.items())), "certificate_segments": segments}
    raise RuntimeError("two-segment sampling failed to converge")
