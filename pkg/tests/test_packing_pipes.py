import math
from fractions import Fraction

import pytest

from spatialeval.gridworld import (
    PipeConstraints,
    PrismClass,
    greedy_pack_reference,
    perfect_packing_feasible,
    total_volume,
    verify_packing,
    verify_pipe_loop,
    verify_shikaku,
)

PUBLISHED_CLASSES = [
    PrismClass((5, 3, 2), 7),
    PrismClass((7, 5, 3), 11),
    PrismClass((11, 7, 5), 14),
    PrismClass((13, 11, 7), 17),
    PrismClass((17, 13, 11), 19),
    PrismClass((19, 17, 13), 23),
    PrismClass((5, 5, 1), 15),
    PrismClass((17, 10, 2), 2),
]


class TestPackingFeasibility:
    def test_published_instance_volume(self):
        assert total_volume(PUBLISHED_CLASSES) == 167_593
        assert sum(c.count for c in PUBLISHED_CLASSES) == 108

    def test_published_instance_infeasible(self):
        assert not perfect_packing_feasible(PUBLISHED_CLASSES)

    def test_cube_instance_feasible(self):
        assert perfect_packing_feasible([PrismClass((1, 1, 1), 8)])

    def test_factorable_but_unfittable(self):
        # 2*2*2 = 8 factorisations exist, but a 1x1x8 rod cannot fit any.
        assert not perfect_packing_feasible([PrismClass((1, 1, 8), 1)])


class TestVerifyPacking:
    def test_two_unit_cubes_perfect(self):
        classes = [PrismClass((1, 1, 1), 2)]
        verdict = verify_packing([(0, 0, 0, 1, 1, 1), (1, 0, 0, 2, 1, 1)], classes)
        assert verdict.efficiency == 1
        assert verdict.score == 1

    def test_overlap_zeroes(self):
        classes = [PrismClass((1, 1, 1), 2)]
        verdict = verify_packing([(0, 0, 0, 1, 1, 1), (0, 0, 0, 1, 1, 1)], classes)
        assert verdict.score == 0
        assert "overlap" in verdict.failure

    def test_size_multiset_mismatch(self):
        classes = [PrismClass((1, 2, 3), 1)]
        verdict = verify_packing([(0, 0, 0, 1, 1, 1)], classes)
        assert verdict.failure == "size-multiset-mismatch"

    def test_rotation_allowed(self):
        classes = [PrismClass((1, 2, 3), 1)]
        verdict = verify_packing([(0, 0, 0, 3, 1, 2)], classes)
        assert verdict.failure is None
        assert verdict.score == 1

    def test_gap_reduces_efficiency(self):
        classes = [PrismClass((1, 1, 1), 2)]
        verdict = verify_packing([(0, 0, 0, 1, 1, 1), (2, 0, 0, 3, 1, 1)], classes)
        assert verdict.efficiency == Fraction(2, 3)


class TestGreedyReference:
    def test_eight_cubes_perfect(self):
        placements, eff = greedy_pack_reference([PrismClass((1, 1, 1), 8)])
        assert eff == 1
        assert len(placements) == 8

    def test_published_instance_reaches_090(self):
        import time

        start = time.perf_counter()
        placements, eff = greedy_pack_reference(PUBLISHED_CLASSES)
        elapsed = time.perf_counter() - start
        assert elapsed < 60
        assert len(placements) == 108
        # Placements must be legal: correct multiset and no overlap.
        boxes = [tuple(p) for p in placements]
        verdict = verify_packing(boxes, PUBLISHED_CLASSES)
        assert verdict.failure is None
        assert float(eff) >= 0.90, float(eff)
        assert verdict.efficiency == eff

    def test_reference_scales_infeasible_scores(self):
        _, ref_eff = greedy_pack_reference(PUBLISHED_CLASSES)
        placements, _ = greedy_pack_reference(PUBLISHED_CLASSES)
        verdict = verify_packing(
            [tuple(p) for p in placements], PUBLISHED_CLASSES, reference_efficiency=ref_eff
        )
        assert verdict.score == 1  # matching the reference is graded perfect


def unit_square_loop(x0=0.5, y0=0.5):
    return [(x0, y0), (x0 + 1, y0), (x0 + 1, y0 + 1), (x0, y0 + 1)]


class TestPipeLoop:
    def test_unit_square_in_2x2(self):
        verdict = verify_pipe_loop(unit_square_loop(), 4, 2.0, PipeConstraints(crossings=0))
        assert verdict.ok, verdict.failure

    def test_equilateral_triangle_in_unit_square(self):
        pts = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)]
        verdict = verify_pipe_loop(pts, 3, 1.0, PipeConstraints(crossings=0))
        assert verdict.ok, verdict.failure

    def test_pentagram_has_five_crossings(self):
        r = 1.0 / (2 * math.sin(math.radians(72)))
        pts = []
        for k in range(5):
            ang = math.radians(90 + 144 * k)
            pts.append((1.0 + r * math.cos(ang), 1.0 + r * math.sin(ang)))
        ok5 = verify_pipe_loop(pts, 5, 2.0, PipeConstraints(crossings=5))
        assert ok5.ok, ok5.failure
        bad = verify_pipe_loop(pts, 5, 2.0, PipeConstraints(crossings=0))
        assert not bad.ok

    def test_non_unit_segment_rejected(self):
        pts = [(0.0, 0.0), (1.5, 0.0), (1.5, 1.0), (0.0, 1.0)]
        verdict = verify_pipe_loop(pts, 4, 2.0, None)
        assert not verdict.ok and "segment-length" in verdict.failure

    def test_open_loop_rejected(self):
        # Last point not unit distance from the first.
        pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]
        verdict = verify_pipe_loop(pts, 3, 3.0, None)
        assert not verdict.ok

    def test_centroid_box(self):
        verdict = verify_pipe_loop(
            unit_square_loop(), 4, 2.0,
            PipeConstraints(centroid_box=(0.45, 0.45, 0.55, 0.55)),
        )
        assert verdict.ok
        off = verify_pipe_loop(
            unit_square_loop(0.0, 0.0), 4, 2.0,
            PipeConstraints(centroid_box=(0.45, 0.45, 0.55, 0.55)),
        )
        assert not off.ok and "centroid" in off.failure

    def test_min_separation(self):
        verdict = verify_pipe_loop(
            unit_square_loop(), 4, 2.0, PipeConstraints(min_separation=0.25)
        )
        assert verdict.ok  # non-adjacent vertices are the diagonals, sqrt(2) apart

    def test_quadrants(self):
        verdict = verify_pipe_loop(
            unit_square_loop(), 4, 2.0, PipeConstraints(quadrants=True)
        )
        assert verdict.ok
        corner = verify_pipe_loop(
            unit_square_loop(0.0, 0.0), 4, 2.0, PipeConstraints(quadrants=True)
        )
        assert not corner.ok

    def test_margin(self):
        verdict = verify_pipe_loop(
            unit_square_loop(), 4, 2.0, PipeConstraints(margin=0.4)
        )
        assert verdict.ok
        tight = verify_pipe_loop(
            unit_square_loop(), 4, 2.0, PipeConstraints(margin=0.6)
        )
        assert not tight.ok

    def test_hull_area_and_turns_and_straight_run(self):
        verdict = verify_pipe_loop(
            unit_square_loop(), 4, 2.0,
            PipeConstraints(min_hull_area=0.99, min_turns=4, max_straight_run=1.0,
                            angle_range=(89.0, 91.0)),
        )
        assert verdict.ok, verdict.failure
        rect = [(0.2, 0.2), (1.2, 0.2), (2.2, 0.2), (2.2, 1.2), (1.2, 1.2), (0.2, 1.2)]
        runs = verify_pipe_loop(rect, 6, 3.0, PipeConstraints(max_straight_run=1.0))
        assert not runs.ok and "straight-run" in runs.failure
        ok2 = verify_pipe_loop(rect, 6, 3.0, PipeConstraints(max_straight_run=2.0))
        assert ok2.ok, ok2.failure

    def test_touching_forbidden_with_crossing_budget(self):
        # Figure-eight sharing a vertex: the shared point is a touch.
        pts = [
            (1.0, 1.0), (2.0, 1.0), (2.0, 2.0), (1.0, 2.0),
        ]
        # Duplicate-vertex loops are caught earlier; build a T-contact.
        tee = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (1.0, 1.0), (1.0, 0.0001)]
        verdict = verify_pipe_loop(tee, 6, 3.0, PipeConstraints(crossings=0))
        assert not verdict.ok

    def test_fixed_start_and_boundary_touch(self):
        pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
        verdict = verify_pipe_loop(
            pts, 4, 2.0,
            PipeConstraints(fixed_start=(0.0, 0.0), touch_edges=("left", "bottom")),
        )
        assert verdict.ok, verdict.failure
        wrong = verify_pipe_loop(
            pts, 4, 2.0, PipeConstraints(touch_edges=("top",))
        )
        assert not wrong.ok


class TestShikaku:
    def test_single_cell(self):
        assert verify_shikaku([(0, 0, 0, 0)], 1, 1, {(0, 0): 1}).ok

    def test_whole_grid_rect(self):
        assert verify_shikaku([(0, 0, 1, 1)], 2, 2, {(1, 0): 4}).ok

    def test_seven_by_seven_strips(self):
        rects = [(0, y, 6, y) for y in range(7)]
        clues = {(3, y): 7 for y in range(7)}
        assert verify_shikaku(rects, 7, 7, clues).ok

    def test_overlap_and_gap_rejected(self):
        assert not verify_shikaku([(0, 0, 1, 1), (1, 0, 1, 1)], 2, 2, {(0, 0): 4}).ok
        assert not verify_shikaku([(0, 0, 0, 1)], 2, 2, {(0, 0): 2}).ok

    def test_area_must_match_clue(self):
        verdict = verify_shikaku([(0, 0, 1, 1)], 2, 2, {(0, 0): 3})
        assert not verdict.ok and "area" in verdict.failure

    def test_two_clues_in_one_rect(self):
        verdict = verify_shikaku([(0, 0, 1, 1)], 2, 2, {(0, 0): 4, (1, 1): 4})
        assert not verdict.ok and "clue-count" in verdict.failure
