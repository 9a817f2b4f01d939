import time
from fractions import Fraction

import pytest

from spatialeval.numeric.prime3d import (
    KNOWN_BEST_DIGITS,
    DigitPlacement,
    digit_rules,
    effective_segments,
    is_printable,
    is_stackable,
    placement_height_mm,
    repeated_triplet,
    solve_prime_reference,
    verify_prime_stack,
    SEGMENTS,
)

LARGEST_REFERENCE = "888999996969699696669666333377777711111171"
TALLEST_REFERENCE = "88888999996969699696669666333337773111"


def flat(d):
    return DigitPlacement(d, "flat")


class TestPrintability:
    def test_eight_flat_only(self):
        assert is_printable(DigitPlacement(8, "flat"))
        assert not is_printable(DigitPlacement(8, "rotate90X"))
        assert not is_printable(DigitPlacement(8, "rotate90Y"))

    def test_seven_head_and_side(self):
        assert is_printable(DigitPlacement(7, "rotate90X"))
        assert is_printable(DigitPlacement(7, "rotate90Y"))

    def test_three_long_side_only(self):
        assert is_printable(DigitPlacement(3, "rotate90Y"))
        assert not is_printable(DigitPlacement(3, "rotate90X"))

    def test_only_137_standing(self):
        for d in (0, 2, 4, 5, 6, 8, 9):
            assert not is_printable(DigitPlacement(d, "rotate90X"))
            assert not is_printable(DigitPlacement(d, "rotate90Y"))


class TestStacking:
    def test_nine_on_eight_not_eight_on_nine(self):
        assert is_stackable(flat(8), flat(9))
        assert not is_stackable(flat(9), flat(8))

    def test_flat_eight_only_after_eight(self):
        for d in range(10):
            expected = d == 8
            assert is_stackable(flat(d), flat(8)) == expected, d
        assert is_stackable(None, flat(8))  # ground start

    def test_seven_on_three_not_vice_versa(self):
        assert is_stackable(flat(3), flat(7))
        assert not is_stackable(flat(7), flat(3))

    def test_six_on_nine_needs_rotation_or_flip(self):
        assert not is_stackable(flat(9), flat(6))
        assert is_stackable(flat(9), DigitPlacement(6, "rotate180Z"))
        assert is_stackable(flat(9), DigitPlacement(6, "flippedX"))
        assert is_stackable(flat(9), DigitPlacement(6, "flippedY"))

    def test_rotated_six_presents_as_nine(self):
        assert effective_segments(DigitPlacement(6, "rotate180Z")) == SEGMENTS[9]

    def test_spire_on_rotated_three(self):
        assert is_stackable(DigitPlacement(3, "rotate90Y"), DigitPlacement(1, "rotate90X"))

    def test_only_spires_on_spikes(self):
        spike = DigitPlacement(7, "rotate90Y")
        assert is_stackable(spike, DigitPlacement(1, "rotate90X"))
        assert not is_stackable(spike, DigitPlacement(1, "rotate90Y"))
        assert not is_stackable(spike, flat(1))
        assert not is_stackable(spike, DigitPlacement(7, "rotate90Y"))

    def test_flat_one_needs_one_below(self):
        assert is_stackable(None, flat(1))
        assert is_stackable(flat(1), flat(1))
        assert not is_stackable(flat(3), flat(1))
        assert not is_stackable(flat(7), flat(1))

    def test_digit_rules_verdict(self):
        v = digit_rules(flat(8), flat(9))
        assert v.printable and v.stackable


class TestTriplets:
    def test_banned_example(self):
        assert repeated_triplet("123123")

    def test_permitted_example(self):
        assert not repeated_triplet("123000001230")

    def test_partial_group_not_compared(self):
        assert not repeated_triplet("12123")  # groups: 12, 123


class TestVerifyStack:
    def _reference_sequence(self):
        seq = []
        prev = None
        for ch in LARGEST_REFERENCE[:33]:
            d = int(ch)
            orient = "flat"
            if prev is not None and not SEGMENTS[d] <= prev:
                orient = "rotate180Z"
            p = DigitPlacement(d, orient)
            seq.append(p)
            prev = effective_segments(p)
        tail = LARGEST_REFERENCE[33:]
        assert tail == "711111171"
        seq.append(flat(7))
        seq.extend(DigitPlacement(1, "rotate90Y") for _ in range(6))
        seq.append(DigitPlacement(7, "rotate90Y"))
        seq.append(DigitPlacement(1, "rotate90X"))
        return seq

    def test_reference_prime_scores_one(self):
        verdict = verify_prime_stack(self._reference_sequence())
        assert verdict.passed
        assert verdict.score == 1
        assert verdict.height_mm >= 70.0

    def test_sagging_one_rejected(self):
        # 3,317 with every digit flat: the flat 1 on a 3 has no support.
        seq = [flat(3), flat(3), flat(1), flat(7)]
        verdict = verify_prime_stack(seq)
        assert not verdict.passed
        assert verdict.score == 0
        assert "unstackable" in verdict.failure

    def test_repeated_triplet_rejected(self):
        seq = [flat(int(c)) for c in "123123"]
        verdict = verify_prime_stack(seq)
        assert verdict.failure == "repeated-triplet"

    def test_composite_rejected(self):
        # 94 = 2 * 47; 9 then 4 stacks (4's segments are within 9's).
        verdict = verify_prime_stack([flat(9), flat(4)])
        assert verdict.failure == "composite"

    def test_short_stack_penalty(self):
        # 31 is prime: flat 3 then spire 1 -> 22.4mm, under 70mm.
        verdict = verify_prime_stack([flat(3), DigitPlacement(1, "rotate90X")])
        assert verdict.passed
        assert verdict.raw_score == Fraction(2, KNOWN_BEST_DIGITS) * Fraction(9, 10)

    def test_every_adjacent_pair_stackable_when_score_positive(self):
        seq = self._reference_sequence()
        prev = None
        for p in seq:
            assert digit_rules(prev, p).stackable
            prev = p


class TestReferenceSolver:
    def test_rediscovers_42_digit_prime(self):
        start = time.perf_counter()
        seq = solve_prime_reference()
        elapsed = time.perf_counter() - start
        digits = "".join(str(p.digit) for p in seq)
        assert len(digits) >= 42
        verdict = verify_prime_stack(seq)
        assert verdict.passed and verdict.raw_score >= 1
        assert elapsed < 600
        # The search's best answer is the published 42-digit number.
        assert digits == LARGEST_REFERENCE

    def test_tallest_reference_is_stackable(self):
        # Prefix flats, rotated 3, then three 1-spires.
        seq = []
        prev = None
        for ch in TALLEST_REFERENCE[:-4]:
            d = int(ch)
            orient = "flat"
            if prev is not None and not SEGMENTS[d] <= prev:
                orient = "rotate180Z"
            p = DigitPlacement(d, orient)
            seq.append(p)
            prev = effective_segments(p)
        assert TALLEST_REFERENCE[-4:] == "3111"
        seq.append(DigitPlacement(3, "rotate90Y"))
        seq.extend(DigitPlacement(1, "rotate90X") for _ in range(3))
        verdict = verify_prime_stack(seq)
        assert verdict.passed
        assert verdict.height_mm > 100.0
