"""Printability and stacking rules for tower-printed 7-segment numbers.

The digit tower is built first-digit-at-the-bottom. Flat-on-flat support
is a segment-subset rule on the 7-segment glyphs after applying the
in-plane orientation transform; the digit 1 is modelled as a centre bar,
so a flat 1 rests only on the ground or another 1. Non-flat placements
follow the rotated-digit state machine (bars, spikes-up 3/7, vertical 1
spires). Entries not pinned by a quoted rule are extrapolations frozen
here so grading is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .primality import is_prime_bpsw

ORIENTATIONS = ("flat", "flippedX", "flippedY", "rotate90X", "rotate90Y", "rotate180Z")
FLAT_FAMILY = frozenset({"flat", "flippedX", "flippedY", "rotate180Z"})

KNOWN_BEST_DIGITS = 42
MIN_COMFORT_HEIGHT_MM = 70.0
SHORT_STACK_PENALTY = Fraction(9, 10)

# 7-segment sets; letters follow the usual a..g layout (a top, d bottom,
# g middle, b/c right column, f/e left column). Digit 1 is a centre bar.
SEGMENTS: dict[int, frozenset[str]] = {
    0: frozenset("abcdef"),
    1: frozenset({"cb"}),
    2: frozenset("abdeg"),
    3: frozenset("abcdg"),
    4: frozenset("bcfg"),
    5: frozenset("acdfg"),
    6: frozenset("acdefg"),
    7: frozenset("abc"),
    8: frozenset("abcdefg"),
    9: frozenset("abcdfg"),
}

_ROT180 = {"a": "d", "d": "a", "b": "e", "e": "b", "c": "f", "f": "c", "g": "g", "cb": "cb"}
_FLIP_X = {"a": "d", "d": "a", "b": "c", "c": "b", "e": "f", "f": "e", "g": "g", "cb": "cb"}
_FLIP_Y = {"a": "a", "d": "d", "b": "f", "f": "b", "c": "e", "e": "c", "g": "g", "cb": "cb"}

_SEG_MAPS = {
    "flat": None,
    "rotate180Z": _ROT180,
    "flippedX": _FLIP_X,
    "flippedY": _FLIP_Y,
}


@dataclass(frozen=True)
class DigitPlacement:
    digit: int
    orientation: str

    def __post_init__(self):
        if not 0 <= self.digit <= 9:
            raise ValueError(f"digit {self.digit} out of range")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation {self.orientation!r} not in schema enum")


def effective_segments(p: DigitPlacement) -> frozenset[str]:
    """Segment footprint after the in-plane orientation transform."""
    mapping = _SEG_MAPS.get(p.orientation)
    base = SEGMENTS[p.digit]
    if mapping is None:
        return base
    return frozenset(mapping[s] for s in base)


def is_printable(p: DigitPlacement) -> bool:
    """Can this digit be printed in this orientation at all?

    Flat-family placements are always printable. Standing placements:
    only 1, 3 and 7 go non-flat; 3 only on its long side; 8 on neither.
    """
    if p.orientation in FLAT_FAMILY:
        return True
    if p.orientation == "rotate90X":
        return p.digit in (1, 7)
    if p.orientation == "rotate90Y":
        return p.digit in (1, 3, 7)
    return False


def _category(p: DigitPlacement) -> str:
    if p.orientation in FLAT_FAMILY:
        return "flat"
    if p.digit == 1:
        return "spire" if p.orientation == "rotate90X" else "bar"
    if p.orientation == "rotate90Y":
        return "spike"
    return "head"  # rotate90X 7, standing on its top bar


_SEG9 = SEGMENTS[9]


def is_stackable(lower: DigitPlacement | None, upper: DigitPlacement) -> bool:
    """Is ``upper`` printable directly on top of ``lower`` (None = ground)?"""
    if not is_printable(upper):
        return False
    if lower is None:
        return True
    if not is_printable(lower):
        return False

    lower_cat = _category(lower)
    upper_cat = _category(upper)

    if upper_cat == "flat":
        if lower_cat != "flat":
            return False
        lower_segs = effective_segments(lower)
        if effective_segments(upper) <= lower_segs:
            return True
        # Quoted allowance: a flipped 6 stacks on a 9-shaped top even
        # though its mirrored bottom-left column misses strict subset.
        return (
            upper.digit == 6
            and upper.orientation in ("flippedX", "flippedY")
            and _SEG9 <= lower_segs
        )
    if upper_cat == "bar":
        return lower_cat in ("flat", "bar")
    if upper_cat == "spike":
        return lower_cat in ("flat", "bar")
    if upper_cat == "spire":
        return lower_cat in ("flat", "bar", "spike", "spire")
    return False  # a head-standing 7 only rests on the ground


@dataclass(frozen=True)
class RuleVerdict:
    printable: bool
    stackable: bool


def digit_rules(lower: DigitPlacement | None, upper: DigitPlacement) -> RuleVerdict:
    return RuleVerdict(is_printable(upper), is_stackable(lower, upper))


def placement_height_mm(p: DigitPlacement) -> float:
    if p.orientation in FLAT_FAMILY:
        return 1.2
    if p.orientation == "rotate90X":
        return 21.2
    return 1.2 if p.digit == 1 else 11.2  # rotate90Y


def repeated_triplet(digits: str) -> bool:
    """True when any two comma groups of the decimal rendering coincide."""
    groups = []
    i = len(digits)
    while i > 0:
        groups.append(digits[max(0, i - 3):i])
        i -= 3
    full = [g for g in groups if len(g) == 3]
    return len(set(full)) != len(full)


@dataclass(frozen=True)
class StackVerdict:
    score: Fraction
    raw_score: Fraction
    height_mm: float
    value: int | None
    failure: str | None

    @property
    def passed(self) -> bool:
        return self.failure is None


def verify_prime_stack(seq: list[DigitPlacement]) -> StackVerdict:
    """Grade a printable-prime tower; first digit sits on the ground."""
    zero = Fraction(0)
    if not seq:
        return StackVerdict(zero, zero, 0.0, None, "empty")
    digits = "".join(str(p.digit) for p in seq)
    if digits[0] == "0":
        return StackVerdict(zero, zero, 0.0, None, "leading-zero")
    if repeated_triplet(digits):
        return StackVerdict(zero, zero, 0.0, None, "repeated-triplet")

    height = 0.0
    prev: DigitPlacement | None = None
    for idx, placement in enumerate(seq):
        if not is_printable(placement):
            return StackVerdict(zero, zero, 0.0, None, f"unprintable[{idx}]")
        if not is_stackable(prev, placement):
            return StackVerdict(zero, zero, 0.0, None, f"unstackable[{idx}]")
        height += placement_height_mm(placement)
        prev = placement

    value = int(digits)
    if not is_prime_bpsw(value):
        return StackVerdict(zero, zero, 0.0, value, "composite")

    raw = Fraction(len(digits), KNOWN_BEST_DIGITS)
    if height < MIN_COMFORT_HEIGHT_MM:
        raw *= SHORT_STACK_PENALTY
    return StackVerdict(min(raw, Fraction(1)), raw, height, value, None)


# ---------------------------------------------------------------------------
# Reference solver
# ---------------------------------------------------------------------------

_MIDDLE = "999996969699696669666"


def _prefixes() -> list[str]:
    out = []
    for i8 in range(3, 6):
        for i3 in range(3, 6):
            for i7 in range(3, 6):
                out.append("8" * i8 + _MIDDLE + "3" * i3 + "7" * i7)
    return out


def _suffixes(max_parts: int = 10) -> list[str]:
    """Rotated-digit tails legal after a flat 7, per the stacking machine."""
    from itertools import product

    seen = set()
    out = []
    for parts in product(("", "3", "1", "7"), repeat=max_parts):
        s = "".join(parts)
        if s in seen:
            continue
        seen.add(s)
        top_bar = True
        long_side = True
        ok = True
        for ch in s:
            if top_bar and long_side:
                if ch == "3":
                    top_bar = long_side = False
                elif ch == "1":
                    top_bar = False
            elif long_side:
                if ch in ("3", "7"):
                    top_bar = long_side = False
            else:
                if ch != "1":
                    ok = False
                    break
        if ok:
            out.append(s)
    return out


def _orient_sequence(prefix: str, suffix: str) -> list[DigitPlacement]:
    seq = []
    prev_segs: frozenset[str] | None = None
    for ch in prefix:
        d = int(ch)
        orient = "flat"
        if prev_segs is not None and not SEGMENTS[d] <= prev_segs:
            orient = "rotate180Z"
        placement = DigitPlacement(d, orient)
        seq.append(placement)
        prev_segs = effective_segments(placement)
    top_bar = True
    long_side = True
    for ch in suffix:
        d = int(ch)
        if top_bar and long_side:
            if ch == "7":
                seq.append(DigitPlacement(7, "flat"))
                continue
            if ch == "3":
                seq.append(DigitPlacement(3, "rotate90Y"))
                top_bar = long_side = False
            else:
                seq.append(DigitPlacement(1, "rotate90Y"))
                top_bar = False
        elif long_side:
            if ch == "1":
                seq.append(DigitPlacement(1, "rotate90Y"))
            else:
                seq.append(DigitPlacement(d, "rotate90Y"))
                top_bar = long_side = False
        else:
            seq.append(DigitPlacement(1, "rotate90X"))
    return seq


def solve_prime_reference() -> list[DigitPlacement]:
    """Largest passing tower from the prefix x suffix search space.

    Candidates are tried in descending numeric order, so the first one
    that passes the triplet rule and the primality test is the answer.
    Only a few dozen primality tests run before a hit.
    """
    candidates = []
    for prefix in _prefixes():
        for suffix in _suffixes():
            s = prefix + suffix
            candidates.append((int(s), prefix, suffix))
    candidates.sort(key=lambda t: -t[0])

    for value, prefix, suffix in candidates:
        digits = prefix + suffix
        if repeated_triplet(digits):
            continue
        if not is_prime_bpsw(value):
            continue
        seq = _orient_sequence(prefix, suffix)
        verdict = verify_prime_stack(seq)
        if verdict.passed:
            return seq
    raise RuntimeError("reference search space exhausted")
