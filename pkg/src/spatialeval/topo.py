"""Corner-label reasoning and recursive-bisection neighbour finding.

The "guaranteed edge" relation is frozen as a small case table: the
printed worked answers mix whole-edge same-class connectivity with the
lone-corner boundary arc, and list the arc pair only when the lone corner
is the first-listed corner. That quirk is reproduced deliberately (it is
author-defined ground truth, not derivable from prose) and the rule is
invariant under relabeling of classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

#: Geometric corner names in ccw order starting bottom-left.
CORNERS_CCW = ("bottom-left", "bottom-right", "top-right", "top-left")

#: Edge index convention used by the edge tasks.
EDGE_INDEX = {"right": 0, "top": 1, "left": 2, "bottom": 3}

#: Edges incident to each geometric corner.
CORNER_EDGES = {
    "bottom-left": ("left", "bottom"),
    "bottom-right": ("right", "bottom"),
    "top-right": ("right", "top"),
    "top-left": ("top", "left"),
}

#: Corner pairs bounding each edge.
EDGE_CORNERS = {
    "right": ("bottom-right", "top-right"),
    "top": ("top-right", "top-left"),
    "left": ("top-left", "bottom-left"),
    "bottom": ("bottom-left", "bottom-right"),
}


class TopoError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledSquare:
    """Corner labels given in ``corner_order``, graded by ``edge_indexing``."""

    labels: tuple[int, ...]
    corner_order: tuple[str, ...] = ("bottom-right", "top-right", "top-left", "bottom-left")
    edge_indexing: dict[str, int] = field(default_factory=lambda: dict(EDGE_INDEX))

    def __post_init__(self):
        if len(self.labels) != 4 or len(self.corner_order) != 4:
            raise TopoError("a labeled square has exactly 4 corners")
        if set(self.corner_order) != set(CORNERS_CCW):
            raise TopoError(f"unknown corner order {self.corner_order}")
        if any(l < 0 for l in self.labels):
            raise TopoError("labels must be non-negative")

    def label_at(self, corner: str) -> int:
        return self.labels[self.corner_order.index(corner)]


def canonicalize_labels(labels: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel by first occurrence: first new label -> 0, next -> 1, ..."""
    mapping: dict[int, int] = {}
    out = []
    for l in labels:
        if l not in mapping:
            mapping[l] = len(mapping)
        out.append(mapping[l])
    return tuple(out)


def forces_interior_meeting(labels: tuple[int, ...]) -> bool:
    """A corner labeling guarantees two classes meet inside the square iff
    the corners witness at least two distinct classes. Uniform corners
    admit a topology where the second class hugs the boundary only."""
    return len(set(labels)) >= 2


def enumerate_forcing_configs(n_classes: int, n_corners: int = 4) -> set[tuple[int, ...]]:
    "All canonical corner tuples that force an interior class meeting."
    if n_classes < 2:
        raise TopoError("need at least two classes")
    out = set()
    for combo in product(range(n_classes), repeat=n_corners):
        canon = canonicalize_labels(combo)
        if forces_interior_meeting(canon):
            out.add(canon)
    return out


def _split_pattern(sq: LabeledSquare):
    """Classify the corner labeling geometrically.

    Returns (kind, data) with kind one of 'uniform', 'lone' (3+1, data =
    the lone geometric corner), 'adjacent' (2+2 sharing an edge),
    'diagonal' (2+2 opposite), 'multi' (3+ classes).
    """
    distinct = set(sq.labels)
    if len(distinct) == 1:
        return "uniform", None
    if len(distinct) > 2:
        return "multi", None
    a = sq.labels[0]
    positions_a = [i for i, l in enumerate(sq.labels) if l == a]
    if len(positions_a) in (1, 3):
        lone_label = a if len(positions_a) == 1 else next(l for l in sq.labels if l != a)
        lone_pos = sq.labels.index(lone_label)
        return "lone", sq.corner_order[lone_pos]
    # 2 + 2: adjacent iff the two corners of one class share an edge.
    corners_a = {sq.corner_order[i] for i in positions_a}
    for edge, (c1, c2) in EDGE_CORNERS.items():
        if {c1, c2} == corners_a:
            return "adjacent", None
    return "diagonal", None


def guaranteed_edges(sq: LabeledSquare) -> list[list[int]]:
    """Edges guaranteed to connect, as sorted [i, j] pairs.

    Frozen case table (see module docstring): only 2-class lone-corner
    squares produce connections. The whole-edge pair of the majority class
    is always listed; the lone corner's boundary-arc pair is listed only
    when the lone corner is the square's first-listed corner.
    """
    kind, lone_corner = _split_pattern(sq)
    if kind != "lone":
        return []

    lone_label = sq.label_at(lone_corner)
    whole_edges = []
    for edge, (c1, c2) in EDGE_CORNERS.items():
        if sq.label_at(c1) != lone_label and sq.label_at(c2) != lone_label:
            whole_edges.append(sq.edge_indexing[edge])
    result = [sorted(whole_edges)]

    if sq.corner_order.index(lone_corner) == 0:
        arc = sorted(sq.edge_indexing[e] for e in CORNER_EDGES[lone_corner])
        result.append(arc)
    return result


KNOWN = "known behaviour"
THREE_DOMAINS = "three domains meeting"
AMBIGUOUS = "ambiguous"


def classify_square(sq: LabeledSquare) -> str:
    """Topological behaviour label for a corner configuration.

    Deterministic-arc worldview: boundaries emanate only from corner
    contrasts, one transition per mixed edge. Diagonal repeats are the
    saddle cases and stay ambiguous.
    """
    distinct = len(set(sq.labels))
    if distinct == 1:
        return KNOWN
    if distinct == 2:
        kind, _ = _split_pattern(sq)
        return AMBIGUOUS if kind == "diagonal" else KNOWN
    if distinct == 3:
        # Repeated class on a diagonal leaves two incompatible pairings.
        counts = {l: sq.labels.count(l) for l in set(sq.labels)}
        repeated = next(l for l, c in counts.items() if c == 2)
        corners = [sq.corner_order[i] for i, l in enumerate(sq.labels) if l == repeated]
        adjacent = any(set(corners) == set(pair) for pair in EDGE_CORNERS.values())
        return THREE_DOMAINS if adjacent else AMBIGUOUS
    return THREE_DOMAINS


# ---------------------------------------------------------------------------
# Half subdivision trees
# ---------------------------------------------------------------------------

_AXIS_INDEX = {"x": 0, "y": 1, "z": 2}


@dataclass
class SubdivisionTree:
    """Binary half-subdivision of the unit square/cube.

    ``leaves`` hold the node paths without children; splits at depth d run
    along ``axis_cycle[d % len(axis_cycle)]``.
    """

    axis_cycle: tuple[str, ...]
    dimension: int
    nodes: set[str]
    leaves: set[str]

    def leaf_extent(self, path: str) -> tuple[tuple[Fraction, Fraction], ...]:
        """Axis-aligned box of a node as ((lo, hi), ...) per axis."""
        if path not in self.nodes:
            raise TopoError(f"unknown node {path!r}")
        lo = [Fraction(0)] * self.dimension
        hi = [Fraction(1)] * self.dimension
        for depth, bit in enumerate(path):
            axis = _AXIS_INDEX[self.axis_cycle[depth % len(self.axis_cycle)]]
            mid = (lo[axis] + hi[axis]) / 2
            if bit == "0":
                hi[axis] = mid
            else:
                lo[axis] = mid
        return tuple(zip(lo, hi))


def parse_subdivision(text: str, axis_cycle, dimension: int | None = None) -> SubdivisionTree:
    """Parse the ASCII tree drawing (pipe/backtick style) into a tree.

    Node names are the binary paths printed at the end of each line; the
    root is the quoted empty string.
    """
    cycle = tuple(a.lower() for a in axis_cycle)
    if not cycle or any(a not in _AXIS_INDEX for a in cycle):
        raise TopoError(f"bad axis cycle {axis_cycle!r}")
    dim = dimension if dimension is not None else (max(_AXIS_INDEX[a] for a in cycle) + 1)

    nodes: set[str] = set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        token = line.split("----")[-1].strip() if "----" in line else line
        token = token.strip()
        if token in ('""', "''"):
            path = ""
        else:
            path = token.strip('"').strip("'")
            if path and set(path) - {"0", "1"}:
                raise TopoError(f"malformed tree line {raw!r}")
        nodes.add(path)
    if "" not in nodes:
        raise TopoError("tree has no root")

    for path in nodes:
        for i in range(len(path)):
            if path[:i] not in nodes:
                raise TopoError(f"node {path!r} has a missing ancestor {path[:i]!r}")

    leaves = set()
    for path in nodes:
        kids = [path + "0" in nodes, path + "1" in nodes]
        if all(kids):
            continue
        if any(kids):
            raise TopoError(f"node {path!r} has exactly one child")
        leaves.add(path)
    return SubdivisionTree(cycle, dim, nodes, leaves)


def build_subdivision(leaves, axis_cycle, dimension: int | None = None) -> SubdivisionTree:
    """Tree from an explicit leaf set (generator-side constructor)."""
    cycle = tuple(a.lower() for a in axis_cycle)
    dim = dimension if dimension is not None else (max(_AXIS_INDEX[a] for a in cycle) + 1)
    nodes = set()
    for leaf in leaves:
        for i in range(len(leaf) + 1):
            nodes.add(leaf[:i])
    tree = SubdivisionTree(cycle, dim, nodes, set(leaves))
    # Leaf set must be exactly the childless nodes.
    computed = {p for p in nodes if p + "0" not in nodes and p + "1" not in nodes}
    if computed != set(leaves):
        raise TopoError("leaf set does not form a full binary tree")
    return tree


def render_subdivision(tree: SubdivisionTree) -> str:
    """ASCII drawing in the same pipe/backtick format parse_subdivision reads."""
    lines = ['""  ']

    def walk(path: str, prefix: str) -> None:
        kids = [path + "0", path + "1"]
        kids = [k for k in kids if k in tree.nodes]
        for i, kid in enumerate(kids):
            last = i == len(kids) - 1
            joint = "`----" if last else "|----"
            lines.append(f"{prefix}{joint} {kid}  ")
            walk(kid, prefix + ("    " if last else "|   "))

    walk("", "")
    return "\n".join(lines)


def boxes_share_face(box_a, box_b) -> bool:
    """True when two axis-aligned boxes share a positive-measure facet."""
    touch_axis = None
    for axis, ((alo, ahi), (blo, bhi)) in enumerate(zip(box_a, box_b)):
        if alo > bhi or blo > ahi:
            return False
        if ahi == blo or bhi == alo:
            if max(alo, blo) == min(ahi, bhi):
                if touch_axis is not None:
                    return False  # only a corner/edge in common
                touch_axis = axis
    if touch_axis is None:
        return False
    # Positive overlap in every other axis.
    for axis, ((alo, ahi), (blo, bhi)) in enumerate(zip(box_a, box_b)):
        if axis == touch_axis:
            continue
        if min(ahi, bhi) - max(alo, blo) <= 0:
            return False
    return True


def leaf_neighbors(tree: SubdivisionTree, target: str) -> set[str]:
    """All leaves sharing a positive-measure face with the target leaf."""
    if target not in tree.leaves:
        raise TopoError(f"{target!r} is not a leaf")
    box = tree.leaf_extent(target)
    out = set()
    for leaf in tree.leaves:
        if leaf == target:
            continue
        if boxes_share_face(box, tree.leaf_extent(leaf)):
            out.add(leaf)
    return out
