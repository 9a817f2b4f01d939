from fractions import Fraction
from itertools import product

import pytest

from spatialeval.generators.rng import Stream
from spatialeval.topo import (
    AMBIGUOUS,
    KNOWN,
    THREE_DOMAINS,
    LabeledSquare,
    TopoError,
    build_subdivision,
    canonicalize_labels,
    classify_square,
    enumerate_forcing_configs,
    forces_interior_meeting,
    guaranteed_edges,
    leaf_neighbors,
    parse_subdivision,
    render_subdivision,
)

EDGE_TASK_ORDER = ("bottom-right", "top-right", "top-left", "bottom-left")


class TestCanonicalize:
    def test_single_contrast(self):
        assert canonicalize_labels((2, 1, 1, 1)) == (0, 1, 1, 1)

    def test_already_canonical(self):
        assert canonicalize_labels((0, 1, 0, 1)) == (0, 1, 0, 1)

    def test_all_distinct(self):
        assert canonicalize_labels((3, 2, 1, 4)) == (0, 1, 2, 3)

    def test_idempotent_and_relabel_invariant(self):
        rng = Stream(3, "canon")
        for _ in range(300):
            labels = tuple(rng.randint(0, 3) for _ in range(4))
            canon = canonicalize_labels(labels)
            assert canonicalize_labels(canon) == canon
            perm = [0, 1, 2, 3]
            rng.shuffle(perm)
            relabeled = tuple(perm[l] for l in labels)
            assert canonicalize_labels(relabeled) == canon


class TestForcingConfigs:
    def test_alternating_in_result(self):
        configs = enumerate_forcing_configs(2)
        assert (0, 1, 0, 1) in configs

    def test_uniform_not_in_result(self):
        assert (0, 0, 0, 0) not in enumerate_forcing_configs(2)

    def test_matches_exhaustive_oracle_two_classes(self):
        # Independent oracle: enumerate all 2^4 tuples, canonicalize, and
        # keep those with a corner contrast.
        oracle = set()
        for combo in product((0, 1), repeat=4):
            canon = canonicalize_labels(combo)
            if len(set(canon)) >= 2:
                oracle.add(canon)
        assert enumerate_forcing_configs(2) == oracle
        assert len(oracle) == 7

    def test_subset_of_canonical(self):
        for cfg in enumerate_forcing_configs(3):
            assert canonicalize_labels(cfg) == cfg
            assert forces_interior_meeting(cfg)


def square(labels, order=EDGE_TASK_ORDER):
    return LabeledSquare(tuple(labels), tuple(order))


class TestGuaranteedEdges:
    def test_published_five_square_instance(self):
        squares = [(2, 1, 1, 1), (2, 1, 2, 1), (2, 1, 3, 1), (2, 2, 1, 1), (2, 2, 2, 1)]
        expected = [[[1, 2], [0, 3]], [], [], [], [[0, 1]]]
        got = [guaranteed_edges(square(s)) for s in squares]
        assert got == expected

    def test_uniform_empty(self):
        assert guaranteed_edges(square((1, 1, 1, 1))) == []

    def test_checkerboard_ambiguous(self):
        assert guaranteed_edges(square((1, 2, 1, 2))) == []

    def test_relabel_invariance(self):
        rng = Stream(9, "edges")
        for _ in range(300):
            labels = tuple(rng.randint(1, 3) for _ in range(4))
            base = guaranteed_edges(square(labels))
            perm = {1: 7, 2: 5, 3: 9}
            assert guaranteed_edges(square(tuple(perm[l] for l in labels))) == base

    def test_lone_corner_first_position_includes_arc(self):
        # Lone corner listed first: majority whole-edge pair plus arc pair.
        assert guaranteed_edges(square((5, 2, 2, 2))) == [[1, 2], [0, 3]]

    def test_corner_order_variant(self):
        # Same geometric square presented in a rotated corner order.
        sq = square((1, 1, 1, 2), order=("top-right", "top-left", "bottom-left", "bottom-right"))
        # Lone corner: bottom-right, not first-listed -> whole edges only.
        assert guaranteed_edges(sq) == [[1, 2]]


class TestClassify:
    def test_single_contrast_known(self):
        for order in (EDGE_TASK_ORDER, ("top-right", "bottom-right", "bottom-left", "top-left")):
            assert classify_square(square((2, 1, 1, 1), order)) == KNOWN

    def test_checkerboard_ambiguous(self):
        assert classify_square(square((1, 2, 1, 2))) == AMBIGUOUS

    def test_three_classes_adjacent_pair_meets(self):
        sq = square((3, 2, 1, 1), order=("top-right", "bottom-right", "bottom-left", "top-left"))
        assert classify_square(sq) == THREE_DOMAINS

    def test_three_classes_diagonal_pair_ambiguous(self):
        assert classify_square(square((1, 2, 1, 3))) == AMBIGUOUS

    def test_four_distinct(self):
        assert classify_square(square((3, 2, 1, 4))) == THREE_DOMAINS


def minimal_tree_with(required_leaves, axis_cycle, dimension=None):
    """Smallest full binary tree containing the given paths as leaves."""
    internal = set()
    for leaf in required_leaves:
        for i in range(len(leaf)):
            internal.add(leaf[:i])
    leaves = set(required_leaves)
    for node in internal:
        for child in (node + "0", node + "1"):
            if child not in internal and child not in leaves:
                leaves.add(child)
    return build_subdivision(leaves, axis_cycle, dimension)


PAPER_CYCLE = ("x", "y", "y", "x", "x")
PAPER_TARGET = "01001000"
PAPER_NEIGHBORS = {"01000100", "01001100", "01001001", "00101011"}


class TestSubdivision:
    def test_single_split_extents(self):
        tree = build_subdivision({"0", "1"}, ("x", "y"))
        assert tree.leaf_extent("0") == ((Fraction(0), Fraction(1, 2)), (Fraction(0), Fraction(1)))
        assert tree.leaf_extent("1") == ((Fraction(1, 2), Fraction(1)), (Fraction(0), Fraction(1)))

    def test_depth_two_extent(self):
        tree = build_subdivision({"00", "01", "1"}, ("x", "y"))
        assert tree.leaf_extent("00") == (
            (Fraction(0), Fraction(1, 2)),
            (Fraction(0), Fraction(1, 2)),
        )

    def test_depth_eight_volume(self):
        tree = minimal_tree_with({PAPER_TARGET}, PAPER_CYCLE)
        box = tree.leaf_extent(PAPER_TARGET)
        vol = Fraction(1)
        for lo, hi in box:
            vol *= hi - lo
        assert vol == Fraction(1, 2 ** 8)

    def test_two_leaf_neighbors(self):
        tree = build_subdivision({"0", "1"}, ("x", "y"))
        assert leaf_neighbors(tree, "0") == {"1"}
        assert leaf_neighbors(tree, "1") == {"0"}

    def test_render_parse_roundtrip(self):
        tree = minimal_tree_with(PAPER_NEIGHBORS | {PAPER_TARGET}, PAPER_CYCLE)
        text = render_subdivision(tree)
        parsed = parse_subdivision(text, PAPER_CYCLE)
        assert parsed.leaves == tree.leaves

    def test_published_neighbor_set(self):
        tree = minimal_tree_with(PAPER_NEIGHBORS | {PAPER_TARGET}, PAPER_CYCLE)
        assert leaf_neighbors(tree, PAPER_TARGET) == PAPER_NEIGHBORS

    def test_unknown_leaf_rejected(self):
        tree = build_subdivision({"0", "1"}, ("x", "y"))
        with pytest.raises(TopoError):
            leaf_neighbors(tree, "00")

    def test_malformed_text_rejected(self):
        with pytest.raises(TopoError):
            parse_subdivision('""\n|---- 0\n', ("x", "y"))  # missing sibling "1"

    def test_leaf_volumes_sum_to_one(self):
        for seed in range(40):
            tree = _random_tree(seed, dims=2)
            total = Fraction(0)
            for leaf in tree.leaves:
                vol = Fraction(1)
                for lo, hi in tree.leaf_extent(leaf):
                    vol *= hi - lo
                total += vol
            assert total == 1

    def test_neighbor_symmetry(self):
        for seed in range(20):
            tree = _random_tree(seed, dims=3)
            for a in tree.leaves:
                for b in leaf_neighbors(tree, a):
                    assert a in leaf_neighbors(tree, b)

    def test_matches_raster_adjacency_oracle(self):
        # Independent oracle: rasterize the cube on a fine lattice, label
        # cells by leaf, then read adjacency off lattice neighbours.
        for seed in range(12):
            dims = 2 if seed % 2 == 0 else 3
            tree = _random_tree(seed, dims=dims, max_leaves=24, max_depth=6)
            oracle = _raster_adjacency(tree, dims)
            for leaf in tree.leaves:
                assert leaf_neighbors(tree, leaf) == oracle.get(leaf, set()), (seed, leaf)


def _random_tree(seed, dims=2, max_leaves=48, max_depth=8):
    cycle_pool = ["x", "y"] if dims == 2 else ["x", "y", "z"]
    rng = Stream(seed, "trees", dims)
    cycle = tuple(rng.choice(cycle_pool) for _ in range(rng.randint(2, 5)))
    if dims == 3 and "z" not in cycle:
        cycle = cycle + ("z",)
    leaves = {""}
    target = rng.randint(3, max_leaves)
    while len(leaves) < target:
        candidates = sorted(l for l in leaves if len(l) < max_depth)
        if not candidates:
            break
        pick = candidates[rng.randint(0, len(candidates) - 1)]
        leaves.remove(pick)
        leaves.update((pick + "0", pick + "1"))
    return build_subdivision(leaves, cycle, dims)


def _raster_adjacency(tree, dims):
    depth = max((len(l) for l in tree.leaves), default=0)
    res = 2 ** depth
    axes = [res] * dims

    def leaf_at(coords):
        path = ""
        while path not in tree.leaves:
            path_axis = tree.axis_cycle[len(path) % len(tree.axis_cycle)]
            ax = {"x": 0, "y": 1, "z": 2}[path_axis]
            box = tree.leaf_extent(path) if path in tree.nodes else None
            lo, hi = box[ax]
            mid = (lo + hi) / 2
            pos = Fraction(2 * coords[ax] + 1, 2 * res)
            path += "0" if pos < mid else "1"
        return path

    from itertools import product as iproduct

    label = {}
    for coords in iproduct(*(range(n) for n in axes)):
        label[coords] = leaf_at(coords)
    adj: dict[str, set[str]] = {}
    for coords, name in label.items():
        for ax in range(dims):
            nxt = list(coords)
            nxt[ax] += 1
            nxt = tuple(nxt)
            if nxt in label and label[nxt] != name:
                adj.setdefault(name, set()).add(label[nxt])
                adj.setdefault(label[nxt], set()).add(name)
    return adj
