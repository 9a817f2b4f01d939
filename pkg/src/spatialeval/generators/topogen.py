"""Instances for the corner-label and subdivision-tree families."""

from __future__ import annotations

from ..topo import (
    CORNERS_CCW,
    LabeledSquare,
    build_subdivision,
    classify_square,
    enumerate_forcing_configs,
    guaranteed_edges,
    leaf_neighbors,
    render_subdivision,
)
from .rng import Stream

#: Corner-order presentations cycled across subtasks.
CORNER_ORDERS = (
    ("bottom-right", "top-right", "top-left", "bottom-left"),
    ("bottom-left", "bottom-right", "top-right", "top-left"),
    ("top-right", "bottom-right", "bottom-left", "top-left"),
    ("top-left", "top-right", "bottom-right", "bottom-left"),
)

AXIS_CYCLES_2D = (
    ("x", "y"),
    ("y", "x"),
    ("x", "y", "y", "x", "x"),
    ("x", "x", "y"),
    ("y", "y", "x", "y"),
)
AXIS_CYCLES_3D = (
    ("z", "y", "x"),
    ("x", "y", "z"),
    ("x", "x", "y", "z"),
    ("z", "y", "x", "x", "z", "z", "y", "x", "z"),
    ("y", "y", "x", "y", "z"),
)


def gen_enum_instance(n_classes: int, corner_order):
    truth = sorted(enumerate_forcing_configs(n_classes))
    return {
        "n_classes": n_classes,
        "corner_order": list(corner_order),
        "truth": [list(t) for t in truth],
    }


def _sample_square_labels(stream: Stream, max_classes: int) -> tuple[int, ...]:
    # Mix of contrasts; uniform squares stay rare but legal.
    while True:
        labels = tuple(stream.randint(1, max_classes) for _ in range(4))
        if stream.uniform() < 0.9 and len(set(labels)) == 1:
            continue
        return labels


def gen_edges_instance(stream: Stream, n_squares: int, corner_order, max_classes: int = 3):
    squares = [_sample_square_labels(stream, max_classes) for _ in range(n_squares)]
    truth = [
        guaranteed_edges(LabeledSquare(sq, tuple(corner_order))) for sq in squares
    ]
    return {
        "squares": [list(sq) for sq in squares],
        "corner_order": list(corner_order),
        "truth": truth,
    }


def gen_classify_instance(stream: Stream, n_squares: int, corner_order, max_classes: int = 4):
    squares = [_sample_square_labels(stream, max_classes) for _ in range(n_squares)]
    truth = [classify_square(LabeledSquare(sq, tuple(corner_order))) for sq in squares]
    return {
        "squares": [list(sq) for sq in squares],
        "corner_order": list(corner_order),
        "truth": truth,
    }


def gen_subdivision_instance(stream: Stream, dimension: int, cycle, max_depth: int, leaf_target: int):
    leaves = {""}
    while len(leaves) < leaf_target:
        candidates = sorted(l for l in leaves if len(l) < max_depth)
        if not candidates:
            break
        # Bias toward splitting deep leaves so trees are lopsided like the
        # presented ones.
        weights = [(len(l) + 1) for l in candidates]
        total = sum(weights)
        pick = stream.randint(1, total)
        acc = 0
        for leaf, w in zip(candidates, weights):
            acc += w
            if pick <= acc:
                chosen = leaf
                break
        leaves.remove(chosen)
        leaves.update((chosen + "0", chosen + "1"))

    tree = build_subdivision(leaves, cycle, dimension)
    deep = sorted(tree.leaves, key=lambda l: (-len(l), l))
    target = deep[stream.randint(0, max(0, min(len(deep) - 1, 5)))]
    truth = sorted(leaf_neighbors(tree, target))
    return {
        "dimension": dimension,
        "axis_cycle": list(cycle),
        "tree_text": render_subdivision(tree),
        "leaves": sorted(tree.leaves),
        "target": target,
        "truth": truth,
    }
