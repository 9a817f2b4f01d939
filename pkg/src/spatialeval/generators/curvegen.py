"""Sign-partition grids labelled by reference polynomials.

The reference region comes from a product of integer-coefficient quadrics
thresholded at zero, so a perfect score is achievable by construction and
the reference text passes the expression whitelist as-is.
"""

from __future__ import annotations

from ..numeric.exprsafe import classify_partition_score, compile_expr
from .rng import Stream


def _quadric(stream: Stream, size: int, scale: int) -> str:
    cx = stream.randint(size // 6, size - size // 6)
    cy = stream.randint(size // 6, size - size // 6)
    r = stream.randint(max(2, size // 5), max(3, size // 2)) * max(1, scale)
    a = stream.randint(1, 2 + scale)
    b = stream.randint(1, 2 + scale)
    return f"{a}*(x - {cx})**2 + {b}*(y - {cy})**2 - {r * r}"


def _linear(stream: Stream, size: int) -> str:
    a = stream.randint(1, 3)
    b = stream.randint(1, 3) * (1 if stream.randint(0, 1) else -1)
    c = stream.randint(size // 4, 3 * size // 4) * a
    return f"{a}*x + {b}*y - {c}" if b > 0 else f"{a}*x - {-b}*y - {c}"


def gen_curvefit_instance(stream: Stream, size: int, degree: int):
    """Grid of '#'/'.' labels plus the generating function text."""
    if degree < 2:
        raise ValueError("degree must be >= 2")
    for _ in range(200):
        factors = [_quadric(stream, size, k) for k in range(degree // 2)]
        if degree % 2:
            factors.append(_linear(stream, size))
        if len(factors) == 1:
            text = f"-({factors[0]})"  # inside the conic = positive
        else:
            text = "-(" + ")*(".join(factors) + ")"
        fn = compile_expr(text)
        rows = []
        hashes = 0
        for y in range(size):
            row = []
            for x in range(size):
                positive = fn(x, y) > 0
                hashes += positive
                row.append("#" if positive else ".")
            rows.append("".join(row))
        total = size * size
        if 0.1 * total <= hashes <= 0.9 * total:
            grid = rows
            assert classify_partition_score(fn, grid) == 1
            return {"size": size, "degree": degree, "grid": grid, "reference": text}
    raise RuntimeError("curve-fit sampling failed to converge")


def render_grid_ascii(grid: list[str]) -> str:
    return "\n".join(grid)


def render_grid_pbm(grid: list[str]) -> bytes:
    """Plain PBM bitmap: '#' cells are black pixels."""
    h = len(grid)
    w = len(grid[0])
    lines = [f"P1\n{w} {h}\n"]
    for row in grid:
        lines.append(" ".join("1" if c == "#" else "0" for c in row) + "\n")
    return "".join(lines).encode("ascii")
