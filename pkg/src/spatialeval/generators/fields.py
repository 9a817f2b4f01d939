"""Seeded scalar fields: multi-octave value-gradient noise for heightmap
instances, normalized to [0, 10]."""

from __future__ import annotations

import math

import numpy as np

from .rng import Stream

OCTAVES = 4
PERSISTENCE = 0.5


def _gradient_grid(stream: Stream, nx: int, ny: int) -> np.ndarray:
    grads = np.empty((nx, ny, 2))
    for i in range(nx):
        for j in range(ny):
            ang = stream.uniform(0.0, 2.0 * math.pi)
            grads[i, j] = (math.cos(ang), math.sin(ang))
    return grads


def _fade(t: np.ndarray) -> np.ndarray:
    return t * t * t * (t * (t * 6 - 15) + 10)


def _perlin_layer(stream: Stream, size: int, cells: int) -> np.ndarray:
    grads = _gradient_grid(stream, cells + 1, cells + 1)
    coords = np.linspace(0.0, cells, size, endpoint=False)
    xs, ys = np.meshgrid(coords, coords, indexing="ij")
    x0 = xs.astype(int)
    y0 = ys.astype(int)
    fx = xs - x0
    fy = ys - y0

    def dot_corner(ix, iy, ox, oy):
        g = grads[x0 + ix, y0 + iy]
        return g[..., 0] * (fx - ox) + g[..., 1] * (fy - oy)

    u = _fade(fx)
    v = _fade(fy)
    n00 = dot_corner(0, 0, 0.0, 0.0)
    n10 = dot_corner(1, 0, 1.0, 0.0)
    n01 = dot_corner(0, 1, 0.0, 1.0)
    n11 = dot_corner(1, 1, 1.0, 1.0)
    nx0 = n00 + u * (n10 - n00)
    nx1 = n01 + u * (n11 - n01)
    return nx0 + v * (nx1 - nx0)


def perlin_heightmap(size: int, stream: Stream) -> np.ndarray:
    """size x size heights in [0, 10], deterministic per stream."""
    total = np.zeros((size, size))
    amplitude = 1.0
    for octave in range(OCTAVES):
        cells = 2 ** (octave + 2)
        total += amplitude * _perlin_layer(stream.split("octave", octave), size, cells)
        amplitude *= PERSISTENCE
    lo, hi = float(total.min()), float(total.max())
    if hi - lo < 1e-12:
        return np.full((size, size), 5.0)
    return (total - lo) / (hi - lo) * 10.0
