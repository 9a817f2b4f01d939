"""Analytic reference solids: primitives under union/difference, queried
pointwise. These replace meshed reference geometry everywhere volume
scoring needs ground truth, so membership must be total, cheap and
vectorized."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .quat import Quaternion, RigidTransform


class SolidError(ValueError):
    pass


@dataclass(frozen=True)
class _Node:
    def contains(self, pts: np.ndarray) -> np.ndarray:  # pragma: no cover
        raise NotImplementedError

    def local_bounds(self) -> tuple[np.ndarray, np.ndarray]:  # pragma: no cover
        raise NotImplementedError


@dataclass(frozen=True)
class Primitive(_Node):
    placement: RigidTransform = field(default_factory=RigidTransform)

    def contains(self, pts: np.ndarray) -> np.ndarray:
        local = self.placement.inverse_apply(pts)
        return self._contains_local(local)

    def _contains_local(self, pts: np.ndarray) -> np.ndarray:  # pragma: no cover
        raise NotImplementedError

    def local_bounds(self):
        lo, hi = self._local_box()
        corners = np.array(
            [[x, y, z] for x in (lo[0], hi[0]) for y in (lo[1], hi[1]) for z in (lo[2], hi[2])]
        )
        world = self.placement.apply(corners)
        return world.min(axis=0), world.max(axis=0)

    def _local_box(self):  # pragma: no cover
        raise NotImplementedError


@dataclass(frozen=True)
class Box(Primitive):
    size: tuple[float, float, float] = (1.0, 1.0, 1.0)

    def _contains_local(self, pts):
        half = np.asarray(self.size) / 2.0
        return np.all(np.abs(pts) <= half, axis=-1)

    def _local_box(self):
        half = np.asarray(self.size) / 2.0
        return -half, half


@dataclass(frozen=True)
class Sphere(Primitive):
    radius: float = 1.0

    def _contains_local(self, pts):
        return np.einsum("...i,...i->...", pts, pts) <= self.radius**2

    def _local_box(self):
        r = np.array([self.radius] * 3)
        return -r, r


@dataclass(frozen=True)
class Hemisphere(Primitive):
    """Upper half-ball (z >= 0), the reference solid for shell tasks."""

    radius: float = 1.0

    def _contains_local(self, pts):
        inside = np.einsum("...i,...i->...", pts, pts) <= self.radius**2
        return inside & (pts[..., 2] >= 0.0)

    def _local_box(self):
        r = self.radius
        return np.array([-r, -r, 0.0]), np.array([r, r, r])


@dataclass(frozen=True)
class NGonPrism(Primitive):
    """Regular n-gon prism along Z; ``circumradius`` puts vertices on the
    circle, matching a coarsely faceted cylinder."""

    sides: int = 24
    circumradius: float = 1.0
    height: float = 1.0

    def _contains_local(self, pts):
        n = self.sides
        if n < 3:
            raise SolidError("prism needs at least 3 sides")
        apothem = self.circumradius * math.cos(math.pi / n)
        ok = np.abs(pts[..., 2]) <= self.height / 2.0
        x, y = pts[..., 0], pts[..., 1]
        for k in range(n):
            ang = (2 * k + 1) * math.pi / n
            ok &= x * math.cos(ang) + y * math.sin(ang) <= apothem + 1e-12
            if not ok.any():
                break
        return ok

    def _local_box(self):
        r = self.circumradius
        return np.array([-r, -r, -self.height / 2]), np.array([r, r, self.height / 2])


@dataclass(frozen=True)
class Cone(Primitive):
    """Linear-radius solid along Z, centered: r(-h/2) = r_base, r(+h/2) = r_top."""

    r_base: float = 1.0
    r_top: float = 0.0
    height: float = 1.0

    def _contains_local(self, pts):
        z = pts[..., 2]
        t = (z + self.height / 2.0) / self.height
        ok = (t >= 0.0) & (t <= 1.0)
        radius = self.r_base + (self.r_top - self.r_base) * t
        return ok & (np.hypot(pts[..., 0], pts[..., 1]) <= radius)

    def _local_box(self):
        r = max(self.r_base, self.r_top)
        return np.array([-r, -r, -self.height / 2]), np.array([r, r, self.height / 2])


@dataclass(frozen=True)
class Union(_Node):
    children: tuple[_Node, ...]

    def contains(self, pts):
        out = None
        for child in self.children:
            mask = child.contains(pts)
            out = mask if out is None else (out | mask)
        if out is None:
            raise SolidError("empty union")
        return out

    def local_bounds(self):
        los, his = zip(*(c.local_bounds() for c in self.children))
        return np.min(los, axis=0), np.max(his, axis=0)


@dataclass(frozen=True)
class Difference(_Node):
    base: _Node
    subtract: tuple[_Node, ...]

    def contains(self, pts):
        out = self.base.contains(pts)
        for child in self.subtract:
            out &= ~child.contains(pts)
        return out

    def local_bounds(self):
        return self.base.local_bounds()


@dataclass(frozen=True)
class ImplicitSolid:
    """Expression-tree solid with a total, deterministic membership query."""

    root: _Node

    def contains(self, pts: np.ndarray) -> np.ndarray:
        return self.root.contains(np.asarray(pts, dtype=float))

    def contains_point(self, x: float, y: float, z: float) -> bool:
        return bool(self.contains(np.array([[x, y, z]]))[0])

    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        return self.root.local_bounds()

    def contains_grid(self, xs: np.ndarray, ys: np.ndarray, zs: np.ndarray) -> np.ndarray:
        gx, gy, gz = np.meshgrid(xs, ys, zs, indexing="ij")
        pts = np.stack([gx, gy, gz], axis=-1)
        return self.contains(pts.reshape(-1, 3)).reshape(gx.shape)
