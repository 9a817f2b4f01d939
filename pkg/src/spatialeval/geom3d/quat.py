"""Quaternion rotations and the 7-number rigid transform convention:
(x, y, z, q0, q1, q2, q3), rotation about the origin applied before the
translation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Accepted relative deviation of a "normalised" quaternion's norm.
NORM_TOLERANCE = 0.01


class InvalidRotationError(ValueError):
    pass


@dataclass(frozen=True)
class Quaternion:
    w: float
    x: float
    y: float
    z: float

    def norm(self) -> float:
        return math.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2)

    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def unit(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0 or not math.isfinite(n):
            raise InvalidRotationError("zero or non-finite quaternion")
        return Quaternion(self.w / n, self.x / n, self.y / n, self.z / n)

    def rotation_matrix(self) -> np.ndarray:
        """3x3 rotation matrix of the normalized quaternion."""
        q = self.unit()
        w, x, y, z = q.w, q.x, q.y, q.z
        return np.array(
            [
                [1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)],
                [2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)],
                [2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)],
            ]
        )

    @staticmethod
    def identity() -> "Quaternion":
        return Quaternion(1.0, 0.0, 0.0, 0.0)

    @staticmethod
    def from_axis_angle(axis, angle: float) -> "Quaternion":
        ax = np.asarray(axis, dtype=float)
        ax = ax / np.linalg.norm(ax)
        half = angle / 2.0
        s = math.sin(half)
        return Quaternion(math.cos(half), ax[0] * s, ax[1] * s, ax[2] * s)

    def compose(self, other: "Quaternion") -> "Quaternion":
        """Rotation equal to applying ``other`` first, then ``self``."""
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )


@dataclass(frozen=True)
class RigidTransform:
    translation: tuple[float, float, float] = (0.0, 0.0, 0.0)
    rotation: Quaternion = Quaternion.identity()

    @staticmethod
    def from_seven(values) -> "RigidTransform":
        vals = [float(v) for v in values]
        if len(vals) != 7:
            raise InvalidRotationError(f"rigid transform needs 7 numbers, got {len(vals)}")
        x, y, z, q0, q1, q2, q3 = vals
        return RigidTransform((x, y, z), Quaternion(q0, q1, q2, q3))

    def apply(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        rot = self.rotation.rotation_matrix()
        return pts @ rot.T + np.asarray(self.translation)

    def inverse_apply(self, points: np.ndarray) -> np.ndarray:
        pts = np.asarray(points, dtype=float) - np.asarray(self.translation)
        rot = self.rotation.rotation_matrix()
        return pts @ rot  # R^-1 = R^T
