from .implicit import Box, Cone, Difference, Hemisphere, ImplicitSolid, NGonPrism, Sphere, Union
from .lego import BrickUnion, LegoBrick, LegoReport, verify_lego_assembly
from .mesh import (
    MeshFormatError,
    MeshReport,
    MeshSampler,
    MeshSolid,
    NotWatertightError,
    make_box_mesh,
    make_icosphere,
    mesh_validate,
    point_in_mesh,
)
from .occlusion import HideSeekResult, person_occluded, verify_hide_and_seek
from .quat import InvalidRotationError, Quaternion, RigidTransform
from .tetra import (
    CANONICAL_VERTICES,
    TARGET_NAMES,
    ShadowScore,
    TetraInstance,
    make_target,
    shadow_coverage_score,
    tetra_pair_intersect,
    transform_tetra,
)
from .volume import EmptySolid, VolumeComparison, volume_compare

__all__ = [
    "Box", "Cone", "Difference", "Hemisphere", "ImplicitSolid", "NGonPrism", "Sphere", "Union",
    "BrickUnion", "LegoBrick", "LegoReport", "verify_lego_assembly",
    "MeshFormatError", "MeshReport", "MeshSampler", "MeshSolid", "NotWatertightError",
    "make_box_mesh", "make_icosphere", "mesh_validate", "point_in_mesh",
    "HideSeekResult", "person_occluded", "verify_hide_and_seek",
    "InvalidRotationError", "Quaternion", "RigidTransform",
    "CANONICAL_VERTICES", "TARGET_NAMES", "ShadowScore", "TetraInstance",
    "make_target", "shadow_coverage_score", "tetra_pair_intersect", "transform_tetra",
    "EmptySolid", "VolumeComparison", "volume_compare",
]
