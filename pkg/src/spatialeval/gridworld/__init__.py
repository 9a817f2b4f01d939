from .hamilton import HamiltonVerdict, solve_hamiltonian, verify_hamiltonian
from .maze import MazeReport, maze_moves, parse_maze, verify_maze
from .packing import (
    PackVerdict,
    PrismClass,
    greedy_pack_reference,
    perfect_packing_feasible,
    total_volume,
    verify_packing,
)
from .pipeloop import GEOM_TOL, PipeConstraints, PipeVerdict, verify_pipe_loop
from .shikaku import ShikakuVerdict, verify_shikaku
from .snake import SnakeConfig, SnakeResult, serpentine_path, verify_snake
from .terrain import largest_city, terrain_score
from .voxelproj import (
    ProjectionReport,
    apply_cube_transform,
    octahedral_transforms,
    verify_voxel_projection,
)
from .voxelworld import (
    AIR,
    ROCK,
    WATER,
    EarthworksError,
    EarthworksOp,
    RainReport,
    VoxelWorld,
    WaterReport,
    analyze_water,
    apply_earthworks,
    default_rain_schedule,
    simulate_rain,
    verify_fluid_target,
)

__all__ = [
    "HamiltonVerdict", "solve_hamiltonian", "verify_hamiltonian",
    "MazeReport", "maze_moves", "parse_maze", "verify_maze",
    "PackVerdict", "PrismClass", "greedy_pack_reference",
    "perfect_packing_feasible", "total_volume", "verify_packing",
    "GEOM_TOL", "PipeConstraints", "PipeVerdict", "verify_pipe_loop",
    "ShikakuVerdict", "verify_shikaku",
    "SnakeConfig", "SnakeResult", "serpentine_path", "verify_snake",
    "largest_city", "terrain_score",
    "ProjectionReport", "apply_cube_transform", "octahedral_transforms",
    "verify_voxel_projection",
    "AIR", "ROCK", "WATER", "EarthworksError", "EarthworksOp", "RainReport",
    "VoxelWorld", "WaterReport", "analyze_water", "apply_earthworks",
    "default_rain_schedule", "simulate_rain", "verify_fluid_target",
]
