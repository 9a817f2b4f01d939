import numpy as np
import pytest

from spatialeval.generators.rng import Stream
from spatialeval.gridworld import (
    AIR,
    ROCK,
    WATER,
    EarthworksError,
    EarthworksOp,
    VoxelWorld,
    analyze_water,
    apply_earthworks,
    default_rain_schedule,
    simulate_rain,
    verify_fluid_target,
)


def ring_world():
    world = VoxelWorld(9, 8, rock_layers=3)
    ops = [
        EarthworksOp((2, 2, 3), (6, 6, 3), ROCK),
        EarthworksOp((3, 3, 3), (5, 5, 3), AIR),
    ]
    return apply_earthworks(world, ops)


class TestEarthworks:
    def test_ring_of_rock_left_at_z3(self):
        world = ring_world()
        ring = world.grid[:, :, 3]
        assert ring[2, 2] == ROCK and ring[2, 6] == ROCK and ring[4, 2] == ROCK
        assert ring[4, 4] == AIR
        assert ring[1, 1] == AIR

    def test_empty_ops_identity(self):
        world = VoxelWorld(9)
        out = apply_earthworks(world, [])
        assert np.array_equal(world.grid, out.grid)

    def test_out_of_bounds_rejected(self):
        world = VoxelWorld(9)
        with pytest.raises(EarthworksError):
            apply_earthworks(world, [EarthworksOp((0, 0, 0), (9, 0, 0), ROCK)])

    def test_floating_box_falls_to_surface(self):
        world = VoxelWorld(9)
        out = apply_earthworks(world, [EarthworksOp((3, 3, 6), (4, 4, 6), ROCK)])
        assert (out.grid[3:5, 3:5, 3] == ROCK).all()
        assert (out.grid[3:5, 3:5, 6] == AIR).all()

    def test_connected_overhang_stays(self):
        world = VoxelWorld(9)
        ops = [
            EarthworksOp((0, 0, 3), (0, 0, 6), ROCK),   # pillar
            EarthworksOp((0, 0, 6), (4, 0, 6), ROCK),   # cantilever off the pillar
        ]
        out = apply_earthworks(world, ops)
        assert out.grid[4, 0, 6] == ROCK

    def test_json_parse(self):
        op = EarthworksOp.from_json({"xyzMin": [2, 2, 3], "xyzMax": [6, 6, 3], "material": "Rock"})
        assert op.material == ROCK
        with pytest.raises(EarthworksError):
            EarthworksOp.from_json({"xyzMin": [2, 2, 3], "xyzMax": [1, 2, 3], "material": "Air"})


class TestRain:
    def test_flat_world_all_runs_off(self):
        world = VoxelWorld(9)
        out, report = simulate_rain(world, [(4, 4)] * 30)
        assert report.retained == 0
        assert report.drained == 30
        assert out.water_count() == 0

    def test_ring_captures_exactly_nine(self):
        out, report = simulate_rain(ring_world(), [(4, 4)] * 20)
        assert report.retained == 9
        assert report.drained == 11
        assert out.water_count() == 9
        assert (out.grid[3:6, 3:6, 3] == WATER).all()

    def test_single_cell_pit_retains_one(self):
        world = VoxelWorld(9)
        carved = apply_earthworks(world, [EarthworksOp((4, 4, 2), (4, 4, 2), AIR)])
        out, report = simulate_rain(carved, [(4, 4)] * 5)
        assert report.retained == 1
        assert out.grid[4, 4, 2] == WATER

    def test_bottom_contact_drains(self):
        world = VoxelWorld(9)
        shaft = apply_earthworks(world, [EarthworksOp((4, 4, 0), (4, 4, 2), AIR)])
        _, report = simulate_rain(shaft, [(4, 4)] * 3)
        assert report.retained == 0

    def test_conservation_fuzz(self):
        for seed in range(120):
            rng = Stream(seed, "fluid-fuzz")
            world = VoxelWorld(7 + 2 * rng.randint(0, 2))
            ops = []
            for _ in range(rng.randint(0, 5)):
                x0 = rng.randint(0, world.w - 2)
                y0 = rng.randint(0, world.w - 2)
                z0 = rng.randint(1, world.h - 2)
                ops.append(
                    EarthworksOp(
                        (x0, y0, z0),
                        (min(world.w - 1, x0 + rng.randint(0, 3)),
                         min(world.w - 1, y0 + rng.randint(0, 3)),
                         min(world.h - 1, z0 + rng.randint(0, 1))),
                        ROCK if rng.randint(0, 1) else AIR,
                    )
                )
            shaped = apply_earthworks(world, ops)
            drops = default_rain_schedule(world.w, 40, rng.split("rain"))
            out, report = simulate_rain(shaped, drops)
            assert report.retained + report.drained == 40, seed
            assert out.water_count() == report.retained, seed

    def test_rain_idempotent_with_empty_schedule(self):
        out, _ = simulate_rain(ring_world(), [(4, 4)] * 20)
        again, report = simulate_rain(out, [])
        assert report.total == 0
        assert np.array_equal(out.grid, again.grid)


class TestWaterAnalysis:
    def test_ring_pool_metrics(self):
        out, _ = simulate_rain(ring_world(), [(4, 4)] * 20)
        report = analyze_water(out)
        assert len(report.bodies) == 1
        body = report.bodies[0]
        assert body.volume == 9
        assert body.surface_z == 3
        assert body.surface_area == 9
        assert body.depth == 1
        assert body.visible_from_above
        assert body.has_2x2_layer

    def test_empty_world_has_no_bodies(self):
        report = analyze_water(VoxelWorld(9))
        assert report.bodies == []
        assert report.total == 0

    def test_ring_shape_detection(self):
        # Water ring around a dry 3x3 centre: two-voxel walls keep the
        # moat from overtopping before it fills all the way around.
        world = VoxelWorld(11)
        ops = [
            EarthworksOp((1, 1, 3), (9, 9, 4), ROCK),   # platform walls
            EarthworksOp((2, 2, 3), (8, 8, 4), AIR),    # moat channel
            EarthworksOp((4, 4, 3), (6, 6, 4), ROCK),   # dry island
        ]
        shaped = apply_earthworks(world, ops)
        out, _ = simulate_rain(shaped, [(3, 5)] * 60)
        report = analyze_water(out)
        assert any(b.is_ring for b in report.bodies)
        assert verify_fluid_target(report, 8)


class TestFluidTargets:
    def test_target_one_surface_area(self):
        world = VoxelWorld(13)
        ops = [
            EarthworksOp((2, 2, 3), (10, 10, 3), ROCK),
            EarthworksOp((3, 3, 3), (9, 9, 3), AIR),  # 7x7 basin interior
        ]
        shaped = apply_earthworks(world, ops)
        out, _ = simulate_rain(shaped, [(6, 6)] * 60)
        report = analyze_water(out)
        assert verify_fluid_target(report, 1)

    def test_target_four_fails_when_visible(self):
        out, _ = simulate_rain(ring_world(), [(4, 4)] * 20)
        report = analyze_water(out)
        assert not verify_fluid_target(report, 4)

    def test_target_ten_exactness(self):
        world = VoxelWorld(9)
        pit = apply_earthworks(world, [EarthworksOp((2, 2, 2), (4, 4, 2), AIR)])
        out, _ = simulate_rain(pit, [(3, 3)] * 40)
        report = analyze_water(out)
        assert report.total == 9
        assert not verify_fluid_target(report, 10)

    def test_unknown_target_rejected(self):
        with pytest.raises(ValueError):
            verify_fluid_target(analyze_water(VoxelWorld(9)), 12)
