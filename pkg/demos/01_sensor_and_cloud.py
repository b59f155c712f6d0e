#!/usr/bin/env python3
"""Walk through one episode of the search environment.

Run with ``python3 demos/01_sensor_and_cloud.py``; it writes a few PLY
snapshots to ``runs/demo_sensor`` for an external point-cloud viewer.
"""
from pathlib import Path

import numpy as np

from pcsearch.env import Action, EnvConfig, coverage_metrics, legal_actions, new_episode, step
from pcsearch.geometry import Label, write_ply

out = Path("runs/demo_sensor")
out.mkdir(parents=True, exist_ok=True)

# %% a fresh episode: 13x13 room, two cylinders, agent somewhere free
cfg = EnvConfig()
world, obs = new_episode(seed=3, config=cfg)
print("start pose:", world.pose)
print("cylinders at", [c.center for c in world.cylinders])
print("initial scan:", coverage_metrics(world))

# %% the sensor sees walls, floor and (maybe) targets; the cloud is voxel filtered,
# so scanning the same view twice adds nothing
before = len(world.cloud)
outcome, obs = step(world, Action.ROTATE_CW)
outcome, obs = step(world, Action.ROTATE_CCW)
print(f"points after turning away and back: {before} -> {len(world.cloud)}, "
      f"last reward {outcome.reward}")

# %% a short scripted walk; rewards count new target + floor points only
rng = np.random.default_rng(0)
for t in range(12):
    a = legal_actions(world)[int(rng.integers(len(legal_actions(world))))]
    outcome, obs = step(world, a)
    cov = coverage_metrics(world)
    print(f"t={t:2d} {a.name:<12} reward {outcome.reward:3d}  |T|={cov.target_points:3d} "
          f"|F|={cov.floor_points:3d} |W|={cov.wall_points:3d}")
    if t % 4 == 3:
        write_ply(out / f"cloud_t{t:02d}.ply", world.cloud)

# %% class make-up of the accumulated cloud
counts = world.cloud.counts()
print({Label(k).name: v for k, v in counts.items()}, "total", len(world.cloud),
      "cap", cfg.point_cap)
