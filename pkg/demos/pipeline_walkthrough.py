"""From a drone mesh to an evaluated pose network, on a few dozen frames.

Run with ``python3 demos/pipeline_walkthrough.py [outdir]``; it takes a couple
of minutes on one core and writes everything under ``outdir`` (default
``walkthrough/``). The network is far too small-data to be accurate: the
point is to see every stage once.
"""
# %%
import sys
from pathlib import Path

import numpy as np

from spadpose.dataset import Dataset, generate_dataset, split
from spadpose.drones import build_model
from spadpose.evaluate import eval_orientation, report_orientation, write_report
from spadpose.geometry import Pose, cyclic_error
from spadpose.networks import NetworkHead
from spadpose.plotting import plot_polar_error
from spadpose.render import export_debug_images, place_drone, render, sample_light
from spadpose.sensor import sensorize
from spadpose.train import TrainConfig, train

out = Path(sys.argv[1] if len(sys.argv) > 1 else "walkthrough")
out.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(0)

# %% the two drone archetypes are procedural triangle meshes
for letter in "ab":
    mesh = build_model(letter)
    classes = np.bincount(mesh.triangle_class, minlength=4)[1:]
    print(f"drone {letter}: {len(mesh.triangles)} triangles, body/engine/camera {classes.tolist()}")

# %% render one frame and turn it into sensor data
mesh = build_model("a")
pose = Pose(yaw_deg=30.0, pitch_deg=100.0, roll_deg=170.0)
world, camera, position = place_drone(mesh, pose, rng)
frame = render(world, camera, sample_light(rng))
print(f"drone at {position.round(2)} m covers {frame.valid.sum()} of {frame.valid.size} pixels")
print("debug images:", *export_debug_images(frame, out / "frame"))

sensor = sensorize(frame, rng)
hist = sensor.depth_hist
print(f"photon counts: total {sensor.intensity_counts.sum()}, max {sensor.intensity_counts.max()}")
print(f"depth histogram {hist.shape}, window starts at {sensor.window_start:.3f} m")
print("returns per time bin:", hist.sum(axis=(0, 1)).tolist())

# %% the angular error wraps around the circle
print("error between 350 and 10 degrees:", cyclic_error(350, 10))

# %% a small dataset, generated reproducibly from one master seed
path = generate_dataset("a", "full", 48, master_seed=7, path=out / "tiny.dpc", workers=2)
data = Dataset.open(path)
print(f"{len(data)} samples in {path} ({path.stat().st_size / 1e6:.1f} MB)")

# %% train a yaw network for a few epochs
train_set, test_set = split(data, 0.25, seed=0)
config = TrainConfig(task="yaw", drone="a", batch_size=8, lr=5e-4, max_epochs=3, patience=3)
result = train(config, train_set, test_set)
for h in result.history:
    print(f"epoch {h.epoch}: train loss {h.train_loss:.0f}, test accuracy {h.test_metric:.1f}%")

# %% evaluate and chart the per-sample errors
res = eval_orientation(NetworkHead(result.net), test_set, "yaw")
report = report_orientation("a-yaw", res)
write_report(report, out / "report.tsv")
print(f"yaw accuracy {res.accuracy.mean:.1f} +- {res.accuracy.std:.1f}%")
print("chart:", plot_polar_error(report, out / "yaw_errors.svg"))
