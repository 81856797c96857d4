"""End-to-end training on a tiny configuration (a few minutes on CPU).

Phase 1 pretrains the spatial layers on single frames; phase 2 interleaves
one image step with three video steps, training the temporal layers, the
prior stem, and the guidance MLPs.  The run is fully deterministic.
"""
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

from minivid import DenoiserConfig, GuidanceConfig, TrainConfig, build_dataset, train

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

data_dir = out / "tiny_dataset"
if not (data_dir / "manifest.json").exists():
    build_dataset(data_dir, clip_count=108, seed=0)

config = TrainConfig(
    dataset_dir=str(data_dir), out_dir=str(out / "tiny_run"),
    spatial_iterations=300, joint_iterations=500,
    denoiser=DenoiserConfig(base_width=16, emb_dim=64, sin_dim=32,
                            token_dim=32),
    guidance=GuidanceConfig(emb_dim=64, sin_dim=32),
    checkpoint_every=0, seed=0)
ckpt = train(config)

print(f"\ntrained {ckpt.iteration} steps")
print(f"prior stem now live: |stem_t|_max = "
      f"{float(ckpt.denoiser.stem_t.weight.abs().max()):.4f}")
print(f"motion MLP final layer now live: "
      f"{float(ckpt.guidance.motion_net[2].weight.abs().max()):.4f}")

log = (out / "tiny_run" / "losses.csv").read_text().strip().splitlines()[1:]
rows = [line.split(",") for line in log]
for mode, color in (("image", "tab:blue"), ("video", "tab:orange")):
    pts = [(int(it), float(loss)) for it, m, loss in rows if m == mode]
    if pts:
        xs, ys = zip(*pts)
        plt.plot(xs, np.convolve(ys, np.ones(25) / 25, mode="same"),
                 color=color, label=f"{mode} loss (smoothed)")
plt.xlabel("iteration")
plt.ylabel("epsilon-MSE")
plt.legend()
plt.tight_layout()
plt.savefig(out / "tiny_loss_curve.png", dpi=120)
print(f"wrote {out / 'tiny_loss_curve.png'}")
