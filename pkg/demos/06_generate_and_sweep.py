"""Two-stage generation and factor control on the reference checkpoint.

Needs the trained reference run (see README: `python -m tests.acceptance`
or `pytest tests/test_acceptance.py`); falls back to a short fresh
training if it is missing.  Shows how the motion factor steers movement
and the appearance factor steers semantic drift at a fixed prompt.
"""
from pathlib import Path

import numpy as np

from minivid import (Checkpoint, PromptSpec, SpriteDataset, generate,
                     generate_from_prior)
from minivid.media import save_frame_strip, save_gif
from minivid.metrics import mean_frame_diff, appearance_spread

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

ref = Path(__file__).parent.parent / "runs" / "reference"
if not (ref / "ckpt" / "manifest.json").exists():
    raise SystemExit(f"no reference checkpoint under {ref}; run the "
                     "acceptance suite first (see README)")
ckpt = Checkpoint.load(ref / "ckpt")
prompt = PromptSpec("circle", "right", "slow", "constant")

print("motion factor sweep (gamma_a = 0):")
for gamma_m in (50.0, 150.0, 300.0):
    video = generate(ckpt, prompt, gamma_m, 0.0, seed=5,
                     temporal_null_fields=("speed", "appearance"))
    tag = f"gen_m{gamma_m:.0f}"
    save_gif(video, out / f"{tag}.gif")
    save_frame_strip(video, out / f"{tag}.png")
    print(f"  gamma_m={gamma_m:5.0f}: mean frame diff "
          f"{mean_frame_diff(video):.4f}")

print("\nappearance factor sweep (gamma_m = 150):")
for gamma_a in (0.0, 0.5, 1.0):
    video = generate(ckpt, prompt, 150.0, gamma_a, seed=5,
                     temporal_null_fields=("speed", "appearance"))
    tag = f"gen_a{gamma_a:.1f}"
    save_gif(video, out / f"{tag}.gif")
    print(f"  gamma_a={gamma_a:.1f}: measured appearance spread "
          f"{appearance_spread(video):.3f}")

print("\nsame spatial prior, different motion prompts:")
dataset = SpriteDataset(ref / "dataset")
prior = ckpt.codec.encode_frame(dataset.clip(0)[0])
for direction in ("right", "up"):
    p = PromptSpec(dataset.spec(0).shape, direction, "fast", "constant")
    video = generate_from_prior(ckpt, prior, p, 300.0, 0.2, seed=9)
    save_gif(video, out / f"prior_{direction}.gif")
print(f"wrote GIFs under {out}")
