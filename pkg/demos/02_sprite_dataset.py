"""Procedural sprite clips and binary dataset shards.

Renders one clip per appearance class, writes frame strips, then builds a
small dataset directory and inspects its manifest.
"""
import json
from pathlib import Path

import numpy as np

from minivid import PromptSpec, SpriteDataset, build_dataset, generate_clip
from minivid.media import save_frame_strip, save_gif

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

for appearance in ("constant", "fade", "morph"):
    spec = PromptSpec("triangle", "right", "fast", appearance)
    clip = generate_clip(spec, seed=4)
    save_frame_strip(clip, out / f"sprite_{appearance}.png")
    save_gif(clip, out / f"sprite_{appearance}.gif")
    diffs = np.abs(np.diff(clip, axis=0)).mean()
    print(f"{spec}: mean |frame diff| {diffs:.4f}")

ds_dir = out / "demo_dataset"
manifest = build_dataset(ds_dir, clip_count=24, seed=1)
print(f"\nwrote {manifest.clip_count} clips to {ds_dir}")
raw = json.loads((ds_dir / "manifest.json").read_text())
print(f"manifest keys: {sorted(raw)}")
print(f"first clip record: {raw['clips'][0]}")

ds = SpriteDataset(ds_dir)
clip = ds.clip(5)
print(f"clip 5 spec={ds.spec(5)} shape={clip.shape} dtype={clip.dtype}")
