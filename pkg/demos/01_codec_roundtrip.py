"""The pixel<->latent codec is exactly invertible.

Encodes a rendered sprite frame into the 8x8x16 latent grid, decodes it
back, and reports the round-trip error (float32 noise, ~1e-7).
"""
from pathlib import Path

import numpy as np

from minivid import PatchCodec, PromptSpec, generate_clip
from minivid.media import save_frame_strip

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

codec = PatchCodec()
clip = generate_clip(PromptSpec("circle", "right", "slow", "constant"), seed=3)

latent = codec.encode_video(clip)
back = codec.decode_video(latent)

print(f"pixels  : {clip.shape}  range [{clip.min():+.2f}, {clip.max():+.2f}]")
print(f"latents : {latent.shape}  rms {np.sqrt(np.mean(latent ** 2)):.4f} "
      f"(pixel rms {np.sqrt(np.mean(clip ** 2)):.4f} -- norm preserved)")
print(f"round-trip max error: {np.abs(back - clip).max():.2e}")

m = codec.matrix
print(f"codec matrix orthonormality |MM^T - I|_max: "
      f"{np.abs(m @ m.T - np.eye(16)).max():.2e}")

save_frame_strip(clip, out / "codec_original.png")
save_frame_strip(back, out / "codec_roundtrip.png")
print(f"wrote {out / 'codec_original.png'} and {out / 'codec_roundtrip.png'}")
