"""Zero-initialized conditioning pathways are provably inert before training.

An untrained model run in temporal mode (with a prior and guidance inputs)
produces exactly the same noise prediction as the frame-wise spatial mode:
the prior stem and guidance MLPs start at zero, temporal convolutions at
identity, temporal attention output projections at zero.
"""
import numpy as np
import torch

from minivid import (DenoiserConfig, GuidanceConfig, build_motion_vector,
                     build_variation_matrix, init_denoiser, init_guidance)

model = init_denoiser(DenoiserConfig(), seed=0)
model.eval()
guidance = init_guidance(GuidanceConfig(), seed=1)

gen = torch.Generator().manual_seed(7)
z = torch.randn((1, 8, 16, 8, 8), generator=gen)
prior = 10.0 * torch.randn((1, 16, 8, 8), generator=gen)
t = torch.tensor([500])
ids = torch.tensor([[0, 1, 2, 0]])

with torch.no_grad():
    r_m = guidance.motion_embedding(build_motion_vector(450.0, 8))[None]
    r_a = guidance.appearance_embedding(build_variation_matrix(1.2, 8))[None]
    print(f"guidance embeddings at init: |r_m|_max = {r_m.abs().max():.1f}, "
          f"|r_a|_max = {r_a.abs().max():.1f}")

    out_temporal = model.forward_temporal(z, t, ids, prior, r_m, r_a)
    out_spatial = model.forward_spatial(z[0], t.expand(8), ids.expand(8, -1))

diff = (out_temporal[0] - out_spatial).abs().max()
print(f"max |temporal - frame-wise spatial| at init: {diff:.2e}")
print("the temporal pathway contributes nothing until training moves it")

with torch.no_grad():
    out_other_prior = model.forward_temporal(z, t, ids, -3.0 * prior, r_m, r_a)
print(f"prior sensitivity at init (should be 0): "
      f"{(out_temporal - out_other_prior).abs().max():.1f}")
