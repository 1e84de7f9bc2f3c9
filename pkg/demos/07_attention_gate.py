"""Inside the attention block: per-feature-map gating along the time axis."""
import numpy as np
import torch

from csilab.models.zoo import ModelSpec, build_model, attention_gate

spec = ModelSpec("acnet", 16)
model = build_model(spec, seed=0)
model.eval()

# pull the depthwise-separable feature maps out of the attention block
x = torch.rand(1, spec.t, 2, spec.n, spec.m)
with torch.no_grad():
    maps = model.attention.feature_maps(x)  # (1, J, T, H, W)
print("feature maps:", tuple(maps.shape[1:]), "(J, T, H, W)")

# the gate is one sigmoid weight per (frame, map); numpy-level helper
np_maps = maps[0].permute(1, 2, 3, 0).numpy()  # (T, H, W, J)
scaled, gate = attention_gate(model, np_maps)
print("gate shape:", gate.shape, " range [%.3f, %.3f]" % (gate.min(), gate.max()))

# gating is a per-map rescale, nothing else
assert np.allclose(scaled, np_maps * gate, atol=1e-6)
print("scaled maps equal maps * gate")

# decode with and without the gate: same pipeline, attention switchable
s = torch.rand(1, spec.t, spec.codeword_len)
with torch.no_grad():
    gated = model.decode(s)
    plain = model.decode(s, use_gate=False)
print("decoder output with gate vs without: mean abs difference %.3e"
      % float(torch.mean(torch.abs(gated - plain))))
