"""Time-correlated channel sequences: the first-order Markov recursion."""
import numpy as np

from csilab.geometry import ChannelConfig
from csilab.temporal import SequenceConfig, generate_sequence, to_real_tensor

chan = ChannelConfig()

# beta = 1 - alpha^2 weights the previous frame, gamma = alpha^2 the innovation
for alpha in (0.1, 0.5, 0.9):
    seq = SequenceConfig(alpha=alpha, sigma=1e-3, t=4)
    print(f"alpha={alpha}: beta={seq.beta:.2f} gamma={seq.gamma:.2f}")

seq_cfg = SequenceConfig(alpha=0.1, sigma=1e-3, t=4)
seq = generate_sequence(chan, seq_cfg, seed=7)
print("frames:", seq.frames.shape, seq.frames.dtype)

# small alpha means strong correlation: consecutive frames barely move
diffs = [np.linalg.norm(seq.frames[t] - seq.frames[t - 1]) / np.linalg.norm(seq.frames[t - 1])
         for t in range(1, seq_cfg.t)]
print("relative frame-to-frame change at alpha=0.1:", [f"{d:.4f}" for d in diffs])

# at alpha=0.9 the innovation dominates and frames decorrelate quickly
fast = generate_sequence(chan, SequenceConfig(alpha=0.9, sigma=1e-3, t=4), seed=7)
diffs = [np.linalg.norm(fast.frames[t] - fast.frames[t - 1]) / np.linalg.norm(fast.frames[t - 1])
         for t in range(1, 4)]
print("relative frame-to-frame change at alpha=0.9:", [f"{d:.4f}" for d in diffs])

# networks consume stacked real/imag parts: (T, 2, N, M)
x = to_real_tensor(seq)
print("real tensor for the networks:", x.shape, x.dtype)
assert np.allclose(x[:, 0] + 1j * x[:, 1], seq.frames)
