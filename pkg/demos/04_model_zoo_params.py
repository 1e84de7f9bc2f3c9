"""The three compression networks and their parameter budgets across CRs."""
import numpy as np

from csilab.models.zoo import ARCHS, ModelSpec, build_model, count_params, encode, decode

# parameter count per architecture and compression ratio
print(f"{'CR':>4} {'K':>5} " + " ".join(f"{a:>16}" for a in ARCHS))
counts = {}
for cr in (4, 8, 16, 32):
    row = []
    for arch in ARCHS:
        spec = ModelSpec(arch, cr)
        model = build_model(spec, seed=0)
        counts[(arch, cr)] = count_params(model).total
        row.append(counts[(arch, cr)])
    print(f"{cr:>4} {ModelSpec('csinet', cr).codeword_len:>5} "
          + " ".join(f"{c:>16,}" for c in row))

# the budget shrinks by a fixed amount each time the CR doubles
for arch in ARCHS:
    deltas = [counts[(arch, cr)] - counts[(arch, 2 * cr)] for cr in (4, 8, 16)]
    print(f"{arch}: inter-CR deltas {deltas}")

# the attention block costs the same few hundred parameters at every CR
extra = [counts[("acnet", cr)] - counts[("convlstm_csinet", cr)] for cr in (4, 8, 16, 32)]
print("acnet attention overhead per CR:", extra)

# encode/decode round trip at the numpy level
spec = ModelSpec("acnet", 16)
model = build_model(spec, seed=0)
x = np.random.default_rng(0).random((2, spec.t, 2, spec.n, spec.m), dtype=np.float32)
code = encode(model, x)
recon = decode(model, code)
print("input", x.shape, "-> codewords", code.shape, "-> reconstruction", recon.shape)

# per-block breakdown for one model
for name, n in count_params(model).blocks.items():
    print(f"  {name:>14} {n:>9,}")
