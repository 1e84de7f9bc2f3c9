"""Cascaded RIS channel geometry: steering vectors, per-hop matrices, rank."""
import numpy as np

from csilab.geometry import (
    ChannelConfig, make_rng, realize_channel, ula_steering, upa_steering,
)

cfg = ChannelConfig()
print("BS antennas M =", cfg.m, " RIS elements N =", cfg.n, f"({cfg.n1}x{cfg.n2})")

# a steering vector is just unit-magnitude phasors; check the norm
v = ula_steering(0.23, cfg.m)
print("ULA steering: shape", v.shape, " norm", np.linalg.norm(v))

# the planar-array vector is the kron of a horizontal and a vertical ULA
u = upa_steering(0.1, -0.3, cfg.n1, cfg.n2)
assert np.allclose(u, np.kron(ula_steering(0.1, cfg.n1), ula_steering(-0.3, cfg.n2)))
print("UPA steering: shape", u.shape, " kron structure confirmed")

# one full realization: BS-RIS matrix H, RIS-user vector h, cascade G
rng = make_rng(1234)
real = realize_channel(cfg, rng)
print("H (RIS x BS):", real.bs_ris.shape)
print("h (RIS):", real.ris_user.shape)
print("G = diag(h^H) H:", real.cascaded.shape)

# each hop is a sum of L paths, so the matrix rank is at most L
print("rank(H) =", np.linalg.matrix_rank(real.bs_ris), " (L1 =", cfg.l1, "paths)")

# row i of G is h_i^* times row i of H
i = 5
assert np.allclose(real.cascaded[i], np.conj(real.ris_user[i]) * real.bs_ris[i])
print("row structure of the cascade verified")

# same seed, same channel
again = realize_channel(cfg, make_rng(1234))
assert np.array_equal(again.cascaded, realize_channel(cfg, make_rng(1234)).cascaded)
print("counter-based RNG reproduces the realization bit-for-bit")
