#!/usr/bin/env python3
"""The point-cloud Q-network: configs, sizes, invariances and gradients."""
import warnings

import numpy as np

from pcsearch.env import new_episode
from pcsearch.gradcheck import run_gradcheck, summarize
from pcsearch.network import QNetwork, build_input, parse_config

# %% architecture strings
for text in ("Cs256s128h8", "Cs256s128h1", "Ss512s512h1", "Cs32h1", "Cs32h8", "Ss0s0h8"):
    cfg = parse_config(text)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        n = QNetwork(cfg).parameter_count()
    blocks = [(b.n_in, b.n_fps, b.k) for b in cfg.blocks()]
    print(f"{text:<12} {cfg.mode.name:<15} blocks {blocks}  params {n:,}",
          cfg.embedding_warnings() or "")

# Parameter shapes depend on F, the head count and the block count, never on
# how many points a block keeps, so Cs256s128h1 and Ss512s512h1 tie.

# %% one observation through a small network
net = QNetwork(parse_config("Cs32h2", feature_dim=32, neighbors_k=16, point_cap=512),
               dtype=np.float32)
world, obs = new_episode(5)
x = build_input(obs, 512)
dist = net.distribution(x)[0]
print("distribution shape", dist.shape, "row sums", dist.sum(-1).round(6))
print("Q values", net.q_values(x)[0].round(2))

# %% shuffling the points changes nothing
perm = np.random.default_rng(0).permutation(512)
print("max change under shuffle:", np.abs(net.distribution(x[perm])[0] - dist).max())

# %% finite-difference checks of every block (double precision, toy sizes)
for block, err in summarize(run_gradcheck()).items():
    print(f"{block:<34} {err:.2e}")
