#!/usr/bin/env python3
"""A tiny training run in the reduced 7x7 room, then a paired evaluation.

This is not expected to beat the random walker; it shows the moving parts
(warm-up, epsilon decay, illegal-move storage, smoothed curve).
"""
import numpy as np

from pcsearch.env import EnvConfig
from pcsearch.evaluation import evaluate, evaluation_seeds
from pcsearch.network import save_checkpoint
from pcsearch.trainer import Trainer, TrainerConfig

env = EnvConfig.reduced()
cfg = TrainerConfig(network="Cs32h2", feature_dim=16, neighbors_k=12, v_max=100,
                    episodes=15, warmup=300, epsilon_horizon=800, target_sync=200,
                    replay_capacity=5000)
tr = Trainer(cfg, env)
print("parameters:", tr.online.parameter_count())
res = tr.train(progress=lambda r: print(f"ep {r['episode']:2d} return {r['return']:3d} "
                                        f"eps {r['epsilon']:.2f} loss {r['loss_mean']:.3f}"))
print("illegal attempts stored:", res.illegal_attempts,
      "flagged in buffer:", sum(t.illegal for t in tr.buffer.items))
print("smoothed curve tail:", np.round(res.smoothed[-3:], 2))

# %% evaluate the greedy policy of the network on shared seeds
save_checkpoint("runs/demo_policy.npz", tr.online)
seeds = evaluation_seeds(1, 10)
rl = evaluate("runs/demo_policy.npz", seeds, env)
rnd = evaluate("random", seeds, env)
print(f"mean return: network {rl.returns.mean():.1f}, random {rnd.returns.mean():.1f}")
