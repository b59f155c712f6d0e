#!/usr/bin/env python3
"""Paired comparison of the one-step greedy oracle and a random walker.

Both agents run on the same seeded cylinder placements.  Twenty episodes
of 100 steps take about a minute on one core.
"""
import numpy as np

from pcsearch.env import EnvConfig
from pcsearch.evaluation import evaluate, evaluation_seeds, paired_comparison

seeds = evaluation_seeds(base=0, episodes=20)
env = EnvConfig()

greedy = evaluate("greedy", seeds, env, steps=100)
rnd = evaluate("random", seeds, env, steps=100)

# %% mean target+floor points along the episode, with the 95% band
for name, s in (("greedy", greedy), ("random", rnd)):
    m, hw = s.mean_curve, s.half_width_curve
    marks = [0, 10, 25, 50, 100]
    print(name.ljust(7), "  ".join(f"t{t}:{m[t]:6.1f}+/-{hw[t]:4.1f}" for t in marks))

# %% paired test on the final counts
c = paired_comparison(greedy.final_points, rnd.final_points)
print(f"greedy - random = {c.mean_difference:.1f} +/- {c.ci95_half_width:.1f}, "
      f"one-sided p = {c.p_value:.3g}")
print("episodes greedy won:", int(np.sum(greedy.final_points > rnd.final_points)), "/",
      len(seeds))
