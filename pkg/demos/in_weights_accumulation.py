"""
In-weights accumulation on Memory Sequence
==========================================

Each generation trains fresh networks on one fixed 10-digit sequence.  From
generation 2 on, the previous generation acts next to the learner and is
visible with a probability annealed from 1 to 0 over training.  We compare
the best member of each generation with a single network trained for the
same total number of steps.

Run with ``python demos/in_weights_accumulation.py`` (about 3 minutes).
"""
import numpy as np

from cultural_rl.accumulate import AccumConfig, run_baseline_rl2, train_in_weights
from cultural_rl.net import NetConfig
from cultural_rl.ppo import Hyperparams

cfg = AccumConfig(mode="in_weights", train_steps=100_000, seeds=(0, 1), n_pop=5, selective=True, generations=2)
hyper = Hyperparams(learning_rate=1e-3, n_envs=16, minibatches=4)
arch = NetConfig(0, 0, encoder=(64, 64), hidden=64, head=(64,), dtype="float32")

records, _ = train_in_weights(cfg, hyper, arch)
for seed_records in records:
    print(f"seed {seed_records[0].seed}: best return per generation",
          [round(r.final_return(), 2) for r in seed_records])

# %%
# A single lifetime with the budget of both generations.
base = run_baseline_rl2(cfg, hyper, arch, multiplier=cfg.generations)
print("single lifetime:", np.round(base.final_returns, 2))
