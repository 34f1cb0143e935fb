"""
In-context accumulation on Memory Sequence
==========================================

Meta-train a small recurrent learner next to noisy oracles, then freeze it
and chain generations through hidden states.  Generation 1 acts alone; each
later generation watches the previous generation's best member replay its
last trial.

The default budget (3e5 steps, 2 seeds) runs in a few minutes on one core and
already shows generational gains; the desk preset used by the acceptance
suite trains for 2e6 steps on 10 seeds.

Run with ``python demos/in_context_accumulation.py [steps]``.
"""
import sys

import numpy as np

from cultural_rl.accumulate import AccumConfig, evaluate_accumulation, train_in_context
from cultural_rl.net import NetConfig
from cultural_rl.ppo import Hyperparams

steps = int(float(sys.argv[1])) if len(sys.argv) > 1 else 300_000
cfg = AccumConfig(train_steps=steps, seeds=(0, 1), n_pop=3, selective=True, oracle_accuracy=0.6,
                  generations=4, eval_lineages=16)
hyper = Hyperparams(learning_rate=1e-3, n_envs=16, minibatches=4)
arch = NetConfig(0, 0, encoder=(64, 64), hidden=64, head=(64,), dtype="float32")


def log(it, n, ep, fin, stats):
    if it % 25 == 0:
        print(f"{n:8d} steps  final-trial return per seed {np.round(fin, 2)}")


params, net_cfg, lanes, _ = train_in_context(cfg, hyper, arch, log=log)

# %%
# Evaluation uses held-out sequences.  Every row below is the mean return of
# each of the K=4 trials, averaged over members and lineages.
records = evaluate_accumulation(params, net_cfg, cfg, lanes)
for seed_records in records:
    print(f"seed {seed_records[0].seed}")
    for rec in seed_records:
        print(f"  generation {rec.generation}: {np.round(rec.returns.mean(axis=(0, 1)), 2)}")
