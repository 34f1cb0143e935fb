"""
A tour of Memory Sequence
=========================

A learner has to reproduce a hidden digit sequence.  Each guess earns +1 or
-1, and in the in-context setting a wrong guess ends the trial, so every
trial is another attempt at the same sequence.  A noisy oracle knows the
sequence up to a per-position corruption.

Run with ``python demos/memory_sequence_tour.py``.
"""
import numpy as np

from cultural_rl import rng as R
from cultural_rl.envs import EnvConfig, make_env, obs_layout

cfg = EnvConfig("memory", "in_context")
print(cfg)

# one environment, slot 0 for the learner and slot 1 for an oracle
env = make_env(cfg, 1, 2)
env.load(slice(None), env.sample(1, R.stream(0, R.ENV)))
print("hidden sequence:", env.seq[0])

# %%
# An oracle with 60% accuracy corrupts each position with probability 0.4.
env.oracle_reset([0], 1, 0.4, R.stream(0, R.ORACLE))
print("oracle belief:  ", env.belief[0, 1])
print("wrong positions:", np.flatnonzero(env.belief[0, 1] != env.seq[0]))

# %%
# Let the oracle play one trial.  Its return is the length of its correct
# prefix minus one for the mistake that ends the trial.
env.start_trial([0])
total, done = 0.0, False
while not done:
    r, d = env.step(1, env.oracle_action(1, [0]), [0])
    total += r[0]
    done = d[0]
print("oracle trial return:", total)

# %%
# The learner's observation is the task block (empty here) followed by the
# meta-RL blocks: last action, reward class, trial index, and the
# demonstrator's action with a visibility bit.
layout = obs_layout(cfg)
for name, sl in layout.slices().items():
    print(f"{name:13s} {sl.start:3d}..{sl.stop:3d}")
print("total width", layout.width)
