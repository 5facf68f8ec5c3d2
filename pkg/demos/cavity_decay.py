"""
Decay into two vacuum cavities
==============================

Concurrence and indicator for the mixed initial state with upper-level
weight a. The concurrence dies at a finite time for large a; the indicator
only reaches zero as T goes to infinity.
"""

# %%
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from spincorr.families import cavity_decay, sde_death_time
from spincorr.measures import concurrence, spin_correlation_matrix

OUT = Path(__file__).with_suffix("")
Ts = np.linspace(0, 5, 501)

# %%
fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for a in (0.0, 0.25, 0.5, 0.75, 1.0):
    axes[0].plot(Ts, [concurrence(cavity_decay(a, T)) for T in Ts], label=f"a={a}")
    axes[1].plot(Ts, [spin_correlation_matrix(cavity_decay(a, T)).indicator for T in Ts])
axes[0].set_ylabel("C")
axes[1].set_ylabel("I")
for ax in axes:
    ax.set_xlabel("T")
axes[0].legend()
fig.savefig(f"{OUT}.png", dpi=120)

# %%
# Death times. For a = 1 it is ln((2 + sqrt 2)/2).
for a in (0.25, 0.5, 0.75, 1.0):
    t = sde_death_time(a)
    print(f"a = {a:4}: death time {'none before T = 50' if t is None else f'{t:.10f}'}")
print(f"ln((2 + sqrt 2)/2) = {math.log((2 + math.sqrt(2)) / 2):.10f}")

# %%
# The jump in I near T = 0.58 comes from I_zz crossing zero: the average is
# then taken over two entries instead of three.
for T in (0.5, 0.575, 0.6, 2.0, 10.0, 50.0):
    scm = spin_correlation_matrix(cavity_decay(1.0, T))
    print(f"T = {T:6}: N = {scm.n_nonzero}, I = {scm.indicator:.6g}, 2 exp(-T)/3 = {2 * math.exp(-T) / 3:.6g}")
