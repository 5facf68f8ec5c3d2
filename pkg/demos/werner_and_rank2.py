"""
Werner and rank-2 families
==========================

Indicator, concurrence and separability degree along the two families with
a known closed-form separability degree.
"""

# %%
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from spincorr.families import rank2, werner
from spincorr.measures import concurrence, indicator, rank2_mu, werner_mu

OUT = Path(__file__).with_suffix("")

# %%
# Werner states: I = |x| on the whole range, while entanglement only starts
# at x = 1/3, where mu leaves 1.
xs = np.linspace(-1 / 3, 1, 201)
I = [indicator(werner(x)) for x in xs]
C = [concurrence(werner(x)) for x in xs]
mu = [werner_mu(x) for x in xs]

fig, ax = plt.subplots()
ax.plot(xs, I, label="I")
ax.plot(xs, C, label="C")
ax.plot(xs, mu, "--", label="mu")
ax.axvline(1 / 3, color="grey", lw=0.5)
ax.set_xlabel("x")
ax.legend()
fig.savefig(f"{OUT}_werner.png", dpi=120)

# %%
# Rank-2 family at fixed x: the concurrence is |x cos(theta)|. At cos(theta) = 0
# the state is a product and everything vanishes.
thetas = np.linspace(0, math.pi, 181)
fig, ax = plt.subplots()
for x in (0.2, 0.6, 0.95):
    ax.plot(thetas, [indicator(rank2(x, t)) for t in thetas], label=f"I, x={x}")
    ax.plot(thetas, [concurrence(rank2(x, t)) for t in thetas], ":", label=f"C, x={x}")
ax.set_xlabel("theta")
ax.legend(fontsize="small")
fig.savefig(f"{OUT}_rank2.png", dpi=120)

# %%
x, theta = 1 - 1e-9, math.acos(0.5)
print(f"x -> 1, cos(theta) = 1/2: I = {indicator(rank2(x, theta)):.6f} (5/12 = {5 / 12:.6f}), "
      f"C = {concurrence(rank2(x, theta)):.6f}, mu = {rank2_mu(x, theta):.2e}")
