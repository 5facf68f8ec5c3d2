"""
Published values that the definitions do not reproduce
======================================================

Each block prints the side-by-side report from spincorr.reconcile, plus the
quasi-Bell concurrence, where the printed sin^2(2 theta) differs from the
computed |sin 2 theta|.
"""

# %%
import math

import numpy as np

from spincorr.families import quasi_bell
from spincorr.measures import concurrence
from spincorr.reconcile import CASES, reconcile

# %%
for case in CASES:
    print(reconcile(case).render())
    print()

# %%
print(" theta      C    |sin 2t|   sin^2 2t")
for theta in np.linspace(0, math.pi / 2, 7):
    s = math.sin(2 * theta)
    print(f"{theta:6.3f}  {concurrence(quasi_bell(theta)):.6f}  {abs(s):.6f}  {s * s:.6f}")
