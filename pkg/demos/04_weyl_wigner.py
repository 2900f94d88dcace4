"""
Weyl and Wigner functions
=========================

Full D x D tables by direct summation and by per-axis CRT sums.
"""

# %%
import time

import numpy as np

from oddfft import random_state, weyl_direct, weyl_fast, wigner_direct, wigner_fast

s = random_state(105, seed=5)
W_direct = weyl_direct(s)
W_fast = weyl_fast(s, (3, 5, 7))
print("Weyl fast vs direct:", np.abs(W_fast.grid - W_direct.grid).max())
print("Weyl at the origin:", W_fast.value(0, 0))

# %%
# The Wigner function is real and its A-marginal is D |s(B)|^2.
G = wigner_fast(s, (3, 5, 7))
print("Wigner vs direct:", np.abs(G.grid - wigner_direct(s).grid).max())
print("max |imag|:", G.max_imag())
print("marginal error:", np.abs(G.real().sum(axis=0) - 105 * np.abs(s.amplitudes) ** 2).max())

# %%
# Timing at D = 483 for two factorizations.
s = random_state(483, seed=0)
t0 = time.perf_counter()
weyl_direct(s)
T = time.perf_counter() - t0
for factors in [(21, 23), (3, 7, 23)]:
    t0 = time.perf_counter()
    weyl_fast(s, factors)
    Tf = time.perf_counter() - t0
    print(factors, f"T/T_f = {T / Tf:.1f}")

# %%
# A plot of the Wigner function of a small state, if matplotlib is around.
try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    G = wigner_fast(random_state(35, seed=2), (5, 7))
    plt.imshow(G.real().T, origin="lower", extent=(-17.5, 17.5, -17.5, 17.5), cmap="RdBu_r")
    plt.xlabel("A")
    plt.ylabel("B")
    plt.colorbar()
    plt.savefig("wigner_35.png", dpi=100)
    print("saved wigner_35.png")
