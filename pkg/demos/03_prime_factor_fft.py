"""
Prime-factor transform over coprime factors
===========================================

No twiddle factors: the transform is one small transform per CRT axis.
"""

# %%
import numpy as np

from oddfft import dft_direct, fft_pfa, plan_pfa, random_state

plan = plan_pfa((3, 5, 7))
s = random_state(plan.D, seed=3)
y, stats = fft_pfa(s, plan, return_stats=True)
print(plan, "error", np.abs(y.amplitudes - dft_direct(s).amplitudes).max())
print(stats.stages)

# %%
# The axes commute, so any order gives the same result.
for order in [(0, 1, 2), (2, 1, 0), (1, 0, 2)]:
    print(order, np.abs(fft_pfa(s, plan, order=order).amplitudes - y.amplitudes).max())

# %%
# Multiplications: D * sum(d) against D**2.
for factors in [(53, 55), (53, 77), (53, 101)]:
    p = plan_pfa(factors)
    _, st = fft_pfa(random_state(p.D, 0), p, return_stats=True)
    print(f"D = {p.D:5d}  fast {st.multiplications:8d}  direct {p.D ** 2:9d}")

# %%
# Factors that share a divisor are rejected.
from oddfft import CoprimalityError

try:
    plan_pfa((3, 9))
except CoprimalityError as exc:
    print("rejected:", exc)
