"""
The staged radix transform for D = d**n
=======================================
"""

# %%
import numpy as np

from oddfft import dft_direct, fft_radix, ifft_radix, plan_radix, random_state
from oddfft.radix import radix_stages

plan = plan_radix(5, 3)
s = random_state(plan.D, seed=1)
print(plan)

# %%
# The fast transform agrees with the brute-force one.
err = np.abs(fft_radix(s, plan).amplitudes - dft_direct(s).amplitudes).max()
print(f"max |fft_radix - dft_direct| = {err:.2e}")

# %%
# Every stage is unitary, so each of the n intermediates keeps the norm.
for r, stage in enumerate(radix_stages(s, plan), start=1):
    print(f"stage {r}: norm {np.linalg.norm(stage):.15f}")

# %%
# Inverse and multiplication counts.
y, stats = fft_radix(s, plan, return_stats=True)
back = ifft_radix(y, plan)
print("round trip error", np.abs(back.amplitudes - s.amplitudes).max())
print("fast:", stats.multiplications, " direct:", plan.D ** 2)

# %%
# A product state over the digits transforms factor by factor; the
# factors are independent and can be computed on separate threads.
from oddfft import assemble_factorized, factorization_necessary_check, fft_radix_factorized, product_state

rng = np.random.default_rng(0)
g = [rng.standard_normal(5) + 1j * rng.standard_normal(5) for _ in range(3)]
g = [v / np.linalg.norm(v) for v in g]
prod = product_state(g)
factors = fft_radix_factorized(g, plan, workers=3)
print([f.shape for f in factors])
print("factorized error",
      np.abs(assemble_factorized(factors, plan).amplitudes - fft_radix(prod, plan).amplitudes).max())
print("product state passes the modulus test:", factorization_necessary_check(prod, 5, 3))
print("random state passes the modulus test: ", factorization_necessary_check(s, 5, 3))
