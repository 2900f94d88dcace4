"""
Timing sweeps
=============

A short version of the benchmark sweeps; ``oddfft bench --suite radix``
runs the full one.  Set ODDFFT_OUT_DIR to choose where files go.
"""

# %%
import numpy as np

from oddfft.bench import bench_pfa_sweep, bench_radix_sweep, flatten, loglog_slope, output_dir
from oddfft.io import write_bench

out = output_dir("demo_out")
pairs = bench_radix_sweep(d_values=range(21, 52, 6), reps=3)
for direct, fast in pairs:
    print(f"D = {direct.D:5d}  T = {direct.time_seconds:.2e}  T_f = {fast.time_seconds:.2e}"
          f"  T/D^2 = {direct.ratio_t_over_d2:.2e}  T_f/(D ln D) = {fast.ratio_tf_over_dlogd:.2e}")

# %%
D = np.array([p[0].D for p in pairs])
print("slope of T:", loglog_slope(D, [p[0].time_seconds for p in pairs]))
print("slope of the direct count:", loglog_slope(D, [p[0].mult_count for p in pairs]))
write_bench(out / "radix_demo.csv", flatten(pairs))

# %%
pairs = bench_pfa_sweep(53, (55, 67, 79, 91), reps=3)
write_bench(out / "pfa_demo.csv", flatten(pairs))
print(open(out / "pfa_demo.csv").read())

# %%
try:
    from oddfft.bench import plot_sweep
    print("plot:", plot_sweep(pairs, out / "pfa_demo.png", "prime-factor sweep"))
except ImportError:
    print("matplotlib not installed; skipping the plot")
