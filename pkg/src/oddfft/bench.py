"""Timing sweeps for the two fast backends and the Weyl speedup experiment.

Every timed call runs single-threaded (BLAS pools limited to one thread),
once as a warm-up and then ``reps`` times; the recorded time is the median.
Multiplication counts come from the instrumented transforms and do not
depend on the machine.
"""
from __future__ import annotations

import math
import os
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from threadpoolctl import threadpool_limits

from .errors import InvalidModulusError, VerificationError
from .numtheory import check_odd, crt_basis
from .pfa import fft_pfa, plan_pfa
from .phase_space import weyl_direct, weyl_fast
from .radix import fft_radix, plan_radix
from .reference import dft_direct, random_state

__all__ = [
    "OUT_DIR_ENV", "BenchRecord", "WeylReport", "time_call", "loglog_slope",
    "bench_radix_sweep", "bench_pfa_sweep", "bench_weyl", "flatten",
    "output_dir", "plot_sweep",
]

OUT_DIR_ENV = "ODDFFT_OUT_DIR"
DEFAULT_RADIX_D = tuple(range(51, 102, 2))
DEFAULT_PFA_D1 = 53
DEFAULT_PFA_D2 = tuple(range(55, 102, 2))
DEFAULT_WEYL = ((21, 23), (3, 7, 23))
QUICK_WEYL = ((15, 7), (3, 5, 7))


@dataclass(frozen=True)
class BenchRecord:
    D: int
    backend: str
    time_seconds: float
    mult_count: int
    reps: int

    def __post_init__(self):
        if self.reps < 3:
            raise ValueError(f"at least 3 repetitions are required, got {self.reps}")
        if not self.time_seconds > 0:
            raise ValueError(f"time must be positive, got {self.time_seconds}")

    @property
    def ratio_t_over_d2(self) -> float:
        return self.time_seconds / self.D ** 2

    @property
    def ratio_tf_over_dlogd(self) -> float:
        return self.time_seconds / (self.D * math.log(self.D))


def time_call(fn, reps=5) -> float:
    """Median wall time of ``fn()`` over ``reps`` runs after one warm-up."""
    if reps < 3:
        raise ValueError(f"at least 3 repetitions are required, got {reps}")
    with threadpool_limits(limits=1):
        fn()
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
    return statistics.median(times)


def loglog_slope(x, y) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def _pair(x, fast, plan, label, reps):
    _, dstats = dft_direct(x, return_stats=True)
    _, fstats = fast(x, plan, return_stats=True)
    direct = BenchRecord(plan.D, "direct", time_call(lambda: dft_direct(x), reps),
                         dstats.multiplications, reps)
    timed = BenchRecord(plan.D, label, time_call(lambda: fast(x, plan), reps),
                        fstats.multiplications, reps)
    return direct, timed


def bench_radix_sweep(d_values=DEFAULT_RADIX_D, n=2, seed=0, reps=5) -> list:
    """``(direct, radix)`` record pairs for ``D = d**n`` over ``d_values``."""
    d_values = [check_odd(d, "d") for d in d_values]
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    pairs = []
    for d in d_values:
        plan = plan_radix(d, n)
        x = random_state(plan.D, seed)
        pairs.append(_pair(x, fft_radix, plan, "radix", reps))
    return pairs


def bench_pfa_sweep(d1=DEFAULT_PFA_D1, d2_values=DEFAULT_PFA_D2, seed=0, reps=5) -> list:
    """``(direct, pfa)`` record pairs for ``D = d1 * d2`` over ``d2_values``."""
    bases = [crt_basis((d1, d2)) for d2 in d2_values]  # validates every pair first
    pairs = []
    for basis in bases:
        plan = plan_pfa(basis)
        x = random_state(plan.D, seed)
        pairs.append(_pair(x, fft_pfa, plan, "pfa", reps))
    return pairs


def flatten(pairs) -> list:
    return [rec for pair in pairs for rec in pair]


@dataclass
class WeylReport:
    """Outcome of one Weyl speedup run.

    ``speedups[factors]`` is ``T / T_f``; ``max_errors[factors]`` is the
    largest entrywise ``|W_fast - W_direct|`` seen by the correctness gate.
    """

    D: int
    direct_time: float
    fast_times: dict = field(default_factory=dict)
    speedups: dict = field(default_factory=dict)
    max_errors: dict = field(default_factory=dict)
    mult_counts: dict = field(default_factory=dict)
    direct_mult_count: int = 0
    reps: int = 3

    def records(self) -> list:
        out = [BenchRecord(self.D, "weyl-direct", self.direct_time,
                           self.direct_mult_count, self.reps)]
        for f, t in self.fast_times.items():
            label = "weyl-fast-" + "x".join(map(str, f))
            out.append(BenchRecord(self.D, label, t, self.mult_counts[f], self.reps))
        return out

    def finer_not_slower(self, margin=0.2) -> bool:
        """Whether the speedup does not drop by more than ``margin`` as factors get finer."""
        ordered = sorted(self.speedups.items(), key=lambda kv: len(kv[0]))
        return all(b[1] >= (1 - margin) * a[1] for a, b in zip(ordered, ordered[1:]))


def bench_weyl(factorizations=DEFAULT_WEYL, seed=0, reps=3, quick=False) -> WeylReport:
    """Time full-grid Weyl functions, direct against each factorization.

    The fast tables are checked against the direct one (entrywise within
    ``1e-9 sqrt(D)``) before anything is timed; a mismatch raises
    :class:`VerificationError`.
    """
    if quick:
        factorizations = QUICK_WEYL
    factorizations = [tuple(int(d) for d in f) for f in factorizations]
    sizes = {math.prod(f) for f in factorizations}
    if len(sizes) != 1:
        raise InvalidModulusError(
            f"factorizations multiply to different dimensions: {sorted(sizes)}")
    D = check_odd(sizes.pop(), "dimension")
    plans = {f: plan_pfa(f) for f in factorizations}
    x = random_state(D, seed)

    reference, dstats = weyl_direct(x, return_stats=True)
    report = WeylReport(D, 0.0, direct_mult_count=dstats.multiplications, reps=reps)
    for f, plan in plans.items():
        table, fstats = weyl_fast(x, plan, return_stats=True)
        err = float(np.abs(table.grid - reference.grid).max())
        report.max_errors[f] = err
        report.mult_counts[f] = fstats.multiplications
        if err > 1e-9 * math.sqrt(D):
            raise VerificationError(
                f"fast Weyl with factors {f} differs from direct by {err:.3g}")

    report.direct_time = time_call(lambda: weyl_direct(x), reps)
    for f, plan in plans.items():
        t = time_call(lambda: weyl_fast(x, plan), reps)
        report.fast_times[f] = t
        report.speedups[f] = report.direct_time / t
    return report


def output_dir(default="bench_out") -> Path:
    """Output directory: ``$ODDFFT_OUT_DIR`` if set, else ``default``."""
    p = Path(os.environ.get(OUT_DIR_ENV) or default)
    p.mkdir(parents=True, exist_ok=True)
    return p


def plot_sweep(pairs, path, title="") -> Path:
    """Three panels: ``T/D^2``, ``T_f/(D ln D)`` and both times against ``D``.

    Needs matplotlib (the ``plot`` extra).
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    D = np.array([p[0].D for p in pairs])
    T = np.array([p[0].time_seconds for p in pairs])
    Tf = np.array([p[1].time_seconds for p in pairs])
    fig, ax = plt.subplots(1, 3, figsize=(13, 3.6))
    ax[0].plot(D, T / D ** 2, "o-")
    ax[0].set_ylabel("T / D^2  [s]")
    ax[1].plot(D, Tf / (D * np.log(D)), "s-", color="C1")
    ax[1].set_ylabel("T_f / (D ln D)  [s]")
    ax[2].plot(D, T, "o-", label="direct")
    ax[2].plot(D, Tf, "s-", label=pairs[0][1].backend)
    ax[2].set_ylabel("time [s]")
    ax[2].legend()
    for a in ax:
        a.set_xlabel("D")
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return Path(path)
