"""One test per acceptance criterion; each records a PASS/FAIL (or WARN) line.

The lines are printed as they happen (visible with ``-s``) and repeated in
the terminal summary.  Criteria 8 and 9 time real work and are marked slow.
"""
import math
import time
import warnings

import numpy as np
import pytest

from oddfft import (CenteredResidue, crt_basis, crt_encode, crt_encode_hat,
                    dft_direct, fft_pfa, fft_radix, plan_pfa, plan_radix,
                    radix_decode, radix_encode, random_state, weyl_direct,
                    weyl_fast, wigner_direct, wigner_fast)
from oddfft.bench import (bench_pfa_sweep, bench_radix_sweep, bench_weyl,
                          loglog_slope)
from oddfft.numtheory import crt_kernel, radix_kernel

from conftest import ACCEPTANCE_LINES, w


def record(number, ok, detail, soft=False):
    status = "PASS" if ok else ("WARN" if soft else "FAIL")
    line = f"criterion {number}: {status}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def rel_err(a, b):
    return float(np.linalg.norm(a - b) / np.linalg.norm(b))


def test_criterion_1_worked_examples():
    t0 = time.perf_counter()
    d3 = (radix_decode([1, 1], 3).value == 4
          and radix_decode([-1, -1], 3).value == -4
          and radix_encode(4, 3, 2).digits == (1, 1)
          and radix_encode(-4, 3, 2).digits == (-1, -1)
          and (CenteredResidue(4, 9) + CenteredResidue(4, 9)).value == -1)
    b = crt_basis((3, 5))
    j = [r.value for r in crt_encode(11, b)]
    jhat = [r.value for r in crt_encode_hat(11, b)]
    crt = (b.a == (5, 3) and b.b == (2, 2) and b.c == (10, 6)
           and [x % f for x, f in zip(j, b.factors)] == [2, 1]
           and [(x - e) % f for x, e, f in zip(jhat, (4, 2), b.factors)] == [0, 0])
    elapsed = time.perf_counter() - t0
    ok = d3 and crt and elapsed < 0.5
    record(1, ok, f"digit example d=3: {d3}; CRT example (3,5): {crt}; {elapsed * 1e3:.1f} ms")
    assert ok


def test_criterion_2_kernel_identities():
    t0 = time.perf_counter()
    errs = {}
    for d, n in ((3, 2), (3, 3)):
        D = d ** n
        h = (D - 1) // 2
        errs[f"radix D={D}"] = max(abs(radix_kernel(J, K, d, n) - w(D, J * K))
                                   for J in range(-h, h + 1) for K in range(-h, h + 1))
    for f in ((3, 5), (3, 5, 7)):
        basis = crt_basis(f)
        h = (basis.D - 1) // 2
        errs[f"CRT D={basis.D}"] = max(abs(crt_kernel(J, K, basis) - w(basis.D, J * K))
                                       for J in range(-h, h + 1) for K in range(-h, h + 1))
    elapsed = time.perf_counter() - t0
    worst = max(errs.values())
    ok = worst <= 1e-12 and elapsed < 10
    record(2, ok, f"max error {worst:.2e} over {list(errs)}; {elapsed:.2f} s")
    assert ok


def _oracle_sweep(cases, make_plan, transform):
    worst = 0.0
    for case in cases:
        plan = make_plan(case)
        for seed in range(20):
            x = random_state(plan.D, seed)
            err = rel_err(transform(x, plan).amplitudes, dft_direct(x).amplitudes)
            worst = max(worst, err / (1e-10 * math.sqrt(plan.D)))
    return worst


def test_criterion_3_radix_oracle():
    t0 = time.perf_counter()
    cases = [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)]
    worst = _oracle_sweep(cases, lambda c: plan_radix(*c), fft_radix)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1 and elapsed < 30
    record(3, ok, f"worst error / (1e-10 sqrt D) = {worst:.2e}; {elapsed:.2f} s")
    assert ok


def test_criterion_4_pfa_oracle():
    t0 = time.perf_counter()
    cases = [(3, 5), (3, 7), (5, 7), (5, 9), (3, 5, 7), (5, 7, 11), (3, 7, 23)]
    worst = _oracle_sweep(cases, plan_pfa, fft_pfa)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1 and elapsed < 60
    record(4, ok, f"worst error / (1e-10 sqrt D) = {worst:.2e}; {elapsed:.2f} s")
    assert ok


def test_criterion_5_unitarity_and_order():
    transforms = [("direct", D, lambda x, D=D: dft_direct(x)) for D in (3, 9, 15, 27, 45, 105)]
    for d, n in [(3, 2), (3, 3), (3, 4), (5, 2), (7, 2), (9, 2)]:
        p = plan_radix(d, n)
        transforms.append((f"radix {d}^{n}", p.D, lambda x, p=p: fft_radix(x, p)))
    for f in [(3, 5), (5, 7), (3, 7), (5, 9), (3, 5, 7)]:
        p = plan_pfa(f)
        transforms.append((f"pfa {f}", p.D, lambda x, p=p: fft_pfa(x, p)))
    norm_err = order_err = 0.0
    for _, D, F in transforms:
        for seed in range(5):
            x = random_state(D, seed)
            y = x
            for _ in range(4):
                y = F(y)
                norm_err = max(norm_err, abs(y.norm() - x.norm()))
            order_err = max(order_err, float(np.abs(y.amplitudes - x.amplitudes).max()))
    ok = norm_err <= 1e-12 and order_err <= 1e-11
    record(5, ok, f"{len(transforms)} transforms: norm error {norm_err:.2e}, "
                  f"F^4 - 1 error {order_err:.2e}")
    assert ok


def test_criterion_6_phase_space():
    t0 = time.perf_counter()
    agree = imag = marg = 0.0
    timings = {}
    for f in [(3, 5), (3, 5, 7), (5, 7, 9)]:
        t1 = time.perf_counter()
        plan = plan_pfa(f)
        D = plan.D
        x = random_state(D, 21)
        scale = 1e-9 * math.sqrt(D)
        agree = max(agree, float(np.abs(weyl_fast(x, plan).grid
                                        - weyl_direct(x).grid).max()) / scale)
        gf, gd = wigner_fast(x, plan), wigner_direct(x)
        agree = max(agree, float(np.abs(gf.grid - gd.grid).max()) / scale)
        imag = max(imag, gf.max_imag(), gd.max_imag())
        for g in (gf, gd):
            marg = max(marg, float(np.abs(g.grid.sum(axis=0)
                                          - D * np.abs(x.amplitudes) ** 2).max()))
        timings[D] = time.perf_counter() - t1
    ok = agree <= 1 and imag <= 1e-9 and marg <= 1e-8 and timings[315] < 180
    record(6, ok, f"fast/direct error / (1e-9 sqrt D) = {agree:.2e}; max |imag W| = {imag:.2e}; "
                  f"marginal error {marg:.2e}; D=315 in {timings[315]:.2f} s "
                  f"(total {time.perf_counter() - t0:.2f} s)")
    assert ok


def test_criterion_7_operation_counts():
    direct_ok = all(dft_direct(random_state(D, 0), return_stats=True)[1].multiplications == D * D
                    for D in (3, 15, 105, 483, 2601))
    worst_c = 0.0
    for d, n in [(3, 2), (3, 3), (3, 4), (5, 3), (7, 2), (51, 2), (101, 2), (3, 8)]:
        p = plan_radix(d, n)
        count = fft_radix(random_state(p.D, 0), p, return_stats=True)[1].multiplications
        worst_c = max(worst_c, count / (p.D * n * d))
    pfa_ok = True
    for f in [(3, 5), (3, 5, 7), (5, 7, 11), (3, 7, 23), (53, 55), (53, 101)]:
        p = plan_pfa(f)
        count = fft_pfa(random_state(p.D, 0), p, return_stats=True)[1].multiplications
        pfa_ok &= count == p.D * sum(f)
    ok = direct_ok and pfa_ok and worst_c <= 2
    record(7, ok, f"direct = D^2: {direct_ok}; radix count <= {worst_c:.3f} * D n d; "
                  f"pfa = D sum(d): {pfa_ok}")
    assert ok


@pytest.mark.slow
def test_criterion_8_wallclock_complexity():
    t0 = time.perf_counter()
    radix = bench_radix_sweep(seed=0, reps=5)
    pfa = bench_pfa_sweep(seed=0, reps=5)
    hard = True
    soft = []
    for name, pairs in (("radix", radix), ("pfa", pfa)):
        D = np.array([p[0].D for p in pairs], dtype=float)
        T = np.array([p[0].time_seconds for p in pairs])
        counts = np.array([p[0].mult_count for p in pairs], dtype=float)
        fast_counts = np.array([p[1].mult_count for p in pairs], dtype=float)
        faster = sum(p[1].time_seconds < p[0].time_seconds for p in pairs)
        slope = loglog_slope(D, T)
        count_slope = loglog_slope(D, counts)
        tf = np.array([p[1].ratio_tf_over_dlogd for p in pairs])
        spread = tf.max() / tf.min()
        # fast counts stay within c D log D (max d / log max d); max d = sqrt D or 101
        dmax = np.array([max(p[1].D // 53, 53) if name == "pfa" else math.isqrt(p[1].D)
                         for p in pairs], dtype=float)
        bound = fast_counts / (D * np.log(D) * dmax / np.log(dmax))
        hard &= abs(count_slope - 2) < 1e-9 and bound.max() < 3
        soft.append((f"{name}: T_f < T at {faster}/{len(pairs)} sizes",
                     faster == len(pairs)))
        soft.append((f"{name}: slope of T = {slope:.2f}", 1.7 <= slope <= 2.3))
        if name == "pfa":
            soft.append((f"pfa: T_f/(D ln D) spread {spread:.2f}x", spread < 3))
        hard_detail = f"{name}: count slope {count_slope:.6f}, count bound constant {bound.max():.2f}"
        record(8, hard, hard_detail)
    for detail, ok in soft:
        record(8, ok, detail, soft=True)
        if not ok:
            warnings.warn(f"timing check outside its band: {detail}")
    record(8, hard, f"sweeps took {time.perf_counter() - t0:.1f} s")
    assert hard


@pytest.mark.slow
def test_criterion_9_weyl_speedup():
    quick = bench_weyl(quick=True, reps=3)
    gate = max(quick.max_errors.values()) <= 1e-9
    record(9, gate, f"quick gate D=105: max fast/direct error {max(quick.max_errors.values()):.2e}")
    assert gate
    report = bench_weyl(seed=0, reps=5)
    ok = all(r > 5 for r in report.speedups.values())
    for f, r in report.speedups.items():
        record(9, r > 5, f"D={report.D} factors {f}: T = {report.direct_time:.4f} s, "
                         f"T_f = {report.fast_times[f]:.4f} s, T/T_f = {r:.2f} (needs > 5)")
    finer = report.finer_not_slower(0.2)
    record(9, finer, "finer factorization within 20% of the coarser one", soft=True)
    if not finer:
        warnings.warn("finer factorization is more than 20% slower than the coarser one")
    assert ok
