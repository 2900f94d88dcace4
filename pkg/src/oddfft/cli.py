"""Command line entry point: ``oddfft {fft,weyl,wigner,bench,verify}``.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import bench, io
from .errors import FileFormatError, OddFFTError, VerificationError
from .pfa import fft_pfa, plan_pfa
from .phase_space import weyl_direct, weyl_fast, wigner_direct, wigner_fast
from .radix import fft_radix, plan_radix
from .reference import dft_direct, random_state
from .verify import DEFAULT_BUDGET, verify_all

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
QUICK_FACTORS = (3, 5, 7)


class UsageError(Exception):
    pass


def _factors(text):
    try:
        out = tuple(int(t) for t in text.replace("x", ",").split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty factor list")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="oddfft",
        description="Fast Fourier transforms and Weyl/Wigner functions in odd dimension.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fft", help="transform a state vector")
    f.add_argument("--backend", choices=("radix", "pfa", "direct"), default="pfa")
    f.add_argument("--d", type=int, help="radix (radix backend)")
    f.add_argument("--n", type=int, help="number of digits (radix backend)")
    f.add_argument("--factors", type=_factors, help="coprime factors, e.g. 3,5,7")
    f.add_argument("--in", dest="infile", type=Path, help="state CSV (index,real,imag)")
    f.add_argument("--out", type=Path, help="output state CSV (default: stdout)")
    f.add_argument("--seed", type=int, default=0,
                   help="seed for a random input when --in is not given")
    f.add_argument("--stats", action="store_true", help="report the multiplication count")

    for kind in ("weyl", "wigner"):
        w = sub.add_parser(kind, help=f"full-grid {kind.capitalize()} function (fast route)")
        w.add_argument("--factors", type=_factors,
                       help="coprime factors of D (prime-factor backend)")
        w.add_argument("--in", dest="infile", type=Path, help="state CSV")
        w.add_argument("--out", type=Path, help="table CSV (A,B,real,imag)")
        w.add_argument("--seed", type=int, default=0)
        w.add_argument("--quick", action="store_true",
                       help=f"D = 105 with factors {','.join(map(str, QUICK_FACTORS))}, "
                            "checked against direct summation")
        if kind == "wigner":
            w.add_argument("--real", action="store_true",
                           help="write A,B,value after checking imaginary parts vanish")

    b = sub.add_parser("bench", help="timing sweeps; writes CSV (and plots with --plot)")
    b.add_argument("--suite", choices=("radix", "pfa", "weyl"), required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--out-dir", type=Path,
                   help=f"output directory (default: ${bench.OUT_DIR_ENV} or ./bench_out)")
    b.add_argument("--quick", action="store_true", help="small sizes only")
    b.add_argument("--plot", action="store_true", help="also write PNG figures")

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="largest dimension used by any check")
    return p


def _load_state(args, D):
    if args.infile is not None:
        x = io.read_state(args.infile)
        if D is not None and x.D != D:
            raise UsageError(f"{args.infile} has dimension {x.D}, expected {D}")
        return x
    if D is None:
        raise UsageError("give --in, or the dimension via --d/--n or --factors")
    return random_state(D, args.seed)


def _write_state(x, out):
    if out is None:
        w = sys.stdout
        w.write(",".join(io.STATE_HEADER) + "\n")
        for J, z in zip(x.indices.tolist(), x.amplitudes.tolist()):
            w.write(f"{J},{z.real:.17g},{z.imag:.17g}\n")
    else:
        io.write_state(out, x)


def cmd_fft(args):
    if args.backend == "radix":
        if args.d is None or args.n is None:
            raise UsageError("the radix backend needs --d and --n")
        plan = plan_radix(args.d, args.n)
        x = _load_state(args, plan.D)
        y, stats = fft_radix(x, plan, return_stats=True)
    elif args.backend == "pfa":
        if args.factors is None:
            raise UsageError("the pfa backend needs --factors")
        plan = plan_pfa(args.factors)
        x = _load_state(args, plan.D)
        y, stats = fft_pfa(x, plan, return_stats=True)
    else:
        D = None
        if args.factors is not None:
            D = math.prod(args.factors)
        elif args.d is not None:
            D = args.d ** (args.n or 1)
        x = _load_state(args, D)
        y, stats = dft_direct(x, return_stats=True)
    _write_state(y, args.out)
    if args.stats:
        print(f"D={y.D} backend={args.backend} multiplications={stats.multiplications}",
              file=sys.stderr)
    return EXIT_OK


def cmd_phase_space(args):
    kind = args.command
    factors = args.factors
    if args.quick:
        factors = factors or QUICK_FACTORS
    if factors is None:
        raise UsageError(f"{kind} needs --factors (or --quick)")
    plan = plan_pfa(factors)
    x = _load_state(args, plan.D)
    fast, direct = (weyl_fast, weyl_direct) if kind == "weyl" else (wigner_fast, wigner_direct)
    table = fast(x, plan)
    if args.quick:
        err = float(np.abs(table.grid - direct(x).grid).max())
        tol = 1e-9 * math.sqrt(plan.D)
        print(f"fast vs direct: max |diff| = {err:.3e} (tol {tol:.1e})")
        if err > tol:
            raise VerificationError(f"fast {kind} disagrees with direct summation")
    if args.out is not None:
        io.write_table(args.out, table, real_only=getattr(args, "real", False))
    print(f"{kind}: D={plan.D} factors={plan.factors} value(0,0)={table.value(0, 0):.12g} "
          f"max|imag|={table.max_imag():.3e}")
    return EXIT_OK


def _summarize_sweep(pairs):
    D = np.array([p[0].D for p in pairs], dtype=float)
    T = np.array([p[0].time_seconds for p in pairs])
    counts = np.array([p[0].mult_count for p in pairs], dtype=float)
    faster = sum(p[1].time_seconds < p[0].time_seconds for p in pairs)
    tf = np.array([p[1].ratio_tf_over_dlogd for p in pairs])
    lines = [f"T_f < T at {faster}/{len(pairs)} sizes"]
    if len(pairs) > 1:
        lines.append(f"log-log slope of T: {bench.loglog_slope(D, T):.3f}; "
                     f"of the direct count: {bench.loglog_slope(D, counts):.3f}")
        lines.append(f"T_f/(D ln D) spread (max/min): {tf.max() / tf.min():.2f}")
    return lines


def cmd_bench(args):
    if args.reps < 3:
        raise UsageError("--reps must be at least 3")
    out_dir = Path(args.out_dir) if args.out_dir else bench.output_dir()
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.suite == "weyl":
        report = bench.bench_weyl(seed=args.seed, reps=args.reps, quick=args.quick)
        path = out_dir / "bench_weyl.csv"
        io.write_bench(path, report.records())
        print(f"D={report.D} direct {report.direct_time:.4f} s")
        for f, ratio in report.speedups.items():
            print(f"  factors {f}: fast {report.fast_times[f]:.4f} s, T/T_f = {ratio:.2f}, "
                  f"max err {report.max_errors[f]:.2e}")
        print(f"wrote {path}")
        return EXIT_OK
    if args.suite == "radix":
        d_values = (3, 5, 7, 9, 11) if args.quick else bench.DEFAULT_RADIX_D
        pairs = bench.bench_radix_sweep(d_values, seed=args.seed, reps=args.reps)
    else:
        d2 = (55, 57, 59, 61) if args.quick else bench.DEFAULT_PFA_D2
        pairs = bench.bench_pfa_sweep(bench.DEFAULT_PFA_D1, d2, seed=args.seed, reps=args.reps)
    path = out_dir / f"bench_{args.suite}.csv"
    io.write_bench(path, bench.flatten(pairs))
    for line in _summarize_sweep(pairs):
        print(line)
    print(f"wrote {path}")
    if args.plot:
        png = bench.plot_sweep(pairs, out_dir / f"bench_{args.suite}.png", args.suite)
        print(f"wrote {png}")
    return EXIT_OK


def cmd_verify(args):
    if args.budget < 3:
        raise UsageError("--budget must be at least 3")
    report = verify_all(args.budget)
    print(report.render())
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {"fft": cmd_fft, "weyl": cmd_phase_space, "wigner": cmd_phase_space,
            "bench": cmd_bench, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FileFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, OddFFTError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
