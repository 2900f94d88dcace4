"""Self-check suite: every identity the library relies on, with its error.

``verify_all(size_budget)`` runs each check at every size up to the budget
and returns a :class:`VerificationReport`.  All randomness is seeded, so two
runs give the same errors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .numtheory import (centered_range, crt_basis, crt_decode, crt_encode,
                        crt_kernel, omega, radix_decode, radix_encode,
                        radix_kernel)
from .pfa import fft_pfa, fft_pfa_factorized, ifft_pfa, pfa_product_state, plan_pfa
from .phase_space import weyl_direct, weyl_fast, wigner_direct, wigner_fast
from .radix import (assemble_factorized, fft_radix, fft_radix_factorized,
                    ifft_radix, plan_radix, product_state, radix_stages)
from .reference import dft_direct, idft_direct, random_state

__all__ = ["Check", "VerificationReport", "verify_all", "DEFAULT_BUDGET",
           "RADIX_CASES", "PFA_CASES", "PHASE_SPACE_CASES",
           "check_radix_oracle", "check_pfa_oracle"]

DEFAULT_BUDGET = 315
RADIX_CASES = ((3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2))
PFA_CASES = ((3, 5), (3, 7), (5, 7), (5, 9), (3, 5, 7), (5, 7, 11), (3, 7, 23))
PHASE_SPACE_CASES = ((3, 5), (3, 5, 7), (5, 7, 9))
SEEDS = range(20)


@dataclass(frozen=True)
class Check:
    name: str
    max_error: float
    tol: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.max_error <= self.tol)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.detail}]" if self.detail else ""
        return f"{status}  {self.name:<46} max err {self.max_error:.2e}  tol {self.tol:.0e}{extra}"


@dataclass
class VerificationReport:
    budget: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        lines = [c.line() for c in self.checks]
        n_fail = len(self.failures())
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed "
                     f"(size budget D <= {self.budget})")
        return "\n".join(lines)


def _rel(a, b):
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)) / np.linalg.norm(b))


def _exact(flag):
    return 0.0 if flag else 1.0


def check_digit_maps(budget):
    out = []
    # d = 3: (1, 1) <-> 4 and (-1, -1) <-> -4; 4 + 4 = -1 in Z(9)
    ok = (radix_decode([1, 1], 3).value == 4 and radix_decode([-1, -1], 3).value == -4
          and (radix_decode([1, 1], 3) + 4).value == -1)
    out.append(Check("radix digits, worked example d=3", _exact(ok), 0.0))
    b = crt_basis((3, 5))
    ok = (b.a == (5, 3) and b.b == (2, 2) and b.c == (10, 6)
          and [r.value for r in crt_encode(11, b)] == [-1, 1])
    out.append(Check("CRT constants, worked example (3, 5)", _exact(ok), 0.0))

    bad = 0
    for d, n in ((3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (3, 5)):
        if d ** n > budget:
            continue
        bad += sum(radix_decode(radix_encode(J, d, n)).value != J
                   for J in centered_range(d ** n).tolist())
    out.append(Check("radix encode/decode round trip", float(bad), 0.0))

    bad = 0
    for f in PFA_CASES:
        basis = crt_basis(f)
        if basis.D > budget:
            continue
        bad += sum(crt_decode(crt_encode(J, basis), basis).value != J
                   for J in centered_range(basis.D).tolist())
        bad += not basis.idempotent_identities_hold()
    out.append(Check("CRT round trip and idempotent identities", float(bad), 0.0))
    return out


def check_kernels(budget):
    err = 0.0
    for d, n in ((3, 2), (3, 3)):
        D = d ** n
        if D > budget:
            continue
        for J in range(-(D // 2), D // 2 + 1):
            for K in range(-(D // 2), D // 2 + 1):
                err = max(err, abs(radix_kernel(J, K, d, n) - omega(D, J * K)))
    out = [Check("radix kernel factorisation (D = 9, 27)", err, 1e-12)]
    err = 0.0
    for f in ((3, 5), (3, 5, 7)):
        basis = crt_basis(f)
        if basis.D > budget:
            continue
        D = basis.D
        for J in range(-(D // 2), D // 2 + 1):
            for K in range(-(D // 2), D // 2 + 1):
                err = max(err, abs(crt_kernel(J, K, basis) - omega(D, J * K)))
    out.append(Check("CRT kernel factorisation (D = 15, 105)", err, 1e-12))
    return out


def check_direct(budget):
    norm_err = order_err = 0.0
    for D in (3, 9, 15, 105):
        if D > budget:
            continue
        for seed in range(5):
            x = random_state(D, seed)
            y = dft_direct(x)
            norm_err = max(norm_err, abs(y.norm() - x.norm()))
            z = dft_direct(dft_direct(dft_direct(y)))
            order_err = max(order_err, float(np.abs(z.amplitudes - x.amplitudes).max()))
            back = idft_direct(y)
            order_err = max(order_err, float(np.abs(back.amplitudes - x.amplitudes).max()))
    return [Check("direct transform preserves the norm", norm_err, 1e-12),
            Check("direct transform: F^4 = 1, inverse", order_err, 1e-11)]


def check_radix_oracle(budget, plan_factory=plan_radix, seeds=SEEDS):
    """Largest ``||F_radix s - F s|| / (||F s|| sqrt(D))`` over the radix cases."""
    err = 0.0
    for d, n in RADIX_CASES:
        if d ** n > budget:
            continue
        plan = plan_factory(d, n)
        for seed in seeds:
            x = random_state(plan.D, seed)
            err = max(err, _rel(fft_radix(x, plan).amplitudes,
                                dft_direct(x).amplitudes) / math.sqrt(plan.D))
    return Check("radix transform equals direct", err, 1e-10)


def check_pfa_oracle(budget, seeds=SEEDS):
    err = 0.0
    for f in PFA_CASES:
        plan = plan_pfa(f)
        if plan.D > budget:
            continue
        for seed in seeds:
            x = random_state(plan.D, seed)
            err = max(err, _rel(fft_pfa(x, plan).amplitudes,
                                dft_direct(x).amplitudes) / math.sqrt(plan.D))
    return Check("prime-factor transform equals direct", err, 1e-10)


def check_fast_structure(budget):
    rt = stage = fact = 0.0
    for d, n in RADIX_CASES:
        if d ** n > budget:
            continue
        plan = plan_radix(d, n)
        x = random_state(plan.D, 1)
        rt = max(rt, float(np.abs(ifft_radix(fft_radix(x, plan), plan).amplitudes
                                  - x.amplitudes).max()))
        stage = max(stage, max(abs(np.linalg.norm(s) - 1) for s in radix_stages(x, plan)))
        rng = np.random.default_rng(d * 10 + n)
        g = [rng.standard_normal(d) + 1j * rng.standard_normal(d) for _ in range(n)]
        g = [v / np.linalg.norm(v) for v in g]
        y = assemble_factorized(fft_radix_factorized(g, plan), plan)
        fact = max(fact, float(np.abs(y.amplitudes
                                      - fft_radix(product_state(g), plan).amplitudes).max()))
    for f in PFA_CASES:
        plan = plan_pfa(f)
        if plan.D > budget:
            continue
        x = random_state(plan.D, 2)
        rt = max(rt, float(np.abs(ifft_pfa(fft_pfa(x, plan), plan).amplitudes
                                  - x.amplitudes).max()))
        rng = np.random.default_rng(plan.D)
        g = [rng.standard_normal(d) + 1j * rng.standard_normal(d) for d in f]
        y = pfa_product_state(fft_pfa_factorized(g, plan), plan)
        fact = max(fact, float(np.abs(y.amplitudes - fft_pfa(
            pfa_product_state(g, plan), plan).amplitudes).max()))
    return [Check("fast transforms: inverse round trip", rt, 1e-11),
            Check("radix stages preserve the norm", stage, 1e-11),
            Check("product states: per-factor transforms", fact, 1e-11)]


def check_counts(budget):
    bad = 0
    for D in (9, 15, 105):
        if D <= budget:
            bad += dft_direct(random_state(D, 0), return_stats=True)[1].multiplications != D * D
    for f in PFA_CASES:
        plan = plan_pfa(f)
        if plan.D <= budget:
            count = fft_pfa(random_state(plan.D, 0), plan, return_stats=True)[1].multiplications
            bad += count != plan.D * sum(f)
    for d, n in RADIX_CASES:
        if d ** n <= budget:
            plan = plan_radix(d, n)
            count = fft_radix(random_state(plan.D, 0), plan, return_stats=True)[1].multiplications
            bad += count > 2 * plan.D * n * d
    return Check("multiplication counts", float(bad), 0.0)


def check_phase_space(budget):
    agree = imag = marg = origin = 0.0
    for f in PHASE_SPACE_CASES:
        plan = plan_pfa(f)
        D = plan.D
        if D > budget:
            continue
        x = random_state(D, 7)
        scale = math.sqrt(D)
        wd = weyl_direct(x)
        agree = max(agree, float(np.abs(weyl_fast(x, plan).grid - wd.grid).max()) / scale)
        origin = max(origin, abs(wd.value(0, 0) - 1))
        gd = wigner_direct(x)
        gf = wigner_fast(x, plan)
        agree = max(agree, float(np.abs(gf.grid - gd.grid).max()) / scale)
        imag = max(imag, gd.max_imag(), gf.max_imag())
        marg = max(marg, float(np.abs(gf.grid.sum(axis=0)
                                      - D * np.abs(x.amplitudes) ** 2).max()))
    return [Check("fast Weyl/Wigner equal direct (/ sqrt D)", agree, 1e-9),
            Check("Weyl function at the origin", origin, 1e-12),
            Check("Wigner function is real", imag, 1e-9),
            Check("Wigner marginal over A", marg, 1e-8)]


def verify_all(size_budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Run every check with dimensions up to ``size_budget``."""
    report = VerificationReport(int(size_budget))
    b = report.budget
    report.checks += check_digit_maps(b)
    report.checks += check_kernels(b)
    report.checks += check_direct(b)
    report.checks.append(check_radix_oracle(b))
    report.checks.append(check_pfa_oracle(b))
    report.checks += check_fast_structure(b)
    report.checks.append(check_counts(b))
    report.checks += check_phase_space(b)
    return report
