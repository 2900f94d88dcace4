"""Weyl and Wigner functions of a pure state, direct and fast.

    W~(A, B) = omega_D(2^{-1} A B) sum_K omega_D(A K) s(K) s*(B + K)
    W(A, B)  = omega_D(2 A B)      sum_K omega_D(-2 A K) s(K) s*(2B - K)

For each ``B`` both are a length-D Fourier sum over ``K``.  The direct
route does that sum as a D x D matrix-vector product (O(D^3) over the
grid).  The fast route works in CRT coordinates, where ``B + K`` and
``2B - K`` are computed digit by digit, and replaces the sum by ``n``
per-axis sums (O(D^2 sum d_v) over the grid).

Only the prime-factor backend is accepted: balanced radix digits do not
turn ``B + K`` into digit-wise addition, so a :class:`RadixPlan` raises
:class:`UnsupportedBackendError`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DimensionMismatchError, UnsupportedBackendError
from .numtheory import _as_residue, centered_range, half_inverse, phase_table
from .pfa import PfaPlan, crt_kernel_matrix, plan_pfa, run_program, stage_program
from .radix import RadixPlan
from .reference import OpStats, as_amplitudes

__all__ = [
    "MAX_GRID", "PhaseSpaceTable", "weyl_direct", "wigner_direct",
    "weyl_fast", "wigner_fast", "weyl_rows", "wigner_rows",
]

MAX_GRID = 1500
WEYL, WIGNER = "weyl", "wigner"


@dataclass(frozen=True, eq=False)
class PhaseSpaceTable:
    """A D x D phase-space function.

    ``grid[p, q]`` holds the value at ``A = p - (D-1)/2``, ``B = q - (D-1)/2``.
    """

    kind: str
    grid: np.ndarray

    def __post_init__(self):
        if self.kind not in (WEYL, WIGNER):
            raise ValueError(f"kind must be 'weyl' or 'wigner', got {self.kind!r}")
        g = np.asarray(self.grid, dtype=np.complex128)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionMismatchError(f"grid must be square, got {g.shape}")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    @property
    def D(self) -> int:
        return self.grid.shape[0]

    def value(self, A, B) -> complex:
        return complex(self.grid[_as_residue(A, self.D).offset,
                                 _as_residue(B, self.D).offset])

    def max_imag(self) -> float:
        return float(np.abs(self.grid.imag).max())

    def real(self, tol=1e-9) -> np.ndarray:
        """Real part, after checking every imaginary part is within ``tol``."""
        if self.max_imag() > tol:
            raise ValueError(
                f"imaginary parts up to {self.max_imag():.3g} exceed {tol:g}")
        return self.grid.real.copy()

    def __repr__(self):
        return f"PhaseSpaceTable(kind={self.kind!r}, D={self.D})"


def _resolve_plan(plan, D):
    if isinstance(plan, RadixPlan):
        raise UnsupportedBackendError(
            "the radix backend cannot compute Weyl/Wigner functions: digit-wise "
            "addition in [Z(d)]^n does not match addition in Z(d^n); "
            "use a prime-factor plan")
    if not isinstance(plan, PfaPlan):
        plan = plan_pfa(plan)
    if plan.D != D:
        raise DimensionMismatchError(f"plan has D = {plan.D}, state has D = {D}")
    return plan


def _prefactors(kind, J, columns, D):
    # omega_D(c A B) with rows B and columns A (possibly permuted)
    c = half_inverse(D) if kind == WEYL else 2
    return phase_table(J, columns, D, c)


def _shifted_source(xc, kind):
    # s*(B + K) and s*(2B - K) are length-d windows into a doubled copy of s*
    # (reversed for the Wigner sign), starting at B or -2B mod d
    base = xc if kind == WEYL else xc[(slice(None, None, -1),) * xc.ndim]
    return np.tile(base, (2,) * xc.ndim), (1 if kind == WEYL else -2)


def _direct_rows(x, kind, stats):
    D = x.size
    J = centered_range(D)
    sign = 1 if kind == WEYL else -2
    kernel = phase_table(J, J, D, sign)  # symmetric
    phases = _prefactors(kind, J, J, D)
    source, m = _shifted_source(x.conj(), kind)
    for B, phase in zip(J.tolist(), phases):
        start = (m * B) % D
        R = (x * source[start:start + D]) @ kernel
        R *= phase
        if stats is not None:
            stats.add(D, "product")
            stats.add(D * D, "kernel")
            stats.add(D, "prefactor")
        yield B, R


def _fast_rows(x, plan, kind, stats, scatter=True):
    # with scatter=False rows are left in CRT layout (A at plan.gather order)
    D = plan.D
    J = centered_range(D)
    factors = plan.factors
    sign = 1 if kind == WEYL else -2
    kernels = [crt_kernel_matrix(f, b, sign) for f, b in zip(factors, plan.basis.b)]
    program = stage_program(kernels, factors)
    phases = _prefactors(kind, J, J[plan.gather], D)
    S = x[plan.gather].reshape(factors)
    source, m = _shifted_source(S.conj(), kind)
    # CRT digits of each B, turned into per-axis window offsets
    starts = np.stack([(m * centered_range(f)[d]) % f for f, d in
                       zip(factors, np.unravel_index(plan.scatter, factors))], 1)
    for B, st, phase in zip(J.tolist(), starts.tolist(), phases):
        window = tuple(slice(o, o + f) for o, f in zip(st, factors))
        R = run_program(S * source[window], program).reshape(D)
        R *= phase
        if stats is not None:
            stats.add(D, "product")
            for f in reversed(factors):
                stats.add(D * f, f"axis d={f}")
            stats.add(D, "prefactor")
        yield B, (R[plan.scatter] if scatter else R)


def _collect(rows, D, kind, max_grid, scatter=None):
    if D > max_grid:
        raise CapacityError(
            f"a full {D} x {D} grid exceeds max_grid = {max_grid}; "
            f"iterate {kind}_rows() instead")
    by_b = np.empty((D, D), dtype=np.complex128)
    h = (D - 1) // 2
    for B, row in rows:
        by_b[B + h] = row
    if scatter is not None:
        by_b = by_b[:, scatter]
    return PhaseSpaceTable(kind, by_b.T)


def _run(s, plan, kind, return_stats, max_grid):
    x = as_amplitudes(s)
    stats = OpStats() if return_stats else None
    if x.size > max_grid:
        _collect((), x.size, kind, max_grid)
    if plan is None:
        table = _collect(_direct_rows(x, kind, stats), x.size, kind, max_grid)
    else:
        plan = _resolve_plan(plan, x.size)
        rows = _fast_rows(x, plan, kind, stats, scatter=False)
        table = _collect(rows, x.size, kind, max_grid, plan.scatter)
    return (table, stats) if return_stats else table


def weyl_direct(s, return_stats=False, max_grid=MAX_GRID):
    """Weyl function on the full grid by direct summation."""
    return _run(s, None, WEYL, return_stats, max_grid)


def wigner_direct(s, return_stats=False, max_grid=MAX_GRID):
    """Wigner function on the full grid by direct summation."""
    return _run(s, None, WIGNER, return_stats, max_grid)


def weyl_fast(s, plan, return_stats=False, max_grid=MAX_GRID):
    """Weyl function via per-axis CRT sums.

    Parameters
    ----------
    s : StateVector or array_like
    plan : PfaPlan or sequence of int
        Prime-factor plan (or its factors) with ``plan.D == len(s)``.
    return_stats : bool
        Also return the multiplication count, ``D^2 (sum(d_v) + 2)``.
    max_grid : int
        Largest D for which the full table is materialised.
    """
    return _run(s, plan, WEYL, return_stats, max_grid)


def wigner_fast(s, plan, return_stats=False, max_grid=MAX_GRID):
    """Wigner function via per-axis CRT sums with kernels ``omega(-2 a b_v k)``."""
    return _run(s, plan, WIGNER, return_stats, max_grid)


def weyl_rows(s, plan=None):
    """Yield ``(B, row)`` with ``row[p] = W~(p - (D-1)/2, B)`` in ascending B.

    Uses the fast route when a plan is given, else direct summation.  Memory
    stays O(D^2) for the index tables but no full grid is accumulated.
    """
    x = as_amplitudes(s)
    if plan is None:
        return _direct_rows(x, WEYL, None)
    return _fast_rows(x, _resolve_plan(plan, x.size), WEYL, None)


def wigner_rows(s, plan=None):
    """Row-streaming counterpart of :func:`wigner_fast` / :func:`wigner_direct`."""
    x = as_amplitudes(s)
    if plan is None:
        return _direct_rows(x, WIGNER, None)
    return _fast_rows(x, _resolve_plan(plan, x.size), WIGNER, None)
