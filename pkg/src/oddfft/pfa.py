"""Prime-factor (Good) fast Fourier transform for ``D = d_0 ... d_{n-1}``.

With pairwise-coprime factors the kernel splits with no twiddle factors:

    omega_D(JK) = prod_v omega_{d_v}(j_v b_v k_v),   j_v = J mod d_v,

so the transform is ``n`` independent d_v-point sums, one per tensor axis.
The input is gathered once into CRT order ``(k_0, ..., k_{n-1})``, the
stages run in that layout, and the output is scattered back through the
same map.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .numtheory import CrtBasis, centered, centered_range, crt_basis, root_table
from .reference import OpStats, StateVector, as_amplitudes

__all__ = [
    "PfaPlan", "plan_pfa", "fft_pfa", "ifft_pfa", "fft_pfa_factorized",
    "assemble_pfa_factorized", "pfa_product_state", "pfa_matrix",
]


@dataclass(frozen=True, eq=False)
class PfaPlan:
    """Index maps and per-factor kernels for one factorization.

    Attributes
    ----------
    basis : CrtBasis
    gather : ndarray of int
        ``gather[m]`` is the storage offset of ``J = sum_v j_v c_v`` for the
        C-order flat position ``m`` of the multi-index ``(j_0, ..., j_{n-1})``
        (each ``j_v`` stored at offset ``j_v + (d_v - 1)/2``).
    scatter : ndarray of int
        Inverse permutation of ``gather``.
    kernels : tuple of ndarray
        ``omega_{d_v}(j b_v k) / sqrt(d_v)``, rows ``j``, columns ``k``.
    """

    basis: CrtBasis
    gather: np.ndarray
    scatter: np.ndarray
    kernels: tuple

    @property
    def D(self) -> int:
        return self.basis.D

    @property
    def factors(self) -> tuple:
        return self.basis.factors

    @property
    def n(self) -> int:
        return self.basis.n

    def __repr__(self):
        return f"PfaPlan(factors={self.factors}, D={self.D})"


def _crt_gather(basis):
    D = basis.D
    J = np.zeros((), dtype=np.int64)
    for f, c in zip(basis.factors, basis.c):
        J = J[..., None] + centered_range(f) * c
    return (centered(J.reshape(D), D) + (D - 1) // 2).astype(np.intp)


def crt_kernel_matrix(f, b, sign=1):
    """``omega_f(sign * j * b * k)`` over centered ``j, k`` (unnormalized)."""
    k = centered_range(f)
    return root_table(f)[(sign * b * np.outer(k, k)) % f]


def plan_pfa(factors) -> PfaPlan:
    """Build a :class:`PfaPlan`; accepts factors or a ready :class:`CrtBasis`."""
    basis = factors if isinstance(factors, CrtBasis) else crt_basis(factors)
    gather = _crt_gather(basis)
    scatter = np.empty_like(gather)
    scatter[gather] = np.arange(basis.D)
    kernels = []
    for f, b in zip(basis.factors, basis.b):
        K = crt_kernel_matrix(f, b) / np.sqrt(f)
        K.setflags(write=False)
        kernels.append(K)
    gather.setflags(write=False)
    scatter.setflags(write=False)
    return PfaPlan(basis, gather, scatter, tuple(kernels))


def _check_plan(plan):
    if not isinstance(plan, PfaPlan):
        raise TypeError(f"expected a PfaPlan, got {type(plan).__name__}")


def stage_program(kernels, factors, batch=1):
    """Precompute the reshapes used by :func:`crt_stages` for a fixed batch.

    Axes are processed from ``n-1`` down to ``0``; each stage is a single
    (stacked) matrix product on a C-order view, with no transposes.
    """
    D = int(np.prod(factors))
    program = []
    post = 1
    for K, f in zip(reversed(kernels), reversed(factors)):
        pre = batch * D // (f * post)
        if post == 1:
            program.append((np.ascontiguousarray(K.T), (pre, f), True))
        elif pre == 1:
            program.append((K, (f, post), False))
        else:
            program.append((K, (pre, f, post), False))
        post *= f
    return program


def run_program(X, program):
    T = X
    for K, shape, right in program:
        T = T.reshape(shape) @ K if right else K @ T.reshape(shape)
    return T


def crt_stages(X, kernels, factors):
    """Apply ``kernels[v]`` along every CRT axis of the rows of ``X``.

    ``X`` has shape ``(batch, D)`` with each row in C-order CRT layout.
    """
    batch, D = X.shape
    return run_program(X, stage_program(kernels, factors, batch)).reshape(batch, D)


def _apply_axis(T, K, axis):
    return np.moveaxis(np.tensordot(K, T, axes=([1], [axis])), 0, axis)


def _transform(s, plan, conj, order, return_stats):
    _check_plan(plan)
    x = as_amplitudes(s, plan.D)
    kernels = [K.conj() for K in plan.kernels] if conj else list(plan.kernels)
    factors = plan.factors
    X = x[plan.gather]
    if order is None:
        X = crt_stages(X.reshape(1, plan.D), kernels, factors)
        axes = range(plan.n - 1, -1, -1)
    else:
        axes = [int(a) for a in order]
        if sorted(axes) != list(range(plan.n)):
            raise ValueError(f"order must be a permutation of 0..{plan.n - 1}")
        T = X.reshape(factors)
        for a in axes:
            T = _apply_axis(T, kernels[a], a)
        X = T
    out = np.empty(plan.D, dtype=np.complex128)
    out[plan.gather] = X.reshape(plan.D)
    result = StateVector(out)
    if not return_stats:
        return result
    stats = OpStats()
    for a in axes:
        stats.add(plan.D * factors[a], f"axis {a}")
    return result, stats


def fft_pfa(s, plan: PfaPlan, order=None, return_stats=False):
    """Fourier transform of ``s`` as ``n`` CRT-axis stages.

    ``order`` optionally lists the axes in the order they are transformed;
    the default is ``n-1, ..., 0``.  Multiplication count is exactly
    ``D * sum(d_v)``.
    """
    return _transform(s, plan, False, order, return_stats)


def ifft_pfa(s, plan: PfaPlan, order=None, return_stats=False):
    """Inverse of :func:`fft_pfa` (conjugated per-axis kernels)."""
    return _transform(s, plan, True, order, return_stats)


def _factor_vectors(g, plan):
    g = [np.asarray(v, dtype=np.complex128) for v in g]
    if len(g) != plan.n:
        raise DimensionMismatchError(f"expected {plan.n} factors, got {len(g)}")
    for i, (v, f) in enumerate(zip(g, plan.factors)):
        if v.shape != (f,):
            raise DimensionMismatchError(
                f"factor {i} has shape {v.shape}, expected ({f},)")
    return g


def pfa_product_state(g, plan: PfaPlan) -> StateVector:
    """``s(K) = prod_v g_v(k_v)`` with ``k_v = K mod d_v`` (centered)."""
    g = _factor_vectors(g, plan)
    T = g[0]
    for v in g[1:]:
        T = np.multiply.outer(T, v)
    out = np.empty(plan.D, dtype=np.complex128)
    out[plan.gather] = np.ravel(T)
    return StateVector(out)


def fft_pfa_factorized(g, plan: PfaPlan, workers=None) -> tuple:
    """Per-axis transforms ``gt_v = K_v g_v`` of a CRT product state.

    The axes are independent, so with ``workers > 1`` they run on a
    thread pool.  Combine with :func:`assemble_pfa_factorized`.
    """
    _check_plan(plan)
    g = _factor_vectors(g, plan)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(np.dot, K, v) for K, v in zip(plan.kernels, g)]
            return tuple(f.result() for f in futures)
    return tuple(K @ v for K, v in zip(plan.kernels, g))


def assemble_pfa_factorized(factors, plan: PfaPlan) -> StateVector:
    return pfa_product_state(factors, plan)


def pfa_matrix(plan: PfaPlan) -> np.ndarray:
    """Dense D x D matrix assembled from the per-axis kernels.

    Entry ``(J, K)`` is ``prod_v kernels[v][j_v, k_v]``; rows and columns
    are in centered order.
    """
    _check_plan(plan)
    M = np.ones((1, 1), dtype=np.complex128)
    for K in plan.kernels:
        M = np.kron(M, K)  # CRT order on both sides
    out = np.empty_like(M)
    out[np.ix_(plan.gather, plan.gather)] = M
    return out
