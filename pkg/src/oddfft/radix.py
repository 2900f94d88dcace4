"""Staged fast Fourier transform for ``D = d**n`` (balanced radix digits).

The state ``s(k_0, ..., k_{n-1})`` is indexed through ``K = sum k_r d**r``
with centered digits.  Stage ``r`` (``r = 1..n``) multiplies the current
array by the twiddle factors

    omega_{d^2}(j_{r-2} k) omega_{d^3}(j_{r-3} k) ... omega_{d^r}(j_0 k),
    k = k_{n-r},

and then performs a d-point Fourier sum over ``k_{n-r}`` with kernel
``omega_d(j_{r-1} k) / sqrt(d)``.  After ``n`` stages all ``k`` digits have
been traded for ``j`` digits and the result is ``F s``.

Layout
------
Centered digits of ``J`` are the ordinary base-d digits of the storage
offset ``J + (D-1)/2`` shifted by ``(d-1)/2``, so a C-order reshape of the
amplitude array to ``(d,) * n`` puts the most significant digit first.
The intermediate after stage ``r`` is kept as a ``(d**r, d**(n-r))`` array
whose rows are the prefix ``(j_{r-1}, ..., j_0)`` and whose columns are
the remaining ``(k_{n-r-1}, ..., k_0)``, both most-significant first.

This backend cannot be used for Weyl or Wigner functions: digit-wise
addition in ``[Z(d)]^n`` carries no information about addition in Z(D).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DimensionMismatchError, InvalidModulusError
from .numtheory import (check_odd, centered, centered_range, omega,
                        radix_encode, root_table)
from .reference import OpStats, StateVector, as_amplitudes

__all__ = [
    "MAX_DIMENSION", "RadixPlan", "plan_radix", "fft_radix", "ifft_radix",
    "radix_stages", "radix_backward_stage", "fft_radix_factorized",
    "assemble_factorized", "product_state", "factorization_necessary_check",
    "radix_matrix", "stage_matrix_factor", "radix_matrix_element",
]

MAX_DIMENSION = 1 << 24


@dataclass(frozen=True, eq=False)
class RadixPlan:
    """Precomputed tables for one ``(d, n)``.

    Attributes
    ----------
    roots : tuple of ndarray
        ``roots[m - 1]`` is the table of ``omega_{d**m}``, ``m = 1..n``.
    kernel : ndarray, shape (d, d)
        ``omega_d(j k) / sqrt(d)``, rows ``j``, columns ``k``, centered order.
    twiddles : tuple
        ``twiddles[r - 1]`` has shape ``(d**(r-1), d)``: the accumulated
        twiddle product for stage ``r`` indexed by the ``j`` prefix and by
        ``k``.  Entry 0 is ``None`` (stage 1 has no twiddles).
    """

    d: int
    n: int
    D: int
    roots: tuple
    kernel: np.ndarray
    twiddles: tuple

    def __repr__(self):
        return f"RadixPlan(d={self.d}, n={self.n}, D={self.D})"


def _prefix_digits(d, r):
    """Centered digits ``j_0..j_{r-1}`` of every prefix offset, shape (d**r, r)."""
    P = centered_range(d ** r)
    out = np.empty((P.size, r), dtype=np.int64)
    x = P.copy()
    for a in range(r):
        digit = centered(x, d)
        out[:, a] = digit
        x = (x - digit) // d
    return out


def _stage_twiddles(d, r, roots):
    # literal product omega_{d^2}(j_{r-2} k) ... omega_{d^r}(j_0 k)
    k = centered_range(d)
    digits = _prefix_digits(d, r - 1)
    tw = np.ones((d ** (r - 1), d), dtype=np.complex128)
    for m in range(2, r + 1):
        mod = d ** m
        j = digits[:, r - m]
        tw *= roots[m - 1][np.outer(j, k) % mod]
    return tw


def plan_radix(d: int, n: int, max_dimension: int = MAX_DIMENSION) -> RadixPlan:
    """Build an immutable :class:`RadixPlan` for ``D = d**n``."""
    d = check_odd(d, "radix")
    if d < 3:
        raise InvalidModulusError(f"radix must be at least 3, got {d}")
    if n < 1:
        raise InvalidModulusError(f"number of digits must be >= 1, got {n}")
    D = d ** n
    if D > max_dimension:
        raise CapacityError(f"d**n = {D} exceeds the limit {max_dimension}")
    roots = tuple(root_table(d ** m) for m in range(1, n + 1))
    k = centered_range(d)
    kernel = roots[0][np.outer(k, k) % d] / np.sqrt(d)
    kernel.setflags(write=False)
    twiddles = [None]
    for r in range(2, n + 1):
        tw = _stage_twiddles(d, r, roots)
        tw.setflags(write=False)
        twiddles.append(tw)
    return RadixPlan(d, n, D, roots, kernel, tuple(twiddles))


def _check_plan(plan):
    if not isinstance(plan, RadixPlan):
        raise TypeError(f"expected a RadixPlan, got {type(plan).__name__}")


def _forward_stage(T, plan, r, stats):
    d, n = plan.d, plan.n
    T = T.reshape(d ** (r - 1), d, d ** (n - r))
    if r > 1:
        T = T * plan.twiddles[r - 1][:, :, None]
        if stats is not None:
            stats.add(plan.D, f"twiddle {r}")
    T = np.matmul(plan.kernel, T)
    if stats is not None:
        stats.add(plan.D * d, f"stage {r}")
    # new digit j_{r-1} becomes the most significant prefix digit
    return T.transpose(1, 0, 2).reshape(d ** r, d ** (n - r))


def _backward_stage(T, plan, r, stats):
    d, n = plan.d, plan.n
    T = T.reshape(d, d ** (r - 1), d ** (n - r)).transpose(1, 0, 2)
    T = np.matmul(plan.kernel.conj(), T)
    if stats is not None:
        stats.add(plan.D * d, f"stage {r}")
    if r > 1:
        T = T * plan.twiddles[r - 1].conj()[:, :, None]
        if stats is not None:
            stats.add(plan.D, f"twiddle {r}")
    return T.reshape(d ** (r - 1), d ** (n - r + 1))


def fft_radix(s, plan: RadixPlan, return_stats=False):
    """Fourier transform of ``s`` in ``n`` stages of d-point transforms.

    Multiplication count: ``n D d`` for the d-point sums plus ``(n-1) D``
    for the twiddles.
    """
    _check_plan(plan)
    x = as_amplitudes(s, plan.D)
    stats = OpStats() if return_stats else None
    T = x.reshape(1, plan.D)
    for r in range(1, plan.n + 1):
        T = _forward_stage(T, plan, r, stats)
    out = StateVector(T.reshape(plan.D))
    return (out, stats) if return_stats else out


def ifft_radix(s, plan: RadixPlan, return_stats=False):
    """Inverse of :func:`fft_radix`: the stages reversed and conjugated."""
    _check_plan(plan)
    x = as_amplitudes(s, plan.D)
    stats = OpStats() if return_stats else None
    T = x.reshape(plan.D, 1)
    for r in range(plan.n, 0, -1):
        T = _backward_stage(T, plan, r, stats)
    out = StateVector(T.reshape(plan.D))
    return (out, stats) if return_stats else out


def radix_stages(s, plan: RadixPlan) -> list:
    """Intermediates ``[s_1, ..., s_n]`` of the forward transform.

    Each is a flat length-D array in the stage layout described in the
    module docstring; ``s_n`` is the transform itself.
    """
    _check_plan(plan)
    T = as_amplitudes(s, plan.D).reshape(1, plan.D)
    out = []
    for r in range(1, plan.n + 1):
        T = _forward_stage(T, plan, r, None)
        out.append(T.reshape(plan.D).copy())
    return out


def radix_backward_stage(values, plan: RadixPlan, r: int) -> np.ndarray:
    """Undo stage ``r``: map ``s_r`` back to ``s_{r-1}`` (``s_0 = s``)."""
    _check_plan(plan)
    if not 1 <= r <= plan.n:
        raise ValueError(f"stage must be in 1..{plan.n}, got {r}")
    x = as_amplitudes(values, plan.D)
    return _backward_stage(x, plan, r, None).reshape(plan.D)


# -- factorisable states -------------------------------------------------------

def _factor_vectors(g, plan):
    g = [np.asarray(v, dtype=np.complex128) for v in g]
    if len(g) != plan.n:
        raise DimensionMismatchError(f"expected {plan.n} factors, got {len(g)}")
    for i, v in enumerate(g):
        if v.shape != (plan.d,):
            raise DimensionMismatchError(
                f"factor {i} has shape {v.shape}, expected ({plan.d},)")
    return g


def product_state(g, d: int | None = None) -> StateVector:
    """``s(k_0, ..., k_{n-1}) = g_0(k_0) ... g_{n-1}(k_{n-1})``.

    ``g[i]`` is indexed by the centered digit ``k_i``.
    """
    g = [np.asarray(v, dtype=np.complex128) for v in g]
    if d is not None and any(v.shape != (d,) for v in g):
        raise DimensionMismatchError(f"every factor must have length {d}")
    out = np.ones(1, dtype=np.complex128)
    for v in g:  # g_0 is the least significant digit, so it goes last
        out = np.kron(v, out)
    return StateVector(out)


def _single_factor(g_nu, plan, r):
    # factor for g_{n-1-r}: twiddles of stage r+1, then the d-point sum over k
    d = plan.d
    if r == 0:
        M = g_nu[None, :]
    else:
        M = plan.twiddles[r] * g_nu[None, :]
    out = M @ plan.kernel.T
    return out.T.reshape(d ** (r + 1))


def fft_radix_factorized(g, plan: RadixPlan, workers=None) -> tuple:
    """Independent factors of the transform of a product state.

    Returns ``(G_0, ..., G_{n-2}, gt_{n-1})`` where ``gt_{n-1}(j_0)`` is the
    plain d-point transform of ``g_{n-1}`` and ``G_{n-1-r}(j_0, ..., j_r)``
    is the stage-``r+1`` twiddled transform of ``g_{n-1-r}``.  Factor
    ``G_i`` is a flat array of length ``d**(n-i)`` indexed by the offset of
    the centered prefix ``j_0 + j_1 d + ...``.

    With ``workers > 1`` the factors are computed on a thread pool; the
    arithmetic per factor is the same either way.
    """
    _check_plan(plan)
    g = _factor_vectors(g, plan)
    n = plan.n
    jobs = [(g[n - 1 - r], r) for r in range(n)]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_single_factor, v, plan, r) for v, r in jobs]
            by_r = [f.result() for f in futures]
    else:
        by_r = [_single_factor(v, plan, r) for v, r in jobs]
    return tuple(reversed(by_r))


def assemble_factorized(factors, plan: RadixPlan) -> StateVector:
    """Multiply the factors of :func:`fft_radix_factorized` into ``F s``."""
    _check_plan(plan)
    n, d = plan.n, plan.d
    if len(factors) != n:
        raise DimensionMismatchError(f"expected {n} factors, got {len(factors)}")
    t = np.arange(plan.D)
    out = np.ones(plan.D, dtype=np.complex128)
    for i, F in enumerate(factors):
        size = d ** (n - i)
        F = np.asarray(F)
        if F.shape != (size,):
            raise DimensionMismatchError(
                f"factor {i} has shape {F.shape}, expected ({size},)")
        # offset of the prefix (j_0..j_{n-1-i}) is the offset of J mod size
        out *= F[t % size]
    return StateVector(out)


def factorization_necessary_check(s, d: int, n: int, tol: float = 1e-9) -> bool:
    """Necessary condition for ``s`` to be a product state over the digits.

    Builds the marginals ``|g(k_v)|^2`` (sum of ``|s|^2`` over all other
    digits) of the normalized state and tests ``|s| = prod_v |g(k_v)|``
    to within ``tol`` relative to ``max |s|``.  Passing does not prove
    that ``s`` factorizes, since phases are ignored.
    """
    D = d ** n
    x = as_amplitudes(s, D)
    x = x / np.linalg.norm(x)
    mod = np.abs(x).reshape((d,) * n)
    prob = mod ** 2
    expected = np.ones((1,) * n)
    for axis in range(n):
        others = tuple(a for a in range(n) if a != axis)
        marg = np.sqrt(prob.sum(axis=others, keepdims=True))
        expected = expected * marg
    return bool(np.max(np.abs(mod - expected)) <= tol * mod.max())


# -- matrix elements (used to check the stage factorisation) ------------------

def radix_matrix_element(J, K, d: int, n: int) -> complex:
    """``F(j|k) = d**(-n/2) omega_{d^n}[sum_m d^m sum_{r+q=m} j_r k_q]``."""
    j = radix_encode(J, d, n).digits
    k = radix_encode(K, d, n).digits
    phase = sum(d ** m * sum(j[r] * k[m - r] for r in range(m + 1))
                for m in range(n))
    return omega(d ** n, phase) / d ** (n / 2)


def stage_matrix_factor(J, K, d: int, n: int, q: int) -> complex:
    """The factor attached to ``k_q``: ``d**-0.5 prod_{m=1}^{n-q} omega_{d^m}(j_{n-q-m} k_q)``."""
    j = radix_encode(J, d, n).digits
    k = radix_encode(K, d, n).digits
    out = 1 / np.sqrt(d) + 0j
    for m in range(1, n - q + 1):
        out *= omega(d ** m, j[n - q - m] * k[q])
    return out


def radix_matrix(d: int, n: int) -> np.ndarray:
    """Dense D x D matrix with entries :func:`radix_matrix_element`.

    For ``n = 2`` this is the double sum over ``(k_0, k_1)`` written with
    ``omega_{d^2}[j_0 k_0 + d (j_1 k_0 + k_1 j_0)]``.
    """
    d = check_odd(d, "radix")
    D = d ** n
    digits = _prefix_digits(d, n)  # row t holds the digits of J = t - (D-1)/2
    phase = np.zeros((D, D), dtype=np.int64)
    for m in range(n):
        conv = np.zeros((D, D), dtype=np.int64)
        for r in range(m + 1):
            conv += np.outer(digits[:, r], digits[:, m - r])
        phase = (phase + d ** m * conv) % D
    return root_table(D)[phase] / np.sqrt(D)
