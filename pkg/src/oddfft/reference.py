"""State vectors and the brute-force finite Fourier transform.

The direct transform is the O(D^2) matrix-vector product with kernel
``omega_D(JK) / sqrt(D)``.  It is the ground truth every fast path in this
package is compared against, so it shares no code with them beyond the
root-of-unity tables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatchError
from .numtheory import (CenteredResidue, centered_range, check_odd,
                        phase_table, root_table, _as_residue)

__all__ = [
    "StateVector", "OpStats", "as_amplitudes", "dft_matrix_element",
    "dft_matrix", "dft_direct", "idft_direct", "random_state",
    "delta_state", "uniform_state",
]

# rows of the kernel materialised at once by dft_direct (complex128 elements)
_BLOCK_ELEMENTS = 1 << 20


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitudes ``s(J)`` of a state in H(D), D odd.

    Position ``t`` of :attr:`amplitudes` holds ``s(J)`` for the centered
    index ``J = t - (D-1)/2``.  The array is copied and made read-only.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=np.complex128)
        if a.ndim != 1:
            raise DimensionMismatchError(
                f"amplitudes must be one-dimensional, got shape {a.shape}")
        check_odd(a.size, "dimension")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    @property
    def D(self) -> int:
        return self.amplitudes.size

    @property
    def indices(self) -> np.ndarray:
        """Centered indices ``J`` aligned with :attr:`amplitudes`."""
        return centered_range(self.D)

    def __len__(self):
        return self.D

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.amplitudes
        return self.amplitudes.astype(dtype)

    def amplitude(self, J) -> complex:
        """``s(J)`` for ``J`` in Z(D); any integer representative works."""
        J = _as_residue(J, self.D)
        return complex(self.amplitudes[J.offset])

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol=1e-12) -> bool:
        return abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0) <= tol

    def normalized(self) -> "StateVector":
        return StateVector(self.amplitudes / self.norm())

    def __repr__(self):
        return f"StateVector(D={self.D}, norm={self.norm():.6g})"


@dataclass
class OpStats:
    """Complex multiplications performed by one transform call.

    ``stages`` holds one ``(label, count)`` entry per counted step, so the
    total can be broken down the same way the algorithms are written.
    """

    multiplications: int = 0
    stages: list = field(default_factory=list)

    def add(self, count, label=""):
        count = int(count)
        self.multiplications += count
        self.stages.append((label, count))

    def __iadd__(self, other):
        self.multiplications += other.multiplications
        self.stages.extend(other.stages)
        return self


def as_amplitudes(s, D=None) -> np.ndarray:
    """Complex amplitude array of a StateVector or array-like.

    Raises DimensionMismatchError if ``D`` is given and differs.
    """
    if isinstance(s, StateVector):
        x = s.amplitudes
    else:
        x = np.asarray(s, dtype=np.complex128)
        if x.ndim != 1:
            raise DimensionMismatchError(
                f"state must be one-dimensional, got shape {x.shape}")
        check_odd(x.size, "dimension")
    if D is not None and x.size != D:
        raise DimensionMismatchError(f"state has dimension {x.size}, expected {D}")
    return x


@lru_cache(maxsize=16)
def _scaled_roots(D):
    # 1/sqrt(D) folded into the table so the kernel product is the only multiply
    t = root_table(D) / np.sqrt(D)
    t.setflags(write=False)
    return t


def dft_matrix_element(J, K, D: int) -> complex:
    """``F(J, K) = omega_D(JK) / sqrt(D)``."""
    D = check_odd(D)
    if isinstance(J, CenteredResidue) and isinstance(K, CenteredResidue) \
            and J.modulus != K.modulus:
        raise DimensionMismatchError(
            f"J is in Z({J.modulus}) but K is in Z({K.modulus})")
    J = _as_residue(J, D)
    K = _as_residue(K, D)
    return complex(_scaled_roots(D)[(J.value * K.value) % D])


def dft_matrix(D: int, inverse=False) -> np.ndarray:
    """The full D x D Fourier matrix, rows and columns in centered order."""
    D = check_odd(D)
    J = centered_range(D)
    sign = -1 if inverse else 1
    return phase_table(J, J, D, sign, _scaled_roots(D))


def _direct(x, sign, stats):
    D = x.size
    J = centered_range(D)
    table = _scaled_roots(D)
    out = np.empty(D, dtype=np.complex128)
    rows = max(1, _BLOCK_ELEMENTS // D)
    for start in range(0, D, rows):
        kernel = phase_table(J[start:start + rows], J, D, sign, table)
        out[start:start + rows] = kernel @ x
    if stats is not None:
        stats.add(D * D, "kernel")
    return out


def dft_direct(s, return_stats=False):
    """Direct transform ``s~(J) = D**-0.5 * sum_K omega_D(JK) s(K)``.

    Parameters
    ----------
    s : StateVector or array_like
        Input amplitudes in centered order.
    return_stats : bool
        Also return an :class:`OpStats` with the multiplication count
        (always exactly ``D**2``).

    Returns
    -------
    StateVector, or (StateVector, OpStats)
    """
    x = as_amplitudes(s)
    stats = OpStats() if return_stats else None
    out = StateVector(_direct(x, 1, stats))
    return (out, stats) if return_stats else out


def idft_direct(s, return_stats=False):
    """Inverse of :func:`dft_direct` (kernel ``omega_D(-JK) / sqrt(D)``)."""
    x = as_amplitudes(s)
    stats = OpStats() if return_stats else None
    out = StateVector(_direct(x, -1, stats))
    return (out, stats) if return_stats else out


def random_state(D: int, seed=None) -> StateVector:
    """Normalized state with i.i.d. standard complex Gaussian components."""
    D = check_odd(D, "dimension")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(D) + 1j * rng.standard_normal(D)
    return StateVector(z / np.linalg.norm(z))


def delta_state(D: int, J=0) -> StateVector:
    """Position eigenstate ``|X; J>``."""
    D = check_odd(D, "dimension")
    x = np.zeros(D, dtype=np.complex128)
    x[_as_residue(J, D).offset] = 1.0
    return StateVector(x)


def uniform_state(D: int) -> StateVector:
    D = check_odd(D, "dimension")
    return StateVector(np.full(D, 1 / np.sqrt(D), dtype=np.complex128))
