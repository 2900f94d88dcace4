"""Centered modular arithmetic, balanced radix digits and CRT index maps.

Every element of Z(D) (D odd) is held by its centered representative in
``[-(D-1)/2, (D-1)/2]``.  With that convention the storage offset of an
element is ``J + (D-1)/2``, and the balanced base-d digits of ``J`` are the
ordinary base-d digits of the offset, each shifted by ``-(d-1)/2``.  The FFT
backends rely on this to reshape a state vector without any index tables.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (CoprimalityError, DimensionMismatchError,
                     InvalidDigitError, InvalidModulusError, NoInverseError)

__all__ = [
    "CenteredResidue", "RadixDigits", "CrtBasis",
    "centered", "centered_reduce", "centered_range", "mod_inverse",
    "half_inverse", "radix_encode", "radix_decode", "crt_basis",
    "crt_encode", "crt_decode", "crt_encode_hat", "crt_decode_hat",
    "omega", "root_table", "phase_table", "radix_kernel", "crt_kernel", "coprime_factors",
]


def check_odd(D, what="modulus"):
    if isinstance(D, bool) or not isinstance(D, (int, np.integer)):
        raise InvalidModulusError(f"{what} must be an integer, got {D!r}")
    if D < 1 or D % 2 == 0:
        raise InvalidModulusError(f"{what} must be odd and positive, got {D}")
    return int(D)


def centered(x, D):
    """Centered representative of ``x`` mod odd ``D`` (ints or int arrays)."""
    h = (D - 1) // 2
    return (x + h) % D - h


def centered_range(D):
    """All centered elements of Z(D) in ascending order, as an int64 array."""
    h = (D - 1) // 2
    return np.arange(-h, h + 1, dtype=np.int64)


@dataclass(frozen=True)
class CenteredResidue:
    """An element of Z(D), D odd, stored as its centered representative.

    Any integer is accepted for ``value``; it is reduced on construction so
    that equal residue classes compare equal.
    """

    value: int
    modulus: int

    def __post_init__(self):
        D = check_odd(self.modulus)
        object.__setattr__(self, "modulus", D)
        object.__setattr__(self, "value", int(centered(int(self.value), D)))

    @property
    def offset(self) -> int:
        """Storage position ``value + (modulus-1)/2``."""
        return self.value + (self.modulus - 1) // 2

    def _coerce(self, other):
        if isinstance(other, CenteredResidue):
            if other.modulus != self.modulus:
                raise DimensionMismatchError(
                    f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return CenteredResidue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return CenteredResidue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return CenteredResidue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return CenteredResidue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return CenteredResidue(-self.value, self.modulus)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"CenteredResidue({self.value}, {self.modulus})"


ResidueLike = Union[int, CenteredResidue]


def centered_reduce(x: int, D: int) -> CenteredResidue:
    """Reduce ``x`` into the centered period of Z(D).

    >>> centered_reduce(8, 15).value
    -7
    """
    return CenteredResidue(x, D)


def _as_residue(J: ResidueLike, D: int) -> CenteredResidue:
    if isinstance(J, CenteredResidue):
        if J.modulus != D:
            raise DimensionMismatchError(
                f"expected an element of Z({D}), got one of Z({J.modulus})")
        return J
    return CenteredResidue(int(J), D)


def mod_inverse(x: int, m: int) -> int:
    """Inverse of ``x`` modulo ``m`` as an integer in ``[0, m)``."""
    if m < 1:
        raise InvalidModulusError(f"modulus must be positive, got {m}")
    try:
        return pow(int(x), -1, int(m))
    except ValueError:
        raise NoInverseError(
            f"{x} has no inverse mod {m} (gcd = {math.gcd(x, m)})") from None


def half_inverse(D: int) -> int:
    """The inverse of 2 in Z(D), which is ``(D+1)/2`` for odd D."""
    D = check_odd(D)
    return (D + 1) // 2


# -- balanced radix digits ---------------------------------------------------

@dataclass(frozen=True)
class RadixDigits:
    """Balanced base-``d`` digits ``(j_0, ..., j_{n-1})``, least significant first."""

    d: int
    digits: tuple

    def __post_init__(self):
        d = check_odd(self.d, "radix")
        if d < 3:
            raise InvalidModulusError(f"radix must be at least 3, got {d}")
        digits = tuple(int(j) for j in self.digits)
        if not digits:
            raise InvalidDigitError("at least one digit is required")
        h = (d - 1) // 2
        for r, j in enumerate(digits):
            if not -h <= j <= h:
                raise InvalidDigitError(
                    f"digit {r} = {j} outside [{-h}, {h}] for d = {d}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "digits", digits)

    @property
    def n(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)


def radix_encode(J: ResidueLike, d: int, n: int) -> RadixDigits:
    """Balanced base-``d`` expansion of ``J`` in Z(d**n).

    Digits are the centered remainders of repeated division by ``d``.
    """
    d = check_odd(d, "radix")
    if n < 1:
        raise InvalidModulusError(f"number of digits must be >= 1, got {n}")
    x = _as_residue(J, d ** n).value
    digits = []
    for _ in range(n):
        r = centered(x, d)
        digits.append(r)
        x = (x - r) // d
    return RadixDigits(d, tuple(digits))


def radix_decode(digits: RadixDigits | Sequence[int], d: int | None = None) -> CenteredResidue:
    """Inverse of :func:`radix_encode`: ``J = sum_r j_r d**r`` in Z(d**n)."""
    if not isinstance(digits, RadixDigits):
        if d is None:
            raise TypeError("d is required when digits is a plain sequence")
        digits = RadixDigits(d, tuple(digits))
    d = digits.d
    J = sum(j * d ** r for r, j in enumerate(digits.digits))
    return CenteredResidue(J, d ** digits.n)


# -- Chinese remainder maps ---------------------------------------------------

@dataclass(frozen=True)
class CrtBasis:
    """Pairwise-coprime odd factors together with their CRT constants.

    Attributes
    ----------
    factors : tuple of int
        ``d_0, ..., d_{n-1}``.
    D : int
        Product of the factors.
    a : tuple of int
        ``a_nu = D / d_nu``.
    b : tuple of int
        ``b_nu`` in ``[0, d_nu)`` with ``a_nu * b_nu = 1 (mod d_nu)``.
    c : tuple of int
        The idempotents ``c_nu = a_nu * b_nu mod D``, in ``[0, D)``.
    """

    factors: tuple
    D: int
    a: tuple
    b: tuple
    c: tuple

    @classmethod
    def from_factors(cls, factors: Iterable[int]) -> "CrtBasis":
        factors = tuple(int(f) for f in factors)
        if not factors:
            raise InvalidModulusError("at least one factor is required")
        # parity before coprimality: (3, 6) must report the even factor
        for f in factors:
            check_odd(f, "factor")
            if f < 3:
                raise InvalidModulusError(f"factors must be >= 3, got {f}")
        for i, f in enumerate(factors):
            for g in factors[i + 1:]:
                common = math.gcd(f, g)
                if common != 1:
                    raise CoprimalityError(f, g, common)
        D = math.prod(factors)
        a = tuple(D // f for f in factors)
        b = tuple(mod_inverse(av % f, f) for av, f in zip(a, factors))
        c = tuple((av * bv) % D for av, bv in zip(a, b))
        basis = cls(factors, D, a, b, c)
        if not basis.idempotent_identities_hold():
            raise ArithmeticError(f"CRT constants inconsistent for {factors}")
        return basis

    @property
    def n(self) -> int:
        return len(self.factors)

    def idempotent_identities_hold(self) -> bool:
        """Check ``a_v a_u``, ``c_v c_u`` and ``a_v c_u`` products mod D."""
        D, a, c = self.D, self.a, self.c
        for v in range(self.n):
            if (a[v] * self.b[v]) % self.factors[v] != 1 % self.factors[v]:
                return False
            for u in range(self.n):
                same = v == u
                if (a[v] * a[u]) % D != ((a[v] ** 2) % D if same else 0):
                    return False
                if (c[v] * c[u]) % D != (c[v] if same else 0):
                    return False
                if (a[v] * c[u]) % D != (a[v] % D if same else 0):
                    return False
        return True


def crt_basis(factors: Iterable[int]) -> CrtBasis:
    """Build a :class:`CrtBasis`; raises on even or non-coprime factors."""
    return CrtBasis.from_factors(factors)


def crt_encode(J: ResidueLike, basis: CrtBasis) -> tuple:
    """Residues ``j_nu = J mod d_nu`` (centered) of ``J`` in Z(D)."""
    J = _as_residue(J, basis.D)
    return tuple(CenteredResidue(J.value, f) for f in basis.factors)


def _residue_values(residues, basis):
    residues = tuple(residues)
    if len(residues) != basis.n:
        raise DimensionMismatchError(
            f"expected {basis.n} residues, got {len(residues)}")
    return [_as_residue(r, f).value for r, f in zip(residues, basis.factors)]


def crt_decode(residues, basis: CrtBasis) -> CenteredResidue:
    """``J = sum_nu j_nu c_nu`` in Z(D)."""
    vals = _residue_values(residues, basis)
    return CenteredResidue(sum(j * c for j, c in zip(vals, basis.c)), basis.D)


def crt_encode_hat(J: ResidueLike, basis: CrtBasis) -> tuple:
    """The second CRT map: ``jhat_nu = J b_nu mod d_nu`` (centered)."""
    J = _as_residue(J, basis.D)
    return tuple(CenteredResidue(J.value * bv, f)
                 for bv, f in zip(basis.b, basis.factors))


def crt_decode_hat(residues, basis: CrtBasis) -> CenteredResidue:
    """``J = sum_nu jhat_nu a_nu`` in Z(D)."""
    vals = _residue_values(residues, basis)
    return CenteredResidue(sum(j * a for j, a in zip(vals, basis.a)), basis.D)


# -- roots of unity -----------------------------------------------------------

def omega(r: int, s: int) -> complex:
    """``exp(2 pi i s / r)``, with the exponent reduced mod ``r`` first."""
    if r < 1:
        raise ValueError(f"omega needs r >= 1, got {r}")
    return cmath.exp(2j * math.pi * (int(s) % r) / r)


@lru_cache(maxsize=64)
def _root_table(r):
    table = np.exp(2j * np.pi * np.arange(r) / r)
    table.setflags(write=False)
    return table


def root_table(r: int) -> np.ndarray:
    """Read-only array ``exp(2 pi i t / r)`` for ``t = 0..r-1``.

    Look up ``omega(r, s)`` as ``root_table(r)[s % r]``.
    """
    if r < 1:
        raise ValueError(f"root table needs r >= 1, got {r}")
    return _root_table(int(r))


def phase_table(rows, cols, D: int, c: int = 1, roots=None) -> np.ndarray:
    """``omega_D(c * r * q)`` for every ``r`` in ``rows`` and ``q`` in ``cols``.

    ``roots`` replaces ``root_table(D)`` (for instance a rescaled copy).
    """
    rows = np.asarray(rows)
    u = (c * np.asarray(cols, dtype=np.int64)) % D
    # |r| * u < D^2 / 2, so 32-bit arithmetic is exact (and faster) here
    dtype = np.int32 if D <= 65535 else np.int64
    e = np.multiply.outer(rows.astype(dtype), u.astype(dtype)) % D
    return (root_table(D) if roots is None else roots)[e]


def radix_kernel(J: ResidueLike, K: ResidueLike, d: int, n: int) -> complex:
    """``omega_D(JK)`` assembled from digit products, ``D = d**n``.

    The term ``j_r k_q`` carries weight ``d**(r+q)``, so it contributes
    ``omega_{d**(n-r-q)}(j_r k_q)`` when ``r + q < n`` and nothing otherwise.
    """
    j = radix_encode(J, d, n).digits
    k = radix_encode(K, d, n).digits
    out = 1.0 + 0j
    for m in range(n):
        conv = sum(j[r] * k[m - r] for r in range(m + 1))
        out *= omega(d ** (n - m), conv)
    return out


def crt_kernel(J: ResidueLike, K: ResidueLike, basis: CrtBasis) -> complex:
    """``omega_D(JK)`` as ``prod_nu omega_{d_nu}(j_nu b_nu k_nu)``."""
    j = crt_encode(J, basis)
    k = crt_encode(K, basis)
    out = 1.0 + 0j
    for jv, kv, bv, f in zip(j, k, basis.b, basis.factors):
        out *= omega(f, jv.value * bv * kv.value)
    return out


def coprime_factors(D: int) -> tuple:
    """Split odd ``D`` into its prime-power factors by trial division.

    >>> coprime_factors(315)
    (9, 5, 7)
    """
    D = check_odd(D)
    out = []
    rest = D
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            q = 1
            while rest % p == 0:
                rest //= p
                q *= p
            out.append(q)
        p += 2
    if rest > 1:
        out.append(rest)
    return tuple(out)
