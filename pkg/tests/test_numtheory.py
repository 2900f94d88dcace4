import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from oddfft import (CenteredResidue, CoprimalityError, DimensionMismatchError,
                    InvalidDigitError, InvalidModulusError, NoInverseError,
                    RadixDigits, centered_reduce, coprime_factors, crt_basis,
                    crt_decode, crt_decode_hat, crt_encode, crt_encode_hat,
                    half_inverse, mod_inverse, omega, radix_decode, radix_encode)
from oddfft.numtheory import (centered_range, crt_kernel, phase_table,
                              radix_kernel, root_table)

from conftest import w

odd = st.integers(min_value=0, max_value=400).map(lambda k: 2 * k + 1)


@pytest.mark.parametrize("x, D, expected", [(8, 15, -7), (4 + 4, 9, -1), (11, 15, -4),
                                            (0, 1, 0), (-8, 15, 7), (7, 15, 7)])
def test_centered_reduce_examples(x, D, expected):
    assert centered_reduce(x, D).value == expected


@pytest.mark.parametrize("D", [0, -3, 4, 10])
def test_centered_reduce_rejects_bad_modulus(D):
    with pytest.raises(InvalidModulusError):
        centered_reduce(1, D)


@given(st.integers(-10**6, 10**6), odd)
def test_centered_reduce_property(x, D):
    r = centered_reduce(x, D)
    assert (r.value - x) % D == 0
    assert -(D - 1) // 2 <= r.value <= (D - 1) // 2


@given(st.integers(-1000, 1000), st.integers(-1000, 1000), odd)
def test_residue_equality_is_class_equality(x, y, D):
    assert (CenteredResidue(x, D) == CenteredResidue(y, D)) == ((x - y) % D == 0)


def test_residue_arithmetic_and_mismatch():
    a, b = CenteredResidue(4, 9), CenteredResidue(4, 9)
    assert (a + b).value == -1
    assert (a * b).value == -2
    assert (-a).value == -4
    assert (a - 5).value == -1
    assert (3 - a).value == -1
    assert a.offset == 8
    with pytest.raises(DimensionMismatchError):
        a + CenteredResidue(1, 15)


@pytest.mark.parametrize("x, m, expected", [(5, 3, 2), (1, 7, 1), (2, 15, 8), (3, 5, 2)])
def test_mod_inverse_examples(x, m, expected):
    assert mod_inverse(x, m) == expected


@pytest.mark.parametrize("x, m", [(3, 15), (0, 7), (6, 9)])
def test_mod_inverse_no_inverse(x, m):
    with pytest.raises(NoInverseError):
        mod_inverse(x, m)


@given(st.integers(1, 10**6), st.integers(2, 10**6))
def test_mod_inverse_property(x, m):
    if math.gcd(x, m) != 1:
        with pytest.raises(NoInverseError):
            mod_inverse(x, m)
    else:
        y = mod_inverse(x, m)
        assert 0 <= y < m and (x * y) % m == 1


@pytest.mark.parametrize("D, expected", [(15, 8), (9, 5), (483, 242), (1, 1)])
def test_half_inverse(D, expected):
    assert half_inverse(D) == expected
    assert (2 * expected) % D == 1 % D


def test_half_inverse_even():
    with pytest.raises(InvalidModulusError):
        half_inverse(10)


# -- radix digits --------------------------------------------------------------

def test_worked_example_d3():
    assert radix_decode([1, 1], 3).value == 4
    assert radix_decode([-1, -1], 3).value == -4
    assert radix_encode(4, 3, 2).digits == (1, 1)
    assert radix_encode(-4, 3, 2).digits == (-1, -1)
    # 4 + 4 = -1 in Z(9), but the digit-wise sum (2, 2) is not even a digit pair
    assert (CenteredResidue(4, 9) + 4).value == -1
    assert radix_encode(-1, 3, 2).digits == (-1, 0)


@pytest.mark.parametrize("d, n", [(3, 1), (3, 2), (3, 3), (5, 3), (7, 2), (3, 6), (9, 2)])
def test_radix_round_trip_exhaustive(d, n):
    for J in centered_range(d ** n).tolist():
        digits = radix_encode(J, d, n)
        assert sum(j * d ** r for r, j in enumerate(digits)) == J
        assert radix_decode(digits).value == J


@given(st.integers(1, 7).map(lambda k: 2 * k + 1), st.integers(1, 4), st.data())
def test_radix_encode_decode_property(d, n, data):
    D = d ** n
    J = data.draw(st.integers(-(D - 1) // 2, (D - 1) // 2))
    assert radix_decode(radix_encode(J, d, n)).value == J
    digits = data.draw(st.lists(st.integers(-(d - 1) // 2, (d - 1) // 2),
                                min_size=n, max_size=n))
    assert list(radix_encode(radix_decode(digits, d), d, n).digits) == digits


def test_radix_digits_validation():
    with pytest.raises(InvalidDigitError):
        RadixDigits(3, (2, 0))
    with pytest.raises(InvalidModulusError):
        RadixDigits(4, (0,))
    with pytest.raises(DimensionMismatchError):
        radix_encode(CenteredResidue(1, 15), 3, 2)
    with pytest.raises(TypeError):
        radix_decode([0, 1])


def test_radix_map_is_not_additive():
    # exhaustively look for J, K whose digit sum does not encode J + K
    d, n = 3, 2
    found = []
    for J, K in itertools.product(centered_range(9).tolist(), repeat=2):
        sums = [a + b for a, b in zip(radix_encode(J, d, n), radix_encode(K, d, n))]
        if any(abs(s) > 1 for s in sums) or \
                sum(s * d ** r for r, s in enumerate(sums)) % 9 != (J + K) % 9:
            found.append((J, K))
    assert (4, 4) in found


# -- CRT -----------------------------------------------------------------------

def test_worked_example_3_5():
    b = crt_basis((3, 5))
    assert (b.a, b.b, b.c, b.D) == ((5, 3), (2, 2), (10, 6), 15)
    j = crt_encode(11, b)
    assert [r.value for r in j] == [-1, 1]
    assert [r.value % f for r, f in zip(j, b.factors)] == [2, 1]
    jhat = crt_encode_hat(11, b)
    assert [(r.value - e) % f for r, e, f in zip(jhat, (4, 2), b.factors)] == [0, 0]
    assert crt_decode(j, b).value == -4
    assert crt_decode_hat(jhat, b).value == -4
    # non-centered residues are accepted on input
    assert crt_decode([2, 1], b).value == crt_decode_hat([4, 2], b).value == -4


@pytest.mark.parametrize("factors", [(3, 5), (3, 7), (5, 7), (5, 9), (3, 5, 7),
                                     (5, 7, 11), (3, 7, 23), (9, 5, 7), (53, 55)])
def test_crt_round_trips_and_idempotents(factors):
    b = crt_basis(factors)
    assert b.idempotent_identities_hold()
    for v, (a, bb, f) in enumerate(zip(b.a, b.b, b.factors)):
        assert (a * bb) % f == 1
        for u in range(b.n):
            assert (b.c[v] * b.c[u]) % b.D == (b.c[v] if u == v else 0)
            assert (b.a[v] * b.c[u]) % b.D == (b.a[v] if u == v else 0)
            assert (b.a[v] * b.a[u]) % b.D == ((b.a[v] ** 2) % b.D if u == v else 0)
    if b.D <= 1000:
        for J in centered_range(b.D).tolist():
            j = crt_encode(J, b)
            assert crt_decode(j, b).value == J
            jh = crt_encode_hat(J, b)
            assert crt_decode_hat(jh, b).value == J
            for jv, jhv, bv, av, f in zip(j, jh, b.b, b.a, b.factors):
                assert (jhv.value - jv.value * bv) % f == 0
                assert (jv.value - jhv.value * av) % f == 0


def test_crt_hat_round_trip_random_105():
    import random
    b = crt_basis((3, 5, 7))
    gen = random.Random(7)
    for _ in range(50):
        J = gen.randint(-52, 52)
        assert sum(r.value * a for r, a in zip(crt_encode_hat(J, b), b.a)) % 105 == J % 105


def test_crt_is_a_ring_isomorphism():
    b = crt_basis((3, 5, 7))
    for J, K in itertools.product(range(-52, 53, 3), range(-52, 53, 5)):
        s = crt_encode(J + K, b)
        p = crt_encode(J * K, b)
        for sv, pv, jv, kv in zip(s, p, crt_encode(J, b), crt_encode(K, b)):
            assert sv == jv + kv
            assert pv == jv * kv


def test_crt_errors():
    with pytest.raises(CoprimalityError) as exc:
        crt_basis((3, 9))
    assert exc.value.pair == (3, 9) and exc.value.gcd == 3
    with pytest.raises(CoprimalityError):
        crt_basis((5, 7, 15))
    # parity is checked before coprimality
    with pytest.raises(InvalidModulusError):
        crt_basis((3, 6))
    with pytest.raises(InvalidModulusError):
        crt_basis((1, 5))
    with pytest.raises(DimensionMismatchError):
        crt_decode([1, 2, 3], crt_basis((3, 5)))


# -- roots and kernels ------------------------------------------------------------

def test_omega_and_root_table():
    assert omega(4, 1) == pytest.approx(1j)
    assert omega(7, 0) == 1
    assert abs(omega(9, 3) - omega(3, 1)) < 1e-15
    t = root_table(27)
    assert not t.flags.writeable
    for s in range(27):
        for u in range(27):
            assert abs(t[s] * t[u] - t[(s + u) % 27]) < 1e-12
    with pytest.raises(ValueError):
        omega(0, 1)


def test_phase_table_matches_omega():
    D = 35
    J = centered_range(D)
    T = phase_table(J, J, D, c=-2)
    for a in range(D):
        for b in range(0, D, 4):
            assert abs(T[a, b] - w(D, -2 * J[a] * J[b])) < 1e-12


@pytest.mark.parametrize("d, n", [(3, 2), (3, 3)])
def test_radix_kernel_factorisation_exhaustive(d, n):
    D = d ** n
    h = (D - 1) // 2
    err = max(abs(radix_kernel(J, K, d, n) - w(D, J * K))
              for J in range(-h, h + 1) for K in range(-h, h + 1))
    assert err < 1e-12


@pytest.mark.parametrize("factors", [(3, 5), (3, 5, 7)])
def test_crt_kernel_factorisation_exhaustive(factors):
    b = crt_basis(factors)
    h = (b.D - 1) // 2
    err = max(abs(crt_kernel(J, K, b) - w(b.D, J * K))
              for J in range(-h, h + 1) for K in range(-h, h + 1))
    assert err < 1e-12


def test_crt_kernel_via_hat_residues_d15():
    b = crt_basis((3, 5))
    for J in range(-7, 8):
        for K in range(-7, 8):
            jh = crt_encode_hat(J, b)
            k = crt_encode(K, b)
            prod = w(3, jh[0].value * k[0].value) * w(5, jh[1].value * k[1].value)
            assert abs(prod - w(15, J * K)) < 1e-12


@settings(max_examples=50)
@given(odd.filter(lambda D: D > 1))
def test_coprime_factors_property(D):
    f = coprime_factors(D)
    assert math.prod(f) == D
    for x, y in itertools.combinations(f, 2):
        assert math.gcd(x, y) == 1


def test_coprime_factors_examples():
    assert coprime_factors(315) == (9, 5, 7)
    assert coprime_factors(483) == (3, 7, 23)
    assert coprime_factors(27) == (27,)
