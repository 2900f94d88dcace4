"""Independent brute-force oracles shared by the tests.

Nothing here uses the package's root tables or index maps: every value is a
plain double loop over centered integers with ``cmath.exp``.
"""
import cmath
import math

import numpy as np
import pytest


def w(D, x):
    return cmath.exp(2j * math.pi * x / D)


def cent(x, D):
    h = (D - 1) // 2
    return (x + h) % D - h


def loop_dft(x, sign=1):
    D = len(x)
    h = (D - 1) // 2
    out = np.zeros(D, dtype=complex)
    for J in range(-h, h + 1):
        acc = 0j
        for K in range(-h, h + 1):
            acc += w(D, sign * J * K) * x[K + h]
        out[J + h] = acc / math.sqrt(D)
    return out


def loop_weyl(x):
    D = len(x)
    h = (D - 1) // 2
    inv2 = (D + 1) // 2
    out = np.zeros((D, D), dtype=complex)
    for A in range(-h, h + 1):
        for B in range(-h, h + 1):
            acc = 0j
            for K in range(-h, h + 1):
                acc += w(D, A * K) * x[K + h] * x[cent(B + K, D) + h].conjugate()
            out[A + h, B + h] = w(D, inv2 * A * B) * acc
    return out


def loop_wigner(x):
    D = len(x)
    h = (D - 1) // 2
    out = np.zeros((D, D), dtype=complex)
    for A in range(-h, h + 1):
        for B in range(-h, h + 1):
            acc = 0j
            for K in range(-h, h + 1):
                acc += w(D, -2 * A * K) * x[K + h] * x[cent(2 * B - K, D) + h].conjugate()
            out[A + h, B + h] = w(D, 2 * A * B) * acc
    return out


def rand_vec(D, seed):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(D) + 1j * rng.standard_normal(D)
    return z / np.linalg.norm(z)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
