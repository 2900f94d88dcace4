import dataclasses
import time

from oddfft.radix import plan_radix
from oddfft.verify import Check, check_radix_oracle, verify_all


def test_default_budget_passes_quickly():
    t0 = time.perf_counter()
    report = verify_all()
    assert time.perf_counter() - t0 < 300
    assert report.passed, report.render()
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names)) >= 15
    assert all("max err" in line for line in report.render().splitlines()[:-1])


def test_deterministic():
    a = [c.max_error for c in verify_all(105).checks]
    b = [c.max_error for c in verify_all(105).checks]
    assert a == b


def test_tampered_twiddles_fail_the_radix_check():
    def tampered(d, n):
        p = plan_radix(d, n)
        return dataclasses.replace(p, twiddles=tuple(
            None if t is None else t.conj() for t in p.twiddles))
    assert check_radix_oracle(315).passed
    assert not check_radix_oracle(315, tampered).passed


def test_check_line():
    assert Check("x", 2.0, 1.0).line().startswith("FAIL")
    assert Check("x", 0.0, 0.0).passed
