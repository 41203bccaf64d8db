"""Acceptance criteria, one test each, each printing a single PASS/FAIL line."""
import cmath
import math
import time
from fractions import Fraction

import pytest

from nball.branch import appendix_identity, principal_log
from nball.distributions import evaluate, ft_generic, ft_half_integer, ft_numeric_oracle, ft_powerlaw
from nball.exact import ExactValue
from nball.special import double_factorial
from nball.verify import MonteCarloConfig, volume_monte_carlo, volume_quadrature
from nball.volume import volume_closed_form, volume_distributional, volume_infinite_dim


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def test_1_closed_form_table(report):
    table = [
        (2, 0), (1, 2), (Fraction(4, 3), 2), (Fraction(1, 2), 4), (Fraction(8, 15), 4), (Fraction(1, 6), 6),
        (Fraction(16, 105), 6), (Fraction(1, 24), 8), (Fraction(32, 945), 8), (Fraction(1, 120), 10),
        (Fraction(64, 10395), 10), (Fraction(1, 720), 12),
    ]
    ok = True
    worst = 0.0
    for n, (q, p) in enumerate(table, start=1):
        got = volume_closed_form(n, 1)
        ok &= got == ExactValue(q, p)
        ref = float(q) * math.pi ** (p / 2)
        worst = max(worst, abs(float(got) - ref) / ref)
    report(1, "closed-form table n=1..12", ok and worst <= 1e-12, f"max float rel err {worst:.1e}")


def test_2_pipeline_equivalence(report):
    bad = [
        (n, r)
        for n in range(1, 21)
        for r in (Fraction(1, 2), 1, 2)
        if volume_distributional(n, r) != volume_closed_form(n, r)
    ]
    report(2, "distributional == closed form, n=1..20, r in {1/2,1,2}", not bad, f"mismatches {bad}")


def test_3_quadrature_oracle(report):
    t0 = time.perf_counter()
    worst_rel = worst_imag = 0.0
    for n in range(1, 7):
        rep = volume_quadrature(n)
        ref = float(volume_closed_form(n))
        worst_rel = max(worst_rel, abs(rep.value - ref) / ref)
        worst_imag = max(worst_imag, *(abs(p["integral_imag"]) for p in rep.diagnostics["per_eps"]))
    elapsed = time.perf_counter() - t0
    ok = worst_rel <= 1e-3 and worst_imag <= 1e-6 and elapsed <= 60
    report(3, "quadrature n=1..6", ok, f"rel {worst_rel:.1e} imag {worst_imag:.1e} time {elapsed:.1f}s")


def test_4_monte_carlo_oracle(report):
    t0 = time.perf_counter()
    cfg = MonteCarloConfig(samples=1_000_000, seed=20240917)
    ok = True
    worst = 0.0
    for n in range(2, 9):
        a = volume_monte_carlo(n, 1.0, cfg)
        b = volume_monte_carlo(n, 1.0, cfg)
        ref = float(volume_closed_form(n))
        z = abs(a.value - ref) / a.diagnostics["stderr"]
        worst = max(worst, z)
        ok &= z <= 3 and a.value == b.value
    elapsed = time.perf_counter() - t0
    report(4, "monte carlo n=2..8 within 3 sigma, deterministic", ok and elapsed <= 30,
           f"max |z| {worst:.2f} time {elapsed:.1f}s (two runs)")


def test_5_infinite_dimensional(report):
    vals = {r: volume_infinite_dim(r) for r in (1, 2, 10)}
    ok = all(v == ExactValue(Fraction(1, r), -2) == volume_closed_form(-1, r) for r, v in vals.items())
    ok &= float(vals[1]) > float(vals[2]) > float(vals[10])
    report(5, "l2(C) ball volume = 1/(pi r) = closed(-1, r)", ok, ", ".join(f"r={r}: {v}" for r, v in vals.items()))


def test_6_appendix_identity(report):
    worst = max(abs(appendix_identity(Fraction(2 * j + 1, 2)) - 1) for j in range(16))
    report(6, "appendix identity m=1/2..31/2", worst <= 1e-12, f"max |value-1| {worst:.1e}")


def test_7_double_factorials(report):
    ok = [double_factorial(-1), double_factorial(-3), double_factorial(-5)] == [1, -1, Fraction(1, 3)]
    ok &= all(double_factorial(-n) * double_factorial(n) == (-1) ** ((n - 1) // 2) * n for n in range(1, 20, 2))
    report(7, "double factorial examples and reflection", ok)


def test_8_transform_specialization(report):
    points = [-2, -1, -0.5, 0.5, 1, 2]
    oracle_err = max(
        abs(evaluate(ft_powerlaw(a), k) - ft_numeric_oracle(a, k)) for a in (-0.5, -0.75) for k in points
    )
    consistency = max(
        abs(evaluate(ft_generic(a), k) - evaluate(ft_half_integer(-a), k)) for a in (-0.5,) for k in points
    )
    ok = oracle_err <= 1e-6 and consistency <= 1e-10
    report(8, "transform vs numeric oracle and half-integer row", ok,
           f"oracle {oracle_err:.1e} consistency {consistency:.1e}")


def test_9_branch_pinning(report):
    cases = [(-1, -1j * math.pi), (1j, 1j * math.pi / 2), (-1j, -1j * math.pi / 2)]
    worst = max(abs(principal_log(z) - w) for z, w in cases)
    # the (-pi, pi] convention gives +i pi at -1, so these checks tell the two apart
    discriminates = abs(cmath.log(-1) - cases[0][1]) > 1
    report(9, "branch [-pi, pi) log identities", worst <= 1e-15 and discriminates, f"max err {worst:.1e}")
