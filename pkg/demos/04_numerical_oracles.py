"""Independent numerical estimates: regularized oscillatory integral and Monte Carlo.

Run: python3 demos/04_numerical_oracles.py
"""
import time

from nball import MonteCarloConfig, volume_closed_form, volume_monte_carlo, volume_quadrature

print(f"{'n':>2} {'exact':>14} {'quadrature':>14} {'rel err':>9} {'monte carlo':>14} {'z':>6}")
t0 = time.perf_counter()
for n in range(1, 9):
    exact = float(volume_closed_form(n))
    quad = volume_quadrature(n).value if n <= 6 else float("nan")
    mc = volume_monte_carlo(n, 1.0, MonteCarloConfig(samples=1_000_000))
    z = (mc.value - exact) / mc.diagnostics["stderr"] if mc.diagnostics["stderr"] else 0.0
    print(f"{n:>2} {exact:14.10f} {quad:14.10f} {abs(quad - exact) / exact:9.1e} {mc.value:14.10f} {z:6.2f}")
print(f"\n{time.perf_counter() - t0:.1f}s")
