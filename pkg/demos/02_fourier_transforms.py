"""Distributional Fourier transforms of x^alpha and a numerical check where the integral converges.

Run: python3 demos/02_fourier_transforms.py
"""
from nball import evaluate, ft_numeric_oracle, ft_powerlaw

for alpha in (0, 1, 2, -1, -2, -0.5, 0.5, -1.5, 0.25):
    print(f"F[x^{alpha}] = {ft_powerlaw(alpha)}")

# for -1 < alpha < 0 the transform is an ordinary improper integral
print(f"\n{'alpha':>6} {'k':>5}  {'rule':<44} oracle")
for alpha in (-0.5, -0.75):
    for k in (-2, -0.5, 0.5, 2):
        rule = evaluate(ft_powerlaw(alpha), k)
        oracle = ft_numeric_oracle(alpha, k)
        print(f"{alpha:>6} {k:>5}  {rule:<44.12f} {oracle:.12f}")
