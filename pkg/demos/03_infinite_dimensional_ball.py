"""The l2(C) ball: each coordinate gives pi/(eps+ik), the product is zeta-regularized.

Run: python3 demos/03_infinite_dimensional_ball.py
"""
from nball import infinite_dim_pipeline, volume_closed_form

p = infinite_dim_pipeline(None)
steps = [
    ("one coordinate", f"{p.mode_factor.scale} * (eps+ik)^({p.mode_factor.exponent})"),
    ("regularized product", f"{p.regularized_product.scale} * (eps+ik)^({p.regularized_product.exponent})"),
    ("theta kernel", f"{p.theta_kernel.scale} * (eps+ik)^({p.theta_kernel.exponent})"),
    ("integrand", f"{p.integrand.scale} * (eps+ik)^({p.integrand.exponent})"),
    ("eps -> 0", str(p.limit)),
    ("volume", str(p.volume)),
]
for name, value in steps:
    print(f"{name:>20}: {value}")

print("\nr      l2(C) ball      closed form at n = -1")
for r in (1, 2, 10):
    print(f"{r:<6} {str(p.volume.substitute(r)):<15} {volume_closed_form(-1, r)}")
