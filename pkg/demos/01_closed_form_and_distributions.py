"""Ball volumes from the Fourier-transform route, checked against pi^(n/2)/Gamma(n/2+1).

Run: python3 demos/01_closed_form_and_distributions.py
"""
from nball import eps_limit_inverse_power, volume_closed_form, volume_distributional

print(f"{'n':>3}  {'eps -> 0 limit':<42} {'volume':<16} value")
for n in range(1, 13):
    limit = eps_limit_inverse_power(n / 2)
    v = volume_distributional(n)
    assert v == volume_closed_form(n)
    print(f"{n:>3}  {str(limit):<42} {str(v):<16} {float(v):.12f}")

# radius stays symbolic until substituted
v = volume_distributional(3, None)
print(f"\nsymbolic radius: {v}; at r = 2: {v.substitute(2)}")
