"""Ohtsuki series and WRT values of +-1 surgeries on the built-in knots.

Run with ``python3 demos/surgery_series.py``.  Takes a couple of seconds.
"""

from fractions import Fraction

from qknot import builtin, ohtsuki_series, wrt_direct_check
from qknot.qarith import HSeries, LaurentPoly, to_h_series

N = 6
series = {}
for name in ("trefoil", "figure8"):
    for f in (1, -1):
        s = ohtsuki_series(builtin(name), f, N)
        series[name, f] = s.coefficients
        print(f"{name:8s} f={f:+d}: {s.coefficients}")

# lambda_1 is 6 times the Casson invariant.  For framing f that is f times
# half the second derivative of the Alexander polynomial at 1, which is 1
# for the trefoil and -1 for the figure-8
for (name, f), lam in series.items():
    print(f"  {name} f={f:+d}: lambda_1 / 6 = {Fraction(lam[1], 6)}")

# two different surgeries, one manifold
same = series["trefoil", -1] == series["figure8", 1]
print("\ntrefoil -1 and figure-8 +1 give the same series:", same)

# reversing orientation of the manifold is q -> 1/q, i.e. h -> -h/(1+h)
x = to_h_series(LaurentPoly.q(-1), N) - HSeries([1], N)
acc, power = HSeries([0], N), HSeries([1], N)
for c in series["trefoil", 1]:
    acc = acc + power * c
    power = power * x
print("trefoil +1 with q -> 1/q:", [int(c) for c in acc.coeffs])
# this is the Poincare sphere; its series in the literature starts
# 1, -6, 45, -464, ...

# at roots of unity the same data give WRT invariants, checked against an
# independent cross-multiplied identity in Z[u]/Phi_4K
print()
for K in (3, 5, 7):
    for name in ("trefoil", "figure8"):
        for f in (1, -1):
            w = wrt_direct_check(builtin(name), f, K)
            print(f"K={K} {name:8s} f={f:+d}: {w.value_q}")
