"""Trefoil, start to finish: diagram, states, colored Jones, Jones function.

Run with ``python3 demos/trefoil_walkthrough.py``.
"""

from qknot import builtin, colored_jones, jones_h_series, kashaev, state_term
from qknot.diagram import linking_coefficients, valid_states

D = builtin("trefoil")
print("crossings", D.c, "writhe", D.writhe)
print("linking coefficients q_j =", linking_coefficients(D))

# the state sum: each valid state l contributes a polynomial in q and q^mu.
# Only states whose level walk stays non-negative survive; at color mu the
# states with some l_j >= mu vanish, so the sum is finite.
mu = 3
states = list(valid_states(D, max_each=mu - 1))
print(f"\n{len(states)} valid states with l_j < {mu}:")
total = 0
for l in states:
    term = state_term(D, l).value.evaluate(mu)
    total = term + total
    print("  ", l, "->", term)
print("sum equals colored_jones:", total == colored_jones(D, mu))

for mu in range(1, 5):
    print(f"J(trefoil, mu={mu}) = {colored_jones(D, mu)}")

# as a power series in h = q - 1 the coefficients are polynomials in mu
print("\nJones function:")
for n, c in enumerate(jones_h_series(D, 4)):
    print(f"  h^{n}: {c}")

# Kashaev values live in Z[q]/Phi_K(q)
for K in (3, 5, 7):
    print(f"Kashaev K={K}: {kashaev(D, K)}")
