"""The Q-q-Schur superalgebra as endomorphisms of the sum of x_lam H^c.

Basis elements are indexed by decorated matrices (A|B): A counts cosets and
B records which blocks carry an odd Clifford factor.  Products are computed by
applying one map to the image generator of the other and re-expanding in the
T_{A|B} basis.
"""

import random

from qqschur.combinatorics import enumerate_decorated
from qqschur.schur import (
    SchurContext, basis_element, e_omega, is_in_qschur, multiply, random_element, schur_dim,
    unit_element,
)

for n, r in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)]:
    print(f"dim Q(n={n}, r={r}) = {schur_dim(SchurContext(n, r))}")

ctx = SchurContext(2, 2)
pairs = enumerate_decorated(2, 2)
print("\nfirst few basis labels for n=r=2:")
for p in pairs[:4]:
    print("  A =", p.A, " B =", p.B, " parity", p.parity)

p1, p2 = pairs[5], pairs[9]
print("\nproduct of two basis elements:")
print("  ", multiply(ctx, basis_element(ctx, p1), basis_element(ctx, p2)))

e = e_omega(ctx)
print("\ne_omega is idempotent:", multiply(ctx, e, e) == e)

rng = random.Random(1)
a, b, c = (random_element(ctx, rng) for _ in range(3))
print("associative on a random triple:",
      multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c)))
one = unit_element(ctx)
print("unit acts trivially:", multiply(ctx, one, a) == a == multiply(ctx, a, one))

even = sum(is_in_qschur(ctx, basis_element(ctx, p)) for p in pairs)
print(f"\n{even} of {len(pairs)} basis elements lie in the q-Schur subalgebra (B = 0)")
