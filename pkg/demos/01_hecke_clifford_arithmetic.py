"""Arithmetic in the Hecke-Clifford superalgebra H^c_r over Z[q].

Elements are kept in the normal form sum T_w c^alpha.  Multiplying two of them
folds the quadratic relation, the braid relations and the exchange rule
T_i c_i = c_{i+1} T_i into the product, so everything printed below is already
reduced.
"""

from qqschur.clifford import c_q, c_q_prime
from qqschur.cli import parse_element
from qqschur.hecke_clifford import apply_involution, check_relations, from_clifford, x_lambda

r = 2
a = parse_element("T1*c1", r)
b = parse_element("T1*c2", r)
print("(T1 c1)(T1 c2) =", a * b)

print("\nT1^2 =", parse_element("T1^2", r))
print("c1^2 =", parse_element("c1^2", r))

print("\nthe five involutions applied to T1 c1:")
for tag in ("phi", "psi", "tau", "iota", "gamma"):
    print(f"  {tag:5s} ->", apply_involution(tag, a))

# x_(r) commutes past the q-weighted Clifford sum, turning c_q into c'_q
r = 3
x = x_lambda((r,))
left = x * from_clifford(c_q(1, r, r))
right = from_clifford(c_q_prime(1, r, r)) * x
print(f"\nx_({r}) c_q == c'_q x_({r}):", left == right)

failed = [name for name, ok in check_relations(4) if not ok]
print("relations at r=4 hold:", not failed)
