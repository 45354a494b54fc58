"""H^c_r acting on V(n|n)^{(x) r} and the commutant of that action.

The right action is given letter by letter on basis tensors e_i.  The
commutant of its tau-twisted form is computed by exact linear algebra over
Z[v, v^-1] and compared with the dimension of the Schur superalgebra.
"""

from qqschur.schur import SchurContext, schur_dim
from qqschur.tensor import act_c, act_T, basis_vector, check_action_relations, commutant_dim, irreducible_census

e = basis_vector((1, 2))
print("e_(1,2) T_1 =", act_T(1, e))
print("e_(-2,1) T_1 =", act_T(1, basis_vector((-2, 1))))
print("e_(-1,2) c_2 =", act_c(2, basis_vector((-1, 2))))

for n, r in [(1, 3), (2, 2), (2, 3)]:
    bad = [name for name, ok in check_action_relations(n, r) if not ok]
    print(f"relations on V({n}|{n})^{r}: {'ok' if not bad else bad}")

print()
for n, r in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2)]:
    print(f"n={n} r={r}: commutant {commutant_dim(n, r)}, Schur superalgebra {schur_dim(SchurContext(n, r))}")

print("\nirreducible constituents, n=3 r=3:")
for xi, kind in irreducible_census(3, 3):
    print(f"  {xi.parts}  type {kind}")
