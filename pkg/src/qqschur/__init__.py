"""
Exact computations with the Hecke-Clifford superalgebra H^c_r and the
Q-q-Schur superalgebra Q_q(n, r).

Submodules
----------
coeff           Z[q], Z[v, 1/v], integer specializations, fraction-free linear algebra
combinatorics   permutations, compositions, coset representatives, decorated matrices
clifford        the Clifford superalgebra C_r and the elements c_{q,i,j}
hecke_clifford  normal-form arithmetic in H^c_r, involutions, x_lam / y_lam
schur           T_{A|B}, the basis phi_(A|B), structure constants, e_omega
tensor          the action on V(n|n)^{(x) r}, commutant dimension, census
acceptance      the acceptance checks used by ``verify all`` and the tests
cli             ``python3 -m qqschur``
"""

from .coeff import ZQ, ZV, IntegerRing, LaurentV, PolyMatrix, PolyQ, exact_rank, solve_in_span
from .combinatorics import DecoratedMatrix, StrictPartition, enumerate_decorated, strict_partitions
from .clifford import CliffordElement, c_AB, c_q, c_q_prime
from .hecke_clifford import (
    HCElement, apply_involution, basis_of_xH, gen_c, gen_T, is_in_Hx, is_in_xH, mul,
    mul_gen_T_right, unit, x_lambda, y_lambda,
)
from .schur import (
    SchurContext, SchurElement, e_omega, expand_in_TAB, intersection_dim_bruteforce, multiply,
    schur_dim, t_AB,
)
from .tensor import TensorVector, act_c, act_T, check_action_relations, commutant_dim, irreducible_census

__version__ = "0.1.0"

__all__ = [
    "ZQ", "ZV", "IntegerRing", "LaurentV", "PolyMatrix", "PolyQ", "exact_rank", "solve_in_span",
    "DecoratedMatrix", "StrictPartition", "enumerate_decorated", "strict_partitions",
    "CliffordElement", "c_AB", "c_q", "c_q_prime",
    "HCElement", "apply_involution", "basis_of_xH", "gen_c", "gen_T", "is_in_Hx", "is_in_xH", "mul",
    "mul_gen_T_right", "unit", "x_lambda", "y_lambda",
    "SchurContext", "SchurElement", "e_omega", "expand_in_TAB", "intersection_dim_bruteforce",
    "multiply", "schur_dim", "t_AB",
    "TensorVector", "act_c", "act_T", "check_action_relations", "commutant_dim", "irreducible_census",
]
