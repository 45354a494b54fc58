from itertools import product

import pytest

from qqschur.coeff import LaurentV
from qqschur.combinatorics import compositions, multinomial
from qqschur.errors import SizeGuard
from qqschur.hecke_clifford import defining_relations
from qqschur.schur import SchurContext, schur_dim
from qqschur.tensor import (
    Operator, act_c, act_T, basis_vector, check_action_relations, commutant_dim, i_lambda,
    irreducible_census, letters, op_c, op_word, preserves_weights, tensor_indices,
    weight_component_dim, weight_indices, weight_of,
)
from qqschur import tensor

v = LaurentV.gen()
vi = LaurentV.monomial(-1)
q = v * v


def e(*i):
    return basis_vector(i)


def odd(a):
    return 1 if a < 0 else 0


# -- explicit action ----------------------------------------------------------------

def test_act_c_examples():
    assert act_c(1, e(1)) == e(-1)
    assert act_c(1, e(-1)) == -1 * e(1)
    assert act_c(1, act_c(1, e(1))) == -1 * e(1)
    # the sign counts odd letters up to and including position j
    assert act_c(2, e(-1, 2)) == -1 * e(-1, -2)
    assert act_c(2, e(-1, -2)) == e(-1, 2)


def test_act_T_examples():
    assert act_T(1, e(1, 1)) == q * e(1, 1) + (q - 1) * e(-1, -1)
    assert act_T(1, e(-1, -1)) == -1 * e(-1, -1)
    assert act_T(1, e(1, 2)) == v * e(2, 1) + (q - 1) * e(-1, -2) + (q - 1) * e(1, 2)


def test_act_T_descending_odd_case():
    # |i_{k+1}| < |i_k| with i_k negative: the swapped term carries v
    assert act_T(1, e(-2, 1)) == v * e(1, -2) + (q - 1) * e(-2, 1)
    assert act_T(1, e(-2, -1)) == -v * e(-1, -2) + (q - 1) * e(-2, -1)


def test_out_of_range():
    with pytest.raises(ValueError):
        act_T(2, e(1, 1))
    with pytest.raises(ValueError):
        act_c(3, e(1, 1))


@pytest.mark.parametrize("n,r", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_action_relations(n, r):
    assert [name for name, ok in check_action_relations(n, r) if not ok] == []


def test_action_relations_guard():
    with pytest.raises(SizeGuard):
        check_action_relations(2, 4, max_dim=255)


def test_operator_composition_order():
    # Psi(T1 c1) applies c1 first
    vec = e(1, 2)
    idx = tensor_indices(2, 2)
    op = op_word([("T", 1), ("c", 1)], 2, 2)
    col = dict(op.cols[idx.index((1, 2))])
    expected = act_T(1, act_c(1, vec))
    assert {idx[i]: x for i, x in col.items()} == expected.terms


# -- the table printed without v in the descending odd case --------------------------

def _printed_rule(i):
    a, b = i
    if abs(b) < abs(a) and a <= -1:
        return [(-1 if odd(b) else 1, (b, a)), (q - 1, i)]
    return tensor._T_on_index(1, i)


def test_table_without_v_breaks_quadratic_relation():
    idx = tensor_indices(2, 2)
    T = Operator.from_rule(idx, _printed_rule)
    one = Operator.identity(len(idx))
    assert (T - one * q) * (T + one) != one * 0
    c1, c2 = op_c(1, 2, 2), op_c(2, 2, 2)
    assert T * c1 != c2 * T


# -- independent construction from the R-matrix --------------------------------------
# V(n|n) has basis e_a (a > 0 even, a < 0 odd).  The super R-matrix
# S = sum_{i,j} E_ij (x) S_ij, scaled by v and composed with the signed flip,
# must reproduce the T_k table on two tensor factors.

def _E(i, j):
    return {j: [(1, i)]}


def _combine(*terms):
    out = {}
    for coef, d in terms:
        for x, lst in d.items():
            out.setdefault(x, []).extend((coef * c, y) for c, y in lst)
    return out


def r_matrix_T(n):
    L = letters(n)
    one = {x: [(1, x)] for x in L}
    S = {}
    for a in range(1, n + 1):
        S[(a, a)] = _combine((1, one), (v - 1, _E(a, a)), (v - 1, _E(-a, -a)))
        S[(-a, -a)] = _combine((1, one), (vi - 1, _E(a, a)), (vi - 1, _E(-a, -a)))
    for a, b in product(range(1, n + 1), repeat=2):
        if b < a:
            S[(b, a)] = _combine((v - vi, _E(a, b)), (v - vi, _E(-a, -b)))
        if a < b:
            S[(-b, -a)] = _combine((vi - v, _E(a, b)), (vi - v, _E(-a, -b)))
        S[(-b, a)] = _combine((vi - v, _E(-a, b)), (vi - v, _E(a, -b)))

    def S_on(x, y):
        out = {}
        for (i, j), Sij in S.items():
            if y != j:
                continue
            sign = -1 if (odd(i) + odd(j)) % 2 and odd(x) else 1
            for coef, x2 in Sij.get(x, []):
                out[(x2, i)] = out.get((x2, i), 0) + v * coef * sign
        return out

    table = {}
    for x, y in product(L, repeat=2):
        acc = {}
        for (x2, y2), coef in S_on(x, y).items():
            key = (y2, x2)
            acc[key] = acc.get(key, 0) + (-coef if odd(x2) and odd(y2) else coef)
        table[(x, y)] = {k: c for k, c in acc.items() if c}
    return table


@pytest.mark.parametrize("n", [1, 2, 3])
def test_table_matches_r_matrix(n):
    for i, image in r_matrix_T(n).items():
        assert act_T(1, e(*i)).terms == image


@pytest.mark.parametrize("n,r", [(1, 3), (2, 3)])
def test_c_matches_odd_operator_in_tensor_slot(n, r):
    """c_j = 1 (x) ... (x) Omega (x) ... (x) 1 with Omega e_a = e_-a, Omega e_-a = -e_a."""
    for i in tensor_indices(n, r):
        for j in range(1, r + 1):
            sign = (-1) ** sum(odd(a) for a in i[:j - 1])  # Omega passes the first j-1 factors
            if i[j - 1] < 0:
                sign = -sign
            target = i[:j - 1] + (-i[j - 1],) + i[j:]
            assert act_c(j, e(*i)) == sign * e(*target)


# -- weights ---------------------------------------------------------------------------

def test_weight_examples():
    assert weight_of((1, -2, 1), 2) == (2, 1)
    assert i_lambda((2, 1)) == (-1, -1, -2)
    for lam in [(2, 1), (0, 3), (1, 0, 2)]:
        assert weight_of(i_lambda(lam), len(lam)) == lam
    with pytest.raises(ValueError):
        weight_of((3,), 2)


@pytest.mark.parametrize("n,r", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_weight_component_dims(n, r):
    total = 0
    for lam in compositions(n, r):
        d = weight_component_dim(n, r, lam)
        assert d == len(weight_indices(n, r, lam)) == 2**r * multinomial(lam)
        total += d
    assert total == (2 * n) ** r
    assert weight_component_dim(1, r, (r,)) == 2**r


def test_weight_component_examples():
    assert weight_component_dim(2, 2, (1, 1)) == 8
    with pytest.raises(ValueError):
        weight_component_dim(2, 2, (3, -1))


@pytest.mark.parametrize("n,r", [(1, 2), (2, 2), (2, 3)])
def test_preserves_weights(n, r):
    assert preserves_weights(n, r)


# -- commutant and census ---------------------------------------------------------------

@pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (2, 1), (1, 3)])
def test_commutant_matches_schur_dim(n, r):
    assert commutant_dim(n, r) == schur_dim(SchurContext(n, r))


def test_commutant_n2_r2():
    assert commutant_dim(2, 2) == 32


def test_commutant_guard():
    with pytest.raises(SizeGuard):
        commutant_dim(2, 3)
    with pytest.raises(SizeGuard):
        commutant_dim(2, 2, max_dim=255)


def test_census_examples():
    got = irreducible_census(3, 3)
    assert [(xi.parts, t) for xi, t in got] == [((3,), "Q"), ((2, 1), "M")]
    assert [(xi.parts, t) for xi, t in irreducible_census(1, 4)] == [((4,), "Q")]
    assert [(xi.parts, t) for xi, t in irreducible_census(2, 4)] == [((4,), "Q"), ((3, 1), "M")]
    assert len(irreducible_census(2, 3)) == 2


def test_census_stabilises():
    for r in range(1, 9):
        stable = irreducible_census(r, r)
        for n in range(r, r + 3):
            assert irreducible_census(n, r) == stable


def test_relations_are_shared_with_the_algebra():
    # the operator check and the normal-form check run the same list
    names = [name for name, _, _ in defining_relations(3, lambda i: 0, lambda j: 0, 0, 0)]
    assert names == [name for name, _ in check_action_relations(1, 3)]
