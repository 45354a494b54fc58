import random
from itertools import product as iproduct

import pytest
from hypothesis import given, settings, strategies as st

from qqschur.clifford import c_q, c_q_prime, perm_act
from qqschur.coeff import PolyQ, ZQ, ZV, IntegerRing, exact_rank
from qqschur.combinatorics import (
    all_perms, bruhat_leq, compositions, double_coset_reps, inverse, min_coset_reps_in,
    nu_of, nu_of_inverse, reduced_word, triple_to_matrix,
)
from qqschur.errors import RingNotInvertible
from qqschur.hecke_clifford import (
    HCElement, INVOLUTIONS, T_w, apply_involution, basis_keys, basis_of_xH, check_relations,
    coordinates, defining_relations, from_clifford, from_coordinates, gen_T, gen_c, is_in_Hx,
    is_in_xH, mul, mul_gen_T_right, product, scalar, unit, x_lambda, y_lambda,
)
from qqschur.tensor import Operator, op_word

q = PolyQ.gen()


def T(i, r=2, ring=ZQ):
    return gen_T(i, r, ring)


def c(j, r=2, ring=ZQ):
    return gen_c(j, r, ring)


def basis_element(r, w, mask, ring=ZQ):
    return HCElement(r, {(w, mask): ring.one}, ring)


def all_basis(r):
    return [basis_element(r, w, m) for w, m in basis_keys(r)]


@st.composite
def hc_elements(draw, r=3, max_terms=3):
    keys = basis_keys(r)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        key = keys[draw(st.integers(0, len(keys) - 1))]
        terms[key] = PolyQ({e: draw(st.integers(-2, 2)) for e in range(draw(st.integers(1, 2)))})
    return HCElement(r, terms)


# -- tensor representation oracle -----------------------------------------------
# For n >= r the action on V(n|n)^{(x) r} is faithful, so operator images give an
# independent check of products computed in the normal form.

def operator_of(x: HCElement, n: int) -> Operator:
    dim = (2 * n) ** x.r
    out = Operator.identity(dim) * 0
    for (w, m), coeff in x.terms.items():
        word = [("T", i) for i in reduced_word(w)]
        word += [("c", k + 1) for k in range(x.r) if (m >> k) & 1]
        lc = coeff.to_laurent() if isinstance(coeff, PolyQ) else coeff
        out = out + op_word(word, n, x.r) * lc
    return out


def test_tensor_oracle_is_faithful_r2():
    ops = [operator_of(b, 2) for b in all_basis(2)]
    rows = [{j * 16 + i: x for j, col in enumerate(op.cols) for i, x in col} for op in ops]
    assert exact_rank(rows) == 8


# -- generators and products ---------------------------------------------------------

def test_generators():
    assert T(1).terms == {((2, 1), 0): ZQ.one}
    assert gen_c(1, 1).terms == {((1,), 1): ZQ.one}
    assert unit(3).terms == {((1, 2, 3), 0): ZQ.one}
    with pytest.raises(ValueError):
        gen_T(2, 2)
    with pytest.raises(ValueError):
        gen_c(3, 2)


def test_mul_gen_T_right_examples():
    assert mul_gen_T_right(T(1), 1) == (q - 1) * T(1) + q * unit(2)
    assert mul_gen_T_right(c(1), 1) == T(1) * c(2) + (q - 1) * (c(1) - c(2))
    assert mul_gen_T_right(c(2), 1) == T(1) * c(1)


def test_mul_examples():
    x = (q + 1) * T(1) * c(2) + 3
    assert unit(2) * x == x == x * unit(2)
    assert (c(1) * c(2)).terms == {((1, 2), 0b11): ZQ.one}


def test_T1c1_T1c2_value():
    got = (T(1) * c(1)) * (T(1) * c(2))
    expected = -q * unit(2) + (q - 1) * (T(1) * c(1) * c(2))
    assert got == expected
    # the same value through the faithful tensor representation
    word = [("T", 1), ("c", 1), ("T", 1), ("c", 2)]
    assert operator_of(got, 2) == op_word(word, 2, 2)


def test_T1c1_T1c2_differs_from_sign_flipped_expansion():
    # -q - (q-1)T1 - (q-1)T1c1c2 is not the product; the T1 terms cancel.
    wrong = -q * unit(2) - (q - 1) * T(1) - (q - 1) * (T(1) * c(1) * c(2))
    assert (T(1) * c(1)) * (T(1) * c(2)) != wrong
    assert operator_of(wrong, 2) != op_word([("T", 1), ("c", 1), ("T", 1), ("c", 2)], 2, 2)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_defining_relations(r):
    failures = [name for name, ok in check_relations(r) if not ok]
    assert failures == []


@pytest.mark.parametrize("r", [2, 3])
def test_products_match_tensor_oracle(r):
    rng = random.Random(r)
    basis = all_basis(r)
    for _ in range(12):
        x, y = rng.choice(basis), rng.choice(basis)
        assert operator_of(x * y, r) == operator_of(x, r) * operator_of(y, r)


def test_normal_form_closure_and_count():
    for r in (1, 2, 3):
        keys = set(basis_keys(r))
        assert len(keys) == 2**r * len(all_perms(r))
        for x in all_basis(r)[:: max(1, len(keys) // 12)]:
            for y in all_basis(r):
                assert set((x * y).terms) <= keys


def test_associativity_exhaustive_r2():
    basis = all_basis(2)
    prods = {(i, j): basis[i] * basis[j] for i in range(8) for j in range(8)}
    for i, j, k in iproduct(range(8), repeat=3):
        assert prods[i, j] * basis[k] == basis[i] * prods[j, k]


@pytest.mark.parametrize("r", [3, 4])
def test_associativity_random(r):
    rng = random.Random(100 + r)
    keys = basis_keys(r)

    def rand():
        return HCElement(r, {rng.choice(keys): PolyQ({0: rng.randint(-2, 2), 1: rng.randint(-1, 1)})
                             for _ in range(2)})
    for _ in range(200 if r == 3 else 100):
        x, y, z = rand(), rand(), rand()
        assert (x * y) * z == x * (y * z)
    # the remaining 100 at r = 4 are single basis terms, which are cheaper
    for _ in range(100 if r == 4 else 0):
        x, y, z = (basis_element(r, *rng.choice(keys)) for _ in range(3))
        assert (x * y) * z == x * (y * z)


@settings(max_examples=30, deadline=None)
@given(hc_elements(), hc_elements(), hc_elements())
def test_distributivity(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z


@pytest.mark.parametrize("r", [2, 3])
def test_paired_exchange_rule(r):
    """c_k^a c_{k+1}^b T_k = T_k c_{k+1}^a c_k^b + (q-1)(c_k^(a+b) - c_{k+1}^a c_k^b)."""
    one = unit(r)

    def pw(x, e):
        return product([x] * e, r) if e else one
    for k in range(1, r):
        ck, ck1, Tk = gen_c(k, r), gen_c(k + 1, r), gen_T(k, r)
        for a, b in iproduct((0, 1), repeat=2):
            lhs = pw(ck, a) * pw(ck1, b) * Tk
            swapped = pw(ck1, a) * pw(ck, b)
            rhs = Tk * swapped + (q - 1) * (pw(ck, a + b) - swapped)
            assert lhs == rhs


@pytest.mark.parametrize("r", [2, 3])
def test_leading_term(r):
    """c^alpha T_w = T_w (w^{-1} . c^alpha) + terms T_pi c^beta with pi < w."""
    for w in all_perms(r):
        for m in range(1 << r):
            cl = basis_element(r, (tuple(range(1, r + 1))), m)
            got = cl * T_w(w)
            alpha = tuple((m >> k) & 1 for k in range(r))
            sign, beta = perm_act(inverse(w), alpha)
            assert got.coefficient(w, beta) == sign
            for (pi, mm), _ in got.items():
                if pi == w:
                    assert mm == sum(b << k for k, b in enumerate(beta))
                else:
                    assert bruhat_leq(pi, w)


# -- involutions -------------------------------------------------------------------

def test_involution_examples():
    assert apply_involution("tau", T(1)) == (q - 1) * unit(2) - T(1)
    assert apply_involution("phi", gen_c(1, 3)) == gen_c(3, 3)
    assert apply_involution("phi", gen_T(1, 3)) == (q - 1) * unit(3) - gen_T(2, 3)
    assert apply_involution("psi", T(1)) == c(1) * T(1) * c(2)
    assert apply_involution("iota", T(1)) == T(1) - (q - 1) * (c(1) * c(2))
    assert apply_involution("gamma", gen_T(1, 3) * gen_c(1, 3)) == gen_c(3, 3) * gen_T(2, 3)
    with pytest.raises(ValueError):
        apply_involution("sigma", T(1))


@pytest.mark.parametrize("tag", INVOLUTIONS)
@settings(max_examples=10, deadline=None)
@given(x=hc_elements(), y=hc_elements())
def test_involution_properties(tag, x, y):
    assert apply_involution(tag, apply_involution(tag, x)) == x
    fx, fy = apply_involution(tag, x), apply_involution(tag, y)
    if tag in ("tau", "iota", "gamma"):
        assert apply_involution(tag, x * y) == fy * fx
    else:
        assert apply_involution(tag, x * y) == fx * fy


@pytest.mark.parametrize("tag", INVOLUTIONS)
def test_involutions_respect_relations(tag):
    r = 3
    for name, ok in [(name, apply_involution(tag, lhs) == apply_involution(tag, rhs))
                     for name, lhs, rhs in _relations(r)]:
        assert ok, name


def _relations(r):
    return defining_relations(r, lambda i: gen_T(i, r), lambda j: gen_c(j, r), unit(r), q)


# -- x_lambda, y_lambda, modules ---------------------------------------------------------

def test_x_y_examples():
    assert x_lambda((2,)) == unit(2) + T(1)
    assert x_lambda((1, 1)) == unit(2)
    assert y_lambda((2,)) == unit(2, ZV) - T(1, 2, ZV) * ZV.q_inverse()
    assert T(1, 2, ZV) * y_lambda((2,)) == -y_lambda((2,))
    with pytest.raises(RingNotInvertible):
        y_lambda((2,), ZQ)


def test_membership_examples():
    rng = random.Random(3)
    for lam in [(2, 1), (1, 2), (3,)]:
        x = x_lambda(lam)
        for _ in range(3):
            h = basis_element(3, *rng.choice(basis_keys(3)))
            assert is_in_xH(x * h, lam)
            assert is_in_Hx(h * x, lam)
    assert not is_in_xH(unit(2), (2,))
    assert not is_in_Hx(unit(2), (2,))
    assert is_in_xH(unit(2), (1, 1))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_x_times_c_q_is_in_both_modules(r):
    z = x_lambda((r,)) * from_clifford(c_q(1, r, r))
    assert is_in_xH(z, (r,)) and is_in_Hx(z, (r,))


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_x_c_identity(r):
    x = x_lambda((r,))
    assert x * from_clifford(c_q(1, r, r)) == from_clifford(c_q_prime(1, r, r)) * x
    y = y_lambda((r,))
    cl, cl_p = from_clifford(c_q(1, r, r, ZV)), from_clifford(c_q_prime(1, r, r, ZV))
    assert y * cl_p == cl * y


def test_basis_of_xH_sizes():
    assert len(basis_of_xH((3,))) == 8
    assert len(basis_of_xH((1, 1))) == 8
    assert len(basis_of_xH((2, 1))) == 24
    for lam, mu in [((2, 1), (1, 2)), ((2, 1), (2, 1)), ((1, 1, 1), (3,))]:
        assert len(basis_of_xH(lam, mu)) == len(basis_of_xH(lam))


@pytest.mark.parametrize("lam", [(2,), (1, 1), (2, 1), (1, 2), (3,)])
def test_basis_of_xH_is_free_and_in_module(lam):
    for mu in (None, tuple(reversed(lam))):
        basis = basis_of_xH(lam, mu)
        assert all(is_in_xH(b, lam) for b in basis)
        assert exact_rank([coordinates(b) for b in basis]) == len(basis)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_x_T_d_factorisation(r):
    """x_lam T_d = (sum over u' of T_u') T_d x_{nu(d)}."""
    for lam in compositions(2, r):
        for mu in compositions(2, r):
            for d in double_coset_reps(lam, mu):
                m = triple_to_matrix(lam, d, mu)
                us = [inverse(u) for u in min_coset_reps_in(nu_of_inverse(m), lam)]
                left = HCElement(r, {(u, 0): ZQ.one for u in us})
                assert x_lambda(lam) * T_w(d) == left * T_w(d) * x_lambda(nu_of(m))


# -- base change and serialisation ----------------------------------------------------------

@pytest.mark.parametrize("q0", [1, 2, 5])
@settings(max_examples=10, deadline=None)
@given(x=hc_elements(), y=hc_elements())
def test_specialization_compatible(q0, x, y):
    assert (x * y).specialize(q0) == x.specialize(q0) * y.specialize(q0)


def test_integer_ring_arithmetic():
    ring = IntegerRing(2)
    t = gen_T(1, 2, ring)
    assert t * t == t + scalar(2, 2, ring)


def test_json_order_and_coordinates():
    x = 2 * (c(2) * T(1)) + (q - 1) * unit(2) + c(1)
    js = x.to_json()
    keys = [(e["perm"], e["alpha"]) for e in js]
    assert keys == sorted(keys)
    assert js[0] == {"perm": [1, 2], "alpha": [0, 0], "coeff": {"0": "-1", "1": "1"}}
    assert from_coordinates(coordinates(x), 2) == x


def test_parity_and_clifford_free():
    assert (T(1) * c(1)).parity() == 1
    assert (T(1) + c(1) * c(2)).parity() == 0
    assert (T(1) + c(1)).parity() is None
    assert x_lambda((2,)).clifford_free() and not c(1).clifford_free()
    assert mul(T(1), c(1)).to_laurent().ring == ZV
