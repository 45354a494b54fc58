from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from qqschur.combinatorics import (
    DecoratedMatrix, StrictPartition, all_perms, blocks, bruhat_leq, compose, compositions,
    decorated_with_d, decorated_with_margins, double_coset_reps, enumerate_decorated,
    identity, inverse, length, longest_element, matrices_with_margins, matrices_with_sum,
    matrix_to_triple, min_coset_reps, min_coset_reps_in, multinomial, nu_of, nu_of_inverse,
    perm_from_word, reduced_word, simple_reflection, strict_partitions, triple_to_matrix,
    young_subgroup,
)
from qqschur.errors import NotMinimalRep

perms4 = st.integers(1, 4).flatmap(lambda r: st.permutations(range(1, r + 1)).map(tuple))


def all_compositions(r, n_max=3):
    return [lam for n in range(1, n_max + 1) for lam in compositions(n, r)]


# -- brute-force oracles ----------------------------------------------------

def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def coset_minima(lam):
    """Minimal-length element of every right coset S_lam w, by enumeration."""
    sub = young_subgroup(lam)
    seen, out = set(), []
    for w in all_perms(sum(lam)):
        coset = frozenset(compose(u, w) for u in sub)
        if coset not in seen:
            seen.add(coset)
            out.append(min(coset, key=inversions))
    return sorted(out)


def double_coset_minima(lam, mu):
    left, right = young_subgroup(lam), young_subgroup(mu)
    seen, out = set(), []
    for w in all_perms(sum(lam)):
        dc = frozenset(compose(compose(u, w), s) for u in left for s in right)
        if dc not in seen:
            seen.add(dc)
            mins = [x for x in dc if inversions(x) == min(map(inversions, dc))]
            assert len(mins) == 1
            out.append(mins[0])
    return sorted(out)


def brute_bruhat(x, y):
    """x <= y iff some subword of a reduced word of y multiplies to x."""
    word = reduced_word(y)
    r = len(y)
    for mask in range(1 << len(word)):
        sub = [k for i, k in enumerate(word) if (mask >> i) & 1]
        if perm_from_word(sub, r) == x:
            return True
    return False


# -- permutations -----------------------------------------------------------

def test_length_examples():
    assert length(identity(3)) == 0
    assert length((2, 1, 3)) == 1
    assert length((3, 2, 1)) == 3


def test_reduced_word_examples():
    assert reduced_word(identity(3)) == []
    assert reduced_word((2, 1, 3)) == [1]
    assert reduced_word((3, 2, 1)) == [1, 2, 1]


@given(perms4)
def test_length_and_reduced_word(w):
    word = reduced_word(w)
    assert length(w) == inversions(w) == len(word)
    assert perm_from_word(word, len(w)) == w


def test_composition_convention():
    w = (2, 3, 1)
    s1 = simple_reflection(1, 3)
    assert compose(w, s1) == (3, 2, 1)  # swaps positions
    assert compose(s1, w) == (1, 3, 2)  # swaps values
    assert compose(w, inverse(w)) == identity(3)
    assert longest_element(3) == (3, 2, 1)


def test_bruhat_examples():
    for w in all_perms(3):
        assert bruhat_leq(identity(3), w)
    assert not bruhat_leq((3, 2, 1), (2, 1, 3))
    assert bruhat_leq((2, 1, 3), (3, 1, 2))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_bruhat_matches_subword_oracle(r):
    ps = all_perms(r)
    for x in ps:
        for y in ps:
            assert bruhat_leq(x, y) == brute_bruhat(x, y)


# -- cosets -----------------------------------------------------------------

def test_min_coset_examples():
    assert min_coset_reps((1, 1)) == [(1, 2), (2, 1)]
    assert min_coset_reps((2,)) == [(1, 2)]
    assert len(min_coset_reps((2, 1))) == 3


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_min_coset_reps_oracle(r):
    for lam in all_compositions(r):
        reps = min_coset_reps(lam)
        assert reps == sorted(reps)
        assert reps == coset_minima(lam)
        assert len(reps) == multinomial(lam)


def test_double_coset_examples():
    assert double_coset_reps((3,), (3,)) == [identity(3)]
    assert double_coset_reps((1, 1, 1), (1, 1, 1)) == list(all_perms(3))
    assert len(double_coset_reps((2, 1), (2, 1))) == 2 == len(matrices_with_margins((2, 1), (2, 1)))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_double_coset_reps_oracle(r):
    for lam in all_compositions(r):
        for mu in all_compositions(r):
            reps = double_coset_reps(lam, mu)
            assert reps == double_coset_minima(lam, mu)
            sizes = sum(len({compose(compose(u, d), s) for u in young_subgroup(lam)
                             for s in young_subgroup(mu)}) for d in reps)
            assert sizes == factorial(r)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_double_coset_factorisation(r):
    """Every w in S_lam d S_mu is u d sigma uniquely, with lengths adding."""
    for lam in all_compositions(r, 2):
        for mu in all_compositions(r, 2):
            for d in double_coset_reps(lam, mu):
                nu = nu_of(triple_to_matrix(lam, d, mu))
                sigmas = min_coset_reps_in(nu, mu)
                seen = {}
                for u in young_subgroup(lam):
                    for s in sigmas:
                        w = compose(compose(u, d), s)
                        assert w not in seen
                        assert length(w) == length(u) + length(d) + length(s)
                        seen[w] = (u, s)
                dc = {compose(compose(u, d), s) for u in young_subgroup(lam)
                      for s in young_subgroup(mu)}
                assert set(seen) == dc


@pytest.mark.parametrize("r", [2, 3, 4])
def test_left_coset_disjointness(r):
    """S_lam d S_mu is the disjoint union of u d S_mu over the u below."""
    for lam in all_compositions(r, 2):
        for mu in all_compositions(r, 2):
            total = set()
            for d in double_coset_reps(lam, mu):
                nu_inv = nu_of_inverse(triple_to_matrix(lam, d, mu))
                us = [inverse(x) for x in min_coset_reps_in(nu_inv, lam)]
                cosets = [frozenset(compose(compose(u, d), s) for s in young_subgroup(mu)) for u in us]
                union = frozenset().union(*cosets)
                assert sum(map(len, cosets)) == len(union)
                assert not (union & total)
                total |= union
            assert len(total) == factorial(r)


# -- matrices ---------------------------------------------------------------

def brute_d(m):
    """Unique minimal-length d with |R_i cap d(R'_j)| = m_ij, by search."""
    lam, mu = tuple(map(sum, m)), tuple(map(sum, zip(*m)))
    rb, cb = blocks(lam), blocks(mu)
    hits = []
    for d in permutations(range(1, sum(lam) + 1)):
        ok = all(len(set(rb[i]) & {d[p - 1] for p in cb[j]}) == m[i][j]
                 for i in range(len(lam)) for j in range(len(mu)))
        if ok:
            hits.append(d)
    best = min(map(inversions, hits))
    mins = [d for d in hits if inversions(d) == best]
    assert len(mins) == 1
    return mins[0]


def test_matrix_triple_examples():
    assert matrix_to_triple([[2, 0], [0, 1]]) == ((2, 1), (1, 2, 3), (2, 1))
    assert matrix_to_triple([[1, 1], [1, 0]]) == ((2, 1), (1, 3, 2), (2, 1))
    assert matrix_to_triple([[0, 1], [1, 0]]) == ((1, 1), (2, 1), (1, 1))
    assert triple_to_matrix((2, 1), (1, 2, 3), (2, 1)) == ((2, 0), (0, 1))
    assert triple_to_matrix((2, 1), (1, 3, 2), (2, 1)) == ((1, 1), (1, 0))
    assert triple_to_matrix((1, 1), (2, 1), (1, 1)) == ((0, 1), (1, 0))
    with pytest.raises(NotMinimalRep):
        triple_to_matrix((2, 1), (2, 1, 3), (2, 1))


@pytest.mark.parametrize("n,r", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_matrix_bijection(n, r):
    mats = matrices_with_sum(n, r)
    triples = set()
    for m in mats:
        lam, d, mu = matrix_to_triple(m)
        assert d == brute_d(m)
        assert triple_to_matrix(lam, d, mu) == m
        triples.add((lam, d, mu))
    expected = {(lam, d, mu) for lam in compositions(n, r) for mu in compositions(n, r)
                for d in double_coset_reps(lam, mu)}
    assert triples == expected


def test_nu_readings():
    assert nu_of([[1, 1], [1, 0]]) == (1, 1, 1, 0)
    assert nu_of_inverse([[1, 1], [1, 0]]) == (1, 1, 1, 0)
    assert nu_of([[2, 0], [0, 1]]) == (2, 0, 0, 1)
    assert nu_of([[0, 2], [1, 0]]) == (0, 1, 2, 0)
    assert nu_of_inverse([[0, 2], [1, 0]]) == (0, 2, 1, 0)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_nu_is_intersection_subgroup(r):
    for m in matrices_with_sum(2, r):
        lam, d, mu = matrix_to_triple(m)
        conj = {compose(compose(inverse(d), u), d) for u in young_subgroup(lam)}
        assert set(young_subgroup(nu_of(m))) == conj & set(young_subgroup(mu))
        conj_inv = {compose(compose(d, s), inverse(d)) for s in young_subgroup(mu)}
        assert set(young_subgroup(nu_of_inverse(m))) == conj_inv & set(young_subgroup(lam))


# -- decorated matrices -----------------------------------------------------

def test_decorated_counts():
    got = enumerate_decorated(1, 1)
    assert got == [DecoratedMatrix([[1]], [[0]]), DecoratedMatrix([[0]], [[1]])]
    assert len(enumerate_decorated(2, 2)) == 32
    expected = sum(
        prod(min(x, 1) + 1 for row in m for x in row)
        for m in matrices_with_sum(2, 3))
    assert len(enumerate_decorated(2, 3)) == expected
    assert len(decorated_with_margins((1, 1), (1, 1))) == 8


def test_decorated_with_d_partitions_margins():
    lam = mu = (2, 1)
    parts = [decorated_with_d(lam, d, mu) for d in double_coset_reps(lam, mu)]
    flat = sorted(p for ps in parts for p in ps)
    assert flat == sorted(decorated_with_margins(lam, mu))


def test_decorated_matrix_fields():
    p = DecoratedMatrix([[1, 0], [0, 0]], [[0, 0], [1, 1]])
    assert p.total == ((1, 0), (1, 1))
    assert p.r == 3 and p.ro() == (1, 2) and p.co() == (2, 1)
    assert p.parity == 0
    assert p.alpha_b() == (0, 1, 0, 1)
    assert p.in_range(2, 3) and not p.in_range(2, 2)
    assert DecoratedMatrix.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        DecoratedMatrix([[1]], [[2]])
    with pytest.raises(ValueError):
        DecoratedMatrix([[-1]], [[0]])


# -- strict partitions ------------------------------------------------------

def test_strict_partition_examples():
    got = strict_partitions(3)
    assert [(p.parts, p.type) for p in got] == [((3,), "Q"), ((2, 1), "M")]
    assert [p.parts for p in strict_partitions(4, 1)] == [(4,)]
    (one,) = strict_partitions(1)
    assert one.parts == (1,) and one.delta == 1 and one.type == "Q"
    with pytest.raises(ValueError):
        StrictPartition((2, 2))


@pytest.mark.parametrize("r", range(1, 13))
def test_strict_partition_counts(r):
    # distinct-part partitions of r, by generating-function coefficients
    coeffs = [1] + [0] * r
    for k in range(1, r + 1):
        for s in range(r, k - 1, -1):
            coeffs[s] += coeffs[s - k]
    got = strict_partitions(r)
    assert len(got) == coeffs[r]
    assert len({p.parts for p in got}) == len(got)
    assert all(sum(p.parts) == r for p in got)
    for n in range(1, 4):
        assert strict_partitions(r, n) == [p for p in got if p.length <= n]
