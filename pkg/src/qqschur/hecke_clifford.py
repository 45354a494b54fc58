"""
The Hecke-Clifford superalgebra H^c_r in the normal form ``T_w c^alpha``.

Elements are sparse maps ``(w, alpha) -> coefficient`` where ``w`` is a
permutation in one-line notation and ``alpha`` a Clifford bitmask (see
:mod:`qqschur.clifford`).  Even generators are the ``T_i``, odd ones the
``c_j``; the grading of a term is the parity of ``|alpha|``.

Relations (q is the ring's distinguished element)::

    c_i^2 = -1,  c_i c_j = -c_j c_i,
    (T_i - q)(T_i + 1) = 0,  braid relations,
    T_i c_j = c_j T_i (j != i, i+1),  T_i c_i = c_{i+1} T_i,
    T_i c_{i+1} = c_i T_i - (q-1)(c_i - c_{i+1}).

A product ``x*y`` is computed term by term on ``y``: ``x*T_w`` is obtained by
folding right multiplication by ``T_i`` along a reduced word of ``w`` (the
prefixes are shared between terms of ``y``), then the Clifford part of ``y``
is multiplied on the right.

>>> T1, c1, c2 = gen_T(1, 2), gen_c(1, 2), gen_c(2, 2)
>>> T1 * T1 == (ZQ.q - 1) * T1 + ZQ.q * unit(2)
True
>>> c1 * T1 == T1 * c2 + (ZQ.q - 1) * (c1 - c2)
True
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .clifford import CliffordElement, bits_to_mask, mask_mul, mask_to_bits
from .coeff import ZQ, ZV, IntegerRing, Ring, poly_to_json, specialize
from .combinatorics import (
    Perm, all_perms, double_coset_reps, identity, length, min_coset_reps,
    min_coset_reps_in, nu_of, reduced_word, triple_to_matrix, young_generators,
    young_subgroup,
)

__all__ = [
    "HCElement", "gen_T", "gen_c", "unit", "scalar", "T_w", "from_clifford",
    "mul", "mul_gen_T_right", "apply_involution", "INVOLUTIONS",
    "x_lambda", "y_lambda", "is_in_xH", "is_in_Hx", "basis_of_xH",
    "basis_keys", "coordinates", "from_coordinates", "defining_relations", "check_relations",
    "product",
]

INVOLUTIONS = ("phi", "psi", "tau", "iota", "gamma")
_ANTI = {"tau", "iota", "gamma"}


class HCElement:
    """An element of H^c_r over ``ring``, in the basis ``T_w c^alpha``."""

    __slots__ = ("r", "ring", "terms")

    def __init__(self, r: int, terms: dict | None = None, ring: Ring = ZQ):
        self.r = r
        self.ring = ring
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    # -- construction helpers ---------------------------------------------
    @classmethod
    def _from_acc(cls, r, acc, ring):
        obj = object.__new__(cls)
        obj.r = r
        obj.ring = ring
        obj.terms = {k: c for k, c in acc.items() if c}
        return obj

    def copy_with(self, terms):
        return HCElement._from_acc(self.r, terms, self.ring)

    # -- arithmetic ----------------------------------------------------------
    def _compatible(self, other: "HCElement"):
        if other.r != self.r:
            raise ValueError(f"rank mismatch: {self.r} vs {other.r}")
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def _lift(self, other):
        if isinstance(other, HCElement):
            self._compatible(other)
            return other
        return scalar(self.ring.convert(other), self.r, self.ring)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return self.copy_with(acc)

    __radd__ = __add__

    def __neg__(self):
        return self.copy_with({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, HCElement):
            return mul(self, other)
        s = self.ring.convert(other)
        return self.copy_with({k: c * s for k, c in self.terms.items()})

    def __rmul__(self, other):
        s = self.ring.convert(other)
        return self.copy_with({k: s * c for k, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, HCElement):
            return self.r == other.r and self.terms == other.terms
        if isinstance(other, int):
            return self == scalar(other, self.r, self.ring)
        return NotImplemented

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- views -----------------------------------------------------------------
    def items(self):
        """Terms sorted by (permutation, alpha) lexicographically."""
        return sorted(self.terms.items(), key=lambda kc: (kc[0][0], mask_to_bits(kc[0][1], self.r)))

    def coefficient(self, w: Perm, alpha: Sequence[int] | int = 0):
        m = alpha if isinstance(alpha, int) else bits_to_mask(alpha)
        return self.terms.get((tuple(w), m), 0)

    def parity(self) -> int | None:
        """Z_2-degree if homogeneous, else None (zero counts as even)."""
        pars = {bin(m).count("1") % 2 for (_, m) in self.terms}
        if not pars:
            return 0
        return pars.pop() if len(pars) == 1 else None

    def clifford_free(self) -> bool:
        """True if the element lies in the Hecke subalgebra H_r."""
        return all(m == 0 for (_, m) in self.terms)

    def specialize(self, q0: int) -> "HCElement":
        """Base change Z[q] -> Z, q -> q0."""
        if self.ring is not ZQ and self.ring != ZQ:
            raise TypeError("specialize expects an element over Z[q]")
        ring = IntegerRing(q0)
        return HCElement._from_acc(self.r, {k: specialize(c, q0) for k, c in self.terms.items()}, ring)

    def to_laurent(self) -> "HCElement":
        if self.ring == ZV:
            return self
        if self.ring != ZQ:
            raise TypeError("only Z[q] elements embed into Z[v, 1/v]")
        return HCElement._from_acc(self.r, {k: c.to_laurent() for k, c in self.terms.items()}, ZV)

    def to_json(self) -> list[dict]:
        return [{"perm": list(w), "alpha": list(mask_to_bits(m, self.r)), "coeff": poly_to_json(c)}
                for (w, m), c in self.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, m), c in self.items():
            word = "*".join(f"T{i}" for i in reduced_word(w))
            cl = "*".join(f"c{k + 1}" for k in range(self.r) if (m >> k) & 1)
            mono = "*".join(x for x in (word, cl) if x) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HCElement(r={self.r}, {self})"


# -- generators ---------------------------------------------------------------

def unit(r: int, ring: Ring = ZQ) -> HCElement:
    return HCElement._from_acc(r, {(identity(r), 0): ring.one}, ring)


def scalar(s, r: int, ring: Ring = ZQ) -> HCElement:
    return HCElement._from_acc(r, {(identity(r), 0): ring.convert(s)}, ring)


def gen_T(i: int, r: int, ring: Ring = ZQ) -> HCElement:
    if not 1 <= i <= r - 1:
        raise ValueError(f"T_{i} out of range for r={r}")
    w = list(range(1, r + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return HCElement._from_acc(r, {(tuple(w), 0): ring.one}, ring)


def gen_c(j: int, r: int, ring: Ring = ZQ) -> HCElement:
    if not 1 <= j <= r:
        raise ValueError(f"c_{j} out of range for r={r}")
    return HCElement._from_acc(r, {(identity(r), 1 << (j - 1)): ring.one}, ring)


def T_w(w: Perm, ring: Ring = ZQ) -> HCElement:
    return HCElement._from_acc(len(w), {(tuple(w), 0): ring.one}, ring)


def from_clifford(z: CliffordElement) -> HCElement:
    return HCElement._from_acc(z.r, {(identity(z.r), m): c for m, c in z.terms.items()}, z.ring)


# -- multiplication -------------------------------------------------------------

@lru_cache(maxsize=None)
def _c_times_T(mask: int, i: int) -> tuple[tuple[bool, int, int, int], ...]:
    """Rewrite ``c^mask * T_i`` as a sum of ``T_i c^beta`` and ``c^beta`` terms.

    Returns tuples ``(has_T, beta, a, b)`` meaning coefficient ``a + b(q-1)``.
    Uses ``c_k T_i = T_i c_{s_i(k)} + [k == i](q-1)(c_i - c_{i+1})``.
    """
    gi, gi1 = 1 << (i - 1), 1 << i
    state: dict[tuple[bool, int], list[int]] = {(True, 0): [1, 0]}
    gens = [k for k in range(mask.bit_length()) if (mask >> k) & 1]
    for k in reversed(gens):
        g = 1 << k
        nxt: dict[tuple[bool, int], list[int]] = {}

        def add(key, a, b):
            cur = nxt.setdefault(key, [0, 0])
            cur[0] += a
            cur[1] += b

        for (has_t, m), (a, b) in state.items():
            if has_t:
                sg = gi1 if g == gi else gi if g == gi1 else g
                sign, m2 = mask_mul(sg, m)
                add((True, m2), sign * a, sign * b)
                if g == gi:
                    # T-part coefficients are always +-1 with no (q-1) part
                    s1, m3 = mask_mul(gi, m)
                    s2, m4 = mask_mul(gi1, m)
                    add((False, m3), 0, s1 * a)
                    add((False, m4), 0, -s2 * a)
            else:
                sign, m2 = mask_mul(g, m)
                add((False, m2), sign * a, sign * b)
        state = {key: v for key, v in nxt.items() if v[0] or v[1]}
    return tuple((has_t, m, a, b) for (has_t, m), (a, b) in sorted(state.items()))


def _ring_consts(ring: Ring):
    q = ring.q
    return q, q - 1


def mul_gen_T_right(x: HCElement, i: int) -> HCElement:
    """``x * T_i`` in normal form."""
    r = x.r
    if not 1 <= i <= r - 1:
        raise ValueError(f"T_{i} out of range for r={r}")
    q, qm1 = _ring_consts(x.ring)
    acc: dict = {}
    get = acc.get
    for (w, m), coef in x.terms.items():
        up = w[i - 1] < w[i]
        ws = w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:]
        for has_t, m2, a, b in _c_times_T(m, i):
            f = a + b * qm1 if b else a
            c = coef * f
            if has_t:
                if up:
                    key = (ws, m2)
                    acc[key] = get(key, 0) + c
                else:
                    key = (w, m2)
                    acc[key] = get(key, 0) + c * qm1
                    key = (ws, m2)
                    acc[key] = get(key, 0) + c * q
            else:
                key = (w, m2)
                acc[key] = get(key, 0) + c
    return HCElement._from_acc(r, acc, x.ring)


def _mul_c_right(x: HCElement, mask: int, acc: dict, scale) -> None:
    get = acc.get
    for (w, m), coef in x.terms.items():
        sign, m2 = mask_mul(m, mask)
        key = (w, m2)
        c = coef * scale
        acc[key] = get(key, 0) + (c if sign > 0 else -c)


def mul(x: HCElement, y: HCElement) -> HCElement:
    """Exact product ``x*y`` in normal form."""
    x._compatible(y)
    by_w: dict[Perm, list] = {}
    for (w, m), c in y.terms.items():
        by_w.setdefault(w, []).append((m, c))
    prefix_cache: dict[tuple[int, ...], HCElement] = {(): x}

    def times_T(word: tuple[int, ...]) -> HCElement:
        hit = prefix_cache.get(word)
        if hit is None:
            hit = mul_gen_T_right(times_T(word[:-1]), word[-1])
            prefix_cache[word] = hit
        return hit

    acc: dict = {}
    for w in sorted(by_w):
        xw = times_T(tuple(reduced_word(w)))
        for m, c in by_w[w]:
            _mul_c_right(xw, m, acc, c)
    return HCElement._from_acc(x.r, acc, x.ring)


def product(elements: Iterable[HCElement], r: int, ring: Ring = ZQ) -> HCElement:
    out = unit(r, ring)
    for e in elements:
        out = mul(out, e)
    return out


# -- involutions -----------------------------------------------------------------

def _generator_image(tag: str, kind: str, k: int, r: int, ring: Ring) -> HCElement:
    q = ring.q
    if kind == "c":
        if tag in ("phi", "gamma"):
            return gen_c(r + 1 - k, r, ring)
        return gen_c(k, r, ring)
    T = gen_T(k, r, ring)
    if tag == "phi":
        return scalar(q - 1, r, ring) - gen_T(r - k, r, ring)
    if tag == "psi":
        return gen_c(k, r, ring) * T * gen_c(k + 1, r, ring)
    if tag == "tau":
        return scalar(q - 1, r, ring) - T
    if tag == "iota":
        return T - (q - 1) * (gen_c(k, r, ring) * gen_c(k + 1, r, ring))
    if tag == "gamma":
        return gen_T(r - k, r, ring)
    raise ValueError(f"unknown involution {tag!r}; expected one of {INVOLUTIONS}")


def apply_involution(tag: str, x: HCElement) -> HCElement:
    """Apply one of phi, psi (automorphisms) or tau, iota, gamma (anti-automorphisms).

    Each basis term ``T_{i1}...T_{ik} c_{j1}...c_{jm}`` is mapped through the
    generator images, with the factor order reversed for anti-automorphisms.
    """
    if tag not in INVOLUTIONS:
        raise ValueError(f"unknown involution {tag!r}; expected one of {INVOLUTIONS}")
    r, ring = x.r, x.ring
    images: dict[tuple[str, int], HCElement] = {}

    def img(kind, k):
        key = (kind, k)
        if key not in images:
            images[key] = _generator_image(tag, kind, k, r, ring)
        return images[key]

    out = HCElement(r, {}, ring)
    for (w, m), c in x.terms.items():
        factors = [img("T", i) for i in reduced_word(w)]
        factors += [img("c", k + 1) for k in range(r) if (m >> k) & 1]
        if tag in _ANTI:
            factors.reverse()
        out = out + c * product(factors, r, ring)
    return out


# -- symmetrizers and q-permutation supermodules -----------------------------------

def x_lambda(lam: Sequence[int], ring: Ring = ZQ) -> HCElement:
    """``x_lam = sum of T_w over the Young subgroup S_lam``."""
    r = sum(lam)
    return HCElement._from_acc(r, {(w, 0): ring.one for w in young_subgroup(lam)}, ring)


def y_lambda(lam: Sequence[int], ring: Ring = ZV) -> HCElement:
    """``y_lam = sum of (-q^{-1})^{l(w)} T_w``; q must be invertible in ``ring``."""
    r = sum(lam)
    return HCElement._from_acc(
        r, {(w, 0): ring.neg_q_inverse_power(length(w)) for w in young_subgroup(lam)}, ring)


def is_in_xH(h: HCElement, lam: Sequence[int]) -> bool:
    """``T_k h == q h`` for every ``s_k`` in S_lam (membership in x_lam H^c)."""
    qh = h.ring.q * h
    return all(mul(gen_T(k, h.r, h.ring), h) == qh for k in young_generators(lam))


def is_in_Hx(h: HCElement, lam: Sequence[int]) -> bool:
    """``h T_k == q h`` for every ``s_k`` in S_lam (membership in H^c x_lam)."""
    qh = h.ring.q * h
    return all(mul_gen_T_right(h, k) == qh for k in young_generators(lam))


def basis_of_xH(lam: Sequence[int], mu: Sequence[int] | None = None,
                ring: Ring = ZQ) -> list[HCElement]:
    """Free basis of ``x_lam H^c_r``.

    Without ``mu``: ``{x_lam T_d c^alpha : d in D_lam, alpha}`` ordered by
    ``d`` then ``alpha`` (lexicographic).  With ``mu``: the variant
    ``{x_lam T_d c^alpha T_sigma}`` over ``d in D_{lam,mu}``,
    ``sigma in D_{nu(d)} cap S_mu`` and all alpha.
    """
    lam = tuple(lam)
    r = sum(lam)
    x = x_lambda(lam, ring)
    alphas = sorted(range(1 << r), key=lambda m: mask_to_bits(m, r))
    out = []
    if mu is None:
        for d in min_coset_reps(lam):
            xd = mul(x, T_w(d, ring))
            for m in alphas:
                acc: dict = {}
                _mul_c_right(xd, m, acc, ring.one)
                out.append(HCElement._from_acc(r, acc, ring))
        return out
    for d in double_coset_reps(lam, mu):
        nu = nu_of(triple_to_matrix(lam, d, mu))
        xd = mul(x, T_w(d, ring))
        for sigma in min_coset_reps_in(nu, mu):
            for m in alphas:
                acc = {}
                _mul_c_right(xd, m, acc, ring.one)
                out.append(mul(HCElement._from_acc(r, acc, ring), T_w(sigma, ring)))
    return out


# -- coordinates ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def basis_keys(r: int) -> tuple[tuple[Perm, int], ...]:
    """All normal-form keys ``(w, alpha)`` in the canonical order."""
    alphas = sorted(range(1 << r), key=lambda m: mask_to_bits(m, r))
    return tuple((w, m) for w in all_perms(r) for m in alphas)


@lru_cache(maxsize=None)
def _key_index(r: int) -> dict:
    return {k: i for i, k in enumerate(basis_keys(r))}


def coordinates(x: HCElement) -> dict[int, object]:
    """Sparse coordinate vector in the ordered basis :func:`basis_keys`."""
    idx = _key_index(x.r)
    return {idx[k]: c for k, c in x.terms.items()}


def from_coordinates(vec: dict[int, object], r: int, ring: Ring = ZQ) -> HCElement:
    keys = basis_keys(r)
    return HCElement._from_acc(r, {keys[i]: c for i, c in vec.items()}, ring)


# -- defining relations ---------------------------------------------------------------

def defining_relations(r: int, T, c, one, q) -> list[tuple[str, object, object]]:
    """All defining relations of H^c_r as ``(name, lhs, rhs)`` triples.

    ``T(i)`` and ``c(j)`` return the images of the generators in any
    structure with ``+``, ``-`` and ``*`` (product, or scaling on the right);
    ``one`` is the unit and ``q`` the parameter.
    """
    zero = one * 0
    rels = []
    for j in range(1, r + 1):
        rels.append((f"c{j}^2 = -1", c(j) * c(j), one * -1))
        for k in range(j + 1, r + 1):
            rels.append((f"c{j}c{k} = -c{k}c{j}", c(j) * c(k), (c(k) * c(j)) * -1))
    for i in range(1, r):
        rels.append((f"(T{i}-q)(T{i}+1) = 0", (T(i) - one * q) * (T(i) + one), zero))
        if i + 1 < r:
            rels.append((f"T{i}T{i + 1}T{i} = T{i + 1}T{i}T{i + 1}",
                         T(i) * T(i + 1) * T(i), T(i + 1) * T(i) * T(i + 1)))
        for k in range(i + 2, r):
            rels.append((f"T{i}T{k} = T{k}T{i}", T(i) * T(k), T(k) * T(i)))
        for j in range(1, r + 1):
            if j not in (i, i + 1):
                rels.append((f"T{i}c{j} = c{j}T{i}", T(i) * c(j), c(j) * T(i)))
        rels.append((f"T{i}c{i} = c{i + 1}T{i}", T(i) * c(i), c(i + 1) * T(i)))
        rels.append((f"T{i}c{i + 1} = c{i}T{i} - (q-1)(c{i} - c{i + 1})", T(i) * c(i + 1),
                     c(i) * T(i) - (c(i) - c(i + 1)) * (q - 1)))
    return rels


def check_relations(r: int, ring: Ring = ZQ) -> list[tuple[str, bool]]:
    """Evaluate :func:`defining_relations` with normal-form arithmetic."""
    return [(name, lhs == rhs) for name, lhs, rhs in defining_relations(
        r, lambda i: gen_T(i, r, ring), lambda j: gen_c(j, r, ring), unit(r, ring), ring.q)]
