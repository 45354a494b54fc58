"""
The Q-q-Schur superalgebra ``Q_q(n, r) = End(sum_lam x_lam H^c_r)``.

Basis elements ``phi_(A|B)`` are indexed by decorated matrices.  The map
``phi_(A|B)`` sends ``x_mu h`` to ``T_{A|B} h`` when ``mu = co(A+B)`` and
kills the other summands, where::

    T_{A|B} = x_lam T_d c_{A|B} sum_{sigma in D_nu cap S_mu} T_sigma

with ``lam = ro(A+B)``, ``d = d_{A+B}`` and ``nu = nu(d)``.  Structure
constants are found by expanding products in the ``T_{A|B}`` of the relevant
margins with an exact fraction-free solve.

>>> ctx = SchurContext(2, 2)
>>> schur_dim(ctx)
32
>>> e = e_omega(ctx)
>>> multiply(ctx, e, e) == e
True
"""

from __future__ import annotations

import random
from math import factorial
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .clifford import c_AB, c_lambda_alpha, c_q
from .coeff import ZQ, Ring, exact_rank, poly_from_json, poly_to_json, solve_sparse, specialize
from .combinatorics import (
    DecoratedMatrix, compositions, decorated_with_margins, enumerate_decorated,
    matrix_to_triple, min_coset_reps, min_coset_reps_in, nu_of, young_generators,
)
from .errors import NotInModule, RankTooSmall, SizeGuard
from .hecke_clifford import (
    HCElement, T_w, _mul_c_right, coordinates, from_clifford, is_in_Hx, is_in_xH, mul,
    mul_gen_T_right, x_lambda,
)

__all__ = [
    "SchurContext", "SchurElement", "t_AB", "h_AB", "apply_phi", "apply_element", "schur_dim",
    "expand_in_TAB", "multiply", "basis_product", "intersection_dim_bruteforce",
    "parabolic_intersection_dim", "parabolic_intersection_basis", "is_in_qschur",
    "e_omega", "unit_element", "basis_element", "random_element", "one_part_basis",
    "DEFAULT_MAX_HC_DIM",
]

# 2^r r! for r = 6
DEFAULT_MAX_HC_DIM = 46080


def _hc_dim(r: int) -> int:
    return (1 << r) * factorial(r)


@dataclass
class SchurContext:
    """Parameters ``(n, r)`` plus the caches shared by all Schur computations."""

    n: int
    r: int
    ring: Ring = ZQ
    max_dim: int = DEFAULT_MAX_HC_DIM
    _tab: dict = field(default_factory=dict, repr=False)
    _h: dict = field(default_factory=dict, repr=False)
    _x: dict = field(default_factory=dict, repr=False)
    _margin: dict = field(default_factory=dict, repr=False)
    _products: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("need n >= 1 and r >= 1")

    @property
    def weights(self) -> list[tuple[int, ...]]:
        return compositions(self.n, self.r)

    def guard(self):
        dim = _hc_dim(self.r)
        if dim > self.max_dim:
            raise SizeGuard("hc-dim", dim, self.max_dim)

    def x(self, lam) -> HCElement:
        lam = tuple(lam)
        if lam not in self._x:
            self._x[lam] = x_lambda(lam, self.ring)
        return self._x[lam]


class SchurElement:
    """Sparse combination of basis maps ``phi_(A|B)``."""

    __slots__ = ("n", "r", "ring", "terms")

    def __init__(self, n: int, r: int, terms: dict | None = None, ring: Ring = ZQ):
        self.n, self.r, self.ring = n, r, ring
        self.terms = {p: c for p, c in (terms or {}).items() if c}
        for p in self.terms:
            if not p.in_range(n, r):
                raise ValueError(f"{p} is not in M_{n}(N|Z2)_{r}")

    def __add__(self, other: "SchurElement"):
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, 0) + c
        return SchurElement(self.n, self.r, t, self.ring)

    def __neg__(self):
        return SchurElement(self.n, self.r, {p: -c for p, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, s):
        s = self.ring.convert(s)
        return SchurElement(self.n, self.r, {p: s * c for p, c in self.terms.items()}, self.ring)

    def __eq__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        return (self.n, self.r, self.terms) == (other.n, other.r, other.terms)

    def __hash__(self):
        return hash((self.n, self.r, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def parity(self) -> int | None:
        pars = {p.parity for p in self.terms}
        if not pars:
            return 0
        return pars.pop() if len(pars) == 1 else None

    def specialize(self, q0: int) -> "SchurElement":
        from .coeff import IntegerRing
        return SchurElement(self.n, self.r, {p: specialize(c, q0) for p, c in self.terms.items()},
                            IntegerRing(q0))

    def to_json(self) -> list[dict]:
        return [{**p.to_json(), "coeff": poly_to_json(c)} for p, c in self.items()]

    @classmethod
    def from_json(cls, n: int, r: int, data: Iterable[dict], ring: Ring = ZQ):
        return cls(n, r, {DecoratedMatrix(d["A"], d["B"]): poly_from_json(d["coeff"]) for d in data}, ring)

    def __repr__(self):
        if not self.terms:
            return "SchurElement(0)"
        return "SchurElement(" + " + ".join(f"({c})*phi{p}" for p, c in self.items()) + ")"


def basis_element(ctx: SchurContext, pair: DecoratedMatrix) -> SchurElement:
    return SchurElement(ctx.n, ctx.r, {pair: ctx.ring.one}, ctx.ring)


def schur_dim(ctx: SchurContext) -> int:
    """``|M_n(N|Z_2)_r|``."""
    return len(enumerate_decorated(ctx.n, ctx.r))


# -- T_{A|B} ------------------------------------------------------------------------

def h_AB(ctx: SchurContext, pair: DecoratedMatrix) -> HCElement:
    """The right factor ``T_d c_{A|B} sum_sigma T_sigma`` with ``T_{A|B} = x_lam h``."""
    if pair in ctx._h:
        return ctx._h[pair]
    if not pair.in_range(ctx.n, ctx.r):
        raise ValueError(f"{pair} is not in M_{ctx.n}(N|Z2)_{ctx.r}")
    ring = ctx.ring
    m = pair.total
    _, d, mu = matrix_to_triple(m)
    nu = nu_of(m)
    cl = c_AB(pair, ring)
    left = mul(T_w(d, ring), from_clifford(cl))
    sigma_sum = HCElement(ctx.r, {(s, 0): ring.one for s in min_coset_reps_in(nu, mu)}, ring)
    h = mul(left, sigma_sum)
    ctx._h[pair] = h
    return h


def t_AB(ctx: SchurContext, pair: DecoratedMatrix) -> HCElement:
    """``T_{A|B}``; lies in ``x_lam H^c cap H^c x_mu`` for ``lam, mu`` the margins."""
    if pair not in ctx._tab:
        ctx._tab[pair] = mul(ctx.x(pair.ro()), h_AB(ctx, pair))
    return ctx._tab[pair]


def _cofactor(ctx: SchurContext, z: HCElement, mu) -> HCElement:
    """``h`` with ``z == x_mu h``, read off from the ``T_d c^alpha`` coordinates (d in D_mu)."""
    reps = set(min_coset_reps(mu))
    h = HCElement(z.r, {(w, m): c for (w, m), c in z.terms.items() if w in reps}, z.ring)
    if mul(ctx.x(mu), h) != z:
        raise NotInModule(f"element is not in x_{tuple(mu)} H^c")
    return h


def apply_phi(ctx: SchurContext, pair: DecoratedMatrix, mu, z: HCElement) -> HCElement:
    """``phi_(A|B)(z)`` for ``z`` in the summand ``x_mu H^c``."""
    mu = tuple(mu)
    if not is_in_xH(z, mu):
        raise NotInModule(f"element is not in x_{mu} H^c")
    if pair.co() != mu:
        return HCElement(ctx.r, {}, ctx.ring)
    return mul(t_AB(ctx, pair), _cofactor(ctx, z, mu))


def apply_element(ctx: SchurContext, phi: SchurElement, mu, z: HCElement) -> HCElement:
    out = HCElement(ctx.r, {}, ctx.ring)
    for pair, c in phi.terms.items():
        out = out + c * apply_phi(ctx, pair, mu, z)
    return out


# -- expansion and multiplication --------------------------------------------------------

def _margin_data(ctx: SchurContext, lam, mu):
    key = (tuple(lam), tuple(mu))
    if key not in ctx._margin:
        pairs = decorated_with_margins(*key)
        cols = [coordinates(t_AB(ctx, p)) for p in pairs]
        ctx._margin[key] = (pairs, cols)
    return ctx._margin[key]


def expand_in_TAB(ctx: SchurContext, z: HCElement, lam, mu, check: bool = True) -> SchurElement:
    """Coefficients of ``z`` over ``{T_{A|B}}`` with margins ``(lam, mu)``."""
    lam, mu = tuple(lam), tuple(mu)
    if check and not (is_in_xH(z, lam) and is_in_Hx(z, mu)):
        raise NotInModule(f"element is not in x_{lam} H^c cap H^c x_{mu}")
    pairs, cols = _margin_data(ctx, lam, mu)
    if not z:
        return SchurElement(ctx.n, ctx.r, {}, ctx.ring)
    coeffs = solve_sparse(cols, coordinates(z))
    return SchurElement(ctx.n, ctx.r, dict(zip(pairs, coeffs)), ctx.ring)


def basis_product(ctx: SchurContext, p1: DecoratedMatrix, p2: DecoratedMatrix) -> SchurElement:
    """``phi_{p1} o phi_{p2}``."""
    key = (p1, p2)
    if key in ctx._products:
        return ctx._products[key]
    if p1.co() != p2.ro():
        out = SchurElement(ctx.n, ctx.r, {}, ctx.ring)
    else:
        z = mul(t_AB(ctx, p1), h_AB(ctx, p2))
        out = expand_in_TAB(ctx, z, p1.ro(), p2.co(), check=False)
    ctx._products[key] = out
    return out


def multiply(ctx: SchurContext, phi1: SchurElement, phi2: SchurElement) -> SchurElement:
    """Composition ``phi1 o phi2`` (ordinary composition of maps)."""
    acc: dict = {}
    for p1, c1 in phi1.terms.items():
        for p2, c2 in phi2.terms.items():
            if p1.co() != p2.ro():
                continue
            c = c1 * c2
            for p, v in basis_product(ctx, p1, p2).terms.items():
                acc[p] = acc.get(p, 0) + c * v
    return SchurElement(ctx.n, ctx.r, acc, ctx.ring)


def _diag(vals: Sequence[int], n: int):
    return tuple(tuple(vals[i] if i == j else 0 for j in range(n)) for i in range(n))


def unit_element(ctx: SchurContext) -> SchurElement:
    """``sum_lam phi_(diag(lam)|0)``."""
    zero = _diag([0] * ctx.n, ctx.n)
    return SchurElement(ctx.n, ctx.r, {DecoratedMatrix(_diag(lam, ctx.n), zero): ctx.ring.one
                                       for lam in ctx.weights}, ctx.ring)


def e_omega(ctx: SchurContext) -> SchurElement:
    """``phi_(A_omega|0)`` with ``A_omega = diag(1, ..., 1, 0, ..., 0)``; needs ``n >= r``."""
    if ctx.n < ctx.r:
        raise RankTooSmall(f"e_omega needs n >= r, got n={ctx.n}, r={ctx.r}")
    omega = [1] * ctx.r + [0] * (ctx.n - ctx.r)
    return basis_element(ctx, DecoratedMatrix(_diag(omega, ctx.n), _diag([0] * ctx.n, ctx.n)))


def is_in_qschur(ctx: SchurContext, phi: SchurElement) -> bool:
    """True iff every ``phi(x_mu)`` lies in the Hecke algebra (no Clifford part)."""
    for mu in ctx.weights:
        if not apply_element(ctx, phi, mu, ctx.x(mu)).clifford_free():
            return False
    return True


def random_element(ctx: SchurContext, rng: random.Random, density: float = 0.3,
                   coeff_range: int = 3) -> SchurElement:
    """Random element with small integer coefficients (plus occasional q terms)."""
    q = ctx.ring.q
    terms = {}
    for p in enumerate_decorated(ctx.n, ctx.r):
        if rng.random() < density:
            a, b = rng.randint(-coeff_range, coeff_range), rng.randint(-1, 1)
            terms[p] = ctx.ring.convert(a) + b * q
    return SchurElement(ctx.n, ctx.r, terms, ctx.ring)


# -- brute-force oracles ------------------------------------------------------------------

def intersection_dim_bruteforce(ctx: SchurContext, lam, mu) -> int:
    """Dimension of ``x_lam H^c cap H^c x_mu`` over the fraction field.

    Solves ``h T_k = q h`` (``s_k`` in S_mu) for ``h`` in the span of the free
    basis ``{x_lam T_d c^alpha}``; never uses ``T_{A|B}``.
    """
    ctx.guard()
    lam, mu = tuple(lam), tuple(mu)
    x = ctx.x(lam)
    q = ctx.ring.q
    gens = young_generators(mu)
    if not gens:
        return len(min_coset_reps(lam)) << ctx.r
    rows: dict[tuple[int, int], dict[int, object]] = {}
    col = 0
    for d in min_coset_reps(lam):
        xd = mul(x, T_w(d, ctx.ring))
        for m in range(1 << ctx.r):
            acc: dict = {}
            _mul_c_right(xd, m, acc, ctx.ring.one)
            b = HCElement(ctx.r, acc, ctx.ring)
            for k in gens:
                diff = mul_gen_T_right(b, k) - q * b
                for i, v in coordinates(diff).items():
                    rows.setdefault((k, i), {})[col] = v
            col += 1
    return col - exact_rank(list(rows.values()))


def parabolic_intersection_basis(lam, ring: Ring = ZQ) -> list[HCElement]:
    """``{x_lam c^alpha_lam : alpha <= lam}`` (one Clifford sum per nonzero block)."""
    lam = tuple(lam)
    x = x_lambda(lam, ring)
    supports = [k for k, p in enumerate(lam) if p]
    out = []
    for m in range(1 << len(supports)):
        alpha = [0] * len(lam)
        for t, k in enumerate(supports):
            if (m >> t) & 1:
                alpha[k] = 1
        out.append(mul(x, from_clifford(c_lambda_alpha(lam, alpha, ring))))
    return out


def parabolic_intersection_dim(lam, ring: Ring = ZQ) -> int:
    """Dimension of ``x_lam H^c_lam cap H^c_lam x_lam`` inside the parabolic subalgebra.

    ``x_lam H^c_lam`` is spanned by ``{x_lam c^alpha}``; impose ``h T_k = q h``
    for the simple reflections of S_lam.
    """
    lam = tuple(lam)
    r = sum(lam)
    x = x_lambda(lam, ring)
    q = ring.q
    gens = young_generators(lam)
    rows: dict = {}
    for col, m in enumerate(range(1 << r)):
        acc: dict = {}
        _mul_c_right(x, m, acc, ring.one)
        b = HCElement(r, acc, ring)
        for k in gens:
            for i, v in coordinates(mul_gen_T_right(b, k) - q * b).items():
                rows.setdefault((k, i), {})[col] = v
    return (1 << r) - exact_rank(list(rows.values()))


def one_part_basis(r: int, ring: Ring = ZQ) -> list[HCElement]:
    """``{x_(r), x_(r) c_{q,r}}``."""
    x = x_lambda((r,), ring)
    return [x, mul(x, from_clifford(c_q(1, r, r, ring)))]
