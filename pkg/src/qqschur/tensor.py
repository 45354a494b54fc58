"""
The tensor superspace ``V(n|n)^{(x) r}`` as a left H^c_r-supermodule.

Basis tensors ``e_i`` are indexed by sequences ``i = (i_1, ..., i_r)`` with
``i_k`` in ``{1..n, -1..-n}``; negative letters are odd.  ``c_j`` flips the
sign of ``i_j`` with sign ``(-1)^(#odd letters among i_1..i_j)`` and ``T_k``
acts by an eight-case table on the letters in positions ``k, k+1``
(coefficients in ``Z[v, 1/v]``, ``q = v^2``).

As a left module, ``Psi(h1 h2) = Psi(h1) o Psi(h2)``: a word acts by
composing operators in the same order, rightmost first.

>>> act_c(1, basis_vector((1,)))
TensorVector({(-1,): 1})
>>> act_c(1, basis_vector((-1,)))
TensorVector({(1,): -1})
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from .coeff import LaurentV, exact_rank, rank_sparse
from .combinatorics import StrictPartition, compositions, min_coset_reps, strict_partitions
from .errors import SizeGuard
from .hecke_clifford import defining_relations

__all__ = [
    "TensorVector", "basis_vector", "letters", "tensor_indices", "act_c", "act_T",
    "Operator", "op_c", "op_T", "op_word", "check_action_relations", "preserves_weights",
    "weight_of", "i_lambda", "weight_indices", "weight_component_dim", "commutant_dim",
    "irreducible_census", "DEFAULT_MAX_TENSOR_DIM", "DEFAULT_MAX_COMMUTANT_DIM",
]

# (2n)^r for tensor operators; (2n)^(2r) for the commutant system, where
# n=2, r=3 (4096) already takes minutes
DEFAULT_MAX_TENSOR_DIM = 4096
DEFAULT_MAX_COMMUTANT_DIM = 1024

V = LaurentV.gen()
Q = V * V
QM1 = Q - 1

Index = tuple[int, ...]


def letters(n: int) -> tuple[int, ...]:
    """``(1, ..., n, -1, ..., -n)``: the fixed ordered basis of V(n|n)."""
    return tuple(range(1, n + 1)) + tuple(-a for a in range(1, n + 1))


def tensor_indices(n: int, r: int) -> list[Index]:
    """I(n|n, r) in lexicographic order with respect to :func:`letters`."""
    return list(product(letters(n), repeat=r))


class TensorVector:
    """Sparse combination of basis tensors over ``Z[v, 1/v]``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Index, object] | None = None):
        self.terms = {tuple(i): c for i, c in (terms or {}).items() if c}

    def __add__(self, other: "TensorVector"):
        t = dict(self.terms)
        for i, c in other.terms.items():
            t[i] = t.get(i, 0) + c
        return TensorVector(t)

    def __neg__(self):
        return TensorVector({i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, s):
        return TensorVector({i: s * c for i, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self):
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        from .coeff import poly_to_json
        return [{"index": list(i), "coeff": poly_to_json(c)} for i, c in self.items()]

    def __repr__(self):
        body = ", ".join(f"{i}: {c}" for i, c in self.items())
        return f"TensorVector({{{body}}})"


def basis_vector(i: Sequence[int]) -> TensorVector:
    return TensorVector({tuple(i): LaurentV(1)})


def _odd(a: int) -> int:
    return 1 if a < 0 else 0


def _c_on_index(j: int, i: Index) -> tuple[int, Index]:
    sign = -1 if sum(_odd(a) for a in i[:j]) % 2 else 1
    return sign, i[:j - 1] + (-i[j - 1],) + i[j:]


def _T_on_index(k: int, i: Index) -> list[tuple[object, Index]]:
    """The eight-case table for ``T_k e_i``."""
    a, b = i[k - 1], i[k]
    swapped = i[:k - 1] + (b, a) + i[k + 1:]
    minus = i[:k - 1] + (-a, -b) + i[k + 1:]
    if a == b:
        if a >= 1:
            return [(Q, swapped), (QM1, minus)]
        return [(-1, swapped)]
    if a == -b:
        if a >= 1:
            return [(1, swapped)]
        return [(Q, swapped), (QM1, i)]
    if abs(a) < abs(b):
        if b >= 1:
            return [(V, swapped), (QM1, minus), (QM1, i)]
        return [(-V if _odd(a) else V, swapped)]
    # |b| < |a|
    if a >= 1:
        return [(V, swapped), (-QM1 if _odd(b) else QM1, minus)]
    # the swapped term carries a factor v here; without it the quadratic
    # relation fails on e.g. e_(-2,-1), and the R-matrix construction gives v
    return [(-V if _odd(b) else V, swapped), (QM1, i)]


def _check_len(i: Index, r: int, what: str, idx: int):
    if not 1 <= idx <= r:
        raise ValueError(f"{what}_{idx} out of range for r={r}")


def act_c(j: int, v: TensorVector) -> TensorVector:
    acc: dict = {}
    for i, c in v.terms.items():
        _check_len(i, len(i), "c", j)
        sign, i2 = _c_on_index(j, i)
        acc[i2] = acc.get(i2, 0) + (c if sign > 0 else -c)
    return TensorVector(acc)


def act_T(k: int, v: TensorVector) -> TensorVector:
    acc: dict = {}
    for i, c in v.terms.items():
        _check_len(i, len(i) - 1, "T", k)
        for f, i2 in _T_on_index(k, i):
            acc[i2] = acc.get(i2, 0) + f * c
    return TensorVector(acc)


# -- operators ------------------------------------------------------------------------

@dataclass(frozen=True)
class Operator:
    """A linear map on V^{(x) r} stored column-wise: ``cols[j] = {i: entry}``."""

    dim: int
    cols: tuple = field(compare=True)

    @classmethod
    def from_rule(cls, indices: list[Index], rule: Callable[[Index], list[tuple[object, Index]]]):
        pos = {idx: t for t, idx in enumerate(indices)}
        cols = []
        for idx in indices:
            col: dict[int, object] = {}
            for f, i2 in rule(idx):
                t = pos[i2]
                col[t] = col.get(t, 0) + f
            cols.append({t: x for t, x in col.items() if x})
        return cls(len(indices), tuple(_freeze_col(c) for c in cols))

    @classmethod
    def identity(cls, dim: int):
        return cls(dim, tuple(_freeze_col({j: LaurentV(1)}) for j in range(dim)))

    def col(self, j: int) -> dict:
        return dict(self.cols[j])

    def __mul__(self, other):
        """Composition ``self o other``, or scaling by a ring element."""
        if isinstance(other, Operator):
            out = []
            for j in range(self.dim):
                acc: dict = {}
                for k, b in other.cols[j]:
                    for i, a in self.cols[k]:
                        acc[i] = acc.get(i, 0) + a * b
                out.append(_freeze_col(acc))
            return Operator(self.dim, tuple(out))
        return Operator(self.dim, tuple(_freeze_col({i: x * other for i, x in c}) for c in self.cols))

    def __rmul__(self, s):
        return self * s

    def __add__(self, other):
        if not isinstance(other, Operator):
            other = Operator.identity(self.dim) * other
        out = []
        for c1, c2 in zip(self.cols, other.cols):
            acc = dict(c1)
            for i, x in c2:
                acc[i] = acc.get(i, 0) + x
            out.append(_freeze_col(acc))
        return Operator(self.dim, tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def restrict(self, idx: list[int]) -> list[dict[int, object]]:
        """Columns of the compressed block on ``idx`` (must be an invariant subspace)."""
        pos = {g: t for t, g in enumerate(idx)}
        out = []
        for g in idx:
            col = {}
            for i, x in self.cols[g]:
                if i not in pos:
                    raise ValueError("index set is not invariant")
                col[pos[i]] = x
            out.append(col)
        return out


def _freeze_col(col: dict) -> tuple:
    return tuple(sorted((i, LaurentV(x) if isinstance(x, int) else x) for i, x in col.items() if x))


def _guard_tensor(n: int, r: int, bound: int):
    dim = (2 * n) ** r
    if dim > bound:
        raise SizeGuard("tensor-dim", dim, bound)


def op_c(j: int, n: int, r: int) -> Operator:
    if not 1 <= j <= r:
        raise ValueError(f"c_{j} out of range for r={r}")

    def rule(i):
        s, i2 = _c_on_index(j, i)
        return [(s, i2)]
    return Operator.from_rule(tensor_indices(n, r), rule)


def op_T(k: int, n: int, r: int) -> Operator:
    if not 1 <= k <= r - 1:
        raise ValueError(f"T_{k} out of range for r={r}")
    return Operator.from_rule(tensor_indices(n, r), lambda i: _T_on_index(k, i))


def op_word(word: Sequence[tuple[str, int]], n: int, r: int) -> Operator:
    """``Psi(g_1 g_2 ... g_m) = Psi(g_1) o ... o Psi(g_m)``."""
    out = Operator.identity((2 * n) ** r)
    for kind, k in word:
        out = out * (op_T(k, n, r) if kind == "T" else op_c(k, n, r))
    return out


def check_action_relations(n: int, r: int, max_dim: int = DEFAULT_MAX_TENSOR_DIM) -> list[tuple[str, bool]]:
    """Every defining relation of H^c_r as an identity of operators on V^{(x) r}."""
    _guard_tensor(n, r, max_dim)
    T = {k: op_T(k, n, r) for k in range(1, r)}
    c = {j: op_c(j, n, r) for j in range(1, r + 1)}
    one = Operator.identity((2 * n) ** r)
    return [(name, lhs == rhs) for name, lhs, rhs in
            defining_relations(r, T.__getitem__, c.__getitem__, one, Q)]


def preserves_weights(n: int, r: int) -> bool:
    """All ``T_k`` and ``c_j`` map each weight space into itself."""
    idx = tensor_indices(n, r)
    wts = [weight_of(i, n) for i in idx]
    ops = [op_T(k, n, r) for k in range(1, r)] + [op_c(j, n, r) for j in range(1, r + 1)]
    return all(wts[i] == wts[j] for op in ops for j, col in enumerate(op.cols) for i, _ in col)


# -- weights ----------------------------------------------------------------------

def weight_of(i: Sequence[int], n: int) -> tuple[int, ...]:
    """``lam_a = #{k : |i_k| = a}``."""
    lam = [0] * n
    for a in i:
        if not 1 <= abs(a) <= n:
            raise ValueError(f"letter {a} out of range for n={n}")
        lam[abs(a) - 1] += 1
    return tuple(lam)


def i_lambda(lam: Sequence[int]) -> Index:
    """``(-1,...,-1, -2,...,-2, ...)`` with ``lam_a`` copies of ``-a``."""
    return tuple(-(a + 1) for a, p in enumerate(lam) for _ in range(p))


def weight_indices(n: int, r: int, lam: Sequence[int]) -> list[int]:
    lam = tuple(lam)
    return [t for t, i in enumerate(tensor_indices(n, r)) if weight_of(i, n) == lam]


def weight_component_dim(n: int, r: int, lam: Sequence[int]) -> int:
    """``2^r |D_lam|``: the basis ``{c^alpha e_{i_lam d}}`` of the weight space."""
    lam = tuple(lam)
    if len(lam) != n or sum(lam) != r or min(lam) < 0:
        raise ValueError(f"{lam} is not in Lambda({n}, {r})")
    return (1 << r) * len(min_coset_reps(lam))


# -- commutant ------------------------------------------------------------------------

def _rho_generators(n: int, r: int) -> list[Operator]:
    """Operators of the right action twisted by tau: ``m.h = tau(h) m``."""
    gens = [Operator.identity((2 * n) ** r) * QM1 - op_T(k, n, r) for k in range(1, r)]
    gens += [op_c(j, n, r) for j in range(1, r + 1)]
    return gens


def _clear_row(row: dict) -> dict:
    low = min(x.low_degree for x in row.values())
    return {j: x.shift(-low) for j, x in row.items()} if low else row


def _block_system(gens_l: list[list[dict]], gens_m: list[list[dict]], dl: int, dm: int) -> list[dict]:
    """Rows of ``X A - B X = 0`` for ``X`` of shape ``dl x dm`` (unknown ``(a, c) -> a*dm + c``)."""
    rows = []
    for A, B in zip(gens_m, gens_l):
        eq: dict[tuple[int, int], dict[int, object]] = {}
        # (X A)_{a b} = sum_c X_{a c} A_{c b}
        for b, col in enumerate(A):
            for cc, x in col.items():
                for a in range(dl):
                    row = eq.setdefault((a, b), {})
                    u = a * dm + cc
                    row[u] = row.get(u, 0) + x
        # (B X)_{a b} = sum_c B_{a c} X_{c b}
        for cc, col in enumerate(B):
            for a, x in col.items():
                for b in range(dm):
                    row = eq.setdefault((a, b), {})
                    u = cc * dm + b
                    row[u] = row.get(u, 0) - x
        for row in eq.values():
            row = {u: x for u, x in row.items() if x}
            if row:
                rows.append(_clear_row(row))
    return rows


def _rank_at(rows: list[dict], v0: int) -> int:
    return rank_sparse([{j: x.evaluate(v0) for j, x in row.items() if x.evaluate(v0)} for row in rows])


def commutant_dim(n: int, r: int, max_dim: int = DEFAULT_MAX_COMMUTANT_DIM) -> int:
    """Dimension over Q(v) of the commutant of the tau-twisted right action.

    The system ``f rho(g) = rho(g) f`` splits along pairs of weight spaces;
    each block is ranked at ``v = 2`` first (a lower bound for the generic
    rank) and exactly over ``Z[v]`` only when that bound is not already full.
    """
    size = (2 * n) ** (2 * r)
    if size > max_dim:
        raise SizeGuard("commutant-dim", size, max_dim)
    gens = _rho_generators(n, r)
    weights = compositions(n, r)
    blocks = {lam: weight_indices(n, r, lam) for lam in weights}
    restricted = {lam: [g.restrict(idx) for g in gens] for lam, idx in blocks.items()}
    total = 0
    for lam in weights:
        for mu in weights:
            dl, dm = len(blocks[lam]), len(blocks[mu])
            rows = _block_system(restricted[lam], restricted[mu], dl, dm)
            unknowns = dl * dm
            if _rank_at(rows, 2) == unknowns:
                continue
            total += unknowns - exact_rank(rows)
    return total


# -- census ---------------------------------------------------------------------------

def irreducible_census(n: int, r: int) -> list[tuple[StrictPartition, str]]:
    """Strict partitions of ``r`` with at most ``n`` parts, tagged M (even length) or Q (odd)."""
    if n < 1:
        raise ValueError("n must be positive")
    return [(xi, xi.type) for xi in strict_partitions(r, max_len=n)]
