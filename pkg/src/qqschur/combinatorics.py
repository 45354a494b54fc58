"""
Symmetric group and composition combinatorics.

Conventions
-----------
A permutation ``w`` of ``{1, ..., r}`` is a tuple in one-line notation
``(w(1), ..., w(r))``.  Composition is ``(x*y)(i) = x(y(i))``, so the right
multiplication ``w*s_k`` swaps the *positions* k and k+1 of the one-line word
while ``s_k*w`` swaps the *values* k and k+1.  Sequences are acted on by the
right place permutation ``a.w = (a_{w(1)}, ..., a_{w(r)})``.

All enumerations are returned in a documented lexicographic order.

>>> length((3, 2, 1))
3
>>> reduced_word((3, 2, 1))
[1, 2, 1]
>>> matrix_to_triple([[1, 1], [1, 0]])
((2, 1), (1, 3, 2), (2, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import NotMinimalRep

Perm = tuple[int, ...]
Composition = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Perm", "Composition", "Matrix", "DecoratedMatrix", "StrictPartition",
    "identity", "compose", "inverse", "simple_reflection", "act_on_sequence",
    "length", "reduced_word", "perm_from_word", "bruhat_leq",
    "all_perms", "compositions", "blocks", "young_subgroup", "multinomial",
    "min_coset_reps", "double_coset_reps", "min_coset_reps_in",
    "matrix_to_triple", "triple_to_matrix", "nu_of", "nu_of_inverse",
    "matrices_with_sum", "matrices_with_margins", "row_sums", "col_sums",
    "enumerate_decorated", "decorated_with_margins", "decorated_with_d",
    "strict_partitions", "longest_element", "young_generators",
]


# -- permutations -----------------------------------------------------------

def identity(r: int) -> Perm:
    return tuple(range(1, r + 1))


def compose(x: Perm, y: Perm) -> Perm:
    """``x*y`` with ``(x*y)(i) = x(y(i))``."""
    return tuple(x[i - 1] for i in y)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w, 1):
        out[wi - 1] = i
    return tuple(out)


def simple_reflection(k: int, r: int) -> Perm:
    if not 1 <= k < r:
        raise ValueError(f"s_{k} is not a simple reflection of S_{r}")
    w = list(range(1, r + 1))
    w[k - 1], w[k] = w[k], w[k - 1]
    return tuple(w)


def act_on_sequence(a: Sequence, w: Perm) -> tuple:
    """Right place permutation ``a.w = (a_{w(1)}, ..., a_{w(r)})``."""
    return tuple(a[i - 1] for i in w)


def length(w: Perm) -> int:
    """Number of inversions ``#{i < j : w(i) > w(j)}``."""
    r = len(w)
    return sum(1 for i in range(r) for j in range(i + 1, r) if w[i] > w[j])


def reduced_word(w: Perm) -> list[int]:
    """Reduced word ``[i1, ..., ik]`` with ``w = s_{i1} ... s_{ik}``.

    Built by repeatedly stripping the leftmost descent: if ``k`` is the first
    position with ``w(k) > w(k+1)`` then ``w = (w s_k) s_k`` with
    ``l(w s_k) = l(w) - 1``.  The word is read off in reverse.
    """
    return list(_reduced_word(tuple(w)))


@lru_cache(maxsize=None)
def _reduced_word(w: Perm) -> tuple[int, ...]:
    word = []
    cur = list(w)
    while True:
        for k in range(len(cur) - 1):
            if cur[k] > cur[k + 1]:
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                word.append(k + 1)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def perm_from_word(word: Sequence[int], r: int) -> Perm:
    w = identity(r)
    for k in word:
        w = compose(w, simple_reflection(k, r))
    return w


def bruhat_leq(x: Perm, y: Perm) -> bool:
    """Bruhat order via the tableau criterion.

    ``x <= y`` iff for every ``k`` the sorted prefix ``x(1..k)`` is
    entrywise ``<=`` the sorted prefix ``y(1..k)``.
    """
    if len(x) != len(y):
        raise ValueError("permutations of different rank")
    for k in range(1, len(x)):
        if any(a > b for a, b in zip(sorted(x[:k]), sorted(y[:k]))):
            return False
    return True


@lru_cache(maxsize=None)
def all_perms(r: int) -> tuple[Perm, ...]:
    """All of S_r in lexicographic order of one-line notation."""
    return tuple(permutations(range(1, r + 1)))


def longest_element(r: int) -> Perm:
    return tuple(range(r, 0, -1))


# -- compositions and Young subgroups ---------------------------------------

def compositions(n: int, r: int) -> list[Composition]:
    """Lambda(n, r): compositions of r with n parts, reverse-lexicographic.

    The order starts at ``(r, 0, ..., 0)`` and ends at ``(0, ..., 0, r)``.
    """
    if n == 0:
        return [()] if r == 0 else []
    out = []
    for first in range(r, -1, -1):
        for rest in compositions(n - 1, r - first):
            out.append((first,) + rest)
    return out


def blocks(lam: Sequence[int]) -> list[range]:
    """The position blocks ``R^lam_k`` as ranges of 1-based positions."""
    out = []
    start = 1
    for part in lam:
        out.append(range(start, start + part))
        start += part
    return out


def _block_index(lam: Sequence[int]) -> list[int]:
    idx = []
    for k, part in enumerate(lam):
        idx.extend([k] * part)
    return idx


def young_subgroup(lam: Sequence[int]) -> list[Perm]:
    """S_lam: permutations stabilizing every block, lexicographic order."""
    lam = tuple(lam)
    return [w for w in all_perms(sum(lam)) if _preserves_blocks(w, lam)]


def _preserves_blocks(w: Perm, lam: Sequence[int]) -> bool:
    idx = _block_index(lam)
    return all(idx[i] == idx[wi - 1] for i, wi in enumerate(w))


def young_generators(lam: Sequence[int]) -> list[int]:
    """Indices k with ``s_k`` in S_lam."""
    gens = []
    for blk in blocks(lam):
        gens.extend(range(blk.start, blk.stop - 1))
    return gens


def multinomial(lam: Sequence[int]) -> int:
    return factorial(sum(lam)) // prod(factorial(p) for p in lam)


def _increasing_on_blocks(w: Perm, lam: Sequence[int]) -> bool:
    for blk in blocks(lam):
        vals = [w[i - 1] for i in blk]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


@lru_cache(maxsize=None)
def _min_coset_reps(lam: Composition) -> tuple[Perm, ...]:
    return tuple(d for d in all_perms(sum(lam)) if _increasing_on_blocks(inverse(d), lam))


def min_coset_reps(lam: Sequence[int]) -> list[Perm]:
    """D_lam: minimal length representatives of the right cosets S_lam d.

    ``d`` is minimal iff ``l(s_k d) > l(d)`` for all ``s_k`` in S_lam, i.e.
    iff ``d^{-1}`` is increasing on every block of ``lam``.
    """
    return list(_min_coset_reps(tuple(lam)))


def min_coset_reps_in(nu: Sequence[int], mu: Sequence[int]) -> list[Perm]:
    """D_nu intersected with S_mu (nu refines mu)."""
    mu = tuple(mu)
    return [d for d in _min_coset_reps(tuple(nu)) if _preserves_blocks(d, mu)]


@lru_cache(maxsize=None)
def _double_coset_reps(lam: Composition, mu: Composition) -> tuple[Perm, ...]:
    if sum(lam) != sum(mu):
        raise ValueError("compositions of different integers")
    return tuple(d for d in _min_coset_reps(lam) if _increasing_on_blocks(d, mu))


def double_coset_reps(lam: Sequence[int], mu: Sequence[int]) -> list[Perm]:
    """D_{lam,mu} = D_lam intersected with D_mu^{-1}, lexicographic order."""
    return list(_double_coset_reps(tuple(lam), tuple(mu)))


# -- matrices and the double coset bijection --------------------------------

def row_sums(m: Sequence[Sequence[int]]) -> Composition:
    return tuple(sum(row) for row in m)


def col_sums(m: Sequence[Sequence[int]]) -> Composition:
    return tuple(sum(col) for col in zip(*m))


def _freeze(m) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def matrix_to_triple(m) -> tuple[Composition, Perm, Composition]:
    """``M -> (ro(M), d_M, co(M))``.

    ``d_M`` is built directly: walking the column blocks of ``co(M)`` left to
    right, the positions of block ``j`` receive, in order, the next
    ``m_{1j}`` unused values of row block 1, then the next ``m_{2j}`` values
    of row block 2, and so on.  The result is increasing on column blocks and
    its inverse is increasing on row blocks, so it lies in D_{lam,mu}.
    """
    m = _freeze(m)
    if any(x < 0 for row in m for x in row):
        raise ValueError("matrix entries must be nonnegative")
    lam, mu = row_sums(m), col_sums(m)
    nxt = [blk.start for blk in blocks(lam)]
    d = []
    for j in range(len(mu)):
        for i in range(len(lam)):
            for _ in range(m[i][j]):
                d.append(nxt[i])
                nxt[i] += 1
    return lam, tuple(d), mu


def triple_to_matrix(lam, d: Perm, mu) -> Matrix:
    """``m_ij = |R^lam_i  intersect  d(R^mu_j)|``."""
    lam, mu, d = tuple(lam), tuple(mu), tuple(d)
    if d not in _double_coset_reps(lam, mu):
        raise NotMinimalRep(f"{d} is not in D_{{{lam},{mu}}}")
    lam_idx = _block_index(lam)
    out = [[0] * len(mu) for _ in lam]
    for j, blk in enumerate(blocks(mu)):
        for pos in blk:
            out[lam_idx[d[pos - 1] - 1]][j] += 1
    return _freeze(out)


def nu_of(m) -> Composition:
    """nu(d_M): the entries of M read down the columns."""
    m = _freeze(m)
    return tuple(m[i][j] for j in range(len(m[0])) for i in range(len(m)))


def nu_of_inverse(m) -> Composition:
    """nu(d_M^{-1}): the entries of M read along the rows."""
    return tuple(x for row in _freeze(m) for x in row)


def _int_vectors(k: int, total: int) -> Iterator[tuple[int, ...]]:
    # lexicographic order on N^k with fixed sum
    if k == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _int_vectors(k - 1, total - first):
            yield (first,) + rest


def matrices_with_sum(n: int, r: int) -> list[Matrix]:
    """M_n(N)_r in lexicographic order of the row-major entry list."""
    return [tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)) for v in _int_vectors(n * n, r)]


def matrices_with_margins(lam, mu) -> list[Matrix]:
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam)
    return [m for m in matrices_with_sum(n, sum(lam)) if row_sums(m) == lam and col_sums(m) == mu]


# -- decorated matrices -----------------------------------------------------

@dataclass(frozen=True, order=True)
class DecoratedMatrix:
    """A pair ``(A|B)``: an N-matrix ``A`` and a {0,1}-matrix ``B``."""

    A: Matrix
    B: Matrix

    def __post_init__(self):
        object.__setattr__(self, "A", _freeze(self.A))
        object.__setattr__(self, "B", _freeze(self.B))
        n = len(self.A)
        if len(self.B) != n or any(len(row) != n for row in self.A + self.B):
            raise ValueError("A and B must be square of the same size")
        if any(x < 0 for row in self.A for x in row):
            raise ValueError("A must have nonnegative entries")
        if any(x not in (0, 1) for row in self.B for x in row):
            raise ValueError("B must have entries in {0, 1}")

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def total(self) -> Matrix:
        """``A + B``."""
        return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.A, self.B))

    @property
    def r(self) -> int:
        return sum(sum(row) for row in self.total)

    def ro(self) -> Composition:
        return row_sums(self.total)

    def co(self) -> Composition:
        return col_sums(self.total)

    @property
    def parity(self) -> int:
        return sum(sum(row) for row in self.B) % 2

    def alpha_b(self) -> tuple[int, ...]:
        """Entries of B read down the columns."""
        return nu_of(self.B)

    def in_range(self, n: int, r: int) -> bool:
        """Membership in M_n(N|Z_2)_r."""
        return self.n == n and self.r == r

    def to_json(self) -> dict:
        return {"A": [list(row) for row in self.A], "B": [list(row) for row in self.B]}

    @classmethod
    def from_json(cls, data: dict) -> "DecoratedMatrix":
        return cls(data["A"], data["B"])

    def __str__(self):
        return f"({list(map(list, self.A))}|{list(map(list, self.B))})"


def _decorations(m: Matrix) -> list[DecoratedMatrix]:
    n = len(m)
    slots = [(i, j) for i in range(n) for j in range(n) if m[i][j] > 0]
    out = []
    for bits in product((0, 1), repeat=len(slots)):
        b = [[0] * n for _ in range(n)]
        for (i, j), bit in zip(slots, bits):
            b[i][j] = bit
        a = [[m[i][j] - b[i][j] for j in range(n)] for i in range(n)]
        out.append(DecoratedMatrix(a, b))
    return out


@lru_cache(maxsize=None)
def _enumerate_decorated(n: int, r: int) -> tuple[DecoratedMatrix, ...]:
    out = []
    for m in matrices_with_sum(n, r):
        out.extend(_decorations(m))
    return tuple(out)


def enumerate_decorated(n: int, r: int) -> list[DecoratedMatrix]:
    """M_n(N|Z_2)_r.

    Ordered by ``A+B`` (lexicographic on row-major entries, as in
    :func:`matrices_with_sum`) and then by ``B`` (lexicographic on the
    row-major entries restricted to the support of ``A+B``).
    """
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    return list(_enumerate_decorated(n, r))


def decorated_with_margins(lam, mu) -> list[DecoratedMatrix]:
    """M_n(N|Z_2)_{lam,mu} in the order of :func:`enumerate_decorated`."""
    lam, mu = tuple(lam), tuple(mu)
    return [p for p in _enumerate_decorated(len(lam), sum(lam)) if p.ro() == lam and p.co() == mu]


def decorated_with_d(lam, d: Perm, mu) -> list[DecoratedMatrix]:
    """M_n(N|Z_2)^d_{lam,mu}: pairs with ``A+B = M^d``."""
    return _decorations(triple_to_matrix(lam, d, mu))


# -- strict partitions ------------------------------------------------------

@dataclass(frozen=True)
class StrictPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        if any(x <= 0 for x in p) or any(a <= b for a, b in zip(p, p[1:])):
            raise ValueError(f"{p} is not a strict partition")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def delta(self) -> int:
        return self.length % 2

    @property
    def type(self) -> str:
        """'M' for even length, 'Q' for odd length."""
        return "Q" if self.delta else "M"

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "delta": self.delta, "type": self.type}


def _strict(r: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(r, max_part), 0, -1):
        for rest in _strict(r - first, first - 1, max_len - 1):
            yield (first,) + rest


def strict_partitions(r: int, max_len: int | None = None) -> list[StrictPartition]:
    """Strict partitions of r with at most ``max_len`` parts.

    Reverse lexicographic order: ``(r)`` first.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if max_len is None:
        max_len = r
    return [StrictPartition(p) for p in _strict(r, r, max_len)]
