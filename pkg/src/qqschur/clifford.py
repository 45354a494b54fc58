"""
The Clifford superalgebra C_r on odd generators c_1, ..., c_r with
``c_i**2 = -1`` and ``c_i c_j = -c_j c_i``.

Monomials ``c^alpha = c_1^{a_1} ... c_r^{a_r}`` are kept in ascending index
order.  Internally a monomial is an ``int`` bitmask (bit ``k-1`` <-> ``c_k``);
the public helpers also accept 0/1 tuples.

Some references use generators ``C_i`` with ``C_i**2 = +1``; these relate by
``c_i = sqrt(-1) C_i``.  Only the ``c_i**2 = -1`` convention is implemented.

>>> mono_mul((1, 0), (0, 1))
(1, (1, 1))
>>> mono_mul((0, 1), (1, 0))
(-1, (1, 1))
>>> mono_mul((1, 0), (1, 0))
(-1, (0, 0))
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .coeff import ZQ, Ring
from .combinatorics import DecoratedMatrix, Perm, blocks, nu_of
from .errors import BadDecoration

__all__ = [
    "bits_to_mask", "mask_to_bits", "mask_mul", "mono_mul", "perm_act", "perm_act_mask",
    "CliffordElement", "c_q", "c_q_prime", "c_lambda_alpha", "c_AB", "c_AB_prime",
]


def bits_to_mask(alpha: Sequence[int]) -> int:
    m = 0
    for k, a in enumerate(alpha):
        if a not in (0, 1):
            raise ValueError(f"alpha must be 0/1, got {alpha}")
        if a:
            m |= 1 << k
    return m


def mask_to_bits(mask: int, r: int) -> tuple[int, ...]:
    return tuple((mask >> k) & 1 for k in range(r))


@lru_cache(maxsize=1 << 16)
def mask_mul(a: int, b: int) -> tuple[int, int]:
    """``c^a c^b = sign * c^(a xor b)`` on bitmasks."""
    crossings = 0
    bb = b
    while bb:
        low = bb & -bb
        # generators of a with larger index than this generator of b
        crossings += bin(a & ~((low << 1) - 1)).count("1")
        bb ^= low
    crossings += bin(a & b).count("1")
    return (-1 if crossings & 1 else 1), a ^ b


def mono_mul(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    if len(alpha) != len(beta):
        raise ValueError("monomials of different length")
    sign, m = mask_mul(bits_to_mask(alpha), bits_to_mask(beta))
    return sign, mask_to_bits(m, len(alpha))


@lru_cache(maxsize=1 << 16)
def perm_act_mask(w: Perm, mask: int) -> tuple[int, int]:
    """``w . c^alpha = c_{w(1)}^{a_1} ... c_{w(r)}^{a_r} = sign * c^{alpha.w^{-1}}``."""
    seq = [w[k] for k in range(len(w)) if (mask >> k) & 1]
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    out = 0
    for g in seq:
        out |= 1 << (g - 1)
    return (-1 if inv & 1 else 1), out


def perm_act(w: Perm, alpha: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    if len(w) != len(alpha):
        raise ValueError("rank mismatch")
    sign, m = perm_act_mask(tuple(w), bits_to_mask(alpha))
    return sign, mask_to_bits(m, len(alpha))


class CliffordElement:
    """Sparse linear combination of monomials ``c^alpha`` over a ring."""

    __slots__ = ("r", "ring", "terms")

    def __init__(self, r: int, terms: dict[int, object] | None = None, ring: Ring = ZQ):
        self.r = r
        self.ring = ring
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, r: int, ring: Ring = ZQ):
        return cls(r, {0: ring.one}, ring)

    @classmethod
    def generator(cls, j: int, r: int, ring: Ring = ZQ):
        if not 1 <= j <= r:
            raise ValueError(f"c_{j} out of range for r={r}")
        return cls(r, {1 << (j - 1): ring.one}, ring)

    def _check(self, other):
        if not isinstance(other, CliffordElement) or other.r != self.r or other.ring != self.ring:
            raise TypeError("incompatible Clifford elements")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return CliffordElement(self.r, t, self.ring)

    def __neg__(self):
        return CliffordElement(self.r, {m: -c for m, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, CliffordElement):
            other = self.ring.convert(other)
            return CliffordElement(self.r, {m: c * other for m, c in self.terms.items()}, self.ring)
        self._check(other)
        t: dict[int, object] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign, m = mask_mul(ma, mb)
                t[m] = t.get(m, 0) + (ca * cb if sign > 0 else -(ca * cb))
        return CliffordElement(self.r, t, self.ring)

    def __rmul__(self, scalar):
        scalar = self.ring.convert(scalar)
        return CliffordElement(self.r, {m: scalar * c for m, c in self.terms.items()}, self.ring)

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def parity_homogeneous(self) -> int | None:
        pars = {bin(m).count("1") % 2 for m in self.terms}
        return pars.pop() if len(pars) == 1 else None

    def act(self, w: Perm) -> "CliffordElement":
        """The S_r action permuting generators."""
        t: dict[int, object] = {}
        for m, c in self.terms.items():
            sign, m2 = perm_act_mask(tuple(w), m)
            t[m2] = t.get(m2, 0) + (c if sign > 0 else -c)
        return CliffordElement(self.r, t, self.ring)

    def items(self):
        return sorted(self.terms.items(), key=lambda mc: mask_to_bits(mc[0], self.r))

    def to_json(self) -> list[dict]:
        from .coeff import poly_to_json
        return [{"alpha": list(mask_to_bits(m, self.r)), "coeff": poly_to_json(c)} for m, c in self.items()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            gens = "*".join(f"c{k + 1}" for k in range(self.r) if (m >> k) & 1) or "1"
            parts.append(f"({c})*{gens}")
        return " + ".join(parts)


def _check_range(i: int, j: int, r: int):
    if not 1 <= i <= j <= r:
        raise ValueError(f"need 1 <= i <= j <= r, got i={i}, j={j}, r={r}")


def c_q(i: int, j: int, r: int, ring: Ring = ZQ) -> CliffordElement:
    """``q^{j-i} c_i + q^{j-i-1} c_{i+1} + ... + c_j``."""
    _check_range(i, j, r)
    q = ring.q
    return CliffordElement(r, {1 << (k - 1): q ** (j - k) if j > k else ring.one
                               for k in range(i, j + 1)}, ring)


def c_q_prime(i: int, j: int, r: int, ring: Ring = ZQ) -> CliffordElement:
    """``c_i + q c_{i+1} + ... + q^{j-i} c_j``."""
    _check_range(i, j, r)
    q = ring.q
    return CliffordElement(r, {1 << (k - 1): q ** (k - i) if k > i else ring.one
                               for k in range(i, j + 1)}, ring)


def c_lambda_alpha(lam: Sequence[int], alpha: Sequence[int], ring: Ring = ZQ,
                   primed: bool = False) -> CliffordElement:
    """Product over blocks ``k`` (ascending) of ``c_{q, block_k}^{alpha_k}``."""
    lam = tuple(lam)
    if len(alpha) != len(lam):
        raise ValueError("alpha must have one entry per part")
    r = sum(lam)
    out = CliffordElement.one(r, ring)
    make = c_q_prime if primed else c_q
    for blk, a, part in zip(blocks(lam), alpha, lam):
        if a not in (0, 1):
            raise ValueError("alpha entries must be 0/1")
        if a:
            if part == 0:
                raise BadDecoration(f"decoration on empty part of {lam}")
            out = out * make(blk.start, blk.stop - 1, r, ring)
    return out


def c_AB(pair: DecoratedMatrix, ring: Ring = ZQ, primed: bool = False) -> CliffordElement:
    """``c_{A|B} = c^{alpha_B}_{nu_{A|B}}`` (column-major reading of A+B and B)."""
    nu = nu_of(pair.total)
    alpha = pair.alpha_b()
    if any(b > m for b, m in zip(alpha, nu)):
        raise BadDecoration(f"B exceeds A+B in {pair}")
    return c_lambda_alpha(nu, alpha, ring, primed)


def c_AB_prime(pair: DecoratedMatrix, ring: Ring = ZQ) -> CliffordElement:
    return c_AB(pair, ring, primed=True)

