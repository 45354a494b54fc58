"""
Exact coefficient rings and fraction-free linear algebra.

Two polynomial types cover the base rings used throughout:

* :class:`PolyQ` -- integer polynomials in ``q`` (the ring ``Z[q]``);
* :class:`LaurentV` -- integer Laurent polynomials in ``v`` with ``q = v**2``.

Both are immutable, store only nonzero coefficients, and interoperate with
plain Python ``int`` (which also serves as the coefficient type after
specializing ``q`` to an integer).

>>> q = PolyQ.gen()
>>> (q - 1) * (q + 1)
PolyQ('q^2 - 1')
>>> exact_div(q**2 - 1, q - 1)
PolyQ('q + 1')
>>> specialize(q**2 - 2*q + 1, 3)
4

The linear algebra works on sparse rows (``dict`` column -> entry) and uses
Bareiss' fraction-free elimination, so every intermediate entry stays in the
base ring.  Pivots are chosen deterministically: the first nonzero entry in
row-major order among the rows not yet used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NotDivisible, NotIntegral, NotInSpan, RingNotInvertible

__all__ = [
    "PolyQ", "LaurentV", "PolyMatrix",
    "Ring", "PolyRing", "LaurentRing", "IntegerRing", "ZQ", "ZV",
    "poly_mul", "poly_exact_div", "exact_div", "specialize",
    "exact_rank", "rank_sparse", "solve_in_span", "solve_sparse",
    "poly_to_json", "poly_from_json",
]


class _SparsePoly:
    """Shared machinery for PolyQ / LaurentV; never instantiated directly."""

    __slots__ = ("_c", "_hash")
    VAR = "x"
    ALLOW_NEGATIVE = False

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        else:
            c = {}
            for e, v in coeffs.items():
                e = int(e)
                v = int(v)
                if v:
                    if e < 0 and not self.ALLOW_NEGATIVE:
                        raise ValueError(f"negative exponent {e} in {type(self).__name__}")
                    c[e] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict):
        # trusted constructor: c is canonical and owned by the new object
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def gen(cls):
        return cls._raw({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1):
        if exp < 0 and not cls.ALLOW_NEGATIVE:
            raise ValueError("negative exponent")
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    @property
    def degree(self) -> int | None:
        """Largest exponent; ``None`` for the zero polynomial."""
        return max(self._c) if self._c else None

    @property
    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def __bool__(self):
        return bool(self._c)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)._raw({0: other} if other else {})
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return type(self)._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self)._raw({})
            return type(self)._raw({e: v * other for e, v in self._c.items()})
        if type(other) is not type(self):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return type(self)._raw({})
        if len(a) < len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for eb, vb in b.items():
            for ea, va in a.items():
                e = ea + eb
                c[e] = c.get(e, 0) + va * vb
        return type(self)._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1 and self.ALLOW_NEGATIVE:
                ((e, v),) = self._c.items()
                if v in (1, -1):
                    return type(self)._raw({e * k: v ** (-k)})
            raise ValueError("negative power of a non-unit")
        result = type(self)._raw({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if type(other) is type(self):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._c.get(0, 0))
            else:
                self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    def shift(self, k: int):
        """Multiply by ``var**k``."""
        return type(self)._raw({e + k: v for e, v in self._c.items()})

    def exact_div(self, other):
        """Return ``c`` with ``self == other * c``; raise NotDivisible otherwise."""
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero polynomial")
            c = {}
            for e, v in self._c.items():
                qt, rem = divmod(v, other)
                if rem:
                    raise NotDivisible(f"{self} is not divisible by {other}")
                c[e] = qt
            return type(self)._raw(c)
        if type(other) is not type(self):
            raise TypeError(f"cannot divide {type(self).__name__} by {type(other).__name__}")
        if not other._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return self
        la, lb = self.low_degree, other.low_degree
        if not self.ALLOW_NEGATIVE and la < lb:
            # q^lb divides other, so it must divide self
            if any(e < lb for e in self._c):
                raise NotDivisible(f"{self} is not divisible by {other}")
        a = _dense(self._c, la)
        b = _dense(other._c, lb)
        quot = _dense_exact_div(a, b)
        if quot is None:
            raise NotDivisible(f"{self} is not divisible by {other}")
        shift = la - lb
        return type(self)._raw({i + shift: v for i, v in enumerate(quot) if v})

    def __floordiv__(self, other):
        return self.exact_div(other)

    def evaluate(self, x):
        """Evaluate at ``x`` (an int, Fraction, or anything supporting * and +)."""
        total = 0
        for e, v in self._c.items():
            if e >= 0:
                total += v * x ** e
            else:
                total += v * Fraction(1, 1) / Fraction(x) ** (-e)
        return total

    # -- display ------------------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                body = str(a)
            else:
                mono = self.VAR if e == 1 else f"{self.VAR}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    def to_json(self) -> dict[str, str]:
        return {str(e): str(v) for e, v in sorted(self._c.items())}


def _dense(c: dict[int, int], low: int) -> list[int]:
    out = [0] * (max(c) - low + 1)
    for e, v in c.items():
        out[e - low] = v
    return out


def _dense_exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """Exact quotient of dense polynomials over Z, or None if not divisible."""
    while b and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    da = len(a) - 1
    if da < db:
        return None if any(a) else [0]
    rem = list(a)
    lb = b[-1]
    quot = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        lead = rem[i + db]
        if lead:
            qt, r = divmod(lead, lb)
            if r:
                return None
            quot[i] = qt
            for j in range(db + 1):
                rem[i + j] -= qt * b[j]
    if any(rem):
        return None
    return quot


class PolyQ(_SparsePoly):
    """Integer polynomial in ``q``; exponents are nonnegative."""

    __slots__ = ()
    VAR = "q"
    ALLOW_NEGATIVE = False

    def to_laurent(self) -> "LaurentV":
        """Embed into Z[v, 1/v] via q -> v**2."""
        return LaurentV._raw({2 * e: v for e, v in self._c.items()})


class LaurentV(_SparsePoly):
    """Integer Laurent polynomial in ``v``."""

    __slots__ = ()
    VAR = "v"
    ALLOW_NEGATIVE = True

    def to_polyq(self) -> PolyQ:
        """Inverse of :meth:`PolyQ.to_laurent`; fails on odd or negative exponents."""
        c = {}
        for e, v in self._c.items():
            if e < 0 or e % 2:
                raise ValueError(f"{self} is not a polynomial in q = v^2")
            c[e // 2] = v
        return PolyQ._raw(c)

    def cleared(self) -> tuple[int, "LaurentV"]:
        """Return ``(k, p)`` with ``p = self * v**k`` having lowest exponent 0."""
        if not self._c:
            return 0, self
        k = -min(self._c)
        return k, self.shift(k)


def poly_to_json(p) -> dict[str, str]:
    if isinstance(p, int):
        return {"0": str(p)} if p else {}
    return p.to_json()


def poly_from_json(data: Mapping[str, str], kind=PolyQ):
    return kind({int(e): int(v) for e, v in data.items()})


def poly_mul(a: PolyQ, b: PolyQ) -> PolyQ:
    return a * b


def poly_exact_div(a: PolyQ, b: PolyQ) -> PolyQ:
    return a.exact_div(b)


def exact_div(a, b):
    """Exact quotient ``a / b`` in ``Z``, ``Z[q]`` or ``Z[v, 1/v]``."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        qt, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        return qt
    if isinstance(a, int):
        a = type(b)(a)
    return a.exact_div(b)


def specialize(p, q0: int) -> int:
    """Evaluation homomorphism ``Z[q] -> Z``, ``q -> q0``."""
    if isinstance(p, int):
        return p
    if isinstance(p, LaurentV):
        raise TypeError("specialize expects PolyQ; use LaurentV.evaluate for v")
    return p.evaluate(q0)


# -- rings ------------------------------------------------------------------

class Ring:
    """A coefficient ring together with its distinguished element ``q``."""

    name = "?"
    element_type: type = int

    @property
    def one(self):
        return self(1)

    @property
    def zero(self):
        return self(0)

    def __call__(self, x: int):
        raise NotImplementedError

    @property
    def q(self):
        raise NotImplementedError

    def q_inverse(self):
        raise RingNotInvertible(f"q is not invertible in {self.name}")

    def neg_q_inverse_power(self, k: int):
        """``(-q^{-1})**k``."""
        qi = self.q_inverse()
        return (-qi) ** k if k else self.one

    def convert(self, x):
        """Coerce an int or an element of this ring."""
        if isinstance(x, int):
            return self(x)
        if isinstance(x, self.element_type):
            return x
        if isinstance(x, PolyQ) and self.element_type is LaurentV:
            return x.to_laurent()
        raise TypeError(f"cannot convert {x!r} into {self.name}")

    def __repr__(self):
        return f"<Ring {self.name}>"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class PolyRing(Ring):
    name = "Z[q]"
    element_type = PolyQ
    _q = PolyQ.gen()

    def __call__(self, x: int):
        return PolyQ(int(x))

    @property
    def q(self):
        return self._q


class LaurentRing(Ring):
    name = "Z[v,v^-1]"
    element_type = LaurentV
    _q = LaurentV.monomial(2)
    _qi = LaurentV.monomial(-2)

    def __call__(self, x: int):
        return LaurentV(int(x))

    @property
    def q(self):
        return self._q

    def q_inverse(self):
        return self._qi


class IntegerRing(Ring):
    """The integers with ``q`` specialized to the integer ``q0``."""

    element_type = int

    def __init__(self, q0: int):
        self.q0 = int(q0)
        self.name = f"Z[q={self.q0}]"

    def __call__(self, x: int):
        return int(x)

    @property
    def q(self):
        return self.q0

    def q_inverse(self):
        if self.q0 in (1, -1):
            return self.q0
        return super().q_inverse()

    def convert(self, x):
        if isinstance(x, PolyQ):
            return specialize(x, self.q0)
        return super().convert(x)


ZQ = PolyRing()
ZV = LaurentRing()


# -- matrices ---------------------------------------------------------------

class PolyMatrix:
    """Dense rectangular matrix of ring entries (PolyQ, LaurentV or int)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        for r in self.entries:
            if len(r) != cols:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, k: int, ring: Ring = ZQ):
        return cls([[ring.one if i == j else ring.zero for j in range(k)] for i in range(k)], k)

    @classmethod
    def zeros(cls, m: int, k: int, ring: Ring = ZQ):
        return cls([[ring.zero] * k for _ in range(m)], k)

    def sparse_rows(self) -> list[dict[int, object]]:
        return [{j: x for j, x in enumerate(r) if x} for r in self.entries]

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def matvec(self, x: Sequence) -> list:
        out = []
        for r in self.entries:
            s = 0
            for a, b in zip(r, x):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def _as_sparse(m) -> list[dict[int, object]]:
    if isinstance(m, PolyMatrix):
        return m.sparse_rows()
    rows = []
    for r in m:
        if isinstance(r, dict):
            rows.append({j: x for j, x in r.items() if x})
        else:
            rows.append({j: x for j, x in enumerate(r) if x})
    return rows


def _bareiss(rows: list[dict[int, object]], pivot_limit: int | None = None):
    """
    Fraction-free forward elimination on sparse rows.

    Columns ``>= pivot_limit`` are never chosen as pivots (used for the
    right-hand side of a solve).  Returns ``(pivot_rows, leftovers)`` where
    ``pivot_rows`` is a list of ``(column, row)`` and ``leftovers`` are the
    nonzero rows that have no admissible pivot.
    """
    active = [dict(r) for r in rows if r]
    prev = 1
    pivots: list[tuple[int, dict]] = []
    leftovers: list[dict] = []
    while active:
        prow = None
        while active:
            cand = active.pop(0)
            cols = [j for j in cand if pivot_limit is None or j < pivot_limit]
            if cols:
                prow = cand
                c = min(cols)
                break
            leftovers.append(cand)
        if prow is None:
            break
        p = prow[c]
        try:
            ratio = exact_div(p, prev)
        except NotDivisible:
            ratio = None
        nxt = []
        for row in active:
            a = row.get(c)
            if a is None:
                if ratio is not None:
                    new = {j: x * ratio for j, x in row.items()}
                else:
                    new = {j: exact_div(p * x, prev) for j, x in row.items()}
            else:
                new = {}
                for j in row.keys() | prow.keys():
                    if j == c:
                        continue
                    x = row.get(j)
                    y = prow.get(j)
                    if x is None:
                        val = -(a * y)
                    elif y is None:
                        val = p * x
                    else:
                        val = p * x - a * y
                    if val:
                        new[j] = exact_div(val, prev) if prev != 1 else val
            if new:
                nxt.append(new)
        active = nxt
        pivots.append((c, prow))
        prev = p
    return pivots, leftovers


def rank_sparse(rows: Iterable[dict[int, object]]) -> int:
    pivots, _ = _bareiss(list(rows))
    return len(pivots)


def exact_rank(m) -> int:
    """Rank over the fraction field, by fraction-free elimination.

    Accepts a :class:`PolyMatrix`, a list of lists, or a list of sparse rows.
    LaurentV entries are handled directly (exact division in Z[v, 1/v]).
    """
    return rank_sparse(_as_sparse(m))


def solve_sparse(columns: Sequence[dict[int, object]], target: dict[int, object]) -> list:
    """Solve ``sum_j x_j * columns[j] == target`` with columns given sparsely.

    ``columns[j]`` maps row index -> entry.  Returns the coefficient list.
    """
    k = len(columns)
    rows: dict[int, dict[int, object]] = {}
    for j, col in enumerate(columns):
        for i, x in col.items():
            if x:
                rows.setdefault(i, {})[j] = x
    for i, x in target.items():
        if x:
            rows.setdefault(i, {})[k] = x
    ordered = [rows[i] for i in sorted(rows)]
    pivots, leftovers = _bareiss(ordered, pivot_limit=k)
    if leftovers:
        raise NotInSpan("target is not in the span of the columns")
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    det = pivots[-1][1][pivots[-1][0]]
    # y_j = det * x_j lies in the base ring (Cramer)
    y: dict[int, object] = {}
    for c, row in reversed(pivots):
        acc = det * row[k] if k in row else 0
        for j, a in row.items():
            if j != c and j != k:
                acc = acc - a * y[j]
        y[c] = exact_div(acc, row[c]) if acc else 0
    out = []
    for j in range(k):
        try:
            out.append(exact_div(y[j], det) if y[j] else y[j])
        except NotDivisible:
            raise NotIntegral(f"coefficient {j} is not integral") from None
    return out


def solve_in_span(columns, target: Sequence) -> list:
    """Unique ``x`` with ``columns @ x == target``, required to be integral.

    ``columns`` is a :class:`PolyMatrix` (or list of rows); ``target`` a list
    of entries, one per row.
    """
    if not isinstance(columns, PolyMatrix):
        columns = PolyMatrix(columns)
    cols = [{i: columns.entries[i][j] for i in range(columns.rows) if columns.entries[i][j]}
            for j in range(columns.cols)]
    tgt = {i: x for i, x in enumerate(target) if x}
    return solve_sparse(cols, tgt)
