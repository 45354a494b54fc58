"""
The acceptance checks, one function per criterion.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in a
fixed order (optionally on a thread pool whose size is read from the
``QS_MAX_THREADS`` environment variable) and returns results in that order.
``max_r`` / ``max_n`` only ever *drop* cases, and dropped cases are listed in
the result detail.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from .clifford import c_lambda_alpha, c_q, c_q_prime
from .coeff import ZQ, ZV, IntegerRing, PolyQ, exact_rank
from .combinatorics import compositions, decorated_with_margins, enumerate_decorated, min_coset_reps
from .hecke_clifford import (
    HCElement, apply_involution, basis_keys, basis_of_xH, check_relations, coordinates,
    from_clifford, is_in_Hx, is_in_xH, mul, x_lambda, y_lambda,
)
from .schur import (
    SchurContext, basis_element, basis_product, e_omega, intersection_dim_bruteforce, multiply,
    one_part_basis, parabolic_intersection_basis, parabolic_intersection_dim, random_element,
    schur_dim, t_AB, unit_element,
)
from .tensor import check_action_relations, commutant_dim, irreducible_census

__all__ = ["CheckResult", "CHECKS", "run_all", "random_hc_element"]


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed, "detail": self.detail}


def random_hc_element(r: int, rng: random.Random, terms: int = 4, ring=ZQ) -> HCElement:
    """A few random normal-form terms with small coefficients in Z[q]."""
    keys = basis_keys(r)
    acc = {}
    for _ in range(terms):
        k = keys[rng.randrange(len(keys))]
        acc[k] = ring.convert(PolyQ({0: rng.randint(-3, 3), 1: rng.randint(-2, 2)}))
    return HCElement(r, acc, ring)


def _skip(detail, what):
    detail.append(f"skipped {what} (outside --max-r/--max-n)")


# -- 1 ---------------------------------------------------------------------------------

def check_relations_suite(max_r: int = 4, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    for r in (2, 3, 4):
        if r > max_r:
            _skip(detail, f"H^c_{r}")
            continue
        res = check_relations(r)
        bad = [name for name, p in res if not p]
        ok &= not bad
        detail.append(f"H^c_{r}: {len(res) - len(bad)}/{len(res)} relations hold" + (f"; failing {bad}" if bad else ""))
    for n, r in ((1, 2), (1, 3), (2, 2), (2, 3)):
        if r > max_r or n > max_n:
            _skip(detail, f"tensor n={n} r={r}")
            continue
        res = check_action_relations(n, r)
        bad = [name for name, p in res if not p]
        ok &= not bad
        detail.append(f"V(n|n)^r n={n} r={r}: {len(res) - len(bad)}/{len(res)} relations hold"
                      + (f"; failing {bad}" if bad else ""))
    return CheckResult(1, "defining relations (normal form and tensor action)", ok, detail)


# -- 2 ---------------------------------------------------------------------------------

def check_dimensions(max_r: int = 4, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    for r in range(1, min(max_r, 4) + 1):
        keys = basis_keys(r)
        dim_ok = len(set(keys)) == len(keys) == (1 << r) * factorial(r)
        ok &= dim_ok
        sizes_ok = True
        lams = sorted({lam for parts in range(1, r + 1) for lam in compositions(parts, r)})
        for lam in lams:
            size = len(basis_of_xH(lam))
            sizes_ok &= size == len(min_coset_reps(lam)) << r
        ok &= sizes_ok
        detail.append(f"r={r}: dim H^c = {len(keys)} (expect {(1 << r) * factorial(r)}); "
                      f"basis_of_xH sizes {'match' if sizes_ok else 'MISMATCH'} for {len(lams)} compositions")
    return CheckResult(2, "dimension of H^c_r and of x_lam H^c", ok, detail)


# -- 3 ---------------------------------------------------------------------------------

def check_lemma_xc(max_r: int = 5, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    for r in range(1, 6):
        if r > max_r:
            _skip(detail, f"r={r}")
            continue
        x = x_lambda((r,), ZQ)
        lhs = mul(x, from_clifford(c_q(1, r, r, ZQ)))
        rhs = mul(from_clifford(c_q_prime(1, r, r, ZQ)), x)
        y = y_lambda((r,), ZV)
        lhs_y = mul(y, from_clifford(c_q_prime(1, r, r, ZV)))
        rhs_y = mul(from_clifford(c_q(1, r, r, ZV)), y)
        good = lhs == rhs and lhs_y == rhs_y
        ok &= good
        detail.append(f"r={r}: x c_q = c'_q x {lhs == rhs}; y c'_q = c_q y {lhs_y == rhs_y}")
    return CheckResult(3, "x_(r) c_q = c'_q x_(r) and the y-version", ok, detail)


# -- 4 ---------------------------------------------------------------------------------

def check_one_part(max_r: int = 3, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    for r in (1, 2, 3):
        if r > max_r:
            _skip(detail, f"lam=({r})")
            continue
        ctx = SchurContext(1, r)
        dim = intersection_dim_bruteforce(ctx, (r,), (r,))
        basis = one_part_basis(r)
        member = all(is_in_xH(b, (r,)) and is_in_Hx(b, (r,)) for b in basis)
        indep = exact_rank([coordinates(b) for b in basis]) == 2
        good = dim == 2 and member and indep
        ok &= good
        detail.append(f"lam=mu=({r}): intersection dim {dim}; {{x, x c_q}} in it {member}, independent {indep}")
    for lam in ((2, 1), (1, 2), (1, 1, 1)):
        if sum(lam) > max_r:
            _skip(detail, f"lam={lam}")
            continue
        expect = 1 << sum(1 for p in lam if p)
        dim = parabolic_intersection_dim(lam)
        basis = parabolic_intersection_basis(lam)
        member = all(is_in_xH(b, lam) and is_in_Hx(b, lam) for b in basis)
        indep = exact_rank([coordinates(b) for b in basis]) == len(basis)
        x = x_lambda(lam)
        swap = all(
            mul(x, from_clifford(c_lambda_alpha(lam, a))) == mul(from_clifford(c_lambda_alpha(lam, a, primed=True)), x)
            for a in itertools.product((0, 1), repeat=len(lam)))
        good = dim == expect == len(basis) and member and indep and swap
        ok &= good
        detail.append(f"lam={lam}: parabolic intersection dim {dim} (expect {expect}); "
                      f"basis members {member}, independent {indep}, x c = c' x {swap}")
    return CheckResult(4, "one-part and parabolic intersections", ok, detail)


# -- 5 ---------------------------------------------------------------------------------

def check_schur_basis(max_r: int = 3, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    n = 2
    if n > max_n:
        _skip(detail, "n=2")
        return CheckResult(5, "intersection dimensions and the T_{A|B} basis", True, detail)
    for r in (1, 2, 3):
        if r > max_r:
            _skip(detail, f"r={r}")
            continue
        ctx = SchurContext(n, r)
        total, bad = 0, []
        for lam in ctx.weights:
            for mu in ctx.weights:
                pairs = decorated_with_margins(lam, mu)
                total += len(pairs)
                brute = intersection_dim_bruteforce(ctx, lam, mu)
                rank = exact_rank([coordinates(t_AB(ctx, p)) for p in pairs]) if pairs else 0
                if not brute == rank == len(pairs):
                    bad.append((lam, mu, brute, rank, len(pairs)))
        sd = schur_dim(ctx)
        good = not bad and total == sd and (r != 2 or sd == 32)
        ok &= good
        detail.append(f"n=2 r={r}: {len(ctx.weights) ** 2} margin pairs, sum {total} = schur_dim {sd}"
                      + (f"; mismatches {bad}" if bad else ""))
    return CheckResult(5, "intersection dimensions and the T_{A|B} basis", ok, detail)


# -- 6 ---------------------------------------------------------------------------------

def check_algebra_structure(max_r: int = 2, max_n: int = 2, seed: int = 6) -> CheckResult:
    detail, ok = [], True
    rng = random.Random(seed)
    for n, r in ((1, 1), (1, 2), (2, 1), (2, 2)):
        if r > max_r or n > max_n:
            _skip(detail, f"n={n} r={r}")
            continue
        ctx = SchurContext(n, r)
        basis = [basis_element(ctx, p) for p in enumerate_decorated(n, r)]
        assoc = all(multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c))
                    for a, b, c in itertools.product(basis, repeat=3))
        one = unit_element(ctx)
        unit_ok = all(multiply(ctx, one, a) == a == multiply(ctx, a, one) for a in basis)
        rand_ok = True
        for _ in range(10):
            a, b, c = (random_element(ctx, rng) for _ in range(3))
            rand_ok &= multiply(ctx, multiply(ctx, a, b), c) == multiply(ctx, a, multiply(ctx, b, c))
            rand_ok &= multiply(ctx, one, a) == a
        good = assoc and unit_ok and rand_ok
        ok &= good
        detail.append(f"n={n} r={r}: associative on all {len(basis) ** 3} basis triples {assoc}; "
                      f"unit {unit_ok}; random triples {rand_ok}")
    if max_n >= 2 and max_r >= 2:
        ctx = SchurContext(2, 2)
        e = e_omega(ctx)
        idem = multiply(ctx, e, e) == e
        pairs = enumerate_decorated(2, 2)
        index = {p: i for i, p in enumerate(pairs)}
        rows = [{index[p]: c for p, c in multiply(ctx, multiply(ctx, e, basis_element(ctx, p)), e).terms.items()}
                for p in pairs]
        dim = exact_rank(rows)
        good = idem and dim == (1 << 2) * factorial(2)
        ok &= good
        detail.append(f"n=r=2: e_omega idempotent {idem}; dim e_omega Q e_omega = {dim} (expect 8)")
    return CheckResult(6, "associativity, unit, e_omega", ok, detail)


# -- 7 ---------------------------------------------------------------------------------

def check_base_change(max_r: int = 3, max_n: int = 2, seed: int = 7, pairs: int = 100) -> CheckResult:
    detail, ok = [], True
    rng = random.Random(seed)
    r_hc = min(3, max_r)
    for q0 in (1, 5):
        ring = IntegerRing(q0)
        good = 0
        for _ in range(pairs):
            x, y = random_hc_element(r_hc, rng), random_hc_element(r_hc, rng)
            good += mul(x, y).specialize(q0) == mul(x.specialize(q0), y.specialize(q0))
        ok &= good == pairs
        detail.append(f"H^c_{r_hc}, q0={q0}: {good}/{pairs} random products commute with specialization")
        n, r = min(2, max_n), min(2, max_r)
        ctx_q, ctx_0 = SchurContext(n, r), SchurContext(n, r, ring=ring)
        basis = enumerate_decorated(n, r)
        sc_ok = all(basis_product(ctx_q, a, b).specialize(q0) == basis_product(ctx_0, a, b)
                    for a in basis for b in basis)
        good = 0
        for _ in range(pairs):
            a, b = random_element(ctx_q, rng), random_element(ctx_q, rng)
            good += multiply(ctx_q, a, b).specialize(q0) == multiply(ctx_0, a.specialize(q0), b.specialize(q0))
        ok &= sc_ok and good == pairs
        detail.append(f"Q(n={n},r={r}), q0={q0}: all {len(basis) ** 2} structure constants specialize {sc_ok}; "
                      f"{good}/{pairs} random products commute")
    return CheckResult(7, "base change q -> q0", ok, detail)


# -- 8 ---------------------------------------------------------------------------------

def check_double_centralizer(max_r: int = 2, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    for n, r in ((1, 1), (1, 2), (2, 1), (2, 2)):
        if r > max_r or n > max_n:
            _skip(detail, f"n={n} r={r}")
            continue
        cd, sd = commutant_dim(n, r), schur_dim(SchurContext(n, r))
        ok &= cd == sd
        detail.append(f"n={n} r={r}: commutant dim {cd}, schur_dim {sd}")
    return CheckResult(8, "double centralizer", ok, detail)


# -- 9 ---------------------------------------------------------------------------------

def _brute_strict(n: int, r: int) -> set[tuple[int, ...]]:
    # subsets of {1..r} with sum r and at most n elements
    out = set()
    for k in range(1, min(n, r) + 1):
        for combo in itertools.combinations(range(1, r + 1), k):
            if sum(combo) == r:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def check_census(max_r: int = 8, max_n: int = 2) -> CheckResult:
    detail, ok = [], True
    for r in range(1, 9):
        row_ok = True
        for n in range(1, r + 2):
            census = irreducible_census(n, r)
            parts = {xi.parts for xi, _ in census}
            row_ok &= len(census) == len(parts) and parts == _brute_strict(n, r)
            row_ok &= all(t == ("Q" if len(xi.parts) % 2 else "M") for xi, t in census)
            if n >= r:
                row_ok &= parts == _brute_strict(r, r)
        ok &= row_ok
        detail.append(f"r={r}: |SP(r)| = {len(_brute_strict(r, r))}; counts for n=1..{r + 1} match {row_ok}")
    return CheckResult(9, "strict partition census", ok, detail)


# -- 10 --------------------------------------------------------------------------------

def _hc_span_rank(elements) -> int:
    return exact_rank([coordinates(e) for e in elements])


def check_involutions(max_r: int = 3, max_n: int = 2, seed: int = 10, samples: int = 8) -> CheckResult:
    detail, ok = [], True
    rng = random.Random(seed)
    kinds = {"phi": False, "psi": False, "tau": True, "iota": True}
    for r in (2, 3):
        if r > max_r:
            _skip(detail, f"r={r}")
            continue
        for tag, anti in kinds.items():
            good = True
            for _ in range(samples):
                x, y = random_hc_element(r, rng), random_hc_element(r, rng)
                fx, fy = apply_involution(tag, x), apply_involution(tag, y)
                good &= apply_involution(tag, fx) == x
                good &= apply_involution(tag, mul(x, y)) == (mul(fy, fx) if anti else mul(fx, fy))
            ok &= good
            detail.append(f"r={r} {tag}: order 2 and {'anti-' if anti else ''}homomorphism {good}")
        for lam in sorted({lam for parts in range(1, r + 1) for lam in compositions(parts, r)}):
            y = y_lambda(lam, ZV)
            x = x_lambda(lam, ZV)
            hc = [HCElement(r, {k: ZV.one}, ZV) for k in basis_keys(r)]
            left = [apply_involution("tau", mul(h, y)) for h in hc]
            right = [mul(x, h) for h in hc]
            a, b, both = _hc_span_rank(left), _hc_span_rank(right), _hc_span_rank(left + right)
            good = a == b == both
            ok &= good
            detail.append(f"r={r} lam={lam}: rank tau(H y) {a}, rank x H {b}, joint {both}")
    return CheckResult(10, "involutions and the tau-twist", ok, detail)


CHECKS = (
    check_relations_suite, check_dimensions, check_lemma_xc, check_one_part, check_schur_basis,
    check_algebra_structure, check_base_change, check_double_centralizer, check_census,
    check_involutions,
)


def _run_one(fn, max_r, max_n) -> CheckResult:
    t0 = time.perf_counter()
    kwargs = {}
    if max_r is not None:
        kwargs["max_r"] = max_r
    if max_n is not None:
        kwargs["max_n"] = max_n
    res = fn(**kwargs)
    res.seconds = time.perf_counter() - t0
    return res


def run_all(max_r: int | None = None, max_n: int | None = None,
            threads: int | None = None) -> list[CheckResult]:
    """All criteria in canonical order."""
    if threads is None:
        threads = int(os.environ.get("QS_MAX_THREADS", "1") or 1)
    if threads <= 1:
        return [_run_one(fn, max_r, max_n) for fn in CHECKS]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda fn: _run_one(fn, max_r, max_n), CHECKS))
