"""
Command-line front end: ``python3 -m qqschur <group> <command> ...``.

Every command prints a human-readable table by default and compact JSON with
``--json``.  Output is deterministic for fixed arguments (timings are only
printed with ``--timing``).  Exit codes: 0 success / all checks pass,
1 a verification failed, 2 usage or parse error, 3 a size guard refused
the computation.

Element syntax (``hc`` commands)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := int | 'q' | 'v' | 'T' int | 'c' int | '(' expr ')'

for example ``T1*T2*c1 + (q-1)*c2``.  ``v`` (with ``q = v^2``) and negative
powers of ``q``/``v`` need ``--ring v``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .acceptance import run_all
from .coeff import ZQ, ZV, LaurentV, exact_rank
from .combinatorics import (
    DecoratedMatrix, compositions, decorated_with_margins, double_coset_reps, enumerate_decorated,
    matrix_to_triple, min_coset_reps, triple_to_matrix,
)
from .errors import NotMinimalRep, QQSchurError, SizeGuard
from .hecke_clifford import (
    INVOLUTIONS, HCElement, apply_involution, check_relations, coordinates, gen_c, gen_T, mul,
    scalar,
)
from .schur import (
    DEFAULT_MAX_HC_DIM, SchurContext, basis_element, intersection_dim_bruteforce, multiply,
    schur_dim, t_AB,
)
from .tensor import (
    DEFAULT_MAX_COMMUTANT_DIM, DEFAULT_MAX_TENSOR_DIM, check_action_relations, commutant_dim,
    irreducible_census,
)

__all__ = ["main", "parse_element", "ParseError"]


class ParseError(QQSchurError, ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")


class UsageError(QQSchurError, ValueError):
    pass


# -- element parser ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([Tc])(\d+)|([qv])|(\S))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append((m.group(2), int(m.group(3)), start))
        elif m.group(4):
            out.append((m.group(4), None, start))
        elif m.group(5):
            if m.group(5) not in "+-*^()":
                raise ParseError(f"unexpected character {m.group(5)!r}", text, start)
            out.append((m.group(5), None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_element(text: str, r: int, ring=ZQ) -> HCElement:
    """Parse the element grammar into an :class:`HCElement` of rank ``r``."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None):
        nonlocal i
        tok = toks[i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}", text, tok[2])
        i += 1
        return tok

    def expr():
        val = term()
        while peek()[0] in ("+", "-"):
            op = take()[0]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek()[0] == "*":
            take()
            val = mul(val, factor())
        return val

    def factor():
        if peek()[0] == "-":
            take()
            return -factor()
        start = peek()[2]
        val = atom()
        if peek()[0] == "^":
            take()
            neg = False
            if peek()[0] == "-":
                take()
                neg = True
            tok = take("int")
            k = -tok[1] if neg else tok[1]
            val = _power(val, k, start)
        return val

    def _power(val, k, pos):
        if k < 0:
            ident = (tuple(range(1, r + 1)), 0)
            c = val.terms.get(ident)
            if len(val.terms) != 1 or not isinstance(c, LaurentV) or len(c.coeffs()) != 1:
                raise ParseError("negative powers only for q or v over --ring v", text, pos)
            return scalar(c ** k, r, ring)
        out = scalar(1, r, ring)
        for _ in range(k):
            out = mul(out, val)
        return out

    def atom():
        kind, val, pos = take()
        if kind == "int":
            return scalar(val, r, ring)
        if kind == "q":
            return scalar(ring.q, r, ring)
        if kind == "v":
            if ring != ZV:
                raise ParseError("'v' needs --ring v", text, pos)
            return scalar(LaurentV.gen(), r, ring)
        if kind == "T":
            if not 1 <= val <= r - 1:
                raise ParseError(f"T{val} out of range for r={r}", text, pos)
            return gen_T(val, r, ring)
        if kind == "c":
            if not 1 <= val <= r:
                raise ParseError(f"c{val} out of range for r={r}", text, pos)
            return gen_c(val, r, ring)
        if kind == "(":
            inner = expr()
            take(")")
            return inner
        what = "end of input" if kind == "end" else repr(kind)
        raise ParseError(f"unexpected {what}", text, pos)

    result = expr()
    take("end")
    return result


# -- argument helpers ----------------------------------------------------------------------

def _composition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}; use e.g. 2,1") from None
    if not parts or min(parts) < 0:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}")
    return parts


def _matrix(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(x) for x in row.split(",")) for row in text.replace(" ", "").split(";"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad matrix {text!r}; use e.g. '1,1;1,0'") from None
    if len({len(row) for row in rows}) != 1:
        raise argparse.ArgumentTypeError("matrix rows must have equal length")
    return rows


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _ring(name: str):
    return ZV if name == "v" else ZQ


def _hc_guard(r: int, bound: int | None):
    from math import factorial
    bound = DEFAULT_MAX_HC_DIM if bound is None else bound
    if (1 << r) * factorial(r) > bound:
        raise SizeGuard("hc-dim", (1 << r) * factorial(r), bound)


def _emit(args, payload, human: Sequence[str]):
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in human:
            print(line)


def _report_checks(args, title: str, results: list[tuple[str, bool]], extra: dict) -> int:
    failed = sum(1 for _, p in results if not p)
    payload = {**extra, "checks": [{"name": n, "passed": p} for n, p in results],
               "passed": len(results) - failed, "failed": failed}
    lines = [title] + [f"  {'PASS' if p else 'FAIL'}  {n}" for n, p in results]
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    _emit(args, payload, lines)
    return 0 if failed == 0 else 1


# -- commands ------------------------------------------------------------------------------

def cmd_hc_mul(args) -> int:
    _hc_guard(args.r, args.max_dim)
    ring = _ring(args.ring)
    x = parse_element(args.left, args.r, ring)
    y = parse_element(args.right, args.r, ring)
    z = mul(x, y)
    _emit(args, {"r": args.r, "ring": args.ring, "product": z.to_json()}, [str(z)])
    return 0


def cmd_hc_relations(args) -> int:
    _hc_guard(args.r, args.max_dim)
    return _report_checks(args, f"defining relations of H^c_{args.r}", check_relations(args.r), {"r": args.r})


def cmd_hc_involution(args) -> int:
    _hc_guard(args.r, args.max_dim)
    ring = _ring(args.ring)
    x = parse_element(args.elem, args.r, ring)
    y = apply_involution(args.tag, x)
    _emit(args, {"tag": args.tag, "r": args.r, "image": y.to_json()}, [str(y)])
    return 0


def cmd_coset_reps(args) -> int:
    lam = args.lam
    if args.mu is None:
        reps = min_coset_reps(lam)
        _emit(args, {"lambda": list(lam), "reps": [list(d) for d in reps]},
              [f"D_{lam}: {len(reps)} representatives"] + [f"  {d}" for d in reps])
        return 0
    if sum(args.mu) != sum(lam):
        raise UsageError("--lambda and --mu must be compositions of the same r")
    reps = double_coset_reps(lam, args.mu)
    rows = [{"d": list(d), "matrix": [list(row) for row in triple_to_matrix(lam, d, args.mu)]} for d in reps]
    _emit(args, {"lambda": list(lam), "mu": list(args.mu), "reps": rows},
          [f"D_{{{lam},{args.mu}}}: {len(reps)} representatives"]
          + [f"  {tuple(row['d'])}  <->  {row['matrix']}" for row in rows])
    return 0


def cmd_coset_matrix(args) -> int:
    if args.M is not None:
        lam, d, mu = matrix_to_triple(args.M)
        _emit(args, {"matrix": [list(row) for row in args.M], "lambda": list(lam), "d": list(d), "mu": list(mu)},
              [f"lambda = {lam}", f"d      = {d}", f"mu     = {mu}"])
        return 0
    if args.lam is None or args.mu is None or args.d is None:
        raise UsageError("give either --M or all of --lambda, --d, --mu")
    m = triple_to_matrix(args.lam, args.d, args.mu)
    _emit(args, {"lambda": list(args.lam), "d": list(args.d), "mu": list(args.mu),
                 "matrix": [list(row) for row in m]}, [str(list(map(list, m)))])
    return 0


def _ctx(args) -> SchurContext:
    _hc_guard(args.r, args.max_dim)
    return SchurContext(args.n, args.r, max_dim=args.max_dim or DEFAULT_MAX_HC_DIM)


def cmd_schur_dim(args) -> int:
    d = schur_dim(SchurContext(args.n, args.r))
    _emit(args, {"dim": d}, [f"dim Q_q({args.n},{args.r}) = {d}"])
    return 0


def cmd_schur_basis(args) -> int:
    allp = enumerate_decorated(args.n, args.r)
    if (args.lam is None) != (args.mu is None):
        raise UsageError("--lambda and --mu go together")
    if args.lam is not None:
        for c in (args.lam, args.mu):
            if len(c) != args.n or sum(c) != args.r:
                raise UsageError(f"{c} is not a composition of {args.r} into {args.n} parts")
        chosen = set(decorated_with_margins(args.lam, args.mu))
    else:
        chosen = set(allp)
    rows = [{"index": i, **p.to_json(), "parity": p.parity} for i, p in enumerate(allp) if p in chosen]
    _emit(args, {"basis": rows},
          [f"{row['index']:4d}  {DecoratedMatrix(row['A'], row['B'])}  parity {row['parity']}" for row in rows])
    return 0


def cmd_schur_mul(args) -> int:
    ctx = _ctx(args)
    allp = enumerate_decorated(args.n, args.r)
    for idx in (args.i, args.j):
        if not 0 <= idx < len(allp):
            raise UsageError(f"basis index {idx} out of range 0..{len(allp) - 1}")
    a, b = allp[args.i], allp[args.j]
    prod = multiply(ctx, basis_element(ctx, a), basis_element(ctx, b))
    _emit(args, {"left": a.to_json(), "right": b.to_json(), "product": prod.to_json()},
          [f"phi{a} * phi{b} ="] + [f"  ({c}) phi{p}" for p, c in prod.items()] + (["  0"] if not prod else []))
    return 0


def cmd_schur_verify(args) -> int:
    ctx = _ctx(args)
    results, rows = [], []
    for lam in compositions(args.n, args.r):
        for mu in compositions(args.n, args.r):
            pairs = decorated_with_margins(lam, mu)
            brute = intersection_dim_bruteforce(ctx, lam, mu)
            rank = exact_rank([coordinates(t_AB(ctx, p)) for p in pairs]) if pairs else 0
            ok = brute == rank == len(pairs)
            results.append((f"lambda={lam} mu={mu}: brute {brute}, |M| {len(pairs)}, rank {rank}", ok))
            rows.append({"lambda": list(lam), "mu": list(mu), "bruteforce": brute, "count": len(pairs), "rank": rank})
    failed = sum(1 for _, p in results if not p)
    payload = {"n": args.n, "r": args.r, "margins": rows, "schur_dim": schur_dim(ctx),
               "passed": len(results) - failed, "failed": failed}
    lines = [f"T_(A|B) basis check for Q_q({args.n},{args.r})"]
    lines += [f"  {'PASS' if p else 'FAIL'}  {n}" for n, p in results]
    lines.append(f"{len(results) - failed}/{len(results)} passed; schur_dim = {payload['schur_dim']}")
    _emit(args, payload, lines)
    return 0 if failed == 0 else 1


def cmd_tensor_relations(args) -> int:
    bound = args.max_dim or DEFAULT_MAX_TENSOR_DIM
    res = check_action_relations(args.n, args.r, max_dim=bound)
    return _report_checks(args, f"relations on V({args.n}|{args.n})^(x){args.r}", res, {"n": args.n, "r": args.r})


def cmd_tensor_commutant(args) -> int:
    bound = args.max_dim or DEFAULT_MAX_COMMUTANT_DIM
    cd = commutant_dim(args.n, args.r, max_dim=bound)
    sd = schur_dim(SchurContext(args.n, args.r))
    _emit(args, {"n": args.n, "r": args.r, "commutant_dim": cd, "schur_dim": sd, "equal": cd == sd},
          [f"commutant dim {cd}, schur_dim {sd}: {'equal' if cd == sd else 'DIFFERENT'}"])
    return 0 if cd == sd else 1


def cmd_tensor_census(args) -> int:
    census = irreducible_census(args.n, args.r)
    _emit(args, [xi.to_json() for xi, _ in census],
          [f"{len(census)} irreducibles"] + [f"  {xi.parts}  type {t}" for xi, t in census])
    return 0


def cmd_verify_all(args) -> int:
    results = run_all(max_r=args.max_r, max_n=args.max_n)
    failed = sum(1 for res in results if not res.passed)
    payload = {"criteria": [res.to_json() for res in results],
               "passed": len(results) - failed, "failed": failed}
    if args.timing:
        for row, res in zip(payload["criteria"], results):
            row["seconds"] = round(res.seconds, 3)
    lines = []
    for res in results:
        lines.append(res.line() + (f"  ({res.seconds:.2f}s)" if args.timing else ""))
        lines += [f"      {d}" for d in res.detail]
    lines.append(f"{len(results) - failed}/{len(results)} criteria passed")
    _emit(args, payload, lines)
    return 0 if failed == 0 else 1


# -- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-dim", type=_positive, default=None,
                        help="bound for the size guard of this command (H^c: 2^r r!, default 46080; "
                             "tensor: (2n)^r, default 4096; commutant: (2n)^(2r), default 1024)")
    common.add_argument("--timing", action="store_true", help="include timings (output no longer deterministic)")

    p = argparse.ArgumentParser(prog="qqschur", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    groups = p.add_subparsers(dest="group", required=True)

    def sub(group, name, fn, help_):
        sp = group.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(fn=fn)
        return sp

    hc = groups.add_parser("hc", help="Hecke-Clifford superalgebra").add_subparsers(dest="cmd", required=True)
    s = sub(hc, "mul", cmd_hc_mul, "product of two elements in normal form")
    s.add_argument("--r", type=_positive, required=True)
    s.add_argument("--ring", choices=("q", "v"), default="q")
    s.add_argument("left", metavar="ELEM")
    s.add_argument("right", metavar="ELEM")
    s = sub(hc, "relations", cmd_hc_relations, "check all defining relations")
    s.add_argument("--r", type=_positive, required=True)
    s = sub(hc, "involution", cmd_hc_involution, "apply an (anti-)involution")
    s.add_argument("--tag", choices=INVOLUTIONS, required=True)
    s.add_argument("--r", type=_positive, required=True)
    s.add_argument("--ring", choices=("q", "v"), default="q")
    s.add_argument("elem", metavar="ELEM")

    coset = groups.add_parser("coset", help="coset representatives").add_subparsers(dest="cmd", required=True)
    s = sub(coset, "reps", cmd_coset_reps, "D_lambda, or D_{lambda,mu} with their matrices")
    s.add_argument("--lambda", dest="lam", type=_composition, required=True)
    s.add_argument("--mu", type=_composition)
    s = sub(coset, "matrix", cmd_coset_matrix, "matrix <-> (lambda, d, mu) bijection")
    s.add_argument("--M", type=_matrix, help="matrix as rows, e.g. '1,1;1,0'")
    s.add_argument("--lambda", dest="lam", type=_composition)
    s.add_argument("--d", type=_composition, help="permutation in one-line notation, e.g. 1,3,2")
    s.add_argument("--mu", type=_composition)

    schur = groups.add_parser("schur", help="Q-q-Schur superalgebra").add_subparsers(dest="cmd", required=True)
    for name, fn, help_ in (("dim", cmd_schur_dim, "dimension |M_n(N|Z2)_r|"),
                            ("basis", cmd_schur_basis, "list the basis phi_(A|B) with indices"),
                            ("mul", cmd_schur_mul, "product of two basis elements by index"),
                            ("verify", cmd_schur_verify, "brute-force intersection dims vs the T_(A|B) basis")):
        s = sub(schur, name, fn, help_)
        s.add_argument("--n", type=_positive, required=True)
        s.add_argument("--r", type=_positive, required=True)
        if name == "basis":
            s.add_argument("--lambda", dest="lam", type=_composition)
            s.add_argument("--mu", type=_composition)
        if name == "mul":
            s.add_argument("i", type=int, metavar="IDX")
            s.add_argument("j", type=int, metavar="IDX")

    tensor = groups.add_parser("tensor", help="tensor superspace").add_subparsers(dest="cmd", required=True)
    for name, fn, help_ in (("relations", cmd_tensor_relations, "relations of the action on V(n|n)^r"),
                            ("commutant", cmd_tensor_commutant, "dimension of the commutant vs schur_dim"),
                            ("census", cmd_tensor_census, "strict partitions with at most n parts")):
        s = sub(tensor, name, fn, help_)
        s.add_argument("--n", type=_positive, required=True)
        s.add_argument("--r", type=_positive, required=True)

    verify = groups.add_parser("verify", help="acceptance suite").add_subparsers(dest="cmd", required=True)
    s = sub(verify, "all", cmd_verify_all, "run every acceptance criterion")
    s.add_argument("--max-r", type=_positive, default=None, help="drop cases with larger r")
    s.add_argument("--max-n", type=_positive, default=None, help="drop cases with larger n")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SizeGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotMinimalRep, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QQSchurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
