"""Command-line interface.

Subcommands expose evaluation of semiring expressions, hull and cone
membership, two-point intervals, separation certificate search, Puiseux
lifts, exact linear programming, matroid checks, and the seeded
verification suites.  Parse errors exit 2; verification failures and
inconclusive searches exit 1.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from tropconvex.semiring import SymNum, parse_symnum
from tropconvex.vectors import SymVector, parse_vector, faces_complex
from tropconvex.hull import (
    PointSet,
    affine_mw_member,
    separate,
    separate_to,
    tc_cone_member,
    tc_hull_member,
    tc_interval,
    to_hull_member,
    wspan_member,
)
from tropconvex.puiseux import (
    PuiseuxVector,
    lift_canonical,
    lift_typed,
    parse_puiseux,
    sval,
)
from tropconvex.lp import conv_witness, cone_witness
from tropconvex.lifts import lift_witness
from tropconvex.matroids import (
    OMatroid,
    axioms_check,
    circuits,
    cocircuits,
    realize_sign_vectors,
    representation_check,
)
from tropconvex import verify as verify_mod


class CLIError(Exception):
    pass


# -- expression evaluation -----------------------------------------------------

_EXPR_TOKEN = re.compile(
    r"\s*(?:(?P<op>\(\+\)|\(\*\)|\(<\|\))"
    r"|(?P<vec>\[[^\]]*\])"
    r"|(?P<num>[+\-b]\(\s*-?\d+(?:\.\d+)?(?:/\d+)?\s*\)"
    r"|[+\-b]-?\d+(?:\.\d+)?(?:/\d+)?|o)"
    r"|(?P<lpar>\()|(?P<rpar>\)))"
)


def _tokenize(text: str):
    out, pos_ = [], 0
    while pos_ < len(text):
        if text[pos_].isspace():
            pos_ += 1
            continue
        m = _EXPR_TOKEN.match(text, pos_)
        if not m:
            raise CLIError(f"bad expression near {text[pos_:]!r}")
        pos_ = m.end()
        if m.group("op"):
            out.append(("op", m.group("op")))
        elif m.group("vec"):
            out.append(("val", parse_vector(m.group("vec"))))
        elif m.group("num"):
            out.append(("val", parse_symnum(m.group("num"))))
        elif m.group("lpar"):
            out.append(("(", None))
        else:
            out.append((")", None))
    return out


def _apply(op, a, b):
    if op == "(+)":
        return a + b
    if op == "(*)":
        if isinstance(a, SymNum) and isinstance(b, SymVector):
            return b.scale(a)
        if isinstance(a, SymVector) and isinstance(b, SymNum):
            return a.scale(b)
        return a * b
    if isinstance(a, SymNum) and isinstance(b, SymNum):
        return a.lsum(b)
    return a.lsum(b)


def eval_expression(text: str):
    tokens = _tokenize(text)
    pos_ = 0

    def parse_value():
        nonlocal pos_
        if pos_ >= len(tokens):
            raise CLIError("unexpected end of expression")
        kind, val = tokens[pos_]
        if kind == "val":
            pos_ += 1
            return val
        if kind == "(":
            pos_ += 1
            out = parse_expr()
            if pos_ >= len(tokens) or tokens[pos_][0] != ")":
                raise CLIError("missing closing parenthesis")
            pos_ += 1
            return out
        raise CLIError(f"unexpected token {val or kind!r}")

    def parse_expr():
        nonlocal pos_
        acc = parse_value()
        while pos_ < len(tokens) and tokens[pos_][0] == "op":
            op = tokens[pos_][1]
            pos_ += 1
            acc = _apply(op, acc, parse_value())
        return acc

    out = parse_expr()
    if pos_ != len(tokens):
        raise CLIError("trailing tokens in expression")
    return out


# -- helpers ---------------------------------------------------------------------

def _read_points(path: str) -> PointSet:
    with open(path) as fh:
        return PointSet.parse(fh.read())


def _read_puiseux_points(path: str):
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(
                    PuiseuxVector([parse_puiseux(tk) for tk in line.split(",")])
                )
    return out


def _parse_mags(text: str):
    return sorted({Fraction(tk.strip()) for tk in text.split(",") if tk.strip()})


def _parse_index_set(text: str):
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(tk) for tk in text.split(",") if tk.strip())


def _emit(args, payload: dict, human: str) -> None:
    print(json.dumps(payload) if args.json else human)


# -- subcommands -------------------------------------------------------------------

def cmd_eval(args) -> int:
    result = eval_expression(args.expression)
    _emit(args, {"result": str(result)}, str(result))
    return 0


def cmd_member(args) -> int:
    X = _read_points(args.points)
    y = parse_vector(args.query)
    if args.mode == "to":
        ans = to_hull_member(X, y)
    elif args.mode == "tc":
        ans = tc_hull_member(X, y)
    elif args.mode == "cone":
        ans = tc_cone_member(X, y)
    elif args.mode == "span":
        ans = wspan_member(X, y)
    else:
        if not args.rays:
            raise CLIError("--mode affine needs --rays")
        W = _read_points(args.rays)
        ans = affine_mw_member(X, W, y)
    _emit(args, {"mode": args.mode, "member": ans}, str(ans).lower())
    return 0


def cmd_hull(args) -> int:
    X = _read_points(args.points)
    fc = faces_complex(list(X.points))
    payload = {
        "carrier": str(fc.carrier),
        "vertices": sorted(str(v) for v in fc.vertex_set),
    }
    _emit(
        args,
        payload,
        "carrier: {}\nvertices:\n  {}".format(
            payload["carrier"], "\n  ".join(payload["vertices"])
        ),
    )
    return 0


def cmd_interval(args) -> int:
    x = parse_vector(args.x)
    y = parse_vector(args.y)
    extra = _parse_mags(args.extra_mags) if args.extra_mags else ()
    region = tc_interval(x, y, extra_mags=extra)
    pieces = [
        {
            "carrier": str(pc.carrier),
            "vertices": sorted(str(v) for v in pc.vertex_set),
        }
        for pc in region.pieces
    ]
    human = "\n".join(
        f"piece {i}: carrier {p['carrier']} vertices {p['vertices']}"
        for i, p in enumerate(pieces)
    )
    _emit(args, {"pieces": pieces}, human)
    return 0


def cmd_separate(args) -> int:
    X = _read_points(args.points)
    mags = _parse_mags(args.mags) if args.mags else _default_mags(X, None)
    if args.to:
        Y = _read_points(args.to)
        got = separate_to(X, Y, mags)
        if got is None:
            _emit(
                args,
                {"found": False, "grid": [str(m) for m in mags]},
                f"inconclusive (coefficient grid magnitudes: {mags})",
            )
            return 1
        hp, hm = got
        _emit(
            args,
            {"found": True, "positive": str(hp), "negative": str(hm)},
            f"{hp}\n{hm}",
        )
        return 0
    y = parse_vector(args.query)
    mags = _parse_mags(args.mags) if args.mags else _default_mags(X, y)
    h = separate(X, y, mags)
    if h is None:
        _emit(
            args,
            {"found": False, "grid": [str(m) for m in mags]},
            f"inconclusive (coefficient grid magnitudes: {mags})",
        )
        return 1
    _emit(args, {"found": True, "halfspace": str(h)}, str(h))
    return 0


def _default_mags(X: PointSet, y):
    mags = {Fraction(0), Fraction(1)}
    for p in list(X.points) + ([y] if y is not None else []):
        for e in p.entries:
            if e.sign != 0:
                mags.add(e._mag)
    base = sorted(mags)
    for u in list(base):
        for v in list(base):
            mags.add(u - v)
    return sorted(mags)


def cmd_lift(args) -> int:
    if args.witness:
        X = _read_points(args.points)
        y = parse_vector(args.query)
        J = _parse_index_set(args.type or "")
        w = lift_witness(X, J, y)
        if w is None:
            _emit(args, {"found": False}, "inconclusive")
            return 1
        _emit(
            args,
            {"found": True, "witness": str(w), "sval": str(sval(w))},
            f"{w}\nsval: {sval(w)}",
        )
        return 0
    x = parse_vector(args.vector)
    if args.type is None:
        out = lift_canonical(x)
    else:
        out = lift_typed(x, _parse_index_set(args.type))
    _emit(args, {"lift": str(out)}, str(out))
    return 0


def cmd_lp(args) -> int:
    pts = _read_puiseux_points(args.points)
    q = PuiseuxVector([parse_puiseux(tk) for tk in args.query.split(",")])
    wit = (cone_witness if args.cone else conv_witness)(pts, q)
    if wit is None:
        _emit(args, {"feasible": False}, "infeasible")
        return 0
    _emit(
        args,
        {"feasible": True, "weights": [str(w) for w in wit]},
        "feasible\nweights: " + ", ".join(str(w) for w in wit),
    )
    return 0


def cmd_matroid(args) -> int:
    if args.matrix:
        rows = []
        with open(args.matrix) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if line:
                    rows.append([Fraction(tk) for tk in line.split(",")])
        V = realize_sign_vectors(rows)
        M = OMatroid.of(len(rows[0]), V)
    else:
        with open(args.file) as fh:
            M = OMatroid.parse(fh.read())
    ax = axioms_check(M.vectors)
    payload = {
        "ground_size": M.ground_size,
        "vectors": len(M.vectors),
        "axioms_ok": ax.ok,
        "axiom_violations": [str(v) for v in ax.violations[:10]],
    }
    rep = None
    if ax.ok:
        C, D = circuits(M), cocircuits(M)
        payload["circuits"] = sorted(str(c) for c in C)
        payload["cocircuits"] = sorted(str(d) for d in D)
        rep = representation_check(M)
        payload["representation_ok"] = rep.ok
        payload["representation_failures"] = [str(f) for f in rep.failures[:10]]
    human = json.dumps(payload, indent=2)
    _emit(args, payload, human)
    return 0 if ax.ok and (rep is None or rep.ok) else 1


def cmd_verify(args) -> int:
    import os

    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    jobs = int(os.environ.get("TROPCONVEX_JOBS", "1"))
    if jobs > 1 and len(names) > 1:
        import multiprocessing as mp

        with mp.Pool(min(jobs, len(names))) as pool:
            reports_iter = pool.starmap(
                verify_mod.run_suite,
                [(name, args.seed, args.size, args.cases) for name in names],
            )
    else:
        reports_iter = [
            verify_mod.run_suite(
                name, seed=args.seed, size=args.size, cases=args.cases
            )
            for name in names
        ]
    reports = []
    for rep in reports_iter:
        reports.append(rep)
        if not args.json:
            status = "pass" if rep.ok else f"FAIL ({len(rep.failures)})"
            print(
                f"{rep.suite:<24} {status:<12} cases={rep.cases:<6}"
                f" {rep.seconds:.2f}s"
            )
            for lbl, data in rep.failures[:5]:
                print(f"    {lbl}: {data}")
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]))
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tropconvex",
        description="Exact signed tropical convexity toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression with (+), (*), (<|)")
    p.add_argument("expression")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("member", help="hull membership queries")
    p.add_argument("--mode", choices=["to", "tc", "cone", "span", "affine"],
                   default="tc")
    p.add_argument("--points", required=True)
    p.add_argument("--rays", help="second generator file for --mode affine")
    p.add_argument("--query", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("hull", help="face complex of a point set")
    p.add_argument("--points", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("interval", help="two-point hull pieces")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--extra-mags", help="comma-separated extra magnitudes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("separate", help="closed-halfspace certificate search")
    p.add_argument("--points", required=True)
    p.add_argument("--query")
    p.add_argument("--to", help="second point set for two-sided separation")
    p.add_argument("--mags", help="comma-separated coefficient magnitudes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("lift", help="Puiseux lifts and lift witnesses")
    p.add_argument("--vector")
    p.add_argument("--type", help="comma-separated coordinate set J")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--points")
    p.add_argument("--query")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("lp", help="exact convex/conic feasibility over Puiseux")
    p.add_argument("--points", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--cone", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("matroid", help="sign-hyperfield matroid checks")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", help="rational CSV matrix file")
    g.add_argument("--file", help="matroid vector file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("--suite", default="all",
                   help="suite name or 'all' (see verify.SUITES)")
    p.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    p.add_argument("--size", choices=list(verify_mod.SIZES), default="small")
    p.add_argument("--cases", type=int, help="override the case budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
