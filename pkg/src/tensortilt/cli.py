"""Command-line front end.

Algebras are written as constructor expressions::

    line(10,3)  rect(5,2)  path(A5)  path(D4,all-in)  path(A3,orientation=bipartite)
    tri(path(A5),3)  aus(path(A3))  saus(path(A7,symmetric))  tensor(path(E6),line(6,3))
    replica(path(A2),2)  preproj(path(A3,bipartite),1)  k  load(algebra.json)

Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or resource error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import ar, invariants
from .algebra import (
    Algebra,
    linear_path_algebra,
    path_algebra,
    point_algebra,
    replicated_algebra,
    tensor_algebra,
    triangular_matrix_algebra,
    truncated_line_algebra,
)
from .complexes import ComplexError, ResolutionTooLong, projective_resolution, stalk
from .dynkin import dynkin_quiver
from .modules import CofreeModule
from .tensor import ConstructionError, TensorTiltingInput, verify_construction
from .tilting import TiltingError, certify_tilting, standard_tilting


class SpecError(ValueError):
    pass


# --- spec mini-language ---

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)(?![\w.])|(?P<word>[A-Za-z0-9_.<>/\-]+)|(?P<sym>[(),=]))")


@dataclass
class Call:
    name: str
    args: list
    kwargs: dict


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise SpecError(f"unexpected character {text[pos:].strip()[0]!r} at offset {pos}")
        out.append(m.group(m.lastgroup))
        pos = m.end()
    return out


def parse_spec(text: str):
    toks = _tokenize(text)
    node, k = _parse(toks, 0)
    if k != len(toks):
        raise SpecError(f"unexpected token {toks[k]!r}")
    return node


def _parse(toks, k):
    if k >= len(toks):
        raise SpecError("unexpected end of spec")
    tok = toks[k]
    if tok in "(),=":
        raise SpecError(f"unexpected token {tok!r}")
    if re.fullmatch(r"-?\d+", tok):
        return int(tok), k + 1
    if k + 1 < len(toks) and toks[k + 1] == "(":
        args, kwargs = [], {}
        k += 2
        while True:
            if k >= len(toks):
                raise SpecError(f"missing ')' after {tok!r}")
            if toks[k] == ")":
                k += 1
                break
            if k + 1 < len(toks) and toks[k + 1] == "=":
                key = toks[k]
                val, k = _parse(toks, k + 2)
                kwargs[key] = val
            else:
                val, k = _parse(toks, k)
                args.append(val)
            if k < len(toks) and toks[k] == ",":
                k += 1
            elif k < len(toks) and toks[k] != ")":
                raise SpecError(f"expected ',' or ')' but found {toks[k]!r}")
        return Call(tok, args, kwargs), k
    return tok, k + 1


def _arity(call: Call, lo: int, hi: int | None = None):
    hi = lo if hi is None else hi
    if not lo <= len(call.args) <= hi:
        raise SpecError(f"{call.name} takes {lo}..{hi} arguments, got {len(call.args)}")


def _int(v, name):
    if not isinstance(v, int):
        raise SpecError(f"{name} expects an integer, got {v!r}")
    return v


def build_algebra(node) -> Algebra:
    if node == "k":
        return point_algebra()
    if not isinstance(node, Call):
        raise SpecError(f"expected a constructor, got {node!r}")
    c, name = node, node.name
    if name == "line":
        _arity(c, 2)
        return truncated_line_algebra(_int(c.args[0], name), _int(c.args[1], name))
    if name == "rect":
        _arity(c, 2)
        m, n = (_int(a, name) for a in c.args)
        return tensor_algebra(linear_path_algebra(m), linear_path_algebra(n), name=f"kA{m}(x)kA{n}")
    if name == "path":
        _arity(c, 1, 2)
        m = re.fullmatch(r"([ADEade])(\d+)", str(c.args[0]))
        if not m:
            raise SpecError(f"bad Dynkin type {c.args[0]!r}")
        orient = c.kwargs.get("orientation", c.args[1] if len(c.args) > 1 else "linear")
        kind, n = m.group(1).upper(), int(m.group(2))
        try:
            q = dynkin_quiver(kind, n, str(orient))
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        return path_algebra(q, name=f"k{kind}{n}")
    if name == "tri":
        _arity(c, 2)
        return triangular_matrix_algebra(build_algebra(c.args[0]), _int(c.args[1], name))
    if name == "tensor":
        _arity(c, 2)
        return tensor_algebra(build_algebra(c.args[0]), build_algebra(c.args[1]))
    if name == "replica":
        _arity(c, 2)
        return replicated_algebra(build_algebra(c.args[0]), _int(c.args[1], name))
    if name == "aus":
        _arity(c, 1)
        return ar.auslander_algebra(build_algebra(c.args[0]))
    if name == "saus":
        _arity(c, 1)
        return ar.stable_auslander_algebra(build_algebra(c.args[0]))
    if name == "preproj":
        _arity(c, 2)
        return ar.initial_endomorphism_algebra(build_algebra(c.args[0]), _int(c.args[1], name))
    if name == "load":
        _arity(c, 1)
        data = json.loads(Path(str(c.args[0])).read_text())
        return Algebra.from_json_dict(data.get("algebra", data))
    raise SpecError(f"unknown constructor {name!r}")


def algebra_from_spec(text: str) -> Algebra:
    return build_algebra(parse_spec(text))


def complex_family(alg: Algebra, kind: str) -> list:
    """Summands of a named complex over ``alg``: P, I, S, S0 or regular."""
    n = alg.n_vertices
    if kind in ("P", "regular", "S0"):
        kind = "P" if kind == "regular" else kind
        return standard_tilting(n, kind, alg)
    if kind == "I":
        return [projective_resolution(CofreeModule(alg, (x,))) for x in range(n)]
    if kind == "S":
        return standard_tilting(n, "S", alg)
    raise SpecError(f"unknown complex {kind!r} (use P, I, S, S0 or regular)")


# --- commands ---

def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _write_dot(path: str | None, dot: str) -> None:
    if path:
        Path(path).write_text(dot + "\n")


def cmd_construct(args) -> int:
    alg = algebra_from_spec(args.spec)
    q = alg.gabriel_quiver()
    dot = q.to_dot(name="Q")
    _write_dot(args.dot, dot)
    payload = {"spec": args.spec, "dim": alg.dim, "vertices": alg.n_vertices,
               "arrows": len(q.arrows), "gabriel_quiver_dot": dot, "algebra": alg.to_json_dict()}
    _emit(args, payload, f"{args.spec}: dim {alg.dim}, {alg.n_vertices} vertices, {len(q.arrows)} arrows")
    return 0


def cmd_check_tilting(args) -> int:
    alg = algebra_from_spec(args.spec)
    summands = complex_family(alg, args.complex)
    rr = range(-args.hom_range, args.hom_range + 1) if args.hom_range is not None else None
    cert = certify_tilting(summands, rr)
    ok = cert.verdict == "certified-necessary"
    text = f"{args.complex} over {args.spec}: {cert.verdict}"
    if cert.witness:
        i, j, r = cert.witness
        text += f" (Hom(T{i}, T{j}[{r}]) != 0)"
    _emit(args, cert.to_json_dict(), text)
    return 0 if ok else 1


def cmd_compare(args) -> int:
    algs = [algebra_from_spec(s) for s in args.specs]
    reports, lines, ok = [], [], True
    for a in range(len(algs)):
        for b in range(a + 1, len(algs)):
            rep = invariants.derived_probe(algs[a], algs[b])
            ok &= rep.verdict == "consistent"
            d = rep.to_json_dict()
            d["pair"] = [args.specs[a], args.specs[b]]
            reports.append(d)
            extra = f" ({rep.witness} differs)" if rep.witness else ""
            lines.append(f"{args.specs[a]} vs {args.specs[b]}: {rep.verdict}{extra}")
    lines.append("note: K0 invariants can refute but never prove derived equivalence")
    _emit(args, {"reports": reports, "verdict": "consistent" if ok else "distinguished"}, "\n".join(lines))
    return 0 if ok else 1


def cmd_knit(args) -> int:
    alg = algebra_from_spec(args.spec)
    data = ar.knit(alg, args.max_steps)
    homog, r = ar.is_homogeneous(alg, data)
    if args.dot:
        _write_dot(args.dot, ar.ar_quiver_dot(data))
    payload = {"spec": args.spec, "indecomposables": data.count(), "orbit_sizes": list(data.orbit_sizes),
               "homogeneous": homog, "r": r,
               "dimension_vectors": [list(m.dimvec()) for m in data.indecomposables]}
    text = (f"{args.spec}: {data.count()} indecomposables, r = {list(data.orbit_sizes)}, "
            f"{'homogeneous' if homog else 'not homogeneous'}")
    _emit(args, payload, text)
    return 0


def cmd_tensor(args) -> int:
    a, b = algebra_from_spec(args.spec_a), algebra_from_spec(args.spec_b)
    t, u = complex_family(a, args.t), complex_family(b, args.u)
    # the regular complex may stand in for every T_i (or U_i) at once
    if args.t == "regular":
        t = [stalk(a, list(range(a.n_vertices)))] * len(u)
    if args.u == "regular":
        u = [stalk(b, list(range(b.n_vertices)))] * len(t)
    rep = verify_construction(TensorTiltingInput(a, b, t, u), koszul=not args.no_koszul,
                              max_dim=args.max_dim)
    text = f"T={args.t} over {args.spec_a}, U={args.u} over {args.spec_b}: match={rep.match}"
    _emit(args, rep.to_json_dict(), text)
    return 0 if rep.match else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tensortilt", description="Exact tilting and derived-equivalence workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="print a JSON report")
        return sp

    sp = common(sub.add_parser("construct", help="build an algebra and summarize it"))
    sp.add_argument("spec")
    sp.add_argument("--dot", metavar="FILE", help="write the Gabriel quiver in DOT format")
    sp.set_defaults(func=cmd_construct)

    sp = common(sub.add_parser("check-tilting", help="certify a standard complex"))
    sp.add_argument("spec")
    sp.add_argument("complex", help="P, I, S, S0 or regular")
    sp.add_argument("--hom-range", type=int, metavar="N", help="check shifts -N..N")
    sp.set_defaults(func=cmd_check_tilting)

    sp = common(sub.add_parser("compare", help="compare K0 invariants pairwise"))
    sp.add_argument("specs", nargs="+")
    sp.set_defaults(func=cmd_compare)

    sp = common(sub.add_parser("knit", help="knit the preprojective component"))
    sp.add_argument("spec")
    sp.add_argument("--max-steps", type=int, metavar="N")
    sp.add_argument("--dot", metavar="FILE", help="write the AR quiver in DOT format")
    sp.set_defaults(func=cmd_knit)

    sp = common(sub.add_parser("tensor", help="run the tensor construction"))
    sp.add_argument("spec_a")
    sp.add_argument("spec_b")
    sp.add_argument("--t", default="regular", help="complex over A (default: regular)")
    sp.add_argument("--u", default="S", help="complex over B (default: S)")
    sp.add_argument("--no-koszul", action="store_true", help="drop the sign rule (negative control)")
    sp.add_argument("--max-dim", type=int, default=400)
    sp.set_defaults(func=cmd_tensor)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "compare" and len(args.specs) < 2:
        print("compare needs at least two specs", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (SpecError, TiltingError, ConstructionError, ar.KnitError, invariants.InvariantError,
            ComplexError, ResolutionTooLong, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
