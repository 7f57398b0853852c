"""Command-line interface: ``skyline <command> ...``.

Exit codes: 0 on success, 1 when a check fails (cross-check mismatch,
invalid filling, failed verification), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .core import (
    apply_perm, as_composition, as_partition, identity, perm_of_composition,
    sort_desc,
)
from .demazure import (
    atom_via_operators, atom_via_ssaf, atom_via_theta, enumerate_pb,
    key_poly_via_atoms, key_poly_via_operators, key_poly_via_pb, right_key,
    validate_pb,
)
from .polynomial import Polynomial
from .ssaf import SSAF, PermutedSSAF, e_poly, enumerate_ssaf, violations
from .ssaf import validate as validate_filling
from .tableaux import SSYT, content, crystal_graph
from .tableaux import validate as validate_tableau
from .verify import run_all


class UsageError(Exception):
    pass


def parse_ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if any(v < 0 for v in values):
        raise UsageError(f"{what}: negative entry in {text!r}")
    return values


def parse_perm(text: str) -> tuple[int, ...]:
    w = parse_ints(text, "--perm")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise UsageError(f"--perm: {text!r} is not a permutation of 1..{len(w)}")
    return w


def parse_shape(text: str) -> tuple[int, ...]:
    lam = parse_ints(text, "--shape")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise UsageError(f"--shape: {text!r} is not weakly decreasing")
    return lam


def resolve_n(requested: int | None, needed: int) -> int:
    """``requested`` if given and large enough, otherwise ``needed``."""
    if requested is None:
        return max(needed, 1)
    if requested < 1:
        raise UsageError(f"--vars must be positive, got {requested}")
    if requested < needed:
        raise UsageError(f"--vars {requested} is too small; the input needs {needed} variables")
    return requested


def _extend_perm(w: tuple[int, ...], n: int) -> tuple[int, ...]:
    return w + tuple(range(len(w) + 1, n + 1))


def _perm_and_shape(args) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(w, lam)`` from ``--composition`` or ``--perm``/``--shape``, padded to ``n``."""
    if args.composition is not None:
        if args.perm is not None or args.shape is not None:
            raise UsageError("give either --composition or --perm with --shape")
        gamma = parse_ints(args.composition, "--composition")
        n = resolve_n(args.vars, len(gamma))
        gamma = as_composition(gamma, n)
        return perm_of_composition(gamma), sort_desc(gamma)
    if args.perm is None or args.shape is None:
        raise UsageError("give either --composition or --perm with --shape")
    w = parse_perm(args.perm)
    lam = parse_shape(args.shape)
    nonzero = sum(1 for a in lam if a)
    n = resolve_n(args.vars, max(len(w), nonzero))
    return _extend_perm(w, n), as_partition(lam, n)


def emit_poly(p: Polynomial, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(p.to_json()) + "\n")
    else:
        out.write(p.to_text() + "\n")


def _cross_check(results: dict[str, Polynomial]) -> int:
    names = list(results)
    first = results[names[0]]
    bad = [k for k in names[1:] if results[k] != first]
    if bad:
        for k in names:
            print(f"{k}: {results[k]}", file=sys.stderr)
        print("methods disagree", file=sys.stderr)
        return 1
    return 0


ATOM_METHODS = {"operators": atom_via_operators, "theta": atom_via_theta, "ssaf": atom_via_ssaf}


def cmd_atom(args, out: TextIO) -> int:
    w, lam = _perm_and_shape(args)
    if args.cross_check:
        results = {name: fn(w, lam) for name, fn in ATOM_METHODS.items()}
        status = _cross_check(results)
        if status:
            return status
        poly = results[args.method]
    else:
        poly = ATOM_METHODS[args.method](w, lam)
    emit_poly(poly, args.format, out)
    return 0


def cmd_epoly(args, out: TextIO) -> int:
    gamma = parse_ints(args.composition, "--composition")
    n = resolve_n(args.vars, len(gamma))
    emit_poly(e_poly(as_composition(gamma, n)), args.format, out)
    return 0


KEY_METHODS = {
    "operators": key_poly_via_operators,
    "atoms": lambda w, lam: key_poly_via_atoms(apply_perm(w, lam)),
    "pb": lambda w, lam: key_poly_via_pb(lam, w),
}


def cmd_key_poly(args, out: TextIO) -> int:
    w, lam = _perm_and_shape(args)
    if args.cross_check:
        results = {name: fn(w, lam) for name, fn in KEY_METHODS.items()}
        status = _cross_check(results)
        if status:
            return status
        poly = results[args.method]
    else:
        poly = KEY_METHODS[args.method](w, lam)
    emit_poly(poly, args.format, out)
    return 0


def parse_rows(text: str) -> SSYT:
    """Bottom-up serialization ``1,2,2,3/2,3,3,6/4,5``."""
    return SSYT(tuple(parse_ints(r, "--rows") for r in text.strip().split("/")))


def parse_tableau_text(text: str) -> SSYT:
    """JSON ``{"rows": ...}`` or one row per line with the bottom row last."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return SSYT.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed tableau JSON: {exc}") from None
    try:
        lines = [tuple(int(a) for a in line.replace(",", " ").split())
                 for line in text.splitlines() if line.strip()]
    except ValueError:
        raise UsageError("malformed tableau text") from None
    return SSYT(tuple(reversed(lines)))


def _read_input(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_right_key(args, out: TextIO, stdin: TextIO) -> int:
    if args.rows is not None:
        t = parse_rows(args.rows)
    else:
        t = parse_tableau_text(_read_input(args.input, stdin))
    if not t.rows or not validate_tableau(t):
        raise UsageError(f"not a semistandard tableau: {t.label() or '(empty)'}")
    n = resolve_n(args.vars, t.max_entry)
    key = right_key(t, n)
    weight = content(key, n)
    if args.format == "json":
        out.write(json.dumps({"key": key.to_json(), "content": list(weight)}) + "\n")
    else:
        out.write(key.to_text() + "\n")
        out.write("content: " + ",".join(map(str, weight)) + "\n")
    return 0


def _emit_fillings(fillings: Sequence[SSAF], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps([f.to_json() for f in fillings]) + "\n")
    else:
        out.write("\n\n".join(f.to_text() for f in fillings) + ("\n" if fillings else ""))


def _load_filling(args, stdin: TextIO, cls) -> SSAF:
    try:
        return cls.from_json(json.loads(_read_input(args.input, stdin)))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed filling JSON: {exc}") from None


def _report_validity(f: SSAF, ok: bool, out: TextIO) -> int:
    if ok:
        out.write("valid\n")
        return 0
    out.write("invalid\n")
    for t in violations(f):
        print(f"  type {t.kind} triple at {list(t.cells)} is not inverted", file=sys.stderr)
    return 1


def cmd_ssaf(args, out: TextIO, stdin: TextIO) -> int:
    if args.action == "enumerate":
        gamma = parse_ints(args.composition, "--composition")
        n = resolve_n(args.vars, len(gamma))
        _emit_fillings(enumerate_ssaf(as_composition(gamma, n)), args.format, out)
        return 0
    f = _load_filling(args, stdin, SSAF)
    if f.basement != identity(f.n):
        raise UsageError("an ordinary filling has basement 1..n; use `pb validate`")
    return _report_validity(f, validate_filling(f), out)


def cmd_pb(args, out: TextIO, stdin: TextIO) -> int:
    if args.action == "enumerate":
        if args.perm is None or args.shape is None:
            raise UsageError("pb enumerate needs --perm and --shape")
        w = parse_perm(args.perm)
        lam = parse_shape(args.shape)
        n = resolve_n(args.vars, max(len(w), sum(1 for a in lam if a)))
        _emit_fillings(enumerate_pb(as_partition(lam, n), _extend_perm(w, n)), args.format, out)
        return 0
    g = _load_filling(args, stdin, PermutedSSAF)
    if sorted(g.basement) != list(range(1, g.n + 1)):
        raise UsageError(f"basement {list(g.basement)} is not a permutation")
    return _report_validity(g, validate_pb(g), out)


def crystal_dot(graph) -> str:
    lines = ["digraph crystal {", "  node [shape=box];"]
    for k, t in enumerate(graph.nodes):
        lines.append(f'  n{k} [label="{t.label()}"];')
    for a, b, i in graph.edges:
        lines.append(f'  n{a} -> n{b} [label="f{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def crystal_json(graph) -> str:
    data = {
        "nodes": [{"id": k, "rows": [list(r) for r in t.rows], "weight": list(content(t, graph.n))}
                  for k, t in enumerate(graph.nodes)],
        "edges": [{"from": a, "to": b, "label": i} for a, b, i in graph.edges],
    }
    return json.dumps(data) + "\n"


def cmd_crystal(args, out: TextIO) -> int:
    lam = parse_shape(args.shape)
    n = resolve_n(args.vars, sum(1 for a in lam if a))
    graph = crystal_graph(lam, n)
    text = crystal_dot(graph) if args.format == "dot" else crystal_json(graph)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_verify(args, out: TextIO) -> int:
    if args.max_n < 1 or args.max_size < 0:
        raise UsageError("--max-n must be positive and --max-size non-negative")
    results = run_all(args.max_n, args.max_size)
    for r in results:
        out.write(r.line() + "\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 1 if failed else 0


def _add_target(p: argparse.ArgumentParser) -> None:
    p.add_argument("--composition", help="weak composition, e.g. 1,0,2")
    p.add_argument("--perm", help="permutation in one-line notation, e.g. 3,1,2")
    p.add_argument("--shape", help="partition, e.g. 2,1")
    p.add_argument("--vars", type=int, help="number of variables")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cross-check", action="store_true",
                   help="compute with every method and fail on disagreement")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skyline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("atom", help="Demazure atom")
    _add_target(p)
    p.add_argument("--method", choices=tuple(ATOM_METHODS), default="ssaf")

    p = sub.add_parser("epoly", help="weight generating function of fillings of a composition")
    p.add_argument("--composition", required=True)
    p.add_argument("--vars", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("key-poly", help="key polynomial")
    _add_target(p)
    p.add_argument("--method", choices=tuple(KEY_METHODS), default="operators")

    p = sub.add_parser("right-key", help="right key of a tableau")
    p.add_argument("--rows", help="bottom-up rows, e.g. 1,2,2,3/2,3,3,6/4,5")
    p.add_argument("--input", help="file with tableau JSON or text ('-' for stdin)")
    p.add_argument("--vars", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    for name, helptext in (("ssaf", "skyline fillings"), ("pb", "permuted-basement fillings")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("action", choices=("enumerate", "validate"))
        if name == "ssaf":
            p.add_argument("--composition")
        else:
            p.add_argument("--perm")
            p.add_argument("--shape")
        p.add_argument("--vars", type=int)
        p.add_argument("--input", help="filling JSON for validate ('-' for stdin)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("crystal", help="crystal graph of a shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--vars", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("verify", help="run the exhaustive cross-checks")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-size", type=int, default=8)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "atom":
            return cmd_atom(args, out)
        if args.command == "epoly":
            return cmd_epoly(args, out)
        if args.command == "key-poly":
            return cmd_key_poly(args, out)
        if args.command == "right-key":
            return cmd_right_key(args, out, stdin)
        if args.command == "ssaf":
            if args.action == "enumerate" and args.composition is None:
                raise UsageError("ssaf enumerate needs --composition")
            return cmd_ssaf(args, out, stdin)
        if args.command == "pb":
            return cmd_pb(args, out, stdin)
        if args.command == "crystal":
            return cmd_crystal(args, out)
        return cmd_verify(args, out)
    except (UsageError, ValueError) as exc:
        print(f"skyline {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
