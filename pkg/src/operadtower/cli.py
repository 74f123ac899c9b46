"""Command-line front end.

Exit status: 0 when everything passes, 1 when a law fails, 2 on usage or
parse errors and when a suite would exceed its instance ceiling.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional

from . import catop, coherence
from .lsym import (LElement, check_nonsym_axioms, check_operad_map, check_sym_axioms, end_view,
                   l_view, parse_end)
from .perm import parse_perm
from .report import FORMAT_VERSION, InstanceLimitExceeded, Report
from .treeop import (T_VIEW, V0_VIEW, V_VIEW, free_extend_V, map_V0_to_T, parse_t, parse_v,
                     parse_v0)
from .zoperad import Z_VIEW, free_extend_Z, map_V_to_Z, parse_z, project_Z_to_V0

DEFAULT_LIMIT = 20_000_000


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class OperadEntry:
    view: object
    parse: Callable[[str], object]
    bound: int
    max_degree: Optional[int] = None


def _parse_l(parse_base):
    def parse(text):
        text = text.strip()
        if text.startswith("(") and text.endswith(")") and "|" in text:
            text = text[1:-1]
        base, bar, perm = text.rpartition("|")
        if not bar:
            raise ValueError(f"expected 'element | [perm]', got {text!r}")
        return LElement(parse_base(base.strip()), parse_perm(perm))
    return parse


END = end_view((0, 1))

OPERADS = {
    "V": OperadEntry(V_VIEW, parse_v, 6),
    "V0": OperadEntry(V0_VIEW, parse_v0, 5),
    "T": OperadEntry(T_VIEW, parse_t, 6),
    "Z": OperadEntry(Z_VIEW, parse_z, 4),
    "LV": OperadEntry(l_view(V_VIEW), _parse_l(parse_v), 4),
    "LZ": OperadEntry(l_view(Z_VIEW), _parse_l(parse_z), 3, 3),
    "End": OperadEntry(END, parse_end, 3),
}

MAPS = {
    "V-Z": (map_V_to_Z, V_VIEW, Z_VIEW, 6),
    "Z-V0": (project_Z_to_V0, Z_VIEW, V0_VIEW, 4),
    "V0-T": (map_V0_to_T, V0_VIEW, T_VIEW, 5),
}


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside brackets, braces or parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([{<":
            depth += 1
        elif ch in ")]}>":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts if p.strip()]


def _emit(out, payload: dict, text: str, fmt: str):
    if fmt == "json":
        out.write(json.dumps({"format_version": FORMAT_VERSION, **payload},
                             indent=2, sort_keys=True) + "\n")
    else:
        out.write(text + ("\n" if text else ""))


def _emit_report(out, report: Report, fmt: str) -> int:
    out.write((report.to_json() if fmt == "json" else report.to_text()) + "\n")
    return 0 if report.ok else 1


def _entry(name: str) -> OperadEntry:
    return OPERADS[name]


def _parse(entry: OperadEntry, text: str):
    try:
        return entry.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands -------------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    entry = _entry(args.operad)
    bound = args.bound if args.bound is not None else max(entry.bound, args.degree)
    xs = [x for x in entry.view.elements(args.degree, bound) if entry.view.degree(x) == args.degree]
    strings = [entry.view.fmt(x) for x in xs]
    _emit(out, {"command": "enumerate", "operad": args.operad, "degree": args.degree,
                "bound": bound, "count": len(strings), "elements": strings},
          "\n".join(strings), args.format)
    return 0


def cmd_compose(args, out) -> int:
    entry = _entry(args.operad)
    outer = _parse(entry, args.outer)
    texts = [p for a in args.args for p in split_top_level(a)]
    inner = [_parse(entry, t) for t in texts]
    try:
        result = entry.view.gamma(outer, inner)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    shown = entry.view.fmt(result)
    _emit(out, {"command": "compose", "operad": args.operad, "outer": args.outer,
                "args": texts, "result": shown}, shown, args.format)
    return 0


def cmd_check(args, out) -> int:
    report = Report(args.suite, keep_passes=args.keep_passes, limit=args.limit)
    if args.suite in ("nonsym", "sym"):
        entry = _entry(args.operad)
        bound = args.bound if args.bound is not None else entry.bound
        max_degree = args.max_degree if args.max_degree is not None else entry.max_degree
        report.params = {"operad": args.operad, "bound": bound, "max_degree": max_degree}
        if args.suite == "nonsym":
            check_nonsym_axioms(entry.view, bound, max_degree, report)
        else:
            if not entry.view.symmetric:
                raise UsageError(f"{args.operad} has no symmetric group action")
            check_sym_axioms(entry.view, bound, max_degree, report)
    elif args.suite == "map":
        if args.map not in MAPS:
            raise UsageError(f"--map must be one of {', '.join(MAPS)}")
        f, src, dst, default = MAPS[args.map]
        bound = args.bound if args.bound is not None else default
        report.params = {"map": args.map, "bound": bound}
        check_operad_map(f, src, dst, bound, args.max_degree, args.map, report)
    elif args.suite == "diagrams":
        model = catop.word_model() if args.model == "word" else catop.expression_model()
        report.params = {"model": args.model}
        catop.check_diagrams(model, report)
    elif args.suite == "algebra":
        bound = args.bound if args.bound is not None else 3
        max_degree = args.max_degree if args.max_degree is not None else 3
        report.params = {"model": "word", "bound": bound, "max_degree": max_degree}
        catop.check_algebra_gamma_compat(catop.word_model(), bound, max_degree, report)
    else:
        max_vars = args.bound if args.bound is not None else 4
        report.params = {"max_vars": max_vars, "max_units": args.max_units}
        coherence.check_coherence_corpus(max_vars, args.max_units, report)
    return _emit_report(out, report, args.format)


def cmd_free_ext(args, out) -> int:
    product = _parse(OPERADS["End"], args.product)
    if product.arity != 2:
        raise UsageError("--product must be a binary function")
    if args.operad == "V":
        if args.point is not None:
            raise UsageError("--point only applies to Z")
        g, src, default = free_extend_V(END, product), V_VIEW, 6
        params = {"operad": "V", "product": str(product)}
    else:
        if args.point is None:
            raise UsageError("Z needs --point, a constant such as <0:1>")
        point = _parse(OPERADS["End"], args.point)
        if point.arity != 0:
            raise UsageError("--point must be a constant")
        g, src, default = free_extend_Z(END, point, product), Z_VIEW, 4
        params = {"operad": "Z", "point": str(point), "product": str(product)}
    if args.element is not None:
        x = _parse(OPERADS[args.operad], args.element)
        value = str(g(x))
        _emit(out, {"command": "free-ext", **params, "element": args.element, "value": value},
              value, args.format)
        return 0
    bound = args.bound if args.bound is not None else default
    report = Report("free-ext", {**params, "bound": bound}, args.keep_passes, args.limit)
    check_operad_map(g, src, END, bound, None, "free-ext", report)
    return _emit_report(out, report, args.format)


def cmd_coherence(args, out) -> int:
    try:
        source = coherence.parse_expr(args.source)
        target = coherence.parse_expr(args.target)
        seq = coherence.synthesize(source, target)
    except (coherence.ExprSyntaxError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    end, bij = coherence.tracked_replay(seq)
    ok = end == target
    lines = [str(m) for m in seq.moves]
    lines.append(f"{len(seq)} moves, bijection {bij}")
    _emit(out, {"command": "coherence", "source": str(source), "target": str(target),
                "moves": [m.to_dict() for m in seq.moves], "bijection": list(bij.images),
                "replays": ok}, "\n".join(lines), args.format)
    return 0 if ok else 1


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="operadtower",
                                     description="Operads of magmas and their symmetrizations.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the elements of one degree")
    p.add_argument("--operad", choices=sorted(OPERADS), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bound", "--max-internal", dest="bound", type=int,
                   help="size bound; the internal degree for Z and LZ")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compose", help="evaluate gamma(outer; args)")
    p.add_argument("--operad", choices=sorted(OPERADS), required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--args", nargs="*", default=[], help="arguments, space or comma separated")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check", help="run an exhaustive law suite")
    p.add_argument("suite", choices=("nonsym", "sym", "map", "diagrams", "algebra",
                                     "coherence-corpus"))
    p.add_argument("--operad", choices=sorted(OPERADS), default="V")
    p.add_argument("--map", default="V-Z", help=f"one of {', '.join(MAPS)}")
    p.add_argument("--model", choices=("word", "expression"), default="word")
    p.add_argument("--bound", type=int, help="size bound; number of variables for coherence-corpus")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--max-units", type=int, default=1)
    _suite_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("free-ext", help="the operad map into End({0,1}) fixed by generator images")
    p.add_argument("--operad", choices=("V", "Z"), default="V")
    p.add_argument("--product", required=True, help="binary function, e.g. <2:0110>")
    p.add_argument("--point", help="constant for Z, e.g. <0:1>")
    p.add_argument("--element", help="evaluate one element instead of checking the map")
    p.add_argument("--bound", type=int)
    _suite_flags(p)
    p.set_defaults(func=cmd_free_ext)

    p = sub.add_parser("coherence", help="synthesize structure moves between two expressions")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_coherence)

    # accept --format after the subcommand too
    for action in sub.choices.values():
        action.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return parser


def _suite_flags(p):
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="instance ceiling")
    p.add_argument("--keep-passes", action="store_true", help="list passing instances too")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, InstanceLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
