"""
Command-line front end.

Exit codes: 0 on success, 1 when a ``--verify`` check or the ``verify``
harness finds a mismatch, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .hooks import Hook, format_trace, hook_word, slide_hook
from .monk import monk_products, schubert_path
from .permcore import format_perm, format_word, parse_perm, parse_word, reduced_word
from .pieri import pieri
from .render import render_ascii
from .schuboracle import schubert_polynomial, verify_monk, verify_pieri
from .towerdiag import (
    TowerDiagram, canonical_word, diagram_of_perm, format_diagram, omega_index,
    parse_diagram, perm_of_diagram, slide_word, slide_word_trace,
)
from .verify import SCOPES, run_verify

__all__ = ["build_parser", "parse_args", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _arg(parser_fn):
    def convert(text: str):
        try:
            return parser_fn(text)
        except ValueError as err:
            raise argparse.ArgumentTypeError(str(err)) from None
    convert.__name__ = parser_fn.__name__.replace("parse_", "")
    return convert


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {text}")
    return value


def _hook(text: str) -> Hook:
    try:
        i, j = (int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"expected I,J, got {text!r}") from None
    return Hook(i, j)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tower-schubert",
                                description="Tower diagrams, sliding, and Monk/Pieri rules for Schubert polynomials.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    perm, diagram, positive = _arg(parse_perm), _arg(parse_diagram), _arg(_positive)

    s = sub.add_parser("slide", help="slide a word or a hook into a diagram")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--word", type=_arg(parse_word), help="comma-separated letters, e.g. 4,3,4,1,3")
    src.add_argument("--hook", type=_arg(_hook), help="hook h[I,J] as I,J")
    s.add_argument("--into", type=diagram, default=TowerDiagram(), help="starting diagram (default: empty)")
    s.add_argument("--steps", action="store_true", help="print the diagram after every letter")
    s.add_argument("--trace", action="store_true", help="print the tower-by-tower pass trace of a hook")
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("perm2tower", help="tower diagram of a permutation")
    s.add_argument("--perm", type=perm, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("tower2perm", help="permutation of a tower diagram")
    s.add_argument("--tower", type=diagram, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("monk", help="terms of S_w * S_{s_k}")
    s.add_argument("--perm", type=perm, required=True)
    s.add_argument("--k", type=positive, required=True)
    s.add_argument("--verify", action="store_true", help="check the expansion with Schubert polynomials")
    s.add_argument("--json", action="store_true")

    for name, what in (("pieri-row", "h_m(x1..xk)"), ("pieri-col", "e_m(x1..xk)")):
        s = sub.add_parser(name, help=f"terms of S_w * {what}")
        s.add_argument("--perm", type=perm, required=True)
        s.add_argument("--k", type=positive, required=True)
        s.add_argument("--m", type=positive, required=True)
        s.add_argument("--labels", action="store_true", help="show the (step, a, b) label chain")
        s.add_argument("--verify", action="store_true", help="check the expansion with Schubert polynomials")
        s.add_argument("--json", action="store_true")

    s = sub.add_parser("schubert", help="Schubert polynomial of a permutation")
    s.add_argument("--perm", type=perm, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify", help="exhaustive cross-check over S_n")
    s.add_argument("--scope", choices=SCOPES, required=True)
    s.add_argument("--n", type=positive, required=True)
    s.add_argument("--max-m", type=positive, default=3, help="largest m for Pieri scopes (default 3)")
    s.add_argument("--workers", type=positive, default=None,
                   help="worker processes (default: SCHUBERT_TOWERS_THREADS or CPU count)")
    s.add_argument("--sample", type=positive, default=None, help="check a random sample of this many permutations")
    s.add_argument("--seed", type=int, default=0, help="seed for --sample (default 0)")

    s = sub.add_parser("render", help="draw a diagram, optionally with the Schubert path of k")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--tower", type=diagram)
    src.add_argument("--perm", type=perm)
    s.add_argument("--k", type=positive, default=None)
    s.add_argument("--unicode", action="store_true", help="use box and bullet characters")
    return p


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _cmd_slide(ns) -> int:
    if ns.hook is not None:
        word = hook_word(ns.hook)
        result, trace = slide_hook(ns.into, ns.hook)
    else:
        word, result, trace = ns.word, slide_word(ns.into, ns.word), None
    steps = slide_word_trace(ns.into, word)
    if ns.json:
        out = {"word": format_word(word), "heights": list(result.heights), "perm": format_perm(perm_of_diagram(result))}
        if ns.steps:
            out["steps"] = [{"letter": a, "heights": list(D.heights), "outcome": o.kind, "cell": list(o.cell)}
                            for a, (D, o) in zip(word, steps)]
        _emit(out)
        return EXIT_OK
    if ns.steps:
        for a, (D, o) in zip(word, steps):
            print(f"{a}: {format_diagram(D)}  {o.kind} ({o.cell.col},{o.cell.row})")
    if ns.trace and trace is not None:
        print(format_trace(trace))
    print(format_diagram(result))
    return EXIT_OK


def _cmd_perm2tower(ns) -> int:
    T = diagram_of_perm(ns.perm)
    if ns.json:
        _emit({"perm": format_perm(ns.perm), "heights": list(T.heights)})
    else:
        print(format_diagram(T))
    return EXIT_OK


def _cmd_tower2perm(ns) -> int:
    w = perm_of_diagram(ns.tower)
    if ns.json:
        _emit({"heights": list(ns.tower.heights), "perm": format_perm(w),
               "index": list(omega_index(ns.tower)), "word": format_word(canonical_word(ns.tower))})
    else:
        print(format_perm(w))
    return EXIT_OK


def _cmd_monk(ns) -> int:
    products = monk_products(diagram_of_perm(ns.perm), ns.k)
    if ns.json:
        _emit([{"perm": format_perm(p.perm), "heights": list(p.diagram.heights), "a": p.a, "b": p.b}
               for p in products])
    else:
        for p in products:
            print(f"{format_perm(p.perm)}  {format_diagram(p.diagram)}  t[{p.a},{p.b}]")
    if ns.verify:
        ok = verify_monk(ns.perm, ns.k, [p.perm for p in products])
        print(f"verify: {'OK' if ok else 'FAILED'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def _cmd_pieri(ns, mode: str) -> int:
    try:
        shapes = pieri(diagram_of_perm(ns.perm), ns.k, ns.m, mode)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    if ns.json:
        _emit([{"perm": format_perm(L.perm), "heights": list(L.diagram.heights),
                "chain": [{"step": lab.step, "a": lab.a, "b": lab.b} for lab in L.labels]} for L in shapes])
    else:
        for L in shapes:
            line = f"{format_perm(L.perm)}  {format_diagram(L.diagram)}"
            if ns.labels:
                line += "  " + " ".join(f"{lab.step}:({lab.a},{lab.b})@({lab.cell.col},{lab.cell.row})"
                                         for lab in L.labels)
            print(line)
    if ns.verify:
        ok = verify_pieri(ns.perm, ns.k, ns.m, mode, [L.perm for L in shapes])
        print(f"verify: {'OK' if ok else 'FAILED'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def _cmd_schubert(ns) -> int:
    poly = schubert_polynomial(ns.perm)
    if ns.json:
        _emit({"perm": format_perm(ns.perm), "polynomial": str(poly),
               "reduced_word": format_word(reduced_word(ns.perm))})
    else:
        print(poly)
    return EXIT_OK


def _cmd_verify(ns) -> int:
    report = run_verify(ns.scope, ns.n, max_m=ns.max_m, workers=ns.workers, sample=ns.sample, seed=ns.seed)
    for line in report.failures[:20]:
        print(line, file=sys.stderr)
    if ns.scope == "roundtrip" and report.ok:
        print(f"{report.perms} permutations OK")
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_render(ns) -> int:
    T = ns.tower if ns.tower is not None else diagram_of_perm(ns.perm)
    overlay = schubert_path(T, ns.k) if ns.k is not None else None
    print(render_ascii(T, overlay, unicode=ns.unicode))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    ns = parse_args(argv)
    handlers = {
        "slide": _cmd_slide, "perm2tower": _cmd_perm2tower, "tower2perm": _cmd_tower2perm,
        "monk": _cmd_monk, "schubert": _cmd_schubert, "verify": _cmd_verify, "render": _cmd_render,
        "pieri-row": lambda ns: _cmd_pieri(ns, "row"), "pieri-col": lambda ns: _cmd_pieri(ns, "col"),
    }
    return handlers[ns.command](ns)


if __name__ == "__main__":
    sys.exit(main())
