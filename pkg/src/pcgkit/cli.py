"""Command line front end.

Exit codes: 0 on success, 1 on malformed input of any kind (bad flags,
unreadable files, schema violations), 2 when an explicitly requested
verification fails. Results go to stdout or --output FILE; status and
error lines go to stderr so piped JSON stays clean. Errors print exactly
one machine-parsable line: "error: <Type>: <message>".
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import classify, render_report, report_to_json
from .errors import InvalidInput, PcgError
from .graphs import (
    GridSpec,
    complement,
    dumps_graph,
    gen_H,
    gen_H1,
    gen_H2,
    gen_H4,
    gen_complete,
    gen_cycle,
    gen_cycle_complement,
    gen_grid,
    graph_to_dot,
    loads_graph,
)
from .grid import construct_grid_pct, first_violation
from .rational import parse_rational
from .trees import (
    PcgInstance,
    dumps_instance,
    is_witness,
    loads_tree,
    pcg_realize,
    tree_to_dot,
)


class _Parser(argparse.ArgumentParser):
    """Argparse that reports usage problems through the exit-code contract
    (1 for malformed input) instead of its default exit status."""

    def error(self, message):
        raise InvalidInput(message)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_graph_file(path: str):
    return loads_graph(_read_text(path))


def _load_tree_file(path: str):
    return loads_tree(_read_text(path))


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidInput(f"expected an integer, got {text!r}") from None


def _cmd_gen(ns) -> int:
    family = ns.family
    arity = {
        "grid": 2,
        "cycle": 1,
        "cycle-complement": 1,
        "complete": 1,
        "H": 0,
        "H1": 0,
        "H2": 0,
        "H4": 0,
    }
    if family not in arity:
        raise InvalidInput(
            f"unknown family {family!r}; choose from {', '.join(sorted(arity))}"
        )
    if len(ns.args) != arity[family]:
        raise InvalidInput(
            f"family {family!r} takes {arity[family]} argument(s), got {len(ns.args)}"
        )
    values = [_int_arg(a) for a in ns.args]
    if family == "grid":
        g = gen_grid(GridSpec(values[0], values[1]))
    elif family == "cycle":
        g = gen_cycle(values[0])
    elif family == "cycle-complement":
        g = gen_cycle_complement(values[0])
    elif family == "complete":
        g = gen_complete(values[0])
    else:
        g = {"H": gen_H, "H1": gen_H1, "H2": gen_H2, "H4": gen_H4}[family]()
    _write_output(dumps_graph(g), ns.output)
    return 0


def _cmd_grid_pct(ns) -> int:
    spec = GridSpec(ns.k, ns.l)
    inst = construct_grid_pct(spec)
    _write_output(dumps_instance(inst), ns.output)
    if not ns.verify:
        return 0
    violation = first_violation(spec)
    if violation is None:
        print(f"PASS: witness for the {ns.k}x{ns.l} grid verified", file=sys.stderr)
        return 0
    u, v, d, adjacent = violation
    expected = "an edge" if adjacent else "a non-edge"
    print(
        f"FAIL: leaf pair {u}, {v} at distance {d} but the grid has {expected}",
        file=sys.stderr,
    )
    return 2


def _instance_from_flags(ns) -> PcgInstance:
    tree = _load_tree_file(ns.tree)
    return PcgInstance(tree, parse_rational(ns.dmin), parse_rational(ns.dmax))


def _cmd_realize(ns) -> int:
    inst = _instance_from_flags(ns)
    _write_output(dumps_graph(pcg_realize(inst)), ns.output)
    return 0


def _cmd_verify(ns) -> int:
    inst = _instance_from_flags(ns)
    g = _load_graph_file(ns.graph)
    if is_witness(inst, g):
        print("PASS: realized graph matches edge for edge", file=sys.stderr)
        return 0
    print("FAIL: realized graph differs from the given graph", file=sys.stderr)
    return 2


def _cmd_classify(ns) -> int:
    g = _load_graph_file(ns.graph)
    report = classify(g, hole_limit=ns.max_holes)
    if ns.pretty:
        _write_output(render_report(report), ns.output)
    else:
        _write_output(json.dumps(report_to_json(report), indent=2) + "\n", ns.output)
    return 0


def _cmd_complement(ns) -> int:
    g = _load_graph_file(ns.graph)
    _write_output(dumps_graph(complement(g)), ns.output)
    return 0


def _cmd_export_dot(ns) -> int:
    if ns.graph is not None:
        text = graph_to_dot(_load_graph_file(ns.graph))
    else:
        text = tree_to_dot(_load_tree_file(ns.tree))
    _write_output(text, ns.output)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="pcgkit", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--output", metavar="FILE", help="write result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="emit a named graph family as JSON")
    p.add_argument("family", help="grid | cycle | cycle-complement | complete | H | H1 | H2 | H4")
    p.add_argument("args", nargs="*", help="family parameters, e.g. gen grid 3 4")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("grid-pct", parents=[common], help="construct the grid witness instance")
    p.add_argument("--k", type=int, required=True, help="rows")
    p.add_argument("--l", type=int, required=True, help="columns")
    p.add_argument("--verify", action="store_true", help="also check the realization; exit 2 on mismatch")
    p.set_defaults(func=_cmd_grid_pct)

    p = sub.add_parser("realize", parents=[common], help="realize a tree + interval as a graph")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--dmin", required=True, metavar="Q", help='rational, e.g. "9" or "7/2"')
    p.add_argument("--dmax", required=True, metavar="Q")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("verify", parents=[common], help="check a witness against a graph; exit 2 on mismatch")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--dmin", required=True, metavar="Q")
    p.add_argument("--dmax", required=True, metavar="Q")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="run the membership tests and report")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("--max-holes", type=int, default=10_000, metavar="N")
    p.add_argument("--pretty", action="store_true", help="human-readable text instead of JSON")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("complement", parents=[common], help="complement a graph")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz text for a graph or tree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="FILE")
    group.add_argument("--tree", metavar="FILE")
    p.set_defaults(func=_cmd_export_dot, graph=None, tree=None)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        return ns.func(ns)
    except PcgError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: FileError: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
