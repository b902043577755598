"""Command-line front end.

Exit codes: 0 success, 2 parse or usage error, 3 invalid set (unknown vertex,
or not saturated hereditary under ``--exact``), 4 capacity exceeded,
5 verification failure.  Every nonzero exit writes one line starting with
``error:`` to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Optional, TextIO

from .errors import CapacityError, GraphError, NotSatHerError, UnknownVertexError
from .generators import EnsembleConfig, gen_chain_loops, gen_figure1, gen_random
from .graph import Graph, VertexSet, find_entryless_cycle, format_set, has_condition_L
from .ideals import (
    IdealLattice,
    LatticeLimits,
    SatHerSet,
    enumerate_sat_her,
    is_hereditary,
    is_regular,
    is_saturated,
    perp,
    perp_perp,
    quotient_graph,
    saturate,
)
from .io import parse_graph, read_graph, serialize_graph, to_dot
from .verification import VerificationReport, verify_ensemble, verify_graph

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_SET = 3
EXIT_CAPACITY = 4
EXIT_VERIFY = 5

TABLE, STRUCTURED, DOT = "table", "structured", "dot"


class UsageError(Exception):
    pass


class InputError(Exception):
    """The graph file could not be read or parsed."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _output_flags(p, allow_dot=False):
    choices = [TABLE, STRUCTURED] + ([DOT] if allow_dot else [])
    p.add_argument("--output", choices=choices, default=TABLE, dest="output")
    p.add_argument("--table", action="store_const", const=TABLE, dest="output")
    p.add_argument("--structured", action="store_const", const=STRUCTURED, dest="output")
    if allow_dot:
        p.add_argument("--dot", action="store_const", const=DOT, dest="output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphideals", description=__doc__.splitlines()[0])
    parser.add_argument("--max-entries", type=int, default=LatticeLimits().max_entries,
                        help="lattice size cap")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lattice", help="list every saturated hereditary set")
    p.add_argument("graph")
    _output_flags(p)

    for name, text in (("perp", "vertex set of the annihilator"),
                       ("regular", "test regularity"),
                       ("quotient", "quotient graph")):
        p = sub.add_parser(name, help=text)
        p.add_argument("graph")
        p.add_argument("--set", required=True, dest="set", help="comma-separated vertex ids")
        p.add_argument("--exact", action="store_true", help="reject sets that are not saturated hereditary")
        _output_flags(p, allow_dot=name == "quotient")

    p = sub.add_parser("check-l", help="test Condition (L)")
    p.add_argument("graph")
    _output_flags(p)

    p = sub.add_parser("verify", help="run every oracle and theorem check")
    p.add_argument("graph", nargs="?")
    p.add_argument("--ensemble", action="store_true", help="check a seeded random ensemble instead")
    p.add_argument("--count", type=int, default=EnsembleConfig().count)
    p.add_argument("--max-vertices", type=int, default=EnsembleConfig().max_vertices)
    p.add_argument("--max-edges", type=int, default=EnsembleConfig().max_edges)
    p.add_argument("--loop-prob", type=float, default=EnsembleConfig().loop_prob)
    p.add_argument("--seed", type=int, default=EnsembleConfig().seed)
    _output_flags(p)

    p = sub.add_parser("gen", help="generate an example graph")
    p.add_argument("family", choices=["figure1", "chain", "random"])
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--length", type=int, default=3)
    p.add_argument("--vertices", type=int, default=5)
    p.add_argument("--edges", type=int, default=8)
    p.add_argument("--loop-prob", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    _output_flags(p, allow_dot=True)
    return parser


def _load(path: str, stdin: TextIO) -> Graph:
    try:
        if path == "-":
            return parse_graph(stdin.read(), "line")
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_set(g: Graph, text: str) -> VertexSet:
    ids = [t.strip() for t in text.split(",") if t.strip()]
    return g.vertex_set(ids)


def _resolve_set(g: Graph, args, err: TextIO) -> SatHerSet:
    raw = _parse_set(g, args.set)
    if args.exact:
        return SatHerSet.exact(g, raw)
    closed = saturate(g, raw)
    if closed != raw:
        print(f"notice: saturated {raw} to {closed}", file=err)
    return closed


def set_record(g: Graph, h: SatHerSet, lattice: Optional[IdealLattice] = None) -> dict:
    p = lattice.perp_of(h) if lattice is not None else perp(g, h)
    return {
        "set": list(h.members),
        "hereditary": is_hereditary(g, h),
        "saturated": is_saturated(g, h),
        "regular": is_regular(g, h),
        "perp": list(p.members),
    }


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def emit(result, mode: str) -> str:
    """Render a library result in ``mode``; raises UsageError for unsupported combinations."""
    if isinstance(result, Graph):
        if mode == TABLE:
            return serialize_graph(result, "line")
        if mode == STRUCTURED:
            return serialize_graph(result, "structured")
        return to_dot(result)
    if mode == DOT:
        raise UsageError("dot output is only available for graphs")
    if isinstance(result, IdealLattice):
        g = result.graph
        if mode == STRUCTURED:
            return _dump([set_record(g, e.set, result) for e in result.entries])
        rows = []
        for e in result.entries:
            partner = result.entries[e.perp_index].set
            rows.append(f"{e.set}\tregular={_flag(e.regular)}\tperp={partner}")
        return "\n".join(rows) + "\n"
    if isinstance(result, VerificationReport):
        return result.to_json() if mode == STRUCTURED else result.table()
    raise UsageError(f"cannot render {type(result).__name__}")


def emit_report(report: VerificationReport, mode: str, out: TextIO, err: TextIO) -> int:
    out.write(emit(report, mode))
    fails = report.failures
    for rec in fails:
        where = f" graph #{rec.graph_index}" if rec.graph_index is not None else ""
        subject = format_set(rec.subject) if rec.subject is not None else "-"
        err.write(f"FAIL {rec.check}{where} set={subject}: {rec.detail}\n")
        if rec.witness is not None:
            err.write(json.dumps(rec.witness, sort_keys=True) + "\n")
    if fails:
        err.write(f"error: verification failed: {len(fails)} failing check(s)\n")
        return EXIT_VERIFY
    return EXIT_OK


def _dispatch(args, stdin, out, err) -> int:
    limits = LatticeLimits(max_entries=args.max_entries)
    cmd = args.command
    if cmd == "gen":
        if args.family == "figure1":
            g, _ = gen_figure1(args.depth)
        elif args.family == "chain":
            g = gen_chain_loops(args.length)
        else:
            g = gen_random(args.vertices, args.edges, args.loop_prob, args.seed)
        out.write(emit(g, args.output))
        return EXIT_OK
    if cmd == "verify":
        if args.ensemble:
            cfg = EnsembleConfig(args.count, args.max_vertices, args.max_edges, args.loop_prob, args.seed)
            report = verify_ensemble(cfg, limits)
        elif args.graph:
            report = verify_graph(_load(args.graph, stdin), limits)
        else:
            raise UsageError("verify needs a graph path or --ensemble")
        return emit_report(report, args.output, out, err)

    g = _load(args.graph, stdin)
    if cmd == "lattice":
        out.write(emit(enumerate_sat_her(g, limits), args.output))
    elif cmd == "check-l":
        cycle = find_entryless_cycle(g)
        if args.output == STRUCTURED:
            out.write(_dump({"condition_L": cycle is None,
                             "entryless_cycle": list(cycle.edges) if cycle else None}))
        else:
            out.write(f"condition_L={_flag(cycle is None)}\n")
            if cycle is not None:
                out.write(f"entryless_cycle={','.join(cycle.edges)}\n")
    else:
        h = _resolve_set(g, args, err)
        if cmd == "quotient":
            out.write(emit(quotient_graph(g, h), args.output))
        elif args.output == STRUCTURED:
            record = set_record(g, h)
            if cmd == "regular":
                record["perp_perp"] = list(perp_perp(g, h).members)
                record["graph_condition_L"] = has_condition_L(g)
                record["quotient_condition_L"] = has_condition_L(quotient_graph(g, h))
            out.write(_dump(record))
        elif cmd == "perp":
            out.write(f"{perp(g, h)}\n")
        else:
            out.write(f"regular={_flag(is_regular(g, h))}\n")
            out.write(f"perp_perp={perp_perp(g, h)}\n")
            out.write(f"graph_condition_L={_flag(has_condition_L(g))}\n")
            out.write(f"quotient_condition_L={_flag(has_condition_L(quotient_graph(g, h)))}\n")
    return EXIT_OK


def run(argv, stdin: TextIO = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _dispatch(args, stdin, out, err)
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        err.write(f"error: parse: {exc}\n")
        return EXIT_USAGE
    except (UnknownVertexError, NotSatHerError) as exc:
        err.write(f"error: invalid set: {exc}\n")
        return EXIT_BAD_SET
    except GraphError as exc:
        err.write(f"error: parse: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        err.write(f"error: capacity: {exc}\n")
        return EXIT_CAPACITY


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
