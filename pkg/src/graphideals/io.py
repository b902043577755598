"""Reading and writing graphs: line-based text, JSON, and DOT."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DuplicateIdError, GraphError, ParseError, UnknownVertexError
from .graph import Edge, Graph, VertexSet, check_id, id_key

__all__ = ["parse_graph", "serialize_graph", "to_dot", "read_graph", "format_for_path", "set_to_json"]

LINE = "line"
STRUCTURED = "structured"


def format_for_path(path) -> str:
    suffix = Path(path).suffix
    if suffix == ".graph":
        return LINE
    if suffix == ".json":
        return STRUCTURED
    raise ParseError(f"cannot infer graph format from extension {suffix!r}; use .graph or .json")


def read_graph(path) -> Graph:
    fmt = format_for_path(path)
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), fmt)


def parse_graph(text: str, format: str = LINE) -> Graph:
    if format == LINE:
        return _parse_lines(text)
    if format == STRUCTURED:
        return _parse_json(text)
    raise ValueError(f"unknown graph format {format!r}")


def _parse_lines(text):
    vertices = {}
    edges = []
    edge_lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <id>'", lineno, line.strip())
            vid = tokens[1]
            if vid in vertices:
                raise ParseError("duplicate vertex id", lineno, vid)
            vertices[vid] = lineno
        elif kind == "edge":
            if len(tokens) != 4:
                raise ParseError("expected 'edge <id> <source-id> <range-id>'", lineno, line.strip())
            eid, src, rng = tokens[1:]
            if eid in edge_lines:
                raise ParseError("duplicate edge id", lineno, eid)
            edge_lines[eid] = lineno
            edges.append(Edge(eid, src, rng))
        else:
            raise ParseError("unknown declaration", lineno, kind)
    for e in edges:
        for end in (e.source, e.range):
            if end not in vertices:
                raise UnknownVertexError(end, line=edge_lines[e.id])
    return Graph(tuple(vertices), tuple(edges))


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, text[exc.pos:exc.pos + 10] or None) from None
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise ParseError("expected an object with a 'vertices' list")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError("'edges' must be a list")
    vertices = data["vertices"]
    for pos, v in enumerate(vertices):
        if not isinstance(v, str):
            raise ParseError(f"vertices[{pos}] is not a string", token=repr(v))
    seen = set()
    for v in vertices:
        if v in seen:
            raise ParseError("duplicate vertex id", token=v)
        seen.add(v)
    edges = []
    for pos, obj in enumerate(raw_edges):
        if not isinstance(obj, dict) or set(obj) != {"id", "source", "range"}:
            raise ParseError(f"edges[{pos}] must have exactly the fields id, source, range", token=repr(obj))
        if not all(isinstance(obj[k], str) for k in obj):
            raise ParseError(f"edges[{pos}] fields must be strings", token=repr(obj))
        edges.append(Edge(obj["id"], obj["source"], obj["range"]))
    ids = set()
    for pos, e in enumerate(edges):
        if e.id in ids:
            raise ParseError(f"edges[{pos}]: duplicate edge id", token=e.id)
        ids.add(e.id)
        for end in (e.source, e.range):
            if end not in seen:
                raise UnknownVertexError(end)
    try:
        return Graph(tuple(vertices), tuple(edges))
    except (DuplicateIdError, UnknownVertexError):
        raise
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def graph_to_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "source": e.source, "range": e.range} for e in g.edges],
    }


def serialize_graph(g: Graph, format: str = LINE) -> str:
    """Canonical text for ``g``; ``parse_graph`` inverts it exactly."""
    if format == LINE:
        lines = [f"vertex {v}" for v in g.vertices]
        lines += [f"edge {e.id} {e.source} {e.range}" for e in g.edges]
        return "\n".join(lines) + "\n"
    if format == STRUCTURED:
        return json.dumps(graph_to_dict(g), indent=2) + "\n"
    raise ValueError(f"unknown graph format {format!r}")


def _dot_id(ident):
    return '"' + ident.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, name: str = "G") -> str:
    out = [f"digraph {_dot_id(name)} {{"]
    out += [f"  {_dot_id(v)};" for v in g.vertices]
    out += [f"  {_dot_id(e.source)} -> {_dot_id(e.range)} [label={_dot_id(e.id)}];" for e in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"


def set_to_json(s: VertexSet) -> list:
    return list(s.members)


def set_from_json(g: Graph, members) -> VertexSet:
    for v in members:
        check_id(v, "vertex id")
    return g.vertex_set(sorted(members, key=id_key))
