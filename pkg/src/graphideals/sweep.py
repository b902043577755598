"""Exhaustive enumeration of small multigraphs up to relabelling.

A graph on ``n`` labelled vertices is a multiplicity table: ``0..max_parallel``
edges for every ordered pair of distinct vertices and ``0..max_loops`` loops
per vertex.  Tables are encoded as integers and only the smallest code in
each orbit of the symmetric group is kept, which is enough because every
property checked here is invariant under renaming vertices.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator

import numpy as np

from .graph import Edge, Graph

__all__ = ["multiplicity_tables", "exhaustive_graphs", "table_to_graph"]


def _slots(n):
    return [(i, j) for i in range(n) for j in range(n)]


def multiplicity_tables(n: int, max_parallel: int = 2, max_loops: int = 1) -> Iterator[np.ndarray]:
    """Yield arrays of orbit-representative tables (rows of length ``n*n``), in chunks."""
    if n == 0:
        yield np.zeros((1, 0), dtype=np.int8)
        return
    slots = _slots(n)
    base = max(max_parallel, max_loops) + 1
    pos = {s: k for k, s in enumerate(slots)}
    off = [k for k, (i, j) in enumerate(slots) if i != j]
    diag = [k for k, (i, j) in enumerate(slots) if i == j]
    powers = [np.array([base ** pos[(p[i], p[j])] for (i, j) in slots], dtype=np.int64)
              for p in permutations(range(n))]
    identity = np.array([base ** k for k in range(len(slots))], dtype=np.int64)
    if off:
        off_digits = np.indices((max_parallel + 1,) * len(off), dtype=np.int8).reshape(len(off), -1).T
    else:
        off_digits = np.zeros((1, 0), dtype=np.int8)
    for loops in product(range(max_loops + 1), repeat=n):
        table = np.zeros((off_digits.shape[0], len(slots)), dtype=np.int8)
        table[:, off] = off_digits
        table[:, diag] = loops
        wide = table.astype(np.int64)
        code = wide @ identity
        best = code.copy()
        for pw in powers:
            np.minimum(best, wide @ pw, out=best)
        keep = table[code == best]
        if len(keep):
            yield keep


def table_to_graph(row, n: int) -> Graph:
    names = [f"p{i}" for i in range(n)]
    edges = []
    for (i, j), mult in zip(_slots(n), row):
        for k in range(int(mult)):
            edges.append(Edge(f"e{i}_{j}_{k}", names[i], names[j]))
    return Graph(tuple(names), tuple(edges))


def exhaustive_graphs(max_vertices: int = 4, max_parallel: int = 2, max_loops: int = 1) -> Iterator[Graph]:
    """Every graph with at most ``max_vertices`` vertices, one per isomorphism class."""
    for n in range(max_vertices + 1):
        for chunk in multiplicity_tables(n, max_parallel, max_loops):
            for row in chunk:
                yield table_to_graph(row, n)
