"""Deterministic example graphs and seeded random graphs.

Random draws come from the PCG64 bit generator (XSL-RR 128/64) via
``numpy.random.PCG64(seed).random_raw()``.  Only raw 64-bit words are used:
an integer in ``[0, n)`` is ``word % n`` and a uniform fraction is
``(word >> 11) * 2**-53``.  Those two mappings are part of the
reproducibility contract, so the same parameters always give the same graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .errors import CapacityError, GraphError
from .graph import Edge, Graph
from .ideals import SatHerSet

__all__ = [
    "ExampleSpec",
    "RawStream",
    "tree_vertex",
    "gen_figure1",
    "gen_chain_loops",
    "gen_random",
    "build",
    "EnsembleConfig",
    "ensemble",
]

MAX_FIGURE1_VERTICES = 1 << 16


class RawStream:
    """Portable integer/fraction draws on top of PCG64 raw output."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(seed & 0xFFFFFFFFFFFFFFFF)

    def word(self) -> int:
        return int(self._bits.random_raw())

    def below(self, n: int) -> int:
        return self.word() % n

    def fraction(self) -> float:
        return (self.word() >> 11) * 2.0 ** -53


def tree_vertex(word: str) -> str:
    """Vertex id for the binary string ``word``: ``"v"`` for the root, else ``"v_" + word``."""
    return "v_" + word if word else "v"


def _loop_id(word):
    return "f_" + word if word else "f"


def _strings(depth):
    for n in range(depth + 1):
        for bits in product("01", repeat=n):
            yield "".join(bits)


def gen_figure1(depth: int, max_vertices: int = MAX_FIGURE1_VERTICES) -> tuple[Graph, SatHerSet]:
    """Binary tree of depth ``depth`` with a loop at every vertex, plus H_depth.

    Each child ``v_wb`` sends one edge ``e_wb`` to its parent ``v_w`` and
    each vertex carries a loop ``f_w``.  The returned set keeps every vertex
    whose string contains a ``0``.
    """
    if depth < 1:
        raise GraphError("depth must be at least 1")
    count = (1 << (depth + 1)) - 1
    if count > max_vertices:
        raise CapacityError("figure1 vertex count", max_vertices, count)
    words = list(_strings(depth))
    vertices = tuple(tree_vertex(w) for w in words)
    edges = [Edge(_loop_id(w), tree_vertex(w), tree_vertex(w)) for w in words]
    edges += [Edge("e_" + w, tree_vertex(w), tree_vertex(w[:-1])) for w in words if w]
    g = Graph(vertices, tuple(edges))
    h = SatHerSet.exact(g, [tree_vertex(w) for w in words if "0" in w])
    return g, h


def gen_chain_loops(n: int) -> Graph:
    """Chain ``v <- v_1 <- v_11 <- ...`` of ``n`` vertices, each with a loop.

    Ids match the all-ones branch of :func:`gen_figure1`.
    """
    if n < 1:
        raise GraphError("chain length must be at least 1")
    words = ["1" * k for k in range(n)]
    edges = [Edge(_loop_id(w), tree_vertex(w), tree_vertex(w)) for w in words]
    edges += [Edge("e_" + w, tree_vertex(w), tree_vertex(w[:-1])) for w in words if w]
    return Graph(tuple(tree_vertex(w) for w in words), tuple(edges))


def gen_random(vertices: int, edges: int, loop_prob: float, seed: int) -> Graph:
    """Random multigraph on ``u0..u{n-1}`` with edges ``a0..a{m-1}``.

    Each edge is, with probability ``loop_prob``, a loop at a uniform vertex;
    otherwise its source and range are drawn independently and uniformly.
    """
    if vertices < 0 or edges < 0:
        raise GraphError("counts must be nonnegative")
    if vertices == 0 and edges:
        raise GraphError("cannot place edges on an empty vertex set")
    if not 0.0 <= loop_prob <= 1.0:
        raise GraphError("loop_prob must lie in [0, 1]")
    rng = RawStream(seed)
    names = [f"u{i}" for i in range(vertices)]
    out = []
    for k in range(edges):
        if rng.fraction() < loop_prob:
            v = names[rng.below(vertices)]
            out.append(Edge(f"a{k}", v, v))
        else:
            src = names[rng.below(vertices)]
            rng_v = names[rng.below(vertices)]
            out.append(Edge(f"a{k}", src, rng_v))
    return Graph(tuple(names), tuple(out))


@dataclass(frozen=True)
class ExampleSpec:
    family: str
    size: int = 1
    vertices: int = 0
    edges: int = 0
    loop_prob: float = 0.3
    seed: int = 0

    def __post_init__(self):
        if self.family not in ("figure1-truncation", "chain-with-loops", "random"):
            raise GraphError(f"unknown family {self.family!r}")
        if self.family != "random" and self.size < 1:
            raise GraphError("depth/length must be at least 1")
        if self.vertices < 0 or self.edges < 0:
            raise GraphError("counts must be nonnegative")


def build(spec: ExampleSpec) -> Graph:
    if spec.family == "figure1-truncation":
        return gen_figure1(spec.size)[0]
    if spec.family == "chain-with-loops":
        return gen_chain_loops(spec.size)
    return gen_random(spec.vertices, spec.edges, spec.loop_prob, spec.seed)


@dataclass(frozen=True)
class EnsembleConfig:
    count: int = 1000
    max_vertices: int = 7
    max_edges: int = 14
    loop_prob: float = 0.3
    seed: int = 0


def ensemble(cfg: EnsembleConfig = EnsembleConfig()) -> Iterator[tuple[int, Graph]]:
    """Yield ``(index, graph)``; graph sizes and per-graph seeds come from one stream."""
    rng = RawStream(cfg.seed)
    for i in range(cfg.count):
        n = 1 + rng.below(cfg.max_vertices) if cfg.max_vertices else 0
        m = rng.below(cfg.max_edges + 1) if n else 0
        yield i, gen_random(n, m, cfg.loop_prob, rng.word())
