"""Finite directed multigraphs, vertex sets, reachability and Condition (L).

Conventions: an edge ``e`` has a ``source`` and a ``range``; a path is a
sequence ``(a1, ..., an)`` with ``source(ai) == range(a(i+1))``, so walking
a path in time goes from ``source`` to ``range`` and reachability follows
that direction.  Single vertices count as paths of length zero, which makes
both closures extensive.

Vertex sets are stored as integer bitmasks over the graph's canonical vertex
order (ids sorted as UTF-8 byte strings).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import DuplicateIdError, GraphError, OwnershipError, UnknownVertexError

__all__ = [
    "Edge",
    "Graph",
    "VertexSet",
    "CycleWitness",
    "forward_closure",
    "backward_closure",
    "find_entryless_cycle",
    "has_condition_L",
    "iter_bits",
]


def id_key(ident: str) -> bytes:
    return ident.encode("utf-8")


def check_id(ident, kind="id"):
    if not isinstance(ident, str) or not ident:
        raise GraphError(f"{kind} must be a nonempty string, got {ident!r}")
    if "#" in ident or any(ch.isspace() for ch in ident):
        raise GraphError(f"{kind} {ident!r} contains whitespace or '#'")


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


_SMALL = 1 << 12
_BIT_TABLE = [tuple(_bits(m)) for m in range(_SMALL)]


def iter_bits(mask: int) -> Iterable[int]:
    """Indices of the set bits of ``mask``, ascending."""
    if mask < _SMALL:
        return _BIT_TABLE[mask]
    return _bits(mask)


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    range: str


@dataclass(frozen=True)
class Graph:
    """Immutable finite directed multigraph.

    Loops and parallel edges are allowed.  ``vertices`` and ``edges`` are
    normalised to canonical (byte-sorted) order on construction, so two
    graphs with the same vertex and edge records compare equal however they
    were declared.  ``notes`` carries free-form metadata and is ignored by
    equality.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        for v in verts:
            check_id(v, "vertex id")
        if len(set(verts)) != len(verts):
            dup = next(v for v in verts if verts.count(v) > 1)
            raise DuplicateIdError(f"duplicate vertex id {dup!r}")
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        known = set(verts)
        seen = set()
        for e in edges:
            check_id(e.id, "edge id")
            if e.id in seen:
                raise DuplicateIdError(f"duplicate edge id {e.id!r}")
            seen.add(e.id)
            for end in (e.source, e.range):
                if end not in known:
                    raise UnknownVertexError(end)
        object.__setattr__(self, "vertices", tuple(sorted(verts, key=id_key)))
        object.__setattr__(self, "edges", tuple(sorted(edges, key=lambda e: id_key(e.id))))

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((self.vertices, self.edges))
            self.__dict__["_hash"] = h
            return h

    # -- derived indices -------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @cached_property
    def in_edges(self) -> tuple[tuple[Edge, ...], ...]:
        buckets = [[] for _ in self.vertices]
        for e in self.edges:
            buckets[self.index[e.range]].append(e)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        """Bitmask of the sources of edges received by each vertex."""
        masks = [0] * len(self.vertices)
        for e in self.edges:
            masks[self.index[e.range]] |= 1 << self.index[e.source]
        return tuple(masks)

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.vertices)
        for e in self.edges:
            masks[self.index[e.source]] |= 1 << self.index[e.range]
        return tuple(masks)

    @cached_property
    def receivers(self) -> int:
        """Bitmask of vertices v with r^-1(v) nonempty."""
        mask = 0
        for i, m in enumerate(self.in_masks):
            if m:
                mask |= 1 << i
        return mask

    @cached_property
    def ancestors(self) -> tuple[int, ...]:
        """``ancestors[i]`` is the mask of T(v_i): vertices with a path into v_i."""
        return tuple(_closure(1 << i, self.in_masks) for i in range(len(self.vertices)))

    def mask_of(self, members: Iterable[str]) -> int:
        mask = 0
        for v in members:
            try:
                mask |= 1 << self.index[v]
            except KeyError:
                raise UnknownVertexError(v) from None
        return mask

    def members_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def vertex_set(self, members: Iterable[str] = ()) -> "VertexSet":
        return VertexSet(self, self.mask_of(members))

    def all_vertices(self) -> "VertexSet":
        return VertexSet(self, self.full_mask)

    def empty(self) -> "VertexSet":
        return VertexSet(self, 0)

    def in_degree(self, v: str) -> int:
        return len(self.in_edges[self.index[v]])

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


@dataclass(frozen=True, eq=False)
class VertexSet:
    """A subset of one graph's vertices; the owning graph is part of the value."""

    graph: Graph
    mask: int

    def __post_init__(self):
        if self.mask & ~self.graph.full_mask or self.mask < 0:
            raise GraphError("vertex mask out of range for graph")

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.mask == other.mask and (self.graph is other.graph or self.graph == other.graph)

    def __hash__(self):
        return hash((self.graph, self.mask))

    @property
    def members(self) -> tuple[str, ...]:
        return self.graph.members_of(self.mask)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, vertex):
        i = self.graph.index.get(vertex)
        return i is not None and bool(self.mask >> i & 1)

    def _same(self, other):
        require_owner(self.graph, other)
        return other.mask

    def __le__(self, other):
        return self.mask & ~self._same(other) == 0

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __or__(self, other):
        return VertexSet(self.graph, self.mask | self._same(other))

    def __and__(self, other):
        return VertexSet(self.graph, self.mask & self._same(other))

    def __sub__(self, other):
        return VertexSet(self.graph, self.mask & ~self._same(other))

    def complement(self) -> "VertexSet":
        return VertexSet(self.graph, self.graph.full_mask & ~self.mask)

    def sort_key(self):
        return (len(self), tuple(id_key(v) for v in self.members))

    def __str__(self):
        return format_set(self.members)

    def __repr__(self):
        return f"{type(self).__name__}({format_set(self.members)})"


def format_set(members) -> str:
    members = list(members)
    return "{" + ",".join(members) + "}" if members else "∅"


def require_owner(g: Graph, s: VertexSet) -> None:
    if s.graph is not g and s.graph != g:
        raise OwnershipError(f"vertex set {format_set(s.members)} belongs to a different graph")


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle ``(a1, ..., an)`` in path convention: source(ai) == range(a(i+1))."""

    graph: Graph
    edges: tuple[str, ...]

    def __post_init__(self):
        if not self.edges:
            raise GraphError("a cycle needs at least one edge")
        es = [self.graph.edge_by_id[e] for e in self.edges]
        for a, b in zip(es, es[1:]):
            if a.source != b.range:
                raise GraphError(f"edges {a.id} and {b.id} do not compose")
        if es[0].range != es[-1].source:
            raise GraphError("path does not close up")
        ranges = [e.range for e in es]
        if len(set(ranges)) != len(ranges):
            raise GraphError("cycle is not simple")

    @property
    def vertices(self) -> tuple[str, ...]:
        """The vertex set of the cycle (ranges of its edges, in path order)."""
        return tuple(self.graph.edge_by_id[e].range for e in self.edges)


def _closure(start: int, step: tuple[int, ...]) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= step[i]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def forward_mask(g: Graph, mask: int) -> int:
    return _closure(mask, g.out_masks)


def backward_mask(g: Graph, mask: int) -> int:
    return _closure(mask, g.in_masks)


def forward_closure(g: Graph, s: VertexSet) -> VertexSet:
    """Ranges of all paths whose source lies in ``s`` (``s`` included)."""
    require_owner(g, s)
    return VertexSet(g, forward_mask(g, s.mask))


def backward_closure(g: Graph, s: VertexSet) -> VertexSet:
    """Sources of all paths whose range lies in ``s``; for ``s = {w}`` this is T(w)."""
    require_owner(g, s)
    return VertexSet(g, backward_mask(g, s.mask))


def find_entryless_cycle(g: Graph) -> Optional[CycleWitness]:
    """Return a simple cycle without an entry, or ``None`` under Condition (L).

    A cycle has no entry exactly when each of its vertices receives one edge
    in total.  Following the unique incoming edge backwards from such a
    vertex either leaves the in-degree-one region or closes a cycle.  The
    first cycle found from the canonically smallest vertex is returned,
    starting at its smallest vertex.
    """
    unique_in = {}
    for i, incoming in enumerate(g.in_edges):
        if len(incoming) == 1:
            unique_in[i] = incoming[0]
    done = set()
    for start in sorted(unique_in):
        if start in done:
            continue
        trail = []
        pos = {}
        cur = start
        while cur in unique_in and cur not in done and cur not in pos:
            pos[cur] = len(trail)
            trail.append(cur)
            cur = g.index[unique_in[cur].source]
        if cur in pos:
            ring = trail[pos[cur]:]
            first = ring.index(min(ring))
            ring = ring[first:] + ring[:first]
            return CycleWitness(g, tuple(unique_in[v].id for v in ring))
        done.update(trail)
    return None


def has_condition_L(g: Graph) -> bool:
    """True iff every cycle of ``g`` has an entry."""
    return find_entryless_cycle(g) is None
