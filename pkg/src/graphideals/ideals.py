"""Saturated hereditary vertex sets: the vertex-level picture of gauge-invariant ideals.

A set H is *hereditary* when every path ending in H starts in H, and
*saturated* when every vertex that receives at least one edge, and receives
edges only from H, lies in H.  Vertices receiving nothing impose no
saturation constraint.

For saturated hereditary H, ``perp(H)`` is the complement of the forward
closure of H and ``perp_perp(H)`` is the set of vertices w whose backward
closure T(w) stays inside the forward closure of H.  H is regular when it
equals ``perp_perp(H)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapacityError, InvariantViolation, NotSatHerError
from .graph import (
    Edge,
    Graph,
    VertexSet,
    backward_mask,
    forward_mask,
    iter_bits,
    require_owner,
)

__all__ = [
    "SatHerSet",
    "LatticeLimits",
    "LatticeEntry",
    "IdealLattice",
    "is_hereditary",
    "is_saturated",
    "hereditary_closure",
    "saturate",
    "enumerate_sat_her",
    "perp",
    "perp_perp",
    "is_regular",
    "regular_ideals",
    "quotient_graph",
    "meet",
    "join",
]


def _is_hereditary_mask(g: Graph, mask: int) -> bool:
    in_masks = g.in_masks
    return all(in_masks[i] & ~mask == 0 for i in iter_bits(mask))


def _is_saturated_mask(g: Graph, mask: int) -> bool:
    in_masks = g.in_masks
    outside = g.receivers & ~mask
    return all(in_masks[i] & ~mask for i in iter_bits(outside))


def _saturation_step(g: Graph, mask: int) -> int:
    in_masks = g.in_masks
    add = 0
    for i in iter_bits(g.receivers & ~mask):
        if in_masks[i] & ~mask == 0:
            add |= 1 << i
    return mask | add


def _saturate_mask(g: Graph, mask: int) -> int:
    while True:
        nxt = _saturation_step(g, backward_mask(g, mask))
        if nxt == mask:
            return mask
        mask = nxt


class SatHerSet(VertexSet):
    """A vertex set certified saturated and hereditary.

    Construction validates and raises :class:`NotSatHerError` otherwise;
    use :func:`saturate` to close an arbitrary set instead.
    """

    def __post_init__(self):
        super().__post_init__()
        her = _is_hereditary_mask(self.graph, self.mask)
        sat = _is_saturated_mask(self.graph, self.mask)
        if not (her and sat):
            raise NotSatHerError(self.graph.members_of(self.mask), her, sat)

    @classmethod
    def exact(cls, g: Graph, members) -> "SatHerSet":
        if isinstance(members, VertexSet):
            require_owner(g, members)
            return cls(g, members.mask)
        return cls(g, g.mask_of(members))


def _sat_her(g: Graph, mask: int) -> SatHerSet:
    """Wrap a mask that an algorithm guarantees to be saturated hereditary."""
    try:
        return SatHerSet(g, mask)
    except NotSatHerError as exc:
        raise InvariantViolation(f"algorithm produced a non sat-her set: {exc}") from exc


def is_hereditary(g: Graph, s: VertexSet) -> bool:
    require_owner(g, s)
    return backward_mask(g, s.mask) == s.mask


def is_saturated(g: Graph, s: VertexSet) -> bool:
    require_owner(g, s)
    return _is_saturated_mask(g, s.mask)


def hereditary_closure(g: Graph, s: VertexSet) -> VertexSet:
    """Smallest hereditary superset of ``s`` (the backward closure)."""
    require_owner(g, s)
    return VertexSet(g, backward_mask(g, s.mask))


def saturate(g: Graph, s: VertexSet) -> SatHerSet:
    """Smallest saturated hereditary superset of ``s``."""
    require_owner(g, s)
    return _sat_her(g, _saturate_mask(g, s.mask))


def meet(h1: SatHerSet, h2: SatHerSet) -> SatHerSet:
    require_owner(h1.graph, h2)
    return _sat_her(h1.graph, h1.mask & h2.mask)


def join(h1: SatHerSet, h2: SatHerSet) -> SatHerSet:
    require_owner(h1.graph, h2)
    return _sat_her(h1.graph, _saturate_mask(h1.graph, h1.mask | h2.mask))


def _perp_mask(g: Graph, mask: int) -> int:
    return g.full_mask & ~forward_mask(g, mask)


def _perp_perp_mask(g: Graph, mask: int) -> int:
    reach = forward_mask(g, mask)
    out = 0
    for i, anc in enumerate(g.ancestors):
        if anc & ~reach == 0:
            out |= 1 << i
    return out


def _require_sat_her(g: Graph, h: VertexSet) -> None:
    require_owner(g, h)
    if not isinstance(h, SatHerSet):
        SatHerSet(g, h.mask)


def perp(g: Graph, h: SatHerSet) -> SatHerSet:
    """Vertex set of the annihilator ideal: everything not reachable from ``h``."""
    _require_sat_her(g, h)
    return _sat_her(g, _perp_mask(g, h.mask))


def perp_perp(g: Graph, h: SatHerSet, *, verify: bool = False) -> SatHerSet:
    """Vertex set of the double annihilator, ``{w : T(w) ⊆ forward_closure(h)}``.

    With ``verify=True`` the result is also compared against ``perp(perp(h))``.
    """
    _require_sat_her(g, h)
    mask = _perp_perp_mask(g, h.mask)
    if verify:
        twice = _perp_mask(g, _perp_mask(g, h.mask))
        if twice != mask:
            raise InvariantViolation(
                f"perp_perp {g.members_of(mask)} != perp(perp) {g.members_of(twice)}"
            )
    return _sat_her(g, mask)


def is_regular(g: Graph, h: SatHerSet) -> bool:
    _require_sat_her(g, h)
    return _perp_perp_mask(g, h.mask) == h.mask


def quotient_graph(g: Graph, h: VertexSet, *, permissive: bool = False) -> Graph:
    """The subgraph on the vertices outside ``h`` with every edge whose source survives.

    ``h`` must be saturated hereditary.  With ``permissive=True`` a merely
    hereditary set is accepted; the result is still a well-formed graph and
    carries a note recording that ``h`` was not saturated.
    """
    require_owner(g, h)
    notes = ()
    if permissive:
        if not _is_hereditary_mask(g, h.mask):
            raise NotSatHerError(h.members, False, _is_saturated_mask(g, h.mask))
        if not _is_saturated_mask(g, h.mask):
            notes = (f"quotient by unsaturated set {h}",)
    else:
        _require_sat_her(g, h)
    keep = set(g.members_of(g.full_mask & ~h.mask))
    edges = tuple(Edge(e.id, e.source, e.range) for e in g.edges if e.source in keep)
    for e in edges:
        if e.range not in keep:
            raise InvariantViolation(f"quotient edge {e.id} dangles")
    return Graph(tuple(v for v in g.vertices if v in keep), edges, notes=notes)


@dataclass(frozen=True)
class LatticeLimits:
    max_entries: int = 100_000
    oracle_max_vertices: int = 20


@dataclass(frozen=True)
class LatticeEntry:
    set: SatHerSet
    regular: bool
    perp_index: int


@dataclass(frozen=True)
class IdealLattice:
    """All saturated hereditary sets of a graph sorted by (size, members)."""

    graph: Graph
    entries: tuple[LatticeEntry, ...] = field(repr=False)

    @property
    def sets(self) -> list[SatHerSet]:
        return [e.set for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s):
        return any(s == e.set for e in self.entries)

    def index_of(self, s: VertexSet) -> int:
        return self._positions[s.mask]

    @property
    def _positions(self):
        try:
            return self.__dict__["_pos"]
        except KeyError:
            pos = {e.set.mask: i for i, e in enumerate(self.entries)}
            self.__dict__["_pos"] = pos
            return pos

    def perp_of(self, s: VertexSet) -> SatHerSet:
        return self.entries[self.entries[self.index_of(s)].perp_index].set

    def regular(self) -> list[SatHerSet]:
        return [e.set for e in self.entries if e.regular]


def _sat_her_masks(g: Graph, limits: LatticeLimits) -> list[int]:
    generators = sorted({_saturate_mask(g, 1 << i) for i in range(len(g.vertices))})
    found = {0}
    todo = [0]
    while todo:
        base = todo.pop()
        for gen in generators:
            if gen & ~base == 0:
                continue
            nxt = _saturate_mask(g, base | gen)
            if nxt not in found:
                found.add(nxt)
                if len(found) > limits.max_entries:
                    raise CapacityError("lattice size", limits.max_entries, f"> {limits.max_entries}")
                todo.append(nxt)
    return list(found)


def enumerate_sat_her(g: Graph, limits: LatticeLimits = LatticeLimits()) -> IdealLattice:
    """Every saturated hereditary set of ``g``, with regularity and perp partners.

    Sets are generated as joins of the principal sets ``saturate({v})``
    starting from the empty set, so the cost tracks the lattice size rather
    than ``2**|V|``.
    """
    masks = _sat_her_masks(g, limits)
    sets = sorted((_sat_her(g, m) for m in masks), key=lambda s: s.sort_key())
    pos = {s.mask: i for i, s in enumerate(sets)}
    entries = []
    for s in sets:
        p = _perp_mask(g, s.mask)
        if p not in pos:
            raise InvariantViolation(f"perp of {s} missing from lattice")
        entries.append(LatticeEntry(s, _perp_perp_mask(g, s.mask) == s.mask, pos[p]))
    return IdealLattice(g, tuple(entries))


def regular_ideals(g: Graph, limits: LatticeLimits = LatticeLimits()) -> list[SatHerSet]:
    return enumerate_sat_her(g, limits).regular()
