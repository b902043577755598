"""Brute-force oracles and theorem checks over concrete graphs.

The oracles work from the literal definitions on plain Python sets of
vertex ids, edge by edge, and never call the bitmask closures in
:mod:`graphideals.graph` or :mod:`graphideals.ideals`.  The checks compare
the two routes and test the annihilator identities and the Condition (L)
preservation theorem for every saturated hereditary set of a graph.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional

from .errors import CapacityError, GraphIdealsError
from .generators import EnsembleConfig, ensemble
from .graph import Graph, VertexSet, find_entryless_cycle, format_set, has_condition_L
from .ideals import (
    IdealLattice,
    LatticeLimits,
    SatHerSet,
    enumerate_sat_her,
    is_regular,
    perp,
    perp_perp,
    quotient_graph,
)
from .io import parse_graph, serialize_graph

__all__ = [
    "OracleFailure",
    "oracle_is_hereditary",
    "oracle_is_saturated",
    "oracle_enumerate_sat_her",
    "oracle_perp",
    "oracle_simple_cycles",
    "oracle_condition_L",
    "CheckRecord",
    "VerificationReport",
    "verify_graph",
    "verify_many",
    "verify_ensemble",
    "rerun_check",
    "find_L_preservation_counterexample",
    "find_converse_witness",
]

ORACLE_MAX_CYCLE_VERTICES = 12
VACUOUS = "premise not met"


class OracleFailure(GraphIdealsError):
    """An oracle found a situation the theory rules out (e.g. two maximal perps)."""


# -- oracles ---------------------------------------------------------------


def oracle_is_hereditary(g: Graph, members: Iterable[str]) -> bool:
    # Every path into H ends with an edge into H, so checking single edges
    # covers all paths by induction on length.
    h = set(members)
    return all(e.source in h for e in g.edges if e.range in h)


def oracle_is_saturated(g: Graph, members: Iterable[str]) -> bool:
    h = set(members)
    for v in g.vertices:
        if v in h:
            continue
        sources = [e.source for e in g.edges if e.range == v]
        if sources and all(s in h for s in sources):
            return False
    return True


def oracle_enumerate_sat_her(g: Graph, max_vertices: int = LatticeLimits().oracle_max_vertices) -> list[VertexSet]:
    """Filter all subsets of the vertex set by the literal definitions."""
    n = len(g.vertices)
    if n > max_vertices:
        raise CapacityError("oracle subset enumeration vertices", max_vertices, n)
    out = []
    for k in range(n + 1):
        for combo in combinations(g.vertices, k):
            if oracle_is_hereditary(g, combo) and oracle_is_saturated(g, combo):
                out.append(g.vertex_set(combo))
    return out


def oracle_perp(g: Graph, h: VertexSet, candidates: Optional[list[frozenset]] = None) -> VertexSet:
    """The unique inclusion-maximal saturated hereditary set disjoint from ``h``.

    ``candidates`` may hold the oracle lattice as frozensets of ids, to avoid
    re-enumerating it.  Raises :class:`OracleFailure` if the maximum is not
    unique.
    """
    if candidates is None:
        candidates = [frozenset(c.members) for c in oracle_enumerate_sat_her(g)]
    hs = set(h.members)
    disjoint = [c for c in candidates if not hs & c]
    maximal = [c for c in disjoint if not any(c < d for d in disjoint)]
    if len(maximal) != 1:
        shown = ", ".join(format_set(sorted(m)) for m in maximal)
        raise OracleFailure(f"{len(maximal)} maximal sets disjoint from {h}: {shown}")
    return g.vertex_set(maximal[0])


def oracle_simple_cycles(g: Graph, max_vertices: int = ORACLE_MAX_CYCLE_VERTICES) -> list[tuple[str, ...]]:
    """All simple cycles as edge-id tuples in path order (source(a_i) = range(a_{i+1})).

    Parallel edges and loops give distinct cycles.  Each cycle is listed once,
    rooted at its smallest vertex.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise CapacityError("oracle cycle enumeration vertices", max_vertices, n)
    order = {v: i for i, v in enumerate(g.vertices)}
    out_edges = {v: [e for e in g.edges if e.source == v] for v in g.vertices}
    cycles = []

    def walk(root, at, visited, trail):
        for e in out_edges[at]:
            if e.range == root:
                # the walk follows time order; path notation lists edges in reverse
                cycles.append(tuple(x.id for x in reversed(trail + [e])))
            elif order[e.range] > order[root] and e.range not in visited:
                visited.add(e.range)
                walk(root, e.range, visited, trail + [e])
                visited.discard(e.range)

    for root in g.vertices:
        walk(root, root, {root}, [])
    return cycles


def oracle_condition_L(g: Graph, max_vertices: int = ORACLE_MAX_CYCLE_VERTICES) -> bool:
    """Every simple cycle has an entry: an edge other than a_i with the range of a_i."""
    range_of = {e.id: e.range for e in g.edges}
    received = {v: [e.id for e in g.edges if e.range == v] for v in g.vertices}
    for cycle in oracle_simple_cycles(g, max_vertices):
        if not any(e != a for a in cycle for e in received[range_of[a]]):
            return False
    return True


# -- reports -----------------------------------------------------------------


@dataclass
class CheckRecord:
    check: str
    passed: bool
    skipped: bool = False
    subject: Optional[list[str]] = None
    detail: str = ""
    witness: Optional[dict] = None
    graph_index: Optional[int] = None
    vacuous: bool = False

    @property
    def status(self) -> str:
        return "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")


@dataclass
class VerificationReport:
    vertices: int = 0
    edges: int = 0
    graphs: int = 0
    lattice_elements: int = 0
    records: list[CheckRecord] = field(default_factory=list)
    # per check: [passed, failed, skipped, passed only because the premise failed]
    counts: dict[str, list[int]] = field(default_factory=dict)
    ensemble: Optional[dict] = None

    def add(self, rec: CheckRecord, keep_passing: bool = True) -> None:
        c = self.counts.setdefault(rec.check, [0, 0, 0, 0])
        c[0 if rec.passed and not rec.skipped else 2 if rec.skipped else 1] += 1
        c[3] += rec.vacuous
        if keep_passing or not rec.passed or rec.skipped:
            self.records.append(rec)

    def merge(self, other: "VerificationReport", index: Optional[int] = None) -> None:
        self.graphs += other.graphs
        self.vertices += other.vertices
        self.edges += other.edges
        self.lattice_elements += other.lattice_elements
        for name, other_counts in other.counts.items():
            c = self.counts.setdefault(name, [0, 0, 0, 0])
            for k, n in enumerate(other_counts):
                c[k] += n
        for rec in other.records:
            if not rec.passed or rec.skipped:
                if index is not None:
                    rec.graph_index = index
                self.records.append(rec)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed and not r.skipped]

    @property
    def ok(self) -> bool:
        return not any(c[1] for c in self.counts.values())

    def failed(self, check: str) -> int:
        return self.counts.get(check, [0, 0, 0, 0])[1]

    def passed(self, check: str) -> int:
        return self.counts.get(check, [0, 0, 0, 0])[0]

    def substantive(self, check: str) -> int:
        """Passes where the check's premise held."""
        c = self.counts.get(check, [0, 0, 0, 0])
        return c[0] - c[3]

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "vertices": self.vertices,
            "edges": self.edges,
            "lattice_elements": self.lattice_elements,
            "counts": {
                k: {"pass": v[0], "fail": v[1], "skip": v[2], "vacuous": v[3]} for k, v in sorted(self.counts.items())
            },
            "ensemble": self.ensemble,
            "records": [asdict(r) for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        rows = [f"{'check':<24} {'status':<6} {'pass':>8} {'fail':>6} {'skip':>6} {'vacuous':>8}"]
        for name in CHECK_ORDER:
            if name not in self.counts:
                continue
            p, f, s, v = self.counts[name]
            status = "FAIL" if f else ("SKIP" if s and not p else "PASS")
            rows.append(f"{name:<24} {status:<6} {p:>8} {f:>6} {s:>6} {v:>8}")
        rows.append(f"graphs={self.graphs} lattice_elements={self.lattice_elements}")
        return "\n".join(rows) + "\n"


# -- checks ----------------------------------------------------------------

PerpOracle = Callable[..., VertexSet]


@dataclass
class Context:
    graph: Graph
    lattice: IdealLattice
    oracle_sets: list[frozenset]
    perp_oracle: PerpOracle
    condition_L: bool
    _perps: dict = field(default_factory=dict)

    def perp(self, h: VertexSet) -> SatHerSet:
        try:
            return self._perps[h.mask]
        except KeyError:
            p = self._perps[h.mask] = perp(self.graph, h)
            return p


def _check_lattice(ctx):
    ours = {s.mask for s in ctx.lattice}
    theirs = {ctx.graph.mask_of(s) for s in ctx.oracle_sets}
    if ours == theirs:
        return True, f"{len(ours)} sets"
    g = ctx.graph
    extra = [format_set(g.members_of(m)) for m in sorted(ours - theirs)]
    missing = [format_set(g.members_of(m)) for m in sorted(theirs - ours)]
    return False, f"extra {extra}, missing {missing}"


def _check_condition_L(ctx):
    oracle = oracle_condition_L(ctx.graph)
    return ctx.condition_L == oracle, f"fast={ctx.condition_L} oracle={oracle}"


def _check_perp_oracle(ctx, h):
    ours = ctx.perp(h)
    theirs = ctx.perp_oracle(ctx.graph, h, ctx.oracle_sets)
    return ours == theirs, f"perp={ours} oracle={theirs}"


def _check_perp_sat_her(ctx, h):
    p = ctx.perp(h)
    ok = oracle_is_hereditary(ctx.graph, p.members) and oracle_is_saturated(ctx.graph, p.members)
    return ok, f"perp={p}"


def _check_triple_perp(ctx, h):
    p1 = ctx.perp(h)
    p3 = ctx.perp(ctx.perp(p1))
    return p1 == p3, f"perp={p1} perp^3={p3}"


def _check_perp_perp_formula(ctx, h):
    g = ctx.graph
    formula = perp_perp(g, h)
    twice = ctx.perp(ctx.perp(h))
    return formula == twice, f"formula={formula} perp(perp)={twice}"


def _check_regular_iff_fixed(ctx, h):
    g = ctx.graph
    reg = is_regular(g, h)
    fixed = ctx.perp(ctx.perp(h)) == h
    return reg == fixed, f"is_regular={reg} fixed_by_perp_perp={fixed}"


def _check_regular_quotient_L(ctx, h):
    if not ctx.condition_L or not is_regular(ctx.graph, h):
        return True, VACUOUS
    q = quotient_graph(ctx.graph, h)
    ok = has_condition_L(q)
    return ok, "quotient satisfies (L)" if ok else "quotient fails (L)"


GRAPH_CHECKS = {
    "lattice-oracle": _check_lattice,
    "condition-L-oracle": _check_condition_L,
}
SET_CHECKS = {
    "perp-oracle": _check_perp_oracle,
    "perp-sat-her": _check_perp_sat_her,
    "triple-perp": _check_triple_perp,
    "perp-perp-formula": _check_perp_perp_formula,
    "regular-iff-fixed": _check_regular_iff_fixed,
    "regular-quotient-L": _check_regular_quotient_L,
}
CHECK_ORDER = list(GRAPH_CHECKS) + list(SET_CHECKS)


def _witness(g, subject):
    return {"graph": serialize_graph(g, "structured"), "set": subject}


def _run(name, fn, ctx, h=None):
    subject = list(h.members) if h is not None else None
    try:
        passed, detail = fn(ctx) if h is None else fn(ctx, h)
    except CapacityError as exc:
        return CheckRecord(name, True, skipped=True, subject=subject, detail=str(exc))
    except GraphIdealsError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    rec = CheckRecord(name, passed, subject=subject, detail=detail, vacuous=detail is VACUOUS)
    if not passed:
        rec.witness = _witness(ctx.graph, subject)
    return rec


def _context(g, limits, perp_oracle):
    return Context(
        graph=g,
        lattice=enumerate_sat_her(g, limits),
        oracle_sets=[frozenset(s.members) for s in oracle_enumerate_sat_her(g, limits.oracle_max_vertices)],
        perp_oracle=perp_oracle,
        condition_L=has_condition_L(g),
    )


def verify_graph(
    g: Graph,
    limits: LatticeLimits = LatticeLimits(),
    perp_oracle: PerpOracle = oracle_perp,
    keep_passing: bool = True,
) -> VerificationReport:
    """Run every check on ``g`` and each of its saturated hereditary sets.

    Per set H: perp against the brute-force oracle, perp(H) saturated and
    hereditary, perp applied three times equals perp, the closed formula for
    perp_perp against perp twice, regularity as a fixed point, and, when
    ``g`` satisfies Condition (L) and H is regular, Condition (L) for the
    quotient.  Per graph: the lattice and Condition (L) against oracles.
    """
    report = VerificationReport(vertices=len(g.vertices), edges=len(g.edges), graphs=1)
    try:
        ctx = _context(g, limits, perp_oracle)
    except CapacityError as exc:
        for name in CHECK_ORDER:
            report.add(CheckRecord(name, True, skipped=True, detail=str(exc)), keep_passing)
        return report
    report.lattice_elements = len(ctx.lattice)
    for name, fn in GRAPH_CHECKS.items():
        report.add(_run(name, fn, ctx), keep_passing)
    for h in ctx.lattice:
        for name, fn in SET_CHECKS.items():
            report.add(_run(name, fn, ctx, h), keep_passing)
    return report


def verify_many(graphs: Iterable[tuple[int, Graph]], limits: LatticeLimits = LatticeLimits(),
                perp_oracle: PerpOracle = oracle_perp) -> VerificationReport:
    total = VerificationReport()
    for i, g in graphs:
        total.merge(verify_graph(g, limits, perp_oracle, keep_passing=False), index=i)
    return total


def verify_ensemble(cfg: EnsembleConfig = EnsembleConfig(), limits: LatticeLimits = LatticeLimits(),
                    perp_oracle: PerpOracle = oracle_perp) -> VerificationReport:
    report = verify_many(ensemble(cfg), limits, perp_oracle)
    report.ensemble = asdict(cfg)
    return report


def rerun_check(record: CheckRecord, limits: LatticeLimits = LatticeLimits(),
                perp_oracle: PerpOracle = oracle_perp) -> CheckRecord:
    """Re-run one recorded check from its witness alone."""
    if record.witness is None:
        raise ValueError("record carries no witness")
    g = parse_graph(record.witness["graph"], "structured")
    ctx = _context(g, limits, perp_oracle)
    subject = record.witness["set"]
    if subject is None:
        return _run(record.check, GRAPH_CHECKS[record.check], ctx)
    return _run(record.check, SET_CHECKS[record.check], ctx, SatHerSet.exact(g, subject))


# -- searches ----------------------------------------------------------------


def find_L_preservation_counterexample(g: Graph, limits: LatticeLimits = LatticeLimits()):
    """A non-regular H whose quotient has an entryless cycle, with that cycle.

    Shows that regularity cannot be dropped from the preservation theorem.
    ``g`` must satisfy Condition (L).  Returns ``None`` if every quotient by a
    non-regular set keeps Condition (L).
    """
    if not has_condition_L(g):
        raise ValueError("graph does not satisfy Condition (L)")
    lattice = enumerate_sat_her(g, limits)
    for entry in lattice.entries:
        if entry.regular:
            continue
        cycle = find_entryless_cycle(quotient_graph(g, entry.set))
        if cycle is not None:
            return entry.set, cycle
    return None


def find_converse_witness(g: Graph, limits: LatticeLimits = LatticeLimits()) -> Optional[SatHerSet]:
    """A non-regular H whose quotient still satisfies Condition (L), if any."""
    for entry in enumerate_sat_her(g, limits).entries:
        if not entry.regular and has_condition_L(quotient_graph(g, entry.set)):
            return entry.set
    return None

