from itertools import combinations

import pytest
from hypothesis import given, settings

from graphideals.errors import CapacityError, NotSatHerError, OwnershipError
from graphideals.graph import Graph, forward_closure
from graphideals.ideals import (
    LatticeLimits,
    SatHerSet,
    enumerate_sat_her,
    hereditary_closure,
    is_hereditary,
    is_regular,
    is_saturated,
    join,
    meet,
    perp,
    perp_perp,
    quotient_graph,
    regular_ideals,
    saturate,
)
from graphideals.verification import oracle_enumerate_sat_her, oracle_is_hereditary, oracle_is_saturated

from conftest import graph_and_subset, graphs, make_graph


def sets(family):
    return [set(s) for s in family]


def S(g, *ids):
    return SatHerSet.exact(g, ids)


# -- predicates and closures ---------------------------------------------------


def test_hereditary_examples(fork):
    assert is_hereditary(fork, fork.vertex_set(["v1"]))
    assert not is_hereditary(fork, fork.vertex_set(["w"]))
    assert is_hereditary(fork, fork.all_vertices())


def test_saturated_examples(fork):
    assert is_saturated(fork, fork.vertex_set(["v1"]))
    assert not is_saturated(fork, fork.vertex_set(["v1", "v2"]))
    assert is_saturated(fork, fork.all_vertices())


def test_sources_impose_no_saturation():
    g = make_graph(["s", "t"], [("e", "s", "t")])
    assert is_saturated(g, g.empty())
    assert oracle_is_saturated(g, [])


def test_hereditary_closure_examples(vloop, fork):
    assert set(hereditary_closure(vloop, vloop.vertex_set(["w"]))) == {"v", "w"}
    assert hereditary_closure(vloop, vloop.empty()) == vloop.empty()
    assert set(hereditary_closure(fork, fork.vertex_set(["v2"]))) == {"v2"}


def test_saturate_examples(fork, vloop):
    assert set(saturate(fork, fork.vertex_set(["v1", "v2"]))) == {"v1", "v2", "w"}
    assert saturate(fork, fork.empty()) == fork.empty()
    assert set(saturate(vloop, vloop.vertex_set(["v"]))) == {"v"}


def test_saturation_cascades():
    # a -> b -> c: saturating {a} pulls in b, then c
    g = make_graph(["a", "b", "c"], [("x", "a", "b"), ("y", "b", "c")])
    assert set(saturate(g, g.vertex_set(["a"]))) == {"a", "b", "c"}


@given(graph_and_subset())
@settings(max_examples=200)
def test_predicates_match_literal_definitions(gs):
    g, s = gs
    assert is_hereditary(g, s) == oracle_is_hereditary(g, s.members)
    assert is_saturated(g, s) == oracle_is_saturated(g, s.members)


@given(graph_and_subset(max_vertices=6))
@settings(max_examples=150)
def test_saturate_is_least_sat_her_superset(gs):
    g, s = gs
    closed = saturate(g, s)
    supersets = [c for c in oracle_enumerate_sat_her(g) if s <= c]
    assert closed in supersets
    assert all(closed <= c for c in supersets)


def test_exact_constructor_rejects(fork):
    with pytest.raises(NotSatHerError) as info:
        S(fork, "w")
    assert not info.value.hereditary
    with pytest.raises(NotSatHerError):
        S(fork, "v1", "v2")
    with pytest.raises(NotSatHerError):
        perp(fork, fork.vertex_set(["w"]))


def test_ownership(fork, vloop):
    with pytest.raises(OwnershipError):
        perp(fork, S(vloop, "v"))
    with pytest.raises(OwnershipError):
        meet(S(fork, "v1"), S(vloop, "v"))


# -- lattice -------------------------------------------------------------------


def test_lattice_examples(single_loop, fork, vloop):
    assert sets(enumerate_sat_her(single_loop)) == [set(), {"v"}]
    assert sets(enumerate_sat_her(fork)) == [set(), {"v1"}, {"v2"}, {"v1", "v2", "w"}]
    assert sets(enumerate_sat_her(vloop)) == [set(), {"v"}, {"v", "w"}]
    for g in (single_loop, fork, vloop):
        assert sets(enumerate_sat_her(g)) == sets(oracle_enumerate_sat_her(g))


def test_empty_graph():
    g = Graph(())
    lattice = enumerate_sat_her(g)
    assert sets(lattice) == [set()]
    h = lattice.sets[0]
    assert perp(g, h) == h
    assert is_regular(g, h)
    assert quotient_graph(g, h) == g


def test_edgeless_graph_lattice_is_powerset():
    g = Graph(("a", "b", "c"))
    assert len(enumerate_sat_her(g)) == 8


def test_lattice_capacity():
    g = Graph(tuple(f"x{i}" for i in range(5)))
    with pytest.raises(CapacityError):
        enumerate_sat_her(g, LatticeLimits(max_entries=10))


@given(graphs(max_vertices=6))
@settings(max_examples=150)
def test_lattice_matches_subset_filter(g):
    lattice = enumerate_sat_her(g)
    assert {s.mask for s in lattice} == {s.mask for s in oracle_enumerate_sat_her(g)}
    keys = [s.sort_key() for s in lattice]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    members = list(lattice)
    assert members[0] == g.empty() and members[-1] == g.all_vertices()
    for a, b in combinations(members, 2):
        assert meet(a, b) in lattice
        assert join(a, b) in lattice
        assert set(meet(a, b)) == set(a) & set(b)


def test_meet_join_examples(fork):
    assert set(join(S(fork, "v1"), S(fork, "v2"))) == {"v1", "v2", "w"}
    h = S(fork, "v1")
    assert meet(h, S(fork, "v1", "v2", "w")) == h
    assert meet(S(fork, "v1"), S(fork, "v2")) == fork.empty()


# -- annihilators --------------------------------------------------------------


def test_perp_examples(fork, vloop):
    assert set(perp(fork, S(fork, "v1"))) == {"v2"}
    assert perp(vloop, S(vloop, "v")) == vloop.empty()
    assert perp(fork, S(fork)) == fork.all_vertices()


def test_perp_perp_examples(fork, vloop):
    assert set(perp_perp(fork, S(fork, "v1"), verify=True)) == {"v1"}
    assert set(perp_perp(vloop, S(vloop, "v"), verify=True)) == {"v", "w"}
    assert perp_perp(fork, S(fork, "v1", "v2", "w")) == fork.all_vertices()


def test_regularity_examples(fork, vloop):
    assert is_regular(fork, S(fork, "v1"))
    assert not is_regular(vloop, S(vloop, "v"))
    assert is_regular(vloop, S(vloop))


def test_regular_ideals_examples(fork, vloop):
    assert sets(regular_ideals(vloop)) == [set(), {"v", "w"}]
    assert sets(regular_ideals(fork)) == sets(enumerate_sat_her(fork))
    lone = Graph(("v",))
    assert sets(regular_ideals(lone)) == [set(), {"v"}]


@given(graphs(max_vertices=6))
@settings(max_examples=120)
def test_annihilator_laws(g):
    lattice = enumerate_sat_her(g)
    members = list(lattice)
    perps = {h.mask: perp(g, h) for h in members}
    for h in members:
        p = perps[h.mask]
        pp = perp_perp(g, h, verify=True)
        # perp is the largest sat-her set disjoint from h
        disjoint = [k for k in members if not set(k) & set(h)]
        assert p in disjoint and all(k <= p for k in disjoint)
        assert set(p) == set(g.vertices) - set(forward_closure(g, h))
        assert perp(g, perp(g, p)) == p
        assert is_regular(g, p)
        assert h <= pp and perp_perp(g, pp) == pp
        assert is_regular(g, h) == any(h == q for q in perps.values())
        assert lattice.perp_of(h) == p
        for k in members:
            galois = h <= perps[k.mask]
            assert galois == (k <= p) == (not set(h) & set(k))
            if h <= k:
                assert pp <= perp_perp(g, k)


# -- quotients -----------------------------------------------------------------


def test_quotient_examples(vloop, fork):
    q = quotient_graph(vloop, S(vloop, "v"))
    assert q == make_graph(["w"], [("f", "w", "w")])
    assert quotient_graph(fork, S(fork)) == fork
    assert quotient_graph(fork, S(fork, "v1")) == make_graph(["v2", "w"], [("b", "v2", "w")])


def test_quotient_permissive_mode():
    g = make_graph(["a", "b"], [("x", "a", "b")])
    h = g.vertex_set(["a"])
    with pytest.raises(NotSatHerError):
        quotient_graph(g, h)
    q = quotient_graph(g, h, permissive=True)
    assert q == Graph(("b",))
    assert q.notes and "unsaturated" in q.notes[0]
    with pytest.raises(NotSatHerError):
        quotient_graph(g, g.vertex_set(["b"]), permissive=True)


@given(graphs(max_vertices=6))
@settings(max_examples=100)
def test_quotient_never_dangles(g):
    for h in enumerate_sat_her(g):
        q = quotient_graph(g, h)
        assert set(q.vertices) == set(g.vertices) - set(h)
        assert {e.id for e in q.edges} == {e.id for e in g.edges if e.source not in set(h)}
