"""Tabulate the truncated binary-tree example and the two small witnesses around regularity.

For each depth d the tree graph has 2^(d+1)-1 vertices.  The set H_d of
strings containing a 0 is regular, and its quotient is the chain of loops
along the all-ones branch, which has an entryless loop at its far end.
"""

import argparse

from graphideals.generators import gen_chain_loops, gen_figure1
from graphideals.graph import Graph, Edge, forward_closure, has_condition_L
from graphideals.ideals import SatHerSet, enumerate_sat_her, is_regular, quotient_graph, regular_ideals
from graphideals.verification import find_converse_witness, find_L_preservation_counterexample


def depth_table(max_depth):
    print("depth\tvertices\tedges\t|H|\tmissed_by_closure\tregular\tquotient_is_chain\tgraph_L")
    for d in range(1, max_depth + 1):
        g, h = gen_figure1(d)
        missed = sorted(set(g.vertices) - set(forward_closure(g, h)))
        q = quotient_graph(g, h)
        print(f"{d}\t{len(g.vertices)}\t{len(g.edges)}\t{len(h)}\t{','.join(missed)}\t"
              f"{is_regular(g, h)}\t{q == gen_chain_loops(d + 1)}\t{has_condition_L(g)}")


def witnesses():
    vloop = Graph(("v", "w"), (Edge("e", "v", "w"), Edge("f", "w", "w")))
    h, cycle = find_L_preservation_counterexample(vloop)
    print(f"\nv->w, loop f at w: lattice {[str(s) for s in enumerate_sat_her(vloop)]}, "
          f"regular {[str(s) for s in regular_ideals(vloop)]}")
    print(f"  H={h} is not regular; quotient has the entryless cycle {cycle.edges}")

    two_loops = Graph(("u0", "u1"), (Edge("a0", "u1", "u1"), Edge("a1", "u0", "u1"), Edge("a2", "u1", "u1")))
    k = find_converse_witness(two_loops)
    print(f"u0->u1, two loops at u1: H={k} regular={is_regular(two_loops, k)}, "
          f"quotient has (L): {has_condition_L(quotient_graph(two_loops, k))}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-depth", type=int, default=8)
    depth_table(ap.parse_args().max_depth)
    witnesses()
