import itertools

import pytest

from helpers import DIGON4, HANDCUFF
from vsgraph.graph import (AbstractGraph, GraphError, betti, bouquet, complete_graph,
                           contract_edge, delete_edge, disjoint_cycle_pairs, simple_cycles,
                           theta_graph)


def brute_cycle_edge_sets(g):
    """Edge sets of connected 2-regular subgraphs (loops count as degree 2)."""
    out = set()
    for r in range(1, len(g.edges) + 1):
        for sub in itertools.combinations(g.edges, r):
            deg = {}
            for e in sub:
                deg[e.tail] = deg.get(e.tail, 0) + 1
                deg[e.head] = deg.get(e.head, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            h = AbstractGraph(tuple(deg), sub)
            if len(h.components()) == 1:
                out.add(frozenset(e.id for e in sub))
    return out


@pytest.mark.parametrize("g", [theta_graph(), complete_graph(4), complete_graph(5), DIGON4,
                               HANDCUFF, bouquet(3)])
def test_simple_cycles_match_brute_force(g):
    found = [c.edge_ids for c in simple_cycles(g)]
    assert len(found) == len(set(found))
    assert set(found) == brute_cycle_edge_sets(g)


def test_cycles_are_closed_walks():
    g = complete_graph(5)
    for c in simple_cycles(g):
        vs = c.vertices(g)
        for (eid, d), nxt in zip(c.steps, vs[1:] + vs[:1]):
            e = g.edge(eid)
            assert (e.head if d > 0 else e.tail) == nxt


def test_k6_has_ten_disjoint_triangle_pairs():
    pairs = disjoint_cycle_pairs(complete_graph(6))
    assert len(pairs) == 10
    assert all(len(p.first.steps) == len(p.second.steps) == 3 for p in pairs)


def test_betti_numbers():
    assert betti(theta_graph()) == 2
    assert betti(complete_graph(4)) == 3
    assert betti(complete_graph(6)) == 10
    assert betti(bouquet(4)) == 4


def test_contract_keeps_betti_and_makes_loops():
    g = theta_graph()
    h = contract_edge(g, "a")
    assert betti(h) == betti(g)
    assert all(e.is_loop for e in h.edges)
    with pytest.raises(GraphError):
        contract_edge(h, "b")


def test_contract_splices_rotations():
    g = theta_graph().with_rotations({"u": (("a", "t"), ("b", "t"), ("c", "t")),
                                      "v": (("a", "h"), ("c", "h"), ("b", "h"))})
    h = contract_edge(g, "a")
    assert h.rotation("u") == (("c", "h"), ("b", "h"), ("b", "t"), ("c", "t"))


def test_delete_edge():
    g = delete_edge(complete_graph(4), "e12")
    assert len(g.edges) == 5 and betti(g) == 2


def test_bad_graphs_rejected():
    with pytest.raises(GraphError):
        AbstractGraph.build(["u"], [("a", "u", "w")])
    with pytest.raises(GraphError):
        AbstractGraph.build(["u"], [("a", "u", "u")], {"u": (("a", "t"),)})
