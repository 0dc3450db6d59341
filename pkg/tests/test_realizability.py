import random

import networkx as nx
import pytest

from helpers import rand_code, random_codes, rotated
from vsgraph.corpus import CORPUS, non_realizable_knot, random_classical_code, trefoil
from vsgraph.gauss import empty_code, shadow
from vsgraph.graph import complete_graph, loop_graph, theta_graph
from vsgraph.realizability import (PLIABLE, RIGID, BudgetExceeded, brute_force_realizable,
                                   build_shadow_graph, check_certificate,
                                   planarity_with_embedding, realizable, rotation_genus)


def test_shadow_graph_sizes():
    sg = build_shadow_graph(shadow(trefoil()))
    assert len(sg.nodes) == 4
    # six arcs between consecutive passages plus the arc through the basepoint vertex
    assert len(sg.arcs) == 7
    k5 = build_shadow_graph(empty_code(complete_graph(5)))
    assert nx.is_isomorphic(nx.Graph(k5.to_networkx()), nx.complete_graph(5))


def test_spec_examples():
    assert realizable(trefoil())
    assert not realizable(non_realizable_knot())
    assert realizable(shadow(non_realizable_knot()))     # the trefoil shadow
    assert not realizable(empty_code(complete_graph(5)))
    assert realizable(empty_code(theta_graph()))


def test_corpus_verdicts():
    expected_no = {"non_realizable", "virtual_hopf", "handcuff_virtual"}
    for name, make in CORPUS.items():
        assert bool(realizable(make())) == (name not in expected_no), name


def test_oracle_agreement_pliable():
    for code in random_codes(300, 21, max_crossings=4):
        assert bool(realizable(code)) == brute_force_realizable(code)
        s = shadow(code)
        assert bool(realizable(s)) == brute_force_realizable(s)


def test_oracle_agreement_rigid():
    for code in random_codes(200, 22, max_crossings=3):
        v = realizable(code, RIGID)
        assert bool(v) == brute_force_realizable(code, RIGID)
        if v:
            assert bool(realizable(code, PLIABLE))


def test_certificates_verify():
    for code in random_codes(200, 23, max_crossings=4):
        v = realizable(code)
        if v:
            sg = build_shadow_graph(code)
            assert check_certificate(sg, v.certificate) == []
            assert rotation_genus(v.certificate, sg.arcs) == 0
            assert v.sign_coherent


def test_classical_drawings_are_realizable():
    rng = random.Random(24)
    for _ in range(30):
        g = rng.choice([complete_graph(4), complete_graph(5), theta_graph(), loop_graph()])
        v = realizable(random_classical_code(g, rng))
        assert v and v.sign_coherent


def test_rigid_needs_rotations():
    with pytest.raises(ValueError):
        realizable(empty_code(theta_graph()), RIGID)


def test_brute_force_budget():
    rng = random.Random(25)
    code = rand_code(rotated(complete_graph(5), rng), 6, rng)
    with pytest.raises(BudgetExceeded):
        brute_force_realizable(code, budget=10)


def test_planarity_kernel():
    assert planarity_with_embedding(complete_graph(4))[0]
    assert not planarity_with_embedding(complete_graph(5))[0]
    assert not planarity_with_embedding(nx.complete_bipartite_graph(3, 3))[0]
    ok, rot = planarity_with_embedding(theta_graph())
    assert ok and sorted(rot) == ["u", "v"]
