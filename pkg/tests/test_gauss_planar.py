import random

import pytest

from helpers import random_codes
from vsgraph.corpus import figure_eight, hopf, random_classical_code, trefoil
from vsgraph.gauss import (GaussCode, InvalidCode, O, U, check, compact, relabel,
                           reverse_edge, shadow, validate)
from vsgraph.graph import complete_graph, loop_graph, theta_graph
from vsgraph.invariants import linking_number
from vsgraph.planar import extract_gauss, realize_virtual
from vsgraph.realizability import realizable


def test_validate_reports_each_problem():
    g = loop_graph()
    assert "role imbalance at 1" in validate(GaussCode(g, {"a": (O(1), O(1))}, {1: 1}))
    assert "missing sign 1" in validate(GaussCode(g, {"a": (O(1), U(1))}, {}))
    assert "crossing 1 occurs 1 times" in validate(GaussCode(g, {"a": (O(1),)}, {1: 1}))
    assert "sign for absent crossing 2" in validate(GaussCode(g, {}, {2: 1}))
    with pytest.raises(InvalidCode):
        check(GaussCode(g, {"a": (O(1), O(1))}, {1: 1}))


def test_shadow_forgets_roles_and_signs():
    s = shadow(trefoil())
    assert s.seq("a") == (1, 2, 3, 1, 2, 3)


def test_relabel_and_compact():
    t = trefoil()
    r = relabel(t, {1: 7, 2: 5, 3: 9})
    assert r != t
    assert compact(r) == t


def test_reverse_edge_twice_is_identity():
    for code in random_codes(50, 8):
        eid = code.graph.edge_ids[0]
        assert reverse_edge(reverse_edge(code, eid), eid) == code


def test_reversing_one_component_negates_lk():
    h = hopf()
    assert linking_number(reverse_edge(h, "p"), "P", "Q") == -linking_number(h, "P", "Q")


@pytest.mark.parametrize("make", [trefoil, figure_eight, hopf])
def test_realize_virtual_round_trip_on_knots(make):
    code = make()
    d = realize_virtual(code)
    assert not d.problems()
    assert d.euler_genus() == 0
    assert extract_gauss(d) == code


def test_realize_virtual_round_trip_random():
    for code in random_codes(200, 12, max_crossings=5):
        d = realize_virtual(code)
        assert d.euler_genus() == 0
        assert extract_gauss(d) == code


def test_certificate_diagram_has_no_virtual_crossings():
    rng = random.Random(4)
    for g in (theta_graph(), complete_graph(4), loop_graph()):
        code = random_classical_code(g, rng)
        v = realizable(code)
        assert v and v.sign_coherent
        assert v.diagram.virtual_count == 0
        assert extract_gauss(v.diagram) == code


def test_face_report_lists_every_face():
    d = realize_virtual(trefoil())
    lines = d.face_report().splitlines()
    assert sum(1 for line in lines if line.startswith("face ")) == len(d.faces())
