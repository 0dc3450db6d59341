import random

import pytest

from vsgraph.corpus import (book_k6, figure_eight, handcuff_plain, handcuff_virtual, hopf,
                            hopf_triangles, non_realizable_knot, planar_triangles, random_code,
                            trefoil)
from vsgraph.experiments import (CERTIFIED, PreconditionError, conway_gordon_parity,
                                 detect_links, forbidden_separation_demo, ivl1_witness,
                                 nontriviality_certificate, virtualize, vu_lower_singletons,
                                 vu_upper)
from vsgraph.graph import complete_graph
from vsgraph.invariants import t_link_profile
from vsgraph.polynomial import HalfInteger
from vsgraph.realizability import realizable


def test_detect_links():
    r = detect_links(hopf_triangles())
    assert [e.verdict for e in r.entries] == [CERTIFIED]
    assert r.entries[0].lk == HalfInteger(2)
    assert detect_links(planar_triangles()).certified == []


def test_virtualize():
    v = virtualize(trefoil(), {2})
    assert v.crossings == [1, 3]
    with pytest.raises(KeyError):
        virtualize(trefoil(), {9})


def test_conway_gordon_on_book_k6():
    assert conway_gordon_parity(book_k6()) == 1


def test_conway_gordon_preconditions():
    with pytest.raises(PreconditionError):
        conway_gordon_parity(hopf_triangles())
    rng = random.Random(61)
    while True:
        code = random_code(complete_graph(6), 3, rng)
        if not realizable(code):
            break
    with pytest.raises(PreconditionError):
        conway_gordon_parity(code)


def test_ivl_on_k6_and_on_a_planar_graph():
    r = ivl1_witness(book_k6())
    assert r.applicable and r.holds
    assert len(r.per_crossing) == len(book_k6().signs)
    flat = ivl1_witness(planar_triangles())
    assert not flat.applicable and not flat.holds
    with pytest.raises(PreconditionError):
        ivl1_witness(non_realizable_knot())


@pytest.mark.parametrize("knot", [trefoil, figure_eight])
def test_twist_knots_have_vu_two(knot):
    up = vu_upper(knot())
    assert up.size == 2
    assert all(cert for _, cert in vu_lower_singletons(knot()))
    assert nontriviality_certificate(knot()) is not None


def test_vu_needs_a_knot():
    with pytest.raises(PreconditionError):
        vu_upper(hopf())


def test_forbidden_demo():
    d = forbidden_separation_demo(samples=10, seed=1)
    assert d.separated and d.violations == 0
    assert d.profile_first == t_link_profile(handcuff_virtual())
    assert d.profile_second == t_link_profile(handcuff_plain())
