import pytest

from helpers import random_codes
from vsgraph.corpus import figure_eight, hopf, planar_theta, trefoil, unknot
from vsgraph.gauss import empty_code
from vsgraph.graph import complete_graph
from vsgraph.group import (BudgetExceeded, abelianization_rank, brute_hom_count, cyclic_group,
                           group_by_name, hom_count, symmetric_group, wirtinger)

S3, Z3 = symmetric_group(3), cyclic_group(3)


def test_known_hom_counts():
    assert hom_count(wirtinger(trefoil()), S3) == 12
    assert hom_count(wirtinger(unknot()), S3) == 6
    assert hom_count(wirtinger(figure_eight()), S3) == 6
    assert hom_count(wirtinger(trefoil()), Z3) == 3
    # Z x Z: commuting pairs
    assert hom_count(wirtinger(hopf()), S3) == 18
    assert hom_count(wirtinger(hopf()), Z3) == 9


def test_hom_count_matches_brute_force():
    for code in random_codes(60, 41, max_crossings=3):
        p = wirtinger(code)
        if len(p.generators) > 6:
            continue
        assert hom_count(p, S3) == brute_hom_count(p, S3)
        assert hom_count(p, Z3) == brute_hom_count(p, Z3)


def test_abelianization_rank():
    assert abelianization_rank(wirtinger(planar_theta())) == 2
    assert abelianization_rank(wirtinger(empty_code(complete_graph(4)))) == 3
    assert abelianization_rank(wirtinger(trefoil())) == 1
    assert abelianization_rank(wirtinger(hopf())) == 2


def test_presentation_shape():
    p = wirtinger(trefoil())
    assert len(p.generators) == 3 and len(p.relators) == 3
    assert str(p).startswith("< x1, x2, x3 |")


def test_group_names():
    assert len(group_by_name("Z/3")) == 3
    assert len(group_by_name("s3")) == 6
    with pytest.raises(ValueError):
        group_by_name("Q8")


def test_budget():
    with pytest.raises(BudgetExceeded):
        hom_count(wirtinger(trefoil()), S3, budget=3)
