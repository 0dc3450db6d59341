import random
from collections import defaultdict

from hypothesis import given, settings, strategies as st

from helpers import BASE_GRAPHS, rand_code, random_codes, rotated
from vsgraph.corpus import kinked_unknot, trefoil, unknot
from vsgraph.gauss import GaussCode, Passage, relabel, validate
from vsgraph.graph import loop_graph
from vsgraph.group import hom_count, symmetric_group, wirtinger
from vsgraph.invariants import t_link_profile, writhe, yamada, yamada_class
from vsgraph.moves import (ALL_MOVES, CLASSICAL_MOVES, FORBIDDEN_MOVES, R3_PATTERNS, MoveKind,
                           canonical_key, moves, neighbors, removal_moves)

S3 = symmetric_group(3)


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _meet(p, d, q, e):
    den = _cross(d, e)
    w = (q[0] - p[0], q[1] - p[1])
    return _cross(w, e) / den, _cross(w, d) / den


def test_r3_patterns_match_line_arrangements():
    # top line T over middle M over bottom B; x = T.M, y = T.B, z = M.B
    rng = random.Random(0)
    found = set()
    for _ in range(5000):
        t, m, b = [((rng.uniform(-1, 1), rng.uniform(-1, 1)), (rng.gauss(0, 1), rng.gauss(0, 1)))
                   for _ in range(3)]
        xt, xm = _meet(*t, *m)
        yt, yb = _meet(*t, *b)
        zm, zb = _meet(*m, *b)

        def sign(over, under):
            return 1 if _cross(over[1], under[1]) > 0 else -1
        found.add((xt < yt, xm < zm, yb < zb, sign(t, m), sign(t, b), sign(m, b)))
    assert found == set(R3_PATTERNS)


def test_first_moves_on_the_unknot():
    kinds = {m.kind for m in moves(unknot(), ALL_MOVES)}
    assert kinds == {MoveKind.R1, MoveKind.R2}
    # one gap, two role orders, two signs
    assert len(moves(unknot(), {MoveKind.R1})) == 4
    assert [m.site for m in removal_moves(kinked_unknot())] == ["remove 1 on a"]


def test_moves_produce_valid_codes():
    for code in random_codes(150, 51):
        for m in moves(code, ALL_MOVES):
            assert validate(m.code) == []
            assert m.code.graph.edges == code.graph.edges


def _random_move(code, kind, rng):
    options = [m for m in moves(code, {kind}) if len(m.code.signs) <= 6]
    return rng.choice(options) if options else None


def test_every_kind_is_reversible():
    rng = random.Random(52)
    tried = defaultdict(int)
    for code in random_codes(250, 52):
        k0 = canonical_key(code)
        for kind in ALL_MOVES:
            m = _random_move(code, kind, rng)
            if m is None:
                continue
            tried[kind] += 1
            assert k0 in {canonical_key(x.code) for x in moves(m.code, {kind})}, (kind, code, m.site)
    assert set(tried) == set(ALL_MOVES)


def _classical(code):
    return t_link_profile(code), hom_count(wirtinger(code), S3)


def test_classical_moves_keep_invariants():
    rng = random.Random(53)
    seen = set()
    for code in random_codes(250, 53):
        before = _classical(code), yamada(code)
        for kind in CLASSICAL_MOVES:
            m = _random_move(code, kind, rng)
            if m is None:
                continue
            seen.add(kind)
            assert _classical(m.code) == before[0], (kind, code, m.site)
            shift = 2 * (writhe(m.code) - writhe(code)) if kind == MoveKind.R1 else 0
            assert yamada(m.code) == before[1].shift(shift), (kind, code, m.site)
    assert seen == set(CLASSICAL_MOVES)


def test_forbidden_moves_keep_t_profile_only():
    rng = random.Random(54)
    changed_yamada = False
    for code in random_codes(200, 54):
        for kind in FORBIDDEN_MOVES:
            m = _random_move(code, kind, rng)
            if m is None:
                continue
            assert t_link_profile(m.code) == t_link_profile(code)
            changed_yamada |= yamada_class(yamada(m.code)) != yamada_class(yamada(code))
    assert changed_yamada


def test_forbidden_move_unknots_the_trefoil():
    from vsgraph.search import equivalent_bounded
    assert equivalent_bounded(trefoil(), unknot()).status == "no"
    assert equivalent_bounded(trefoil(), unknot(), forbidden=True).status == "yes"


def test_neighbors_matches_moves():
    code = trefoil()
    assert neighbors(code) == [(m.kind, m.code) for m in moves(code)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.permutations(range(1, 5)))
def test_key_ignores_crossing_labels(seed, perm):
    rng = random.Random(seed)
    code = rand_code(rotated(rng.choice(BASE_GRAPHS), rng), rng.randint(0, 4), rng)
    mapping = {c: perm[i] + 10 for i, c in enumerate(sorted(code.signs))}
    assert canonical_key(relabel(code, mapping)) == canonical_key(code)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(0, 9))
def test_key_ignores_basepoint_of_a_knot(seed, shift):
    rng = random.Random(seed)
    code = rand_code(loop_graph(), rng.randint(1, 4), rng)
    seq = code.seq("a")
    k = shift % len(seq)
    moved = GaussCode(code.graph, {"a": seq[k:] + seq[:k]}, code.signs)
    assert canonical_key(moved) == canonical_key(code)


def test_key_separates_signs_and_roles():
    a = GaussCode(loop_graph(), {"a": (Passage(1, True), Passage(1, False))}, {1: 1})
    b = GaussCode(loop_graph(), {"a": (Passage(1, True), Passage(1, False))}, {1: -1})
    assert canonical_key(a) != canonical_key(b)


def test_key_with_unordered_components():
    from vsgraph.corpus import virtual_hopf
    from vsgraph.graph import AbstractGraph
    h = virtual_hopf()
    g = AbstractGraph.build(["Q", "P"], [("q", "Q", "Q"), ("p", "P", "P")])
    swapped = GaussCode(g, {"p": h.seq("q"), "q": h.seq("p")}, h.signs)
    assert canonical_key(swapped) != canonical_key(h)
    assert canonical_key(swapped, True) == canonical_key(h, True)
