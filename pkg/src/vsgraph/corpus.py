"""Standard diagrams and random code generators."""
from __future__ import annotations

import random

from .gauss import GaussCode, Passage, check
from .graph import AbstractGraph, complete_graph, loop_graph, theta_graph, TAIL, HEAD
from .planar import PlanarDiagram, draw, extract_gauss


def knot_code(tokens, edge="a", vertex="v"):
    """Knot code from tokens like ``"O1+ U2- ..."``."""
    return _code_from_tokens(loop_graph(edge, vertex), {edge: tokens})


def _code_from_tokens(graph, seqs):
    passages = {}
    signs = {}
    for eid, text in seqs.items():
        seq = []
        for tok in text.split():
            seq.append(Passage(int(tok[1:-1]), tok[0] == "O"))
            signs[int(tok[1:-1])] = 1 if tok[-1] == "+" else -1
        passages[eid] = seq
    return check(GaussCode(graph, passages, signs))


def unknot():
    return knot_code("")


def kinked_unknot(sign=1):
    return knot_code(f"O1{'+' if sign > 0 else '-'} U1{'+' if sign > 0 else '-'}")


def trefoil():
    return knot_code("O1+ U2+ O3+ U1+ O2+ U3+")


def figure_eight():
    return knot_code("O1+ U2- O3- U1+ O4+ U3- O2- U4+")


def non_realizable_knot():
    return knot_code("O1+ O2+ O3+ U1+ U2+ U3+")


def hopf():
    g = AbstractGraph.build(["P", "Q"], [("p", "P", "P"), ("q", "Q", "Q")])
    return _code_from_tokens(g, {"p": "O1+ U2+", "q": "U1+ O2+"})


def virtual_hopf():
    g = AbstractGraph.build(["P", "Q"], [("p", "P", "P"), ("q", "Q", "Q")])
    return _code_from_tokens(g, {"p": "O1+", "q": "U1+"})


def planar_theta():
    return GaussCode(theta_graph(), {}, {})


def two_triangles():
    return AbstractGraph.build(
        ["p1", "p2", "p3", "q1", "q2", "q3"],
        [("a1", "p1", "p2"), ("a2", "p2", "p3"), ("a3", "p3", "p1"),
         ("b1", "q1", "q2"), ("b2", "q2", "q3"), ("b3", "q3", "q1")])


def planar_triangles():
    return GaussCode(two_triangles(), {}, {})


def hopf_triangles():
    """Two triangles forming a Hopf link (linking number 1)."""
    return _code_from_tokens(two_triangles(), {"a1": "O1+", "a2": "U2+", "b1": "U1+", "b2": "O2+"})


def handcuff_graph():
    return AbstractGraph.build(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("c", "u", "v")])


def handcuff_virtual():
    """Handcuff diagram whose two loops meet in one classical crossing (lk 1/2)."""
    return _code_from_tokens(handcuff_graph(), {"a": "O1+", "b": "U1+"})


def handcuff_plain():
    return GaussCode(handcuff_graph(), {}, {})


# -- random codes -----------------------------------------------------------------

def random_code(graph: AbstractGraph, crossings: int, rng: random.Random) -> GaussCode:
    """Uniformly placed passages; the result is valid but usually not classical."""
    seqs = {e: [] for e in graph.edge_ids}
    ids = list(graph.edge_ids)
    for c in range(1, crossings + 1):
        for over in (True, False):
            e = rng.choice(ids)
            seqs[e].insert(rng.randint(0, len(seqs[e])), Passage(c, over))
    return GaussCode(graph, seqs, {c: rng.choice((1, -1)) for c in range(1, crossings + 1)})


def random_rotations(graph: AbstractGraph, rng: random.Random) -> AbstractGraph:
    return graph.with_rotations({v: tuple(rng.sample(graph.ends_at(v), graph.degree(v)))
                                 for v in graph.vertices})


def random_classical_code(graph: AbstractGraph, rng: random.Random, max_tries=50) -> GaussCode:
    """A classical diagram of ``graph``: vertices on a line, edges as semicircles.

    Each edge goes above or below the line at random, port orders are random
    and every intersection becomes a classical crossing with a random over
    strand.  Such a drawing is planar once crossings are nodes, so the code
    is realizable by construction.
    """
    side = {e.id: rng.choice((1, -1)) for e in graph.edges}
    order = list(graph.vertices)
    rng.shuffle(order)
    ports = {}
    ends_by_slot = {}
    for v in order:
        ends = graph.ends_at(v)
        upper = [x for x in ends if side[x[0]] > 0]
        lower = [x for x in ends if side[x[0]] < 0]
        rng.shuffle(upper)
        rng.shuffle(lower)
        seq = upper + lower
        ports[("v", v)] = [(i, side[x[0]]) for i, x in enumerate(seq)]
        ends_by_slot[("v", v)] = tuple(seq)
    slot_of = {end: (node, i) for node, ends in ends_by_slot.items() for i, end in enumerate(ends)}
    arcs = [(slot_of[(e.id, TAIL)], slot_of[(e.id, HEAD)], e.id) for e in graph.edges]
    counter = [0]

    def classify(p, q):
        counter[0] += 1
        return counter[0], (p if rng.random() < 0.5 else q)

    degree, mate, kinds, crossings = draw(ports, arcs, classify, rng, max_tries)
    for node in ports:
        kinds[node] = "vertex"
    g = graph.with_rotations({n[1]: ends for n, ends in ends_by_slot.items()})
    d = PlanarDiagram(g, kinds, degree, mate, dict(ends_by_slot), crossings)
    return extract_gauss(d)


def random_k6_code(rng: random.Random) -> GaussCode:
    return random_classical_code(complete_graph(6), rng)


def book_k6():
    """K6 drawn with vertices on a line and edges split over two sides."""
    rng = random.Random(6)
    return random_k6_code(rng)


CORPUS = {
    "unknot": unknot,
    "kinked_unknot": kinked_unknot,
    "trefoil": trefoil,
    "figure_eight": figure_eight,
    "non_realizable": non_realizable_knot,
    "hopf": hopf,
    "virtual_hopf": virtual_hopf,
    "planar_theta": planar_theta,
    "planar_triangles": planar_triangles,
    "hopf_triangles": hopf_triangles,
    "handcuff_virtual": handcuff_virtual,
    "handcuff_plain": handcuff_plain,
    "k6": book_k6,
}
