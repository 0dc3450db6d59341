"""Shared generators for the test suite."""
import random

from vsgraph.gauss import GaussCode, Passage
from vsgraph.graph import AbstractGraph, bouquet, complete_graph, link_graph, loop_graph, theta_graph

HANDCUFF = AbstractGraph.build(["u", "v"], [("a", "u", "u"), ("b", "v", "v"), ("c", "u", "v")])
DIGON4 = AbstractGraph.build(["u", "v"], [("a", "u", "v"), ("b", "v", "u"), ("c", "u", "v"),
                                          ("d", "v", "u")])
BASE_GRAPHS = [loop_graph(), theta_graph(), complete_graph(4), link_graph(2), bouquet(2),
               HANDCUFF, DIGON4]


def rotated(g, rng):
    return g.with_rotations({v: tuple(rng.sample(g.ends_at(v), g.degree(v))) for v in g.vertices})


def rand_code(g, n, rng):
    """Random valid code: each crossing's two passages land anywhere."""
    seqs = {e: [] for e in g.edge_ids}
    es = list(g.edge_ids)
    for c in range(1, n + 1):
        for over in (True, False):
            e = rng.choice(es)
            seqs[e].insert(rng.randint(0, len(seqs[e])), Passage(c, over))
    return GaussCode(g, seqs, {c: rng.choice((1, -1)) for c in range(1, n + 1)})


def random_codes(count, seed, max_crossings=3, graphs=BASE_GRAPHS):
    rng = random.Random(seed)
    for _ in range(count):
        g = rotated(rng.choice(graphs), rng)
        yield rand_code(g, rng.randint(0, max_crossings), rng)


def double_occurrence_words(n):
    """All words in which 1..n each occur twice, first occurrences increasing."""
    def rec(word, counts, nxt):
        if len(word) == 2 * n:
            yield tuple(word)
            return
        for c in range(1, nxt):
            if counts[c] == 1:
                counts[c] = 2
                yield from rec(word + [c], counts, nxt)
                counts[c] = 1
        if nxt <= n:
            counts[nxt] = 1
            yield from rec(word + [nxt], counts, nxt + 1)
            del counts[nxt]
    yield from rec([], {}, 1)
