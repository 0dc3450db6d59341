"""Invariants of virtual spatial graph codes.

Linking numbers use the Gauss formula (half the signed count of mutual
crossings), so they may be half-integers once crossings are virtualized.
The Yamada polynomial is computed as a state sum over classical crossings
followed by deletion-contraction on the resulting abstract graphs.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb, prod

from .gauss import GaussCode, check
from .graph import AbstractGraph, Cycle, Edge, TAIL, HEAD
from .planar import strand_structure
from .polynomial import HalfInteger, LaurentPolynomial

DEFAULT_YAMADA_BUDGET = 12


class BudgetExceeded(RuntimeError):
    pass


class ComponentError(ValueError):
    pass


# -- components and linking numbers ---------------------------------------------

def component(code: GaussCode, name) -> Cycle:
    """Resolve a component given as a Cycle, a loop edge id, or a vertex on a cycle."""
    if isinstance(name, Cycle):
        return name
    g = code.graph
    if g.has_edge(name):
        e = g.edge(name)
        if e.is_loop:
            return Cycle(((name, 1),))
        start = e.tail
    elif name in g.vertices:
        start = name
    else:
        raise ComponentError(f"unknown component {name}")
    comp = next(c for c in g.components() if start in c)
    if any(g.degree(v) != 2 for v in comp):
        raise ComponentError(f"component of {name} is not a closed curve")
    first = min(eid for eid, _ in g.ends_at(start))
    steps = []
    eid, d = first, 1 if g.edge(first).tail == start else -1
    while True:
        steps.append((eid, d))
        e = g.edge(eid)
        at = e.head if d > 0 else e.tail
        came = (eid, HEAD if d > 0 else TAIL)
        nxt = [end for end in g.ends_at(at) if end != came][0]
        eid, d = nxt[0], 1 if nxt[1] == TAIL else -1
        if (eid, d) == steps[0]:
            break
    return Cycle(tuple(steps))


def linking_number(code: GaussCode, c1, c2) -> HalfInteger:
    a, b = component(code, c1), component(code, c2)
    da = dict(a.steps)
    db = dict(b.steps)
    if set(da) & set(db) or set(a.vertices(code.graph)) & set(b.vertices(code.graph)):
        raise ComponentError("components overlap")
    where = {}
    for eid in list(da) + list(db):
        side = 0 if eid in da else 1
        d = da.get(eid, db.get(eid))
        for p in code.seq(eid):
            where.setdefault(p.crossing, []).append((side, d))
    total = 0
    for c, occ in where.items():
        if len(occ) == 2 and occ[0][0] != occ[1][0]:
            total += code.signs[c] * occ[0][1] * occ[1][1]
    return HalfInteger(total)


def restrict(code: GaussCode, edges) -> GaussCode:
    """Subcode on the given edges; crossings with a passage elsewhere are dropped."""
    edges = set(edges)
    g = code.graph
    keep_edges = [e for e in g.edges if e.id in edges]
    verts = [v for v in g.vertices if any(v in (e.tail, e.head) for e in keep_edges)]
    rot = None
    if g.rotations is not None:
        rot = {v: tuple(end for end in g.rotation(v) if end[0] in edges) for v in verts}
    sub = AbstractGraph(tuple(verts), tuple(keep_edges), rot)
    count = Counter(p.crossing for eid in edges for p in code.seq(eid))
    ps = {eid: tuple(p for p in code.seq(eid) if count[p.crossing] == 2) for eid in edges}
    signs = {c: s for c, s in code.signs.items() if count[c] == 2}
    return GaussCode(sub, ps, signs)


# -- T(G) ---------------------------------------------------------------------

@dataclass(frozen=True)
class LinkMember:
    """One member of T(G): the replacement choice and the resulting link code."""
    choice: tuple      # ((vertex, (end, end)), ...)
    link: GaussCode


def _trace_components(g: AbstractGraph, pairing):
    """Closed curves formed by edges joined through the chosen end pairs."""
    partner = {}
    for v, (x, y) in pairing.items():
        partner[x] = y
        partner[y] = x
    used = set()
    closed = []
    for e in sorted(g.edge_ids):
        if e in used:
            continue
        # walk forward from the tail end of e until closing up or hitting a free end
        steps = [(e, 1)]
        seen = {e}
        cur = (e, HEAD)
        ok = True
        while True:
            if cur not in partner:
                ok = False
                break
            nxt = partner[cur]
            eid, side = nxt
            if eid == e and side == TAIL:
                break
            if eid in seen:
                ok = False
                break
            seen.add(eid)
            d = 1 if side == TAIL else -1
            steps.append((eid, d))
            cur = (eid, HEAD if d > 0 else TAIL)
        if ok:
            used |= seen
            closed.append(steps)
        else:
            # the whole open strand through e is erased; mark it so it is not retried
            used |= _open_strand(e, partner)
    return closed


def _open_strand(e, partner):
    out = {e}
    for cur in ((e, HEAD), (e, TAIL)):
        while cur in partner:
            eid, side = partner[cur]
            if eid in out:
                break
            out.add(eid)
            cur = (eid, HEAD if side == TAIL else TAIL)
    return out


def _orient_min_forward(steps):
    """Rotate/reverse so the smallest edge id comes first, traversed forwards."""
    i = min(range(len(steps)), key=lambda k: steps[k][0])
    eid, d = steps[i]
    if d > 0:
        return steps[i:] + steps[:i]
    rev = [(x, -y) for x, y in reversed(steps)]
    j = next(k for k, s in enumerate(rev) if s[0] == eid)
    return rev[j:] + rev[:j]


def _link_from_components(code: GaussCode, comps):
    verts, edges, ps = [], [], {}
    occ = Counter()
    flips = Counter()
    for steps in comps:
        steps = _orient_min_forward(steps)
        name = steps[0][0]
        verts.append(f"p_{name}")
        edges.append(Edge(name, f"p_{name}", f"p_{name}"))
        seq = []
        for eid, d in steps:
            s = code.seq(eid)
            if d < 0:
                s = tuple(reversed(s))
                for p in s:
                    flips[p.crossing] += 1
            seq.extend(s)
        ps[name] = seq
        occ.update(p.crossing for p in seq)
    keep = {c for c, n in occ.items() if n == 2}
    ps = {k: tuple(p for p in v if p.crossing in keep) for k, v in ps.items()}
    signs = {c: code.signs[c] * (-1) ** flips[c] for c in keep}
    g = AbstractGraph(tuple(verts), tuple(edges))
    return GaussCode(g, ps, signs)


def t_collection(code: GaussCode):
    """All members of T(G), in a deterministic order (size = prod C(deg v, 2))."""
    check(code)
    g = code.graph
    per_vertex = [[(v, pair) for pair in itertools.combinations(g.rotation(v), 2)]
                  for v in g.vertices]
    out = []
    for choice in itertools.product(*per_vertex):
        comps = _trace_components(g, dict(choice))
        out.append(LinkMember(tuple(choice), _link_from_components(code, comps)))
    return out


def t_collection_size(g: AbstractGraph):
    return prod(comb(g.degree(v), 2) for v in g.vertices)


def pairwise_linking(link: GaussCode):
    names = [e.id for e in link.graph.edges]
    return tuple(sorted(linking_number(link, a, b) for a, b in itertools.combinations(names, 2)))


def t_link_profile(code: GaussCode) -> Counter:
    """Multiset (as a Counter) of sorted pairwise linking-number lists over T(G)."""
    return Counter(pairwise_linking(m.link) for m in t_collection(code))


def format_profile(profile: Counter):
    rows = []
    for key in sorted(profile, key=lambda k: (len(k), [x.numerator for x in k])):
        rows.append("[" + ", ".join(str(x) for x in key) + f"] x{profile[key]}")
    return rows


# -- Yamada polynomial ----------------------------------------------------------

_SIGMA = LaurentPolynomial.sigma()
_MINUS_SIGMA = -_SIGMA


def bouquet_value(n):
    """R of the bouquet of n circles."""
    return -(_MINUS_SIGMA ** n)


class _GraphR:
    """R of an abstract multigraph by deletion-contraction.

    Graphs are lists of (u, v) edge pairs plus a node set.  ``rng`` makes the
    edge choice random (used to test that the order never matters).
    """

    def __init__(self, rng=None):
        self.rng = rng
        self.memo = {}

    def __call__(self, nodes, edges):
        nodes = set(nodes)
        adj = {n: set() for n in nodes}
        for k, (u, v) in enumerate(edges):
            adj[u].add(v)
            adj[v].add(u)
        # connected components multiply
        seen = set()
        total = LaurentPolynomial(1)
        for n in sorted(nodes, key=repr):
            if n in seen:
                continue
            comp = {n}
            stack = [n]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            sub = [e for e in edges if e[0] in comp]
            total = total * self.connected(comp, sub)
            if total.is_zero():
                return total
        return total

    def _key(self, nodes, edges):
        idx = {n: i for i, n in enumerate(sorted(nodes, key=repr))}
        return (len(nodes), tuple(sorted(tuple(sorted((idx[u], idx[v]))) for u, v in edges)))

    def connected(self, nodes, edges):
        loops = sum(1 for u, v in edges if u == v)
        edges = [e for e in edges if e[0] != e[1]]
        factor = _MINUS_SIGMA ** loops
        if not edges:
            return -factor
        deg = Counter()
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(d == 1 for d in deg.values()):
            return LaurentPolynomial(0)
        key = None
        if self.rng is None:
            key = self._key(nodes, edges)
            if key in self.memo:
                return factor * self.memo[key]
        two = [n for n in sorted(deg, key=repr) if deg[n] == 2
               and sum(1 for e in edges if n in e) == 2]
        if two and self.rng is None:
            # contracting an edge at a degree-2 vertex: deleting it leaves a bridge
            n = two[0]
            k = next(i for i, e in enumerate(edges) if n in e)
            value = self._contract(nodes, edges, k)
        else:
            k = self.rng.randrange(len(edges)) if self.rng else 0
            value = self._contract(nodes, edges, k) + self(nodes, edges[:k] + edges[k + 1:])
        if key is not None:
            self.memo[key] = value
        return factor * value

    def _contract(self, nodes, edges, k):
        u, v = edges[k]
        rest = edges[:k] + edges[k + 1:]
        rest = [(u if a == v else a, u if b == v else b) for a, b in rest]
        return self(nodes - {v}, rest)


def graph_r(g: AbstractGraph, rng=None) -> LaurentPolynomial:
    """R of a crossing-free graph."""
    return _GraphR(rng)(set(g.vertices), [(e.tail, e.head) for e in g.edges])


def _smoothing_pairs(sign, mode):
    oriented = [(("o", "in"), ("u", "out")), (("u", "in"), ("o", "out"))]
    unoriented = [(("o", "in"), ("u", "in")), (("o", "out"), ("u", "out"))]
    if mode == "A":
        return oriented if sign > 0 else unoriented
    return unoriented if sign > 0 else oriented


def yamada(code: GaussCode, budget=DEFAULT_YAMADA_BUDGET, rng=None, order=None) -> LaurentPolynomial:
    """Yamada polynomial; virtual crossings are ignored.

    ``order`` fixes the sequence in which crossings are resolved and ``rng``
    randomizes both that sequence and the deletion-contraction edge choice.
    The value never depends on either.
    """
    check(code)
    crossings = list(code.crossings)
    if len(crossings) > budget:
        raise BudgetExceeded(f"{len(crossings)} classical crossings exceed the yamada budget {budget}")
    if order is not None:
        crossings = list(order)
    elif rng is not None:
        rng.shuffle(crossings)
    _, arcs = strand_structure(code)
    base_nodes = {("v", v) for v in code.graph.vertices}
    graph_value = _GraphR(rng)

    def node_of(d, state):
        if d[0] == "v":
            return ("v", d[1])
        c = d[1]
        mode = state[c]
        if mode == "X":
            return ("x", c)
        for k, pair in enumerate(_smoothing_pairs(code.signs[c], mode)):
            if tuple(d[2:]) in pair:
                return ("s", c, k)
        raise AssertionError(d)

    def evaluate(state):
        nodes = set(base_nodes)
        for c, mode in state.items():
            if mode == "X":
                nodes.add(("x", c))
            else:
                nodes |= {("s", c, 0), ("s", c, 1)}
        edges = [(node_of(a, state), node_of(b, state)) for a, b, _ in arcs]
        return graph_value(nodes, edges)

    def resolve(i, state):
        if i == len(crossings):
            return evaluate(state)
        c = crossings[i]
        total = LaurentPolynomial(0)
        for mode, exp in (("A", 1), ("B", -1), ("X", 0)):
            state[c] = mode
            total = total + resolve(i + 1, state).shift(exp)
        del state[c]
        return total

    return resolve(0, {})


def yamada_class(p: LaurentPolynomial) -> LaurentPolynomial:
    """Representative up to the A^(2k) factors a first move introduces."""
    if p.is_zero():
        return p
    lo = min(p.terms)
    return p.shift(-(lo - lo % 2))


def writhe(code: GaussCode):
    return sum(code.signs.values())


# -- odd writhe -----------------------------------------------------------------

def odd_writhe(code: GaussCode) -> int:
    """Sum of signs of odd crossings of a knot code (zero for classical knots)."""
    check(code)
    g = code.graph
    if len(g.edges) != 1 or not g.edges[0].is_loop:
        raise ComponentError("odd writhe needs a single-loop code")
    seq = code.seq(g.edges[0].id)
    pos = {}
    for i, p in enumerate(seq):
        pos.setdefault(p.crossing, []).append(i)
    total = 0
    for c, (i, j) in pos.items():
        if (j - i - 1) % 2 == 1:
            total += code.signs[c]
    return total
