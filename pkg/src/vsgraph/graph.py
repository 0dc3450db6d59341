"""Abstract directed multigraphs with optional vertex rotations.

Half-edge ends are written ``(edge_id, "t")`` for the tail end and
``(edge_id, "h")`` for the head end.  Rotations list the ends at a vertex
in counterclockwise order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

TAIL = "t"
HEAD = "h"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str

    @property
    def is_loop(self):
        return self.tail == self.head

    def end_vertex(self, end):
        return self.tail if end == TAIL else self.head


@dataclass(frozen=True)
class AbstractGraph:
    vertices: tuple
    edges: tuple
    rotations: Optional[tuple] = None  # ((vertex, (end, ...)), ...)
    _edge_index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.rotations is not None:
            rot = self.rotations
            if isinstance(rot, dict):
                rot = rot.items()
            rot = tuple(sorted((v, tuple(tuple(e) for e in ends)) for v, ends in rot))
            object.__setattr__(self, "rotations", rot)
        object.__setattr__(self, "_edge_index", {e.id: e for e in self.edges})
        problems = self.problems()
        if problems:
            raise GraphError("; ".join(problems))

    @classmethod
    def build(cls, vertices, edges, rotations=None):
        """Convenience constructor; ``edges`` is an iterable of ``(id, tail, head)``."""
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges), rotations)

    def problems(self):
        out = []
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            out.append("duplicate vertex ids")
        if len(self._edge_index) != len(self.edges):
            out.append("duplicate edge ids")
        for e in self.edges:
            for v in (e.tail, e.head):
                if v not in vs:
                    out.append(f"edge {e.id} names unknown vertex {v}")
        if self.rotations is not None and not out:
            rot = dict(self.rotations)
            for v in self.vertices:
                want = sorted(self.ends_at(v))
                have = sorted(rot.get(v, ()))
                if want != have:
                    out.append(f"rotation at {v} does not list its ends exactly once")
            for v in rot:
                if v not in vs:
                    out.append(f"rotation for unknown vertex {v}")
        return out

    # -- accessors --------------------------------------------------------
    def edge(self, eid) -> Edge:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid}") from None

    @property
    def edge_ids(self):
        return tuple(e.id for e in self.edges)

    def has_edge(self, eid):
        return eid in self._edge_index

    def ends_at(self, v):
        ends = []
        for e in self.edges:
            if e.tail == v:
                ends.append((e.id, TAIL))
            if e.head == v:
                ends.append((e.id, HEAD))
        return ends

    def degree(self, v):
        return len(self.ends_at(v))

    def rotation(self, v):
        """Stored rotation at ``v``, or the default (sorted ends) when absent."""
        if self.rotations is not None:
            return tuple(dict(self.rotations)[v])
        return tuple(sorted(self.ends_at(v)))

    def effective_rotations(self):
        return {v: self.rotation(v) for v in self.vertices}

    def with_rotations(self, rotations):
        return AbstractGraph(self.vertices, self.edges, dict(rotations))

    def without_rotations(self):
        return AbstractGraph(self.vertices, self.edges, None)

    def components(self):
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            a, b = find(e.tail), find(e.head)
            if a != b:
                parent[a] = b
        groups = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def __str__(self):
        es = ", ".join(f"{e.id}:{e.tail}->{e.head}" for e in self.edges)
        return f"AbstractGraph(V={list(self.vertices)}, E=[{es}])"


def betti(g: AbstractGraph) -> int:
    return len(g.edges) - len(g.vertices) + len(g.components())


def delete_edge(g: AbstractGraph, eid) -> AbstractGraph:
    g.edge(eid)
    edges = tuple(e for e in g.edges if e.id != eid)
    rot = None
    if g.rotations is not None:
        rot = {v: tuple(end for end in ends if end[0] != eid) for v, ends in g.rotations}
    return AbstractGraph(g.vertices, edges, rot)


def contract_edge(g: AbstractGraph, eid) -> AbstractGraph:
    """Merge the endpoints of a non-loop edge into its tail vertex."""
    e = g.edge(eid)
    if e.is_loop:
        raise GraphError(f"cannot contract loop {eid}")
    keep, gone = e.tail, e.head
    vertices = tuple(v for v in g.vertices if v != gone)
    edges = []
    for f in g.edges:
        if f.id == eid:
            continue
        t = keep if f.tail == gone else f.tail
        h = keep if f.head == gone else f.head
        edges.append(Edge(f.id, t, h))
    rot = None
    if g.rotations is not None:
        rots = dict(g.rotations)
        a = list(rots[keep])
        b = list(rots[gone])
        i = a.index((eid, TAIL))
        j = b.index((eid, HEAD))
        # splice: walk keep's order up to e, then gone's order after e, then the rest
        spliced = a[:i] + b[j + 1:] + b[:j] + a[i + 1:]
        rot = {v: ends for v, ends in rots.items() if v not in (keep, gone)}
        rot[keep] = tuple(spliced)
    return AbstractGraph(vertices, tuple(edges), rot)


def bouquet_size(g: AbstractGraph) -> Optional[int]:
    if len(g.vertices) != 1:
        return None
    if all(e.is_loop for e in g.edges):
        return len(g.edges)
    return None


# -- cycles -------------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    """A simple cycle as ``((edge_id, +1|-1), ...)``; -1 traverses head to tail."""
    steps: tuple

    @property
    def edge_ids(self):
        return frozenset(s[0] for s in self.steps)

    def vertices(self, g):
        out = []
        for eid, d in self.steps:
            e = g.edge(eid)
            out.append(e.tail if d > 0 else e.head)
        return out

    def direction(self, eid):
        for e, d in self.steps:
            if e == eid:
                return d
        raise KeyError(eid)


@dataclass(frozen=True)
class CyclePair:
    first: Cycle
    second: Cycle


def _canonical_cycle(g, steps):
    """Least rotation of the orientation whose first edge id is smaller."""
    def rotations_of(seq):
        return [tuple(seq[i:] + seq[:i]) for i in range(len(seq))]

    fwd = list(steps)
    rev = [(eid, -d) for eid, d in reversed(steps)]
    cands = rotations_of(fwd) + rotations_of(rev)
    return Cycle(min(cands, key=lambda s: [(eid, -d) for eid, d in s]))


def simple_cycles(g: AbstractGraph):
    """All simple cycles, ignoring edge direction; loops and 2-cycles included."""
    order = {v: i for i, v in enumerate(g.vertices)}
    adj = {v: [] for v in g.vertices}
    for e in g.edges:
        if e.is_loop:
            continue
        adj[e.tail].append((e.head, e.id, 1))
        adj[e.head].append((e.tail, e.id, -1))
    seen = set()
    out = []
    for e in g.edges:
        if e.is_loop:
            c = Cycle(((e.id, 1),))
            seen.add(c.edge_ids)
            out.append(c)
    for s in g.vertices:
        # cycles whose least vertex is s
        stack = [(s, [], {s})]
        while stack:
            v, path, used = stack.pop()
            for w, eid, d in adj[v]:
                if order[w] < order[s]:
                    continue
                if path and eid == path[-1][0]:
                    continue
                if w == s and path:
                    steps = path + [(eid, d)]
                    key = frozenset(x[0] for x in steps)
                    if key not in seen:
                        seen.add(key)
                        out.append(_canonical_cycle(g, steps))
                elif w not in used:
                    stack.append((w, path + [(eid, d)], used | {w}))
    out.sort(key=lambda c: (len(c.steps), [(eid, -d) for eid, d in c.steps]))
    return out


def disjoint_cycle_pairs(g: AbstractGraph):
    cycles = simple_cycles(g)
    verts = [frozenset(c.vertices(g)) for c in cycles]
    pairs = []
    for i, j in combinations(range(len(cycles)), 2):
        if not (verts[i] & verts[j]):
            pairs.append(CyclePair(cycles[i], cycles[j]))
    return pairs


def complete_graph(n, prefix="v") -> AbstractGraph:
    vs = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(f"e{i}{j}", vs[i - 1], vs[j - 1]) for i, j in combinations(range(1, n + 1), 2)]
    return AbstractGraph.build(vs, edges)


def theta_graph() -> AbstractGraph:
    return AbstractGraph.build(["u", "v"], [("a", "u", "v"), ("b", "u", "v"), ("c", "u", "v")])


def bouquet(n) -> AbstractGraph:
    return AbstractGraph.build(["v"], [(f"l{i}", "v", "v") for i in range(n)])


def loop_graph(edge="a", vertex="v") -> AbstractGraph:
    return AbstractGraph.build([vertex], [(edge, vertex, vertex)])


def link_graph(n) -> AbstractGraph:
    """``n`` disjoint loops, one per vertex."""
    return AbstractGraph.build([f"p{i}" for i in range(n)],
                               [(f"k{i}", f"p{i}", f"p{i}") for i in range(n)])


def ends_of(g: AbstractGraph, edges: Iterable[str]):
    return [(eid, end) for eid in edges for end in (TAIL, HEAD)]
