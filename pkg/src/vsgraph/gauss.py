"""Gauss codes for virtual spatial graph diagrams.

A code records, for every edge, the classical crossings met when walking the
edge from tail to head.  Virtual crossings are not recorded at all.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .graph import AbstractGraph, TAIL, HEAD


class InvalidCode(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True, order=True)
class Passage:
    crossing: int
    over: bool

    def __str__(self):
        return f"{'O' if self.over else 'U'}{self.crossing}"


def O(c):
    return Passage(c, True)


def U(c):
    return Passage(c, False)


class GaussCode:
    """Immutable Gauss code: graph, per-edge passage sequences, crossing signs."""

    __slots__ = ("graph", "_passages", "_signs", "_key")

    def __init__(self, graph: AbstractGraph, passages: Mapping, signs: Mapping):
        self.graph = graph
        ps = {eid: () for eid in graph.edge_ids}
        for eid, seq in passages.items():
            ps[eid] = tuple(seq)
        self._passages = ps
        self._signs = {int(c): int(s) for c, s in signs.items()}
        self._key = None

    @property
    def passages(self):
        return self._passages

    @property
    def signs(self):
        return self._signs

    def seq(self, eid):
        return self._passages[eid]

    @property
    def crossings(self):
        return sorted(self._signs)

    def locations(self):
        """crossing -> {"over": (edge, index), "under": (edge, index)}."""
        out = {}
        for eid in self.graph.edge_ids:
            for i, p in enumerate(self._passages[eid]):
                out.setdefault(p.crossing, {})["over" if p.over else "under"] = (eid, i)
        return out

    def with_(self, passages=None, signs=None, graph=None):
        return GaussCode(graph or self.graph,
                         self._passages if passages is None else passages,
                         self._signs if signs is None else signs)

    def _ident(self):
        if self._key is None:
            self._key = (self.graph,
                         tuple(sorted(self._passages.items())),
                         tuple(sorted(self._signs.items())))
        return self._key

    def __eq__(self, other):
        return isinstance(other, GaussCode) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        body = "; ".join(
            f"{eid}: " + " ".join(f"{p}{'+' if self._signs.get(p.crossing, 0) > 0 else '-'}"
                                  for p in seq)
            for eid, seq in self._passages.items())
        return f"GaussCode({body})"


@dataclass(frozen=True)
class ShadowCode:
    graph: AbstractGraph
    passages: tuple  # ((edge_id, (crossing, ...)), ...)

    def seq(self, eid):
        return dict(self.passages)[eid]

    @property
    def crossings(self):
        return sorted({c for _, s in self.passages for c in s})


def validate(code: GaussCode):
    """Return every violated invariant (an empty list means the code is valid)."""
    out = []
    g = code.graph
    for eid in code.passages:
        if not g.has_edge(eid):
            out.append(f"passages for unknown edge {eid}")
    roles = {}
    for eid, seq in code.passages.items():
        for p in seq:
            roles.setdefault(p.crossing, []).append(p.over)
    for c in sorted(roles):
        r = roles[c]
        if len(r) != 2:
            out.append(f"crossing {c} occurs {len(r)} times")
        if r.count(True) != 1 or r.count(False) != 1:
            out.append(f"role imbalance at {c}")
    for c in sorted(roles):
        if c not in code.signs:
            out.append(f"missing sign {c}")
    for c, s in sorted(code.signs.items()):
        if c not in roles:
            out.append(f"sign for absent crossing {c}")
        if s not in (1, -1):
            out.append(f"bad sign {s} at {c}")
    return out


def check(code):
    v = validate(code)
    if v:
        raise InvalidCode(v)
    return code


def validate_shadow(code: ShadowCode):
    cnt = Counter(c for _, s in code.passages for c in s)
    return [f"crossing {c} occurs {n} times" for c, n in sorted(cnt.items()) if n != 2]


def shadow(code) -> ShadowCode:
    if isinstance(code, ShadowCode):
        return code
    check(code)
    return ShadowCode(code.graph, tuple((eid, tuple(p.crossing for p in code.seq(eid)))
                                        for eid in code.graph.edge_ids))


def underlying_graph(code) -> AbstractGraph:
    return code.graph


def empty_code(graph: AbstractGraph) -> GaussCode:
    return GaussCode(graph, {}, {})


def end_passage(code, end):
    """Index of the passage nearest the vertex at ``end`` (None when edge is bare)."""
    eid, side = end
    n = len(code.seq(eid))
    if n == 0:
        return None
    return 0 if side == TAIL else n - 1


def relabel(code: GaussCode, mapping) -> GaussCode:
    ps = {eid: tuple(Passage(mapping[p.crossing], p.over) for p in seq)
          for eid, seq in code.passages.items()}
    return GaussCode(code.graph, ps, {mapping[c]: s for c, s in code.signs.items()})


def compact(code: GaussCode) -> GaussCode:
    """Relabel crossings 1..n in order of first appearance."""
    mapping = {}
    for eid in code.graph.edge_ids:
        for p in code.seq(eid):
            mapping.setdefault(p.crossing, len(mapping) + 1)
    return relabel(code, mapping)


def reverse_edge(code: GaussCode, eid) -> GaussCode:
    """Flip one edge's orientation; signs of crossings on it flip once per strand."""
    from .graph import Edge
    g = code.graph
    g.edge(eid)
    edges = tuple(Edge(f.id, f.head, f.tail) if f.id == eid else f for f in g.edges)
    rot = None
    if g.rotations is not None:
        swap = {TAIL: HEAD, HEAD: TAIL}
        rot = {v: tuple((x, swap[s]) if x == eid else (x, s) for x, s in ends)
               for v, ends in g.rotations}
    ng = AbstractGraph(g.vertices, edges, rot)
    ps = dict(code.passages)
    ps[eid] = tuple(reversed(ps[eid]))
    signs = dict(code.signs)
    for p in code.seq(eid):
        signs[p.crossing] = -signs[p.crossing]
    return GaussCode(ng, ps, signs)
