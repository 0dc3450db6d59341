"""Classical realizability of Gauss codes.

The polynomial route reduces the question to plain graph planarity: each
crossing becomes a wheel whose rim lists the crossing's four darts in an
alternating order, so any planar embedding meets the crossing transversally.
In rigid mode, vertices of degree four or more get the same treatment with
the rim in their stored rotation.  The brute-force route enumerates rotation
systems directly and never touches the planarity kernel.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from .gauss import GaussCode
from .graph import AbstractGraph
from .planar import strand_structure, alternating_orders, diagram_from_rotation, dart_node

PLIABLE = "pliable"
RIGID = "rigid"


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class ShadowGraph:
    node_darts: dict      # node -> darts (no order implied)
    arcs: list            # (dart, dart, edge_id)
    strands: dict         # crossing node -> (strand label, strand label)
    rotations: dict       # vertex node -> stored/default ccw darts

    @property
    def nodes(self):
        return list(self.node_darts)

    def to_networkx(self):
        g = nx.MultiGraph()
        g.add_nodes_from(self.node_darts)
        for a, b, e in self.arcs:
            g.add_edge(dart_node(a), dart_node(b), key=(a, b), edge=e)
        return g


@dataclass
class RealizabilityVerdict:
    realizable: bool
    certificate: Optional[dict] = None   # node -> darts in ccw order
    note: str = ""
    rigid_coherent: Optional[bool] = None
    sign_coherent: Optional[bool] = None
    diagram: object = field(default=None, repr=False)

    def __bool__(self):
        return self.realizable


def build_shadow_graph(code) -> ShadowGraph:
    node_darts, arcs = strand_structure(code)
    strands = {}
    for n, darts in node_darts.items():
        if n[0] == "c":
            strands[n] = tuple(sorted({d[2] for d in darts}, key=lambda s: s not in ("o", "a")))
    rotations = {n: list(d) for n, d in node_darts.items() if n[0] == "v"}
    return ShadowGraph(node_darts, arcs, strands, rotations)


# -- rotation systems ---------------------------------------------------------

def rotation_genus(rotation, arcs):
    """Euler genus of a rotation system (0 means every component is planar)."""
    pos = {}
    for n, darts in rotation.items():
        for i, d in enumerate(darts):
            pos[d] = (n, i)
    other = {}
    for a, b, _ in arcs:
        other[a] = b
        other[b] = a
    seen = set()
    faces = 0
    for n, darts in rotation.items():
        if not darts:
            faces += 1
        for d in darts:
            if d in seen:
                continue
            faces += 1
            x = d
            while x not in seen:
                seen.add(x)
                y = other[x]
                m, j = pos[y]
                ring = rotation[m]
                x = ring[(j - 1) % len(ring)]
    # components via union-find on nodes
    parent = {n: n for n in rotation}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, _ in arcs:
        ra, rb = find(dart_node(a)), find(dart_node(b))
        if ra != rb:
            parent[ra] = rb
    comps = len({find(n) for n in rotation})
    return 2 * comps - len(rotation) + len(arcs) - faces


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return list(b[i:] + b[:i]) == list(a)


def _orientation(order, reference):
    """+1 if ``order`` equals ``reference`` cyclically, -1 if its mirror, else 0."""
    order, reference = list(order), list(reference)
    if _cyclic_equal(order, reference):
        return 1
    if _cyclic_equal(order, list(reversed(reference))):
        return -1
    return 0


def crossing_orders(sg: ShadowGraph, node):
    c = node[1]
    a, b = sg.strands[node]
    return [[("c", c) + x for x in o] for o in alternating_orders((a, b))]


def check_certificate(sg: ShadowGraph, rotation, vertex_mode=PLIABLE):
    problems = []
    if set(rotation) != set(sg.node_darts):
        problems.append("certificate does not cover every node")
        return problems
    for n, darts in rotation.items():
        if sorted(darts) != sorted(sg.node_darts[n]):
            problems.append(f"rotation at {n} is not a permutation of its darts")
    if problems:
        return problems
    for n in sg.strands:
        if not any(_orientation(rotation[n], o) for o in crossing_orders(sg, n)):
            problems.append(f"strands do not alternate at {n}")
    if vertex_mode == RIGID:
        for n, ref in sg.rotations.items():
            if not _orientation(rotation[n], ref):
                problems.append(f"rotation at {n} is neither the stored order nor its mirror")
    if rotation_genus(rotation, sg.arcs) != 0:
        problems.append("certificate is not genus 0")
    return problems


# -- planarity kernel ---------------------------------------------------------

def planarity_with_embedding(g):
    """Planarity of a graph, with a ccw rotation system when planar.

    ``g`` may be an :class:`AbstractGraph` (rotation returned as edge ends per
    vertex) or a networkx graph (rotation returned as neighbour lists).
    Parallel edges and loops are handled by subdividing every edge twice.
    """
    if isinstance(g, AbstractGraph):
        h = nx.Graph()
        h.add_nodes_from(("n", v) for v in g.vertices)
        for e in g.edges:
            a, b = ("m", e.id, "t"), ("m", e.id, "h")
            h.add_edge(("n", e.tail), a)
            h.add_edge(a, b)
            h.add_edge(b, ("n", e.head))
        ok, emb = nx.check_planarity(h)
        if not ok:
            return False, None
        rot = {}
        for v in g.vertices:
            cw = list(emb.neighbors_cw_order(("n", v))) if h.degree(("n", v)) else []
            rot[v] = tuple((m[1], m[2]) for m in reversed(cw))
        return True, rot
    ok, emb = nx.check_planarity(nx.Graph(g))
    if not ok:
        return False, None
    return True, {v: list(reversed(list(emb.neighbors_cw_order(v)))) if emb.degree(v) else []
                  for v in emb.nodes}


def _gadget_graph(sg, vertex_mode):
    h = nx.Graph()
    attach = {}    # dart -> gadget node its arc attaches to
    hubs = {}      # node -> (hub, rim darts in order)

    def wheel(node, rim):
        hub = ("hub", node)
        h.add_node(hub)
        for i, d in enumerate(rim):
            r = ("rim", d)
            attach[d] = r
            h.add_edge(hub, r)
            h.add_edge(r, ("rim", rim[(i + 1) % len(rim)]))
        hubs[node] = (hub, rim)

    for n, darts in sg.node_darts.items():
        if n[0] == "c":
            wheel(n, crossing_orders(sg, n)[0])
        elif vertex_mode == RIGID and len(darts) >= 4:
            wheel(n, sg.rotations[n])
        else:
            h.add_node(("plain", n))
            for d in darts:
                attach[d] = ("plain", n)
    mid_dart = {}
    for k, (a, b, _) in enumerate(sg.arcs):
        m1, m2 = ("mid", k, 0), ("mid", k, 1)
        h.add_edge(attach[a], m1)
        h.add_edge(m1, m2)
        h.add_edge(m2, attach[b])
        mid_dart[m1] = a
        mid_dart[m2] = b
    return h, hubs, mid_dart


def simple_rotation_genus(rot):
    """Euler genus of a rotation system on a simple graph (node -> ccw neighbours)."""
    pos = {n: {w: i for i, w in enumerate(ns)} for n, ns in rot.items()}
    seen = set()
    faces = 0
    edges = 0
    for n, ns in rot.items():
        edges += len(ns)
        if not ns:
            faces += 1
        for w in ns:
            if (n, w) in seen:
                continue
            faces += 1
            u, v = n, w
            while (u, v) not in seen:
                seen.add((u, v))
                ring = rot[v]
                u, v = v, ring[(pos[v][u] - 1) % len(ring)]
    comps = nx.number_connected_components(nx.Graph([(n, w) for n, ns in rot.items() for w in ns]))
    comps += sum(1 for ns in rot.values() if not ns)
    return 2 * comps - len(rot) + edges // 2 - faces


def _reflect(rot, part, cut):
    new = dict(rot)
    for n in part:
        new[n] = list(reversed(rot[n]))
    for x in cut:
        ring = rot[x]
        idx = [i for i, w in enumerate(ring) if w in part]
        if not idx:
            continue
        k = len(ring)
        # rotate so the block starts at a position whose predecessor is outside
        starts = [i for i in idx if ring[(i - 1) % k] not in part]
        if len(starts) != 1:
            return None
        s = starts[0]
        block = [ring[(s + j) % k] for j in range(len(idx))]
        if any(w not in part for w in block):
            return None
        ring2 = list(ring)
        for j, w in enumerate(reversed(block)):
            ring2[(s + j) % k] = w
        new[x] = ring2
    return new


class _SignRepair:
    def __init__(self, h, hubs, signs):
        self.h = h
        self.hubs = {n: hubs[n] for n in signs}
        self.signs = signs

    def orientation(self, rot, n):
        hub, rim = self.hubs[n]
        order = [r[1] for r in rot[hub]]
        return _orientation(order, rim) * self.signs[n]

    def classes(self):
        from networkx.algorithms.connectivity import local_node_connectivity
        reps = []
        cls = {}
        for n, (hub, _) in self.hubs.items():
            for r in reps:
                if local_node_connectivity(self.h, hub, self.hubs[r][0], cutoff=3) >= 3:
                    cls[n] = r
                    break
            else:
                reps.append(n)
                cls[n] = n
        return cls

    def _bad(self, rot):
        return frozenset(n for n in self.hubs if self.orientation(rot, n) < 0)

    def _wheel_nodes(self, n):
        hub, rim = self.hubs[n]
        return {hub} | {("rim", d) for d in rim}

    def _contracted(self, groups):
        # cuts must never pass through a wheel, so each wheel becomes one node
        rep = {}
        for name, nodes in groups.items():
            for x in nodes:
                rep[x] = name
        q = nx.Graph()
        q.add_nodes_from(rep.get(x, x) for x in self.h)
        q.add_edges_from((rep.get(a, a), rep.get(b, b)) for a, b in self.h.edges
                         if rep.get(a, a) != rep.get(b, b))
        return q, rep

    def _moves(self, rot, b, good):
        src = ("src",)
        targets = [{("dst",): set().union(*(self._wheel_nodes(g) for g in good))}]
        targets += [{("dst",): self._wheel_nodes(g)} for g in good]
        for tgt in targets:
            groups = {src: self._wheel_nodes(b), **tgt}
            q, rep = self._contracted(groups)
            cut = nx.minimum_node_cut(q, src, ("dst",))
            rest = q.subgraph(x for x in q if x not in cut)
            comps = list(nx.connected_components(rest))
            expand = lambda cc: {x for x in self.h if rep.get(x, x) in cc}
            mine = next(cc for cc in comps if src in cc)
            theirs = next(cc for cc in comps if ("dst",) in cc)
            yield cut, expand(mine)
            yield cut, set(self.h) - set(cut) - expand(theirs)

    def repair(self, rot, limit=None):
        """Reflect pieces across small cuts until every crossing has its signed orientation."""
        limit = limit or 4 * len(self.hubs) + 8
        seen = set()
        for _ in range(limit):
            bad = self._bad(rot)
            if not bad:
                return rot
            seen.add(bad)
            good = [n for n in self.hubs if n not in bad]
            if not good:
                return {n: list(reversed(ns)) for n, ns in rot.items()}
            best = None
            for b in sorted(bad):
                for cut, part in self._moves(rot, b, good):
                    new = _reflect(rot, part, cut)
                    if new is None or simple_rotation_genus(new) != 0:
                        continue
                    nb = self._bad(new)
                    if nb in seen:
                        continue
                    if best is None or len(nb) < len(best[0]):
                        best = (nb, new)
                if best is not None and len(best[0]) < len(bad):
                    break
            if best is None:
                return None
            rot = best[1]
        return None


def realizable(code, vertex_mode=PLIABLE) -> RealizabilityVerdict:
    """Decide classical realizability.

    Shadow codes are judged up to reflection at every crossing.  For signed
    Gauss codes each crossing's rotation is fixed by its sign, so crossings
    lying in one triconnected piece of the gadget graph must agree.
    """
    if vertex_mode not in (PLIABLE, RIGID):
        raise ValueError(f"unknown vertex mode {vertex_mode}")
    if vertex_mode == RIGID and code.graph.rotations is None:
        raise ValueError("rigid mode needs a graph with stored rotations")
    sg = build_shadow_graph(code)
    h, hubs, mid_dart = _gadget_graph(sg, vertex_mode)
    ok, emb = nx.check_planarity(h)
    if not ok:
        return RealizabilityVerdict(False, note="constrained shadow graph is not planar")
    rot = {x: (list(reversed(list(emb.neighbors_cw_order(x)))) if h.degree(x) else [])
           for x in h.nodes}
    signed = isinstance(code, GaussCode)
    note = "planar"
    coherent = None
    if signed:
        fixer = _SignRepair(h, hubs, {n: code.signs[n[1]] for n in sg.strands})
        cls = fixer.classes()
        seen = {}
        for n, r in cls.items():
            if seen.setdefault(r, fixer.orientation(rot, n)) != fixer.orientation(rot, n):
                return RealizabilityVerdict(
                    False, note=f"crossing signs disagree within a rigid piece (at {n[1]})")
        repaired = fixer.repair(rot)
        coherent = repaired is not None
        if coherent:
            rot = repaired
        else:
            note = "planar; signs coherent per piece but certificate repair failed"

    cert = {}
    for n in sg.node_darts:
        if n in hubs:
            cert[n] = [r[1] for r in rot[hubs[n][0]]]
        else:
            cert[n] = [mid_dart[m] for m in rot[("plain", n)]]
    problems = check_certificate(sg, cert, vertex_mode)
    if problems:
        raise AssertionError("planarity certificate failed verification: " + "; ".join(problems))
    verdict = RealizabilityVerdict(True, cert, note)
    if vertex_mode == RIGID:
        verdict.rigid_coherent = _coherent(sg, cert, {n: _orientation(cert[n], sg.rotations[n])
                                                      for n in sg.rotations if len(cert[n]) >= 3})
    if signed:
        d = diagram_from_rotation(code, cert)
        verdict.diagram = d
        verdict.sign_coherent = d.sign_coherent() and coherent
    return verdict


def _coherent(sg, cert, orient):
    comp = {}
    g = sg.to_networkx()
    for i, cc in enumerate(nx.connected_components(g)):
        for n in cc:
            comp[n] = i
    seen = {}
    for n, o in orient.items():
        if o == 0:
            return False
        if seen.setdefault(comp[n], o) != o:
            return False
    return True


# -- brute-force oracle ---------------------------------------------------------

def _vertex_choices(darts, stored, vertex_mode):
    if len(darts) <= 2:
        return [list(darts)]
    if vertex_mode == RIGID:
        return [list(stored), [stored[0]] + list(reversed(stored[1:]))]
    first, rest = darts[0], list(darts[1:])
    return [[first] + list(p) for p in itertools.permutations(rest)]


def brute_force_realizable(code, vertex_mode=PLIABLE, budget=10 ** 7) -> bool:
    sg = build_shadow_graph(code)
    nodes = list(sg.node_darts)
    choices = []
    for n in nodes:
        if n[0] == "c":
            orders = crossing_orders(sg, n)
            if isinstance(code, GaussCode):
                orders = [orders[0] if code.signs[n[1]] > 0 else orders[1]]
            choices.append(orders)
        else:
            choices.append(_vertex_choices(sg.node_darts[n], sg.rotations[n], vertex_mode))
    total = math.prod(len(c) for c in choices)
    if total > budget:
        raise BudgetExceeded(f"{total} rotation systems exceed budget {budget}")
    for combo in itertools.product(*choices):
        if rotation_genus(dict(zip(nodes, combo)), sg.arcs) == 0:
            return True
    return False
