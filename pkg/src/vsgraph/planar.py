"""Planar diagrams as combinatorial maps, and the constructive virtual realization.

A node is one of ``("v", vertex)``, ``("c", crossing)`` or ``("x", k)``
(graph vertex, classical crossing, virtual crossing).  A dart is
``(node, slot)`` and each node's slots ``0..deg-1`` are in counterclockwise
order.  At a 4-valent node the strand through slot ``i`` leaves through
slot ``i + 2``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .gauss import GaussCode, ShadowCode, Passage, check, validate_shadow, InvalidCode
from .graph import AbstractGraph, TAIL, HEAD


class DiagramError(ValueError):
    pass


# -- strand structure shared with the realizability module -------------------

def strand_structure(code):
    """Darts and arcs of the shadow of ``code``.

    Crossing darts are ``("c", c, strand, io)`` with strand ``"o"``/``"u"``
    (over/under) for Gauss codes and ``"a"``/``"b"`` (first/second
    occurrence) for shadow codes; ``io`` is ``"in"`` or ``"out"``.  Vertex
    darts are ``("v", vertex, end)``.  Returns ``(node_darts, arcs)`` where
    each arc is a pair of darts ``(from, to)`` oriented along its edge and
    tagged with the edge id as a third item.
    """
    if isinstance(code, ShadowCode):
        errs = validate_shadow(code)
        if errs:
            raise InvalidCode(errs)
        seqs = dict(code.passages)
        seen = set()
        labelled = {}
        for eid in code.graph.edge_ids:
            out = []
            for c in seqs.get(eid, ()):
                out.append((c, "b" if c in seen else "a"))
                seen.add(c)
            labelled[eid] = out
    else:
        check(code)
        labelled = {eid: [(p.crossing, "o" if p.over else "u") for p in code.seq(eid)]
                    for eid in code.graph.edge_ids}
    g = code.graph
    node_darts = {("v", v): [("v", v, end) for end in g.rotation(v)] for v in g.vertices}
    arcs = []
    for e in g.edges:
        prev = ("v", e.tail, (e.id, TAIL))
        for c, s in labelled[e.id]:
            node_darts.setdefault(("c", c), [])
            node_darts[("c", c)] += [("c", c, s, "in"), ("c", c, s, "out")]
            arcs.append((prev, ("c", c, s, "in"), e.id))
            prev = ("c", c, s, "out")
        arcs.append((prev, ("v", e.head, (e.id, HEAD)), e.id))
    return node_darts, arcs


def dart_node(d):
    return (d[0], d[1])


def alternating_orders(strands=("o", "u")):
    """The two cyclic orders at a crossing in which the strands alternate."""
    a, b = strands
    return ([(a, "out"), (b, "out"), (a, "in"), (b, "in")],
            [(a, "out"), (b, "in"), (a, "in"), (b, "out")])


# -- the combinatorial map ----------------------------------------------------

@dataclass
class PlanarDiagram:
    graph: AbstractGraph
    kinds: dict           # node -> "vertex" | "classical" | "virtual"
    degree: dict          # node -> int
    mate: dict            # dart -> dart
    vertex_ends: dict = field(default_factory=dict)   # vertex node -> ends by slot
    crossings: dict = field(default_factory=dict)     # classical node -> (sign, over parity)

    @property
    def virtual_count(self):
        return sum(1 for k in self.kinds.values() if k == "virtual")

    @property
    def classical_count(self):
        return sum(1 for k in self.kinds.values() if k == "classical")

    def faces(self):
        seen = set()
        faces = []
        for n, deg in self.degree.items():
            for i in range(deg):
                if (n, i) in seen:
                    continue
                face = []
                d = (n, i)
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    m, j = self.mate[d]
                    d = (m, (j - 1) % self.degree[m])
                faces.append(face)
        return faces

    def components(self):
        parent = {n: n for n in self.degree}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.mate.items():
            ra, rb = find(a[0]), find(b[0])
            if ra != rb:
                parent[ra] = rb
        return len({find(n) for n in self.degree})

    def euler_genus(self):
        v = len(self.degree)
        e = len(self.mate) // 2
        f = len(self.faces()) + sum(1 for d in self.degree.values() if d == 0)
        return 2 * self.components() - v + e - f

    def strand_exit(self, dart):
        n, i = dart
        return (n, (i + 2) % 4)

    def problems(self):
        out = []
        for d, m in self.mate.items():
            if self.mate.get(m) != d:
                out.append(f"mate not an involution at {d}")
            if d == m:
                out.append(f"dart {d} is its own mate")
        for n, k in self.kinds.items():
            if k in ("classical", "virtual") and self.degree[n] != 4:
                out.append(f"crossing node {n} has degree {self.degree[n]}")
        if not out and self.euler_genus() != 0:
            out.append(f"euler genus {self.euler_genus()} != 0")
        if not out:
            try:
                extract_gauss(self)
            except DiagramError as exc:
                out.append(str(exc))
        return out

    def sign_orientation(self):
        """Per classical node: +1 if its stored sign matches the counterclockwise
        geometry of its slots, -1 if it matches the mirror image."""
        roles = _strand_roles(self)
        out = {}
        for n, (sign, parity) in self.crossings.items():
            over_out = roles[(n, "o", "out")]
            under_out = roles[(n, "u", "out")]
            geometric = 1 if (under_out - over_out) % 4 == 1 else -1
            out[n] = 1 if geometric == sign else -1
        return out

    def sign_coherent(self):
        """True when every connected piece is consistently oriented or mirrored."""
        orient = self.sign_orientation()
        comp = self._component_of()
        by = {}
        for n, o in orient.items():
            by.setdefault(comp[n], set()).add(o)
        return all(len(s) == 1 for s in by.values())

    def _component_of(self):
        adj = {n: set() for n in self.degree}
        for a, b in self.mate.items():
            adj[a[0]].add(b[0])
        comp = {}
        for s in self.degree:
            if s in comp:
                continue
            stack = [s]
            comp[s] = s
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in comp:
                        comp[y] = s
                        stack.append(y)
        return comp

    def face_report(self):
        """Face list as text, one face per line, darts as ``node:slot``."""
        def name(n):
            return f"{n[0]}{n[1]}"
        lines = [f"nodes {len(self.degree)} virtual {self.virtual_count} "
                 f"classical {self.classical_count} faces {len(self.faces())} "
                 f"genus {self.euler_genus() // 2}"]
        for n in sorted(self.degree, key=str):
            extra = ""
            if n in self.vertex_ends:
                extra = " " + " ".join(f"{e}.{s}" for e, s in self.vertex_ends[n])
            elif n in self.crossings:
                s, p = self.crossings[n]
                extra = f" sign {'+' if s > 0 else '-'} over-slots {p},{p + 2}"
            lines.append(f"node {name(n)} {self.kinds[n]} deg {self.degree[n]}{extra}")
        for k, face in enumerate(self.faces()):
            lines.append(f"face {k}: " + " ".join(f"{name(n)}:{i}" for n, i in face))
        return "\n".join(lines)


def _strand_roles(d: PlanarDiagram):
    """(classical node, "o"/"u", "in"/"out") -> slot, found by walking edges."""
    roles = {}
    for eid, walk in _walk_edges(d).items():
        for node, slot_in, slot_out in walk:
            if d.kinds[node] != "classical":
                continue
            _, parity = d.crossings[node]
            s = "o" if slot_in % 2 == parity else "u"
            roles[(node, s, "in")] = slot_in
            roles[(node, s, "out")] = slot_out
    return roles


def _walk_edges(d: PlanarDiagram):
    start = {}
    for n, ends in d.vertex_ends.items():
        for i, end in enumerate(ends):
            start[end] = (n, i)
    out = {}
    limit = 4 * len(d.degree) + 4
    for e in d.graph.edges:
        if (e.id, TAIL) not in start or (e.id, HEAD) not in start:
            raise DiagramError(f"edge {e.id} has no vertex darts")
        walk = []
        dart = start[(e.id, TAIL)]
        for _ in range(limit):
            m, j = d.mate[dart]
            if d.kinds[m] == "vertex":
                if d.vertex_ends[m][j] != (e.id, HEAD) or m != ("v", e.head):
                    raise DiagramError(f"edge {e.id} does not end at its head dart")
                break
            walk.append((m, j, (j + 2) % 4))
            dart = (m, (j + 2) % 4)
        else:
            raise DiagramError(f"edge {e.id} never reaches its head")
        out[e.id] = walk
    return out


def extract_gauss(d: PlanarDiagram) -> GaussCode:
    passages = {}
    for eid, walk in _walk_edges(d).items():
        seq = []
        for node, slot_in, _ in walk:
            if d.kinds[node] == "classical":
                _, parity = d.crossings[node]
                seq.append(Passage(node[1], slot_in % 2 == parity))
        passages[eid] = tuple(seq)
    signs = {n[1]: s for n, (s, _) in d.crossings.items()}
    return check(GaussCode(d.graph, passages, signs))


# -- semicircle drawing engine ------------------------------------------------

@dataclass
class _Arc:
    lo: tuple      # dart at the smaller x
    hi: tuple
    a: int         # x of lo
    b: int         # x of hi
    side: int      # +1 upper half plane, -1 lower
    forward: bool  # strand direction runs lo -> hi
    tag: object = None


def _crossing_x(p, q):
    a, b, c, d = p.a, p.b, q.a, q.b
    return Fraction(c * d - a * b, c + d - a - b)


def _interleaved(p, q):
    return p.side == q.side and (p.a < q.a < p.b < q.b or q.a < p.a < q.b < p.b)


def draw(ports, arcs, classify, rng=None, max_tries=50):
    """Lay out nodes on a line and join darts by semicircles.

    ``ports``: node -> list of darts in counterclockwise order, each dart
    paired with a side, ``[(slot, side), ...]``.  ``arcs``: list of
    ``(dart_from, dart_to, tag)`` oriented along the strand.  ``classify``
    is called as ``classify(arc_p, arc_q)`` for each intersection and returns
    ``None`` for a virtual crossing or ``(crossing_id, over_arc)`` for a
    classical one.  Returns ``(degree, mate, kinds, crossings)``.
    """
    rng = rng or random.Random(0)
    for attempt in range(max_tries):
        xs = _place(ports, rng if attempt else None)
        built = _build(ports, arcs, xs, classify)
        if built is not None:
            return built
    raise DiagramError("could not find a generic layout")


def _place(ports, rng):
    xs = {}
    x = 0
    for node, slots in ports.items():
        upper = [s for s, side in slots if side > 0]
        lower = [s for s, side in slots if side < 0]
        # ccw: upper ports right to left, then lower ports left to right
        width = max(len(upper), len(lower), 1)
        step = lambda: (rng.randint(1, 7) if rng else 1)
        pos = x + width * 8
        for s in upper:
            xs[(node, s)] = pos
            pos -= step()
        pos = x + 1
        for s in lower:
            xs[(node, s)] = pos
            pos += step()
        x += width * 8 + 16 + (rng.randint(0, 9) if rng else 0)
    return xs


def _build(ports, arcs, xs, classify):
    side_of = {(n, s): side for n, slots in ports.items() for s, side in slots}
    items = []
    for da, db, tag in arcs:
        if side_of[da] != side_of[db]:
            raise DiagramError(f"arc {da}-{db} changes side")
        xa, xb = xs[da], xs[db]
        if xa < xb:
            items.append(_Arc(da, db, xa, xb, side_of[da], True, tag))
        else:
            items.append(_Arc(db, da, xb, xa, side_of[da], False, tag))
    points = {i: [] for i in range(len(items))}
    inter = []
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            p, q = items[i], items[j]
            if _interleaved(p, q):
                x = _crossing_x(p, q)
                inter.append((i, j, x))
                points[i].append(x)
                points[j].append(x)
    for pts in points.values():
        if len(set(pts)) != len(pts):
            return None

    degree = {n: len(slots) for n, slots in ports.items()}
    kinds = {}
    crossings = {}
    mate = {}
    at = {i: [] for i in range(len(items))}  # arc -> [(x, node, lo slot, hi slot)]
    vcount = 0
    for i, j, x in inter:
        p, q = items[i], items[j]
        if p.a > q.a:
            i, j, p, q = j, i, q, p
        # p starts left: p.a < q.a < p.b < q.b
        if p.side > 0:
            order = [(j, "hi"), (i, "lo"), (j, "lo"), (i, "hi")]
        else:
            order = [(j, "hi"), (i, "hi"), (j, "lo"), (i, "lo")]
        slot = {o: k for k, o in enumerate(order)}
        verdict = classify(p, q)
        if verdict is None:
            node = ("x", vcount)
            vcount += 1
            kinds[node] = "virtual"
        else:
            cid, over_arc = verdict
            node = ("c", cid)
            kinds[node] = "classical"
            oi = i if over_arc is p else j
            ui = j if oi == i else i
            parity = slot[(oi, "lo")] % 2

            def outslot(k):
                return slot[(k, "hi" if items[k].forward else "lo")]

            sign = 1 if (outslot(ui) - outslot(oi)) % 4 == 1 else -1
            crossings[node] = (sign, parity)
        degree[node] = 4
        at[i].append((x, node, slot[(i, "lo")], slot[(i, "hi")]))
        at[j].append((x, node, slot[(j, "lo")], slot[(j, "hi")]))
    for k, arc in enumerate(items):
        chain = [arc.lo]
        for x, node, lo, hi in sorted(at[k]):
            chain.append((node, lo))
            chain.append((node, hi))
        chain.append(arc.hi)
        for u, w in zip(chain[0::2], chain[1::2]):
            mate[u] = w
            mate[w] = u
    return degree, mate, kinds, crossings


# -- realization ----------------------------------------------------------------

def realize_virtual(code: GaussCode) -> PlanarDiagram:
    """A genus-0 diagram realizing ``code``; extra intersections are virtual."""
    check(code)
    g = code.graph
    node_darts, arcs = strand_structure(code)
    ports = {}
    dart_slot = {}
    vertex_ends = {}
    for v in g.vertices:
        node = ("v", v)
        ends = g.rotation(v)
        vertex_ends[node] = tuple(ends)
        ports[node] = [(i, 1) for i in range(len(ends))]
        for i, end in enumerate(ends):
            dart_slot[("v", v, end)] = (node, i)
    crossings = {}
    order = []
    for a, b, _ in arcs:
        for d in (a, b):
            if d[0] == "c" and (d[0], d[1]) not in order:
                order.append((d[0], d[1]))
    for node in order:
        c = node[1]
        sign = code.signs[c]
        pos, neg = alternating_orders()
        ccw = pos if sign > 0 else neg
        ports[node] = [(i, 1) for i in range(4)]
        for i, (s, io) in enumerate(ccw):
            dart_slot[("c", c, s, io)] = (node, i)
        crossings[node] = (sign, 0)
    degree, mate, kinds, _ = draw(
        ports, [(dart_slot[a], dart_slot[b], e) for a, b, e in arcs], lambda p, q: None)
    for node in ports:
        kinds[node] = "vertex" if node[0] == "v" else "classical"
    d = PlanarDiagram(g, kinds, degree, mate, vertex_ends, crossings)
    return d


def diagram_from_rotation(code, rotation) -> PlanarDiagram:
    """Build a crossing-only diagram from a rotation system on shadow darts.

    ``rotation`` maps each node of :func:`strand_structure` to its darts in
    counterclockwise order.  No virtual nodes are introduced, so the result
    is planar exactly when the rotation system has genus 0.
    """
    g = code.graph
    _, arcs = strand_structure(code)
    slot = {}
    degree = {}
    kinds = {}
    vertex_ends = {}
    crossings = {}
    for node, darts in rotation.items():
        degree[node] = len(darts)
        for i, d in enumerate(darts):
            slot[d] = (node, i)
        if node[0] == "v":
            kinds[node] = "vertex"
            vertex_ends[node] = tuple(d[2] for d in darts)
        else:
            kinds[node] = "classical"
            over_in = [i for i, d in enumerate(darts) if d[2:] == ("o", "in")]
            if not over_in:
                raise DiagramError("rotation at a crossing lacks strand roles")
            crossings[node] = (code.signs[node[1]], over_in[0] % 2)
    mate = {}
    for a, b, _ in arcs:
        mate[slot[a]] = slot[b]
        mate[slot[b]] = slot[a]
    return PlanarDiagram(g, kinds, degree, mate, vertex_ends, crossings)
