"""Reidemeister moves as rewrites of Gauss codes.

Purely virtual moves and the detour move do not change a Gauss code, so
only moves touching classical crossings appear here.  A loop edge sitting
alone at a degree-2 vertex is treated as a cyclic sequence: its basepoint
can slide freely, so adjacency wraps around.

Vertex conventions: ``delta`` is +1 for a tail end (edge leaves the vertex)
and -1 for a head end; ``kappa`` is +1 when a strand sweeps around a vertex
counterclockwise.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from enum import Enum

from .gauss import GaussCode, Passage
from .graph import AbstractGraph, Edge, TAIL


class MoveKind(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4_OVER = "R4_over"
    R4_UNDER = "R4_under"
    R5 = "R5_vertex_twist"
    F_OVER = "F_over"
    F_UNDER = "F_under"
    F_KNOT = "F_knot"

    def __str__(self):
        return self.value


_ORDER = {k: i for i, k in enumerate(MoveKind)}
CLASSICAL_MOVES = frozenset([MoveKind.R1, MoveKind.R2, MoveKind.R3, MoveKind.R4_OVER,
                             MoveKind.R4_UNDER, MoveKind.R5])
FORBIDDEN_MOVES = frozenset([MoveKind.F_OVER, MoveKind.F_UNDER, MoveKind.F_KNOT])
ALL_MOVES = CLASSICAL_MOVES | FORBIDDEN_MOVES

# Triangle patterns admitting a third move.  T passes over x then y (or y
# then x), M passes under x and over z, B passes under y and z.  Entries are
# (x before y on T, x before z on M, y before z on B, sign x, sign y, sign z);
# obtained from arrangements of three directed lines in the plane.
R3_PATTERNS = frozenset([
    (False, False, False, -1, -1, -1), (False, False, False, 1, 1, 1),
    (False, False, True, -1, 1, 1), (False, False, True, 1, -1, -1),
    (False, True, False, -1, 1, -1), (False, True, False, 1, -1, 1),
    (False, True, True, -1, -1, 1), (False, True, True, 1, 1, -1),
    (True, False, False, -1, -1, 1), (True, False, False, 1, 1, -1),
    (True, False, True, -1, 1, -1), (True, False, True, 1, -1, 1),
    (True, True, False, -1, 1, 1), (True, True, False, 1, -1, -1),
    (True, True, True, -1, -1, -1), (True, True, True, 1, 1, 1),
])


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    site: str
    code: GaussCode


def _delta(end):
    return 1 if end[1] == TAIL else -1


class _Ctx:
    """Per-code lookup tables shared by the move generators."""

    def __init__(self, code: GaussCode):
        self.code = code
        g = code.graph
        self.g = g
        self.seqs = {eid: code.seq(eid) for eid in g.edge_ids}
        self.loc = {}
        for eid, seq in self.seqs.items():
            for i, p in enumerate(seq):
                self.loc[(p.crossing, p.over)] = (eid, i)
        self.cyclic = {e.id for e in g.edges if e.is_loop and g.degree(e.tail) == 2}
        self.next_id = max(code.signs, default=0) + 1

    def adjacent(self, eid):
        n = len(self.seqs[eid])
        pairs = [(i, i + 1) for i in range(n - 1)]
        if eid in self.cyclic and n > 2:
            pairs.append((n - 1, 0))
        return pairs

    def is_next(self, a, b):
        """True if position ``b`` directly follows ``a`` on the same edge."""
        if a[0] != b[0]:
            return False
        n = len(self.seqs[a[0]])
        if b[1] == a[1] + 1:
            return True
        return a[0] in self.cyclic and n > 2 and a[1] == n - 1 and b[1] == 0

    def build(self, removed=(), inserts=(), signs=None, swaps=(), graph=None):
        """New code: drop crossings, apply in-place swaps, then insert passages.

        ``inserts`` holds ``(edge, gap, passages)`` with gaps measured in the
        original sequence; ``swaps`` holds ``(edge, i, j)`` position swaps.
        """
        removed = set(removed)
        new_signs = {c: s for c, s in self.code.signs.items() if c not in removed}
        new_signs.update(signs or {})
        out = {}
        by_gap = {}
        for eid, gap, ps in inserts:
            by_gap.setdefault(eid, {}).setdefault(gap, []).extend(ps)
        for eid, seq in self.seqs.items():
            seq = list(seq)
            for e2, i, j in swaps:
                if e2 == eid:
                    seq[i], seq[j] = seq[j], seq[i]
            gaps = by_gap.get(eid, {})
            res = []
            for i in range(len(seq) + 1):
                res.extend(gaps.get(i, ()))
                if i < len(seq) and seq[i].crossing not in removed:
                    res.append(seq[i])
            out[eid] = tuple(res)
        return GaussCode(graph or self.g, out, new_signs)

    def end_position(self, end):
        eid, side = end
        n = len(self.seqs[eid])
        if n == 0:
            return None
        return (eid, 0 if side == TAIL else n - 1)


# -- individual move families ------------------------------------------------------

def _r1(ctx):
    out = []
    for eid in ctx.g.edge_ids:
        seq = ctx.seqs[eid]
        for i, j in ctx.adjacent(eid):
            if seq[i].crossing == seq[j].crossing:
                c = seq[i].crossing
                out.append(Move(MoveKind.R1, f"remove {c} on {eid}", ctx.build(removed=[c])))
    n = ctx.next_id
    for eid in ctx.g.edge_ids:
        for gap in range(len(ctx.seqs[eid]) + 1):
            for first in (True, False):
                for s in (1, -1):
                    ps = [Passage(n, first), Passage(n, not first)]
                    site = f"insert {'OU' if first else 'UO'}{'+' if s > 0 else '-'} on {eid}:{gap}"
                    out.append(Move(MoveKind.R1, site,
                                    ctx.build(inserts=[(eid, gap, ps)], signs={n: s})))
    return out


def _r2(ctx):
    out = []
    code = ctx.code
    for eid in ctx.g.edge_ids:
        seq = ctx.seqs[eid]
        for i, j in ctx.adjacent(eid):
            a, b = seq[i], seq[j]
            if not (a.over and b.over) or a.crossing == b.crossing:
                continue
            if code.signs[a.crossing] != -code.signs[b.crossing]:
                continue
            ua, ub = ctx.loc[(a.crossing, False)], ctx.loc[(b.crossing, False)]
            if ctx.is_next(ua, ub) or ctx.is_next(ub, ua):
                out.append(Move(MoveKind.R2, f"remove {a.crossing},{b.crossing}",
                                ctx.build(removed=[a.crossing, b.crossing])))
    n, m = ctx.next_id, ctx.next_id + 1
    gaps = [(eid, k) for eid in ctx.g.edge_ids for k in range(len(ctx.seqs[eid]) + 1)]
    for (eo, i), (eu, j) in itertools.product(gaps, gaps):
        overs = [Passage(n, True), Passage(m, True)]
        for under_first in (n, m):
            unders = [Passage(under_first, False), Passage(n + m - under_first, False)]
            for s in (1, -1):
                signs = {n: s, m: -s}
                tag = f"{'+' if s > 0 else '-'}{'u' if under_first == n else 'U'}"
                if (eo, i) != (eu, j):
                    out.append(Move(MoveKind.R2, f"insert over {eo}:{i} under {eu}:{j} {tag}",
                                    ctx.build(inserts=[(eo, i, overs), (eu, j, unders)],
                                              signs=signs)))
                else:
                    for name, ps in (("OOUU", overs + unders), ("UUOO", unders + overs)):
                        out.append(Move(MoveKind.R2, f"insert {name} {eo}:{i} {tag}",
                                        ctx.build(inserts=[(eo, i, ps)], signs=signs)))
    return out


def _r3(ctx):
    out = []
    code = ctx.code
    seen = set()
    for eid in ctx.g.edge_ids:
        seq = ctx.seqs[eid]
        for i, j in ctx.adjacent(eid):
            if not (seq[i].over and seq[j].over) or seq[i].crossing == seq[j].crossing:
                continue
            for x, y in ((seq[i].crossing, seq[j].crossing), (seq[j].crossing, seq[i].crossing)):
                ux = ctx.loc[(x, False)]
                for z_pos in _neighbours_on_edge(ctx, ux):
                    pz = ctx.seqs[z_pos[0]][z_pos[1]]
                    z = pz.crossing
                    if not pz.over or z in (x, y):
                        continue
                    uy, uz = ctx.loc[(y, False)], ctx.loc[(z, False)]
                    if not (ctx.is_next(uy, uz) or ctx.is_next(uz, uy)):
                        continue
                    ox, oy = ctx.loc[(x, True)], ctx.loc[(y, True)]
                    oz = ctx.loc[(z, True)]
                    pat = (ctx.is_next(ox, oy), ctx.is_next(ux, oz), ctx.is_next(uy, uz),
                           code.signs[x], code.signs[y], code.signs[z])
                    if pat not in R3_PATTERNS:
                        continue
                    key = (x, y, z)
                    if key in seen:
                        continue
                    seen.add(key)
                    swaps = [(ox[0], ox[1], oy[1]), (ux[0], ux[1], oz[1]), (uy[0], uy[1], uz[1])]
                    out.append(Move(MoveKind.R3, f"triangle {x},{y},{z}", ctx.build(swaps=swaps)))
    return out


def _neighbours_on_edge(ctx, pos):
    eid, i = pos
    out = []
    for a, b in ctx.adjacent(eid):
        if a == i:
            out.append((eid, b))
        elif b == i:
            out.append((eid, a))
    return out


def _sweep(rot, start, k, kappa):
    d = len(rot)
    return [rot[(start + kappa * t) % d] for t in range(k)]


def _r4_vertex(ctx, v):
    """Moves passing a strand across vertex ``v``."""
    g, code = ctx.g, ctx.code
    rot = list(g.rotation(v))
    d = len(rot)
    incident = {end[0] for end in rot}
    out = []
    # existing blocks: a strand S crosses ends b1..bk, all at their nearest passages
    for start in range(d):
        for kappa in (1, -1):
            for k in range(1, d + 1):
                block = _sweep(rot, start, k, kappa)
                info = _block_info(ctx, block, incident)
                if info is None:
                    break
                eS, first, rho, crossings = info
                if any(code.signs[c] != -rho * _delta(end) * kappa for end, c in zip(block, crossings)):
                    continue
                rest = _sweep(rot, (start - kappa) % d, d - k, -kappa)
                new_kappa = -kappa
                out.append(_r4_apply(ctx, v, block, info, rest, new_kappa, kappa))
    # empty block: S passes near v crossing nothing
    for eS in g.edge_ids:
        if eS in incident:
            continue
        for gap in range(len(ctx.seqs[eS]) + 1):
            for vg in range(d):
                for kappa in (1, -1):
                    for rho in (1, -1):
                        if kappa > 0:
                            rest = _sweep(rot, vg, d, -1)
                        else:
                            rest = _sweep(rot, (vg + 1) % d, d, 1)
                        out.append(_r4_insert(ctx, v, eS, gap, rest, -kappa, rho,
                                              f"empty {vg}{'+' if kappa > 0 else '-'}"))
    return [m for m in out if m is not None]


def _block_info(ctx, block, incident):
    """(edge of S, first position on S, role of S, crossings) or None."""
    crossings = []
    positions = []
    rho = None
    ends_seen = set()
    for end in block:
        pos = ctx.end_position(end)
        if pos is None or pos in ends_seen:
            return None
        ends_seen.add(pos)
        p = ctx.seqs[pos[0]][pos[1]]
        r = -1 if p.over else 1      # role of S is opposite to the end's passage
        if rho is None:
            rho = r
        elif r != rho:
            return None
        other = ctx.loc[(p.crossing, not p.over)]
        if other[0] in incident:
            return None
        crossings.append(p.crossing)
        positions.append(other)
    if len(set(crossings)) != len(crossings):
        return None
    for a, b in zip(positions, positions[1:]):
        if not ctx.is_next(a, b):
            return None
    return positions[0][0], positions[0][1], rho, crossings


def _r4_apply(ctx, v, block, info, rest, new_kappa, kappa):
    eS, first, rho, crossings = info
    k = len(crossings)
    n = len(ctx.seqs[eS])
    kind = MoveKind.R4_OVER if rho > 0 else MoveKind.R4_UNDER
    # gap on S (in original indexing) where the new block goes
    if eS in ctx.cyclic and first + k > n:
        gap = 0       # the block wraps; re-inserting at the basepoint is equivalent
    else:
        gap = first
    site = f"{v} sweep {','.join(map(str, crossings))}{'+' if kappa > 0 else '-'}"
    return _r4_insert(ctx, v, eS, gap, rest, new_kappa, rho, site, removed=crossings, kind=kind)


def _r4_insert(ctx, v, eS, gap, ends, kappa, rho, site, removed=(), kind=None):
    kind = kind or (MoveKind.R4_OVER if rho > 0 else MoveKind.R4_UNDER)
    n = ctx.next_id
    signs = {}
    s_passages = []
    at_ends = []
    for t, end in enumerate(ends):
        c = n + t
        signs[c] = -rho * _delta(end) * kappa
        s_passages.append(Passage(c, rho > 0))
        at_ends.append((end, Passage(c, rho < 0)))
    final = _end_inserts(ctx, at_ends)
    final.append((eS, gap, s_passages))
    return Move(kind, f"{site} at {eS}:{gap}", ctx.build(removed=removed, inserts=final, signs=signs))


def _end_inserts(ctx, items):
    """Insert passages nearest to vertex ends: front for tails, back for heads."""
    front, back = {}, {}
    for (eid, side), p in items:
        (front if side == TAIL else back).setdefault(eid, []).append(p)
    out = []
    for eid in set(front) | set(back):
        n = len(ctx.seqs[eid])
        # a tail-end passage is met first, so several at one tail stack in reverse
        f = list(reversed(front.get(eid, [])))
        b = back.get(eid, [])
        if n == 0:
            out.append((eid, 0, f + b))
        else:
            if f:
                out.append((eid, 0, f))
            if b:
                out.append((eid, n, b))
    return out


def _r4(ctx):
    out = []
    for v in ctx.g.vertices:
        d = ctx.g.degree(v)
        if d == 0:
            continue
        if d == 2 and all(end[0] in ctx.cyclic for end in ctx.g.rotation(v)):
            continue
        out.extend(_r4_vertex(ctx, v))
    return out


def _r5(ctx):
    """Rigid flip of a 4-valent vertex: a twist on one pair of ends moves to the other pair."""
    out = []
    g = ctx.g
    for v in g.vertices:
        rot = list(g.rotation(v))
        if len(rot) != 4:
            continue
        for i in range(4):
            a, b = rot[i], rot[(i + 1) % 4]
            pa, pb = ctx.end_position(a), ctx.end_position(b)
            if pa is None or pb is None or pa == pb:
                continue
            qa, qb = ctx.seqs[pa[0]][pa[1]], ctx.seqs[pb[0]][pb[1]]
            if qa.crossing != qb.crossing:
                continue
            c = qa.crossing
            earlier_over = qa.over
            want = -_delta(a) * _delta(b) if earlier_over else _delta(a) * _delta(b)
            if ctx.code.signs[c] != want:
                continue
            new_rot = [rot[(i + 1) % 4], rot[i], rot[(i + 3) % 4], rot[(i + 2) % 4]]
            na, nb = new_rot[2], new_rot[3]
            n = ctx.next_id
            sign = -_delta(na) * _delta(nb) if earlier_over else _delta(na) * _delta(nb)
            rots = dict(g.effective_rotations())
            rots[v] = tuple(new_rot)
            ng = g.with_rotations(rots)
            inserts = _end_inserts(ctx, [(na, Passage(n, earlier_over)),
                                         (nb, Passage(n, not earlier_over))])
            out.append(Move(MoveKind.R5, f"{v} flip {c} slot {i}",
                            ctx.build(removed=[c], inserts=inserts, signs={n: sign}, graph=ng)))
    return out


def _forbidden(ctx):
    out = []
    for eid in ctx.g.edge_ids:
        seq = ctx.seqs[eid]
        for i, j in ctx.adjacent(eid):
            a, b = seq[i], seq[j]
            if a.crossing == b.crossing:
                continue
            if a.over and b.over:
                kind = MoveKind.F_OVER
            elif not a.over and not b.over:
                kind = MoveKind.F_UNDER
            else:
                kind = MoveKind.F_KNOT
            out.append(Move(kind, f"swap {a}{b} on {eid}:{i}", ctx.build(swaps=[(eid, i, j)])))
    return out


def moves(code: GaussCode, allowed=CLASSICAL_MOVES):
    """Every single-move rewrite of ``code`` with kind in ``allowed``, sorted by (kind, site)."""
    allowed = frozenset(allowed)
    ctx = _Ctx(code)
    out = []
    if MoveKind.R1 in allowed:
        out += _r1(ctx)
    if MoveKind.R2 in allowed:
        out += _r2(ctx)
    if MoveKind.R3 in allowed:
        out += _r3(ctx)
    if allowed & {MoveKind.R4_OVER, MoveKind.R4_UNDER}:
        out += [m for m in _r4(ctx) if m.kind in allowed]
    if MoveKind.R5 in allowed:
        out += _r5(ctx)
    if allowed & FORBIDDEN_MOVES:
        out += [m for m in _forbidden(ctx) if m.kind in allowed]
    seen = set()
    uniq = []
    for m in sorted(out, key=lambda m: (_ORDER[m.kind], m.site)):
        if (m.kind, m.code) in seen:
            continue
        seen.add((m.kind, m.code))
        uniq.append(m)
    return uniq


def neighbors(code: GaussCode, allowed=CLASSICAL_MOVES):
    return [(m.kind, m.code) for m in moves(code, allowed)]


def removal_moves(code, allowed=CLASSICAL_MOVES):
    """Moves that do not increase the number of classical crossings."""
    n = len(code.signs)
    return [m for m in moves(code, allowed) if len(m.code.signs) <= n]


# -- canonical keys --------------------------------------------------------------

def _min_cyclic(seq):
    if not seq:
        return tuple(seq)
    return min(tuple(seq[i:] + seq[:i]) for i in range(len(seq)))


def canonical_form(code: GaussCode, unordered_components=False):
    """Hashable normal form up to crossing relabeling and cyclic basepoints.

    With ``unordered_components`` the names of vertices and edges are
    ignored and connected components may be permuted.
    """
    g = code.graph
    if unordered_components:
        return _unordered_form(code)
    cyclic = {e.id for e in g.edges if e.is_loop and g.degree(e.tail) == 2}
    states = [({}, ())]
    for eid in sorted(g.edge_ids):
        seq = list(code.seq(eid))
        rotations = [seq[i:] + seq[:i] for i in range(len(seq))] if eid in cyclic and seq else [seq]
        best = None
        nxt = []
        for labels, enc in states:
            for r in rotations:
                lab = dict(labels)
                word = []
                for p in r:
                    if p.crossing not in lab:
                        lab[p.crossing] = len(lab) + 1
                    word.append((lab[p.crossing], p.over, code.signs[p.crossing]))
                word = tuple(word)
                if best is None or word < best:
                    best = word
                    nxt = [(lab, enc + ((eid, word),))]
                elif word == best:
                    nxt.append((lab, enc + ((eid, word),)))
        states = nxt
    rot = tuple(sorted((v, _min_cyclic(list(g.rotation(v)))) for v in g.vertices))
    edges = tuple(sorted((e.id, e.tail, e.head) for e in g.edges))
    return (tuple(sorted(g.vertices)), edges, rot, states[0][1])


def _unordered_form(code):
    g = code.graph
    comps = g.components()
    best = None
    if len(comps) > 5:
        raise ValueError("too many components to order canonically")
    for perm in itertools.permutations(comps):
        vname = {}
        ename = {}
        for ci, comp in enumerate(perm):
            for k, v in enumerate(sorted(comp)):
                vname[v] = f"c{ci}v{k}"
            for k, e in enumerate(sorted(e.id for e in g.edges if e.tail in comp)):
                ename[e] = f"c{ci}e{k}"
        rot = None
        if g.rotations is not None:
            rot = {vname[v]: tuple((ename[x], s) for x, s in ends) for v, ends in g.rotations}
        ng = AbstractGraph(tuple(vname[v] for v in g.vertices),
                           tuple(Edge(ename[e.id], vname[e.tail], vname[e.head]) for e in g.edges),
                           rot)
        nc = GaussCode(ng, {ename[k]: v for k, v in code.passages.items()}, code.signs)
        form = canonical_form(nc)
        if best is None or repr(form) < repr(best):
            best = form
    return best


def canonical_key(code: GaussCode, unordered_components=False) -> str:
    return hashlib.sha1(repr(canonical_form(code, unordered_components)).encode()).hexdigest()
