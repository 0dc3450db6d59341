"""Wirtinger presentations and counting homomorphisms into finite groups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .gauss import GaussCode, check
from .graph import TAIL, HEAD


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple          # names
    relators: tuple            # words: ((generator index, +-1), ...)

    def word_str(self, w):
        if not w:
            return "1"
        return " ".join(self.generators[g] + ("" if e > 0 else "^-1") for g, e in w)

    def __str__(self):
        rel = ", ".join(self.word_str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rel} >"


def _free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def wirtinger(code: GaussCode, crossing_exponent=-1, vertex_order=1) -> GroupPresentation:
    """Presentation with one generator per over-arc.

    Arcs end at under-passages and at graph vertices; virtual crossings are
    invisible.  Degree-2 vertices joining a head to a tail just continue the
    arc, so a knot code gets the usual one-generator-per-arc presentation.

    The leaving under-arc is ``o^-s a o^s`` for an over-arc ``o``, incoming
    under-arc ``a`` and crossing sign ``s``; vertex relators read ends in
    counterclockwise order.  Flipping exactly one of these two conventions
    breaks invariance under strands passing beneath a vertex.
    """
    check(code)
    g = code.graph
    seg_count = {}
    under_seg = {}   # crossing -> (edge, incoming segment index)
    over_seg = {}
    for eid in g.edge_ids:
        k = 0
        for p in code.seq(eid):
            if p.over:
                over_seg[p.crossing] = (eid, k)
            else:
                under_seg[p.crossing] = (eid, k)
                k += 1
        seg_count[eid] = k + 1

    segs = [(eid, k) for eid in g.edge_ids for k in range(seg_count[eid])]
    parent = {s: s for s in segs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def end_seg(end):
        eid, side = end
        return (eid, 0) if side == TAIL else (eid, seg_count[eid] - 1)

    vertex_words = []
    for v in g.vertices:
        rot = g.rotation(v)
        sides = sorted(s for _, s in rot)
        if len(rot) == 2 and sides == [HEAD, TAIL]:
            a, b = (end_seg(e) for e in rot)
            parent[find(a)] = find(b)
            continue
        vertex_words.append([(end_seg(e), 1 if e[1] == TAIL else -1) for e in rot][::vertex_order])

    reps = []
    for s in segs:
        r = find(s)
        if r not in reps:
            reps.append(r)
    index = {r: i for i, r in enumerate(reps)}
    gen = lambda s: index[find(s)]

    relators = []
    for c in code.crossings:
        eu, k = under_seg[c]
        o = gen(over_seg[c])
        e = crossing_exponent * code.signs[c]
        w = ((o, e), (gen((eu, k)), 1), (o, -e), (gen((eu, k + 1)), -1))
        relators.append(w)
    for w in vertex_words:
        relators.append(tuple((gen(s), x) for s, x in w))
    relators = [r for r in (_free_reduce(r) for r in relators)]
    names = tuple(f"x{i + 1}" for i in range(len(reps)))
    return GroupPresentation(names, tuple(relators))


def abelianization_rank(p: GroupPresentation) -> int:
    """Free rank of the abelianization (generators minus rank of the exponent matrix)."""
    n = len(p.generators)
    rows = []
    for r in p.relators:
        row = [Fraction(0)] * n
        for g, e in r:
            row[g] += e
        rows.append(row)
    rank = 0
    col = 0
    while rows and col < n:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return n - rank


# -- finite groups --------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    name: str
    elements: tuple      # permutations as tuples
    table: tuple         # table[i][j] = index of elements[i] * elements[j]
    inverse: tuple
    identity: int

    @classmethod
    def from_permutations(cls, name, perms):
        perms = tuple(perms)
        idx = {p: i for i, p in enumerate(perms)}
        # (p * q)(x) = p(q(x)): apply q first
        table = tuple(tuple(idx[tuple(p[q[x]] for x in range(len(q)))] for q in perms)
                      for p in perms)
        ident = idx[tuple(range(len(perms[0])))]
        inverse = tuple(next(j for j in range(len(perms)) if table[i][j] == ident)
                        for i in range(len(perms)))
        return cls(name, perms, table, inverse, ident)

    def __len__(self):
        return len(self.elements)


def cyclic_group(n) -> FiniteGroup:
    perms = [tuple((x + k) % n for x in range(n)) for k in range(n)]
    return FiniteGroup.from_permutations(f"Z{n}", perms)


def symmetric_group(n) -> FiniteGroup:
    return FiniteGroup.from_permutations(f"S{n}", itertools.permutations(range(n)))


def group_by_name(name) -> FiniteGroup:
    key = name.upper().replace("/", "")
    if key.startswith("Z") and key[1:].isdigit() and int(key[1:]) > 0:
        return cyclic_group(int(key[1:]))
    if key.startswith("S") and key[1:].isdigit() and 1 <= int(key[1:]) <= 5:
        return symmetric_group(int(key[1:]))
    raise ValueError(f"unknown group {name!r} (try Z3, S3)")


def _eval(group, word, assign):
    x = group.identity
    for g, e in word:
        v = assign[g] if e > 0 else group.inverse[assign[g]]
        x = group.table[x][v]
    return x


def hom_count(p: GroupPresentation, group: FiniteGroup, budget=10 ** 6) -> int:
    """Number of homomorphisms from the presented group into ``group``.

    Backtracking search; a relator with a single free generator occurring
    once determines that generator.  ``budget`` bounds the number of search
    nodes visited.
    """
    n = len(p.generators)
    rels = [r for r in p.relators if r]
    occurs = [sum(1 for r in rels for g, _ in r if g == i) for i in range(n)]
    nodes = 0

    def propagate(assign):
        changed = True
        while changed:
            changed = False
            for r in rels:
                free = [i for i, (g, _) in enumerate(r) if assign[g] is None]
                if not free:
                    if _eval(group, r, assign) != group.identity:
                        return False
                    continue
                if len(free) == 1:
                    i = free[0]
                    g, e = r[i]
                    u = _eval(group, r[:i], assign)
                    v = _eval(group, r[i + 1:], assign)
                    # u g^e v = 1  =>  g^e = u^-1 v^-1
                    val = group.table[group.inverse[u]][group.inverse[v]]
                    assign[g] = val if e > 0 else group.inverse[val]
                    changed = True
        return True

    def search(assign):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"homomorphism search exceeded {budget} nodes")
        assign = list(assign)
        if not propagate(assign):
            return 0
        free = [i for i in range(n) if assign[i] is None]
        if not free:
            return 1
        g = max(free, key=lambda i: (occurs[i], -i))
        total = 0
        for x in range(len(group)):
            assign[g] = x
            total += search(assign)
        return total

    return search([None] * n)


def brute_hom_count(p: GroupPresentation, group: FiniteGroup) -> int:
    n = len(p.generators)
    return sum(1 for a in itertools.product(range(len(group)), repeat=n)
               if all(_eval(group, r, a) == group.identity for r in p.relators))
