"""Bounded equivalence search over Gauss codes.

Search runs in two phases.  First a bidirectional breadth-first search that
only uses moves which never add crossings; this settles most simplification
questions quickly.  Then a full bidirectional search in which insertions are
allowed up to two crossings above the larger input.  A "no" answer always
comes from an invariant that differs, never from the search running dry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import group as grp
from .gauss import GaussCode, check, empty_code
from .graph import betti
from .invariants import (BudgetExceeded as YamadaBudget, DEFAULT_YAMADA_BUDGET, odd_writhe,
                         t_collection_size, t_link_profile, yamada, yamada_class)
from .moves import (ALL_MOVES, CLASSICAL_MOVES, FORBIDDEN_MOVES, MoveKind, canonical_key, moves)

DEFAULT_DEPTH = 6
DEFAULT_BUDGET = 10 ** 5
TPROFILE_LIMIT = 20000


@dataclass(frozen=True)
class TraceStep:
    kind: MoveKind
    site: str
    key: str


@dataclass
class MoveTrace:
    start: GaussCode
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def lines(self):
        return [f"{i + 1}. {s.kind} {s.site} -> {s.key[:12]}" for i, s in enumerate(self.steps)]


class ReplayError(ValueError):
    pass


def replay(trace: MoveTrace, allowed=ALL_MOVES) -> GaussCode:
    """Re-apply a trace; every step must reproduce its recorded key."""
    code = trace.start
    for i, step in enumerate(trace.steps):
        if step.kind not in allowed:
            raise ReplayError(f"step {i + 1} uses disallowed move {step.kind}")
        for m in moves(code, {step.kind}):
            if m.site == step.site and canonical_key(m.code) == step.key:
                code = m.code
                break
        else:
            raise ReplayError(f"step {i + 1} ({step.kind} {step.site}) does not reproduce its key")
    return code


@dataclass
class SearchResult:
    status: str                      # "yes" | "no" | "unknown"
    trace: Optional[MoveTrace] = None
    witness: Optional[str] = None
    explored: int = 0
    budget_exhausted: bool = False

    def __bool__(self):
        return self.status == "yes"


def distinguishing_witness(a: GaussCode, b: GaussCode, forbidden=False, yamada_budget=DEFAULT_YAMADA_BUDGET):
    """Name of an invariant that differs between ``a`` and ``b``, or None."""
    ga, gb = a.graph, b.graph
    if betti(ga) != betti(gb):
        return f"betti {betti(ga)} != {betti(gb)}"
    if (sorted(ga.vertices), sorted((e.id, e.tail, e.head) for e in ga.edges)) != \
            (sorted(gb.vertices), sorted((e.id, e.tail, e.head) for e in gb.edges)):
        return "underlying graphs differ"
    if t_collection_size(ga) <= TPROFILE_LIMIT:
        if t_link_profile(a) != t_link_profile(b):
            return "t_link_profile differs"
    if forbidden:
        return None
    if len(ga.edges) == 1 and ga.edges[0].is_loop and odd_writhe(a) != odd_writhe(b):
        return f"odd writhe {odd_writhe(a)} != {odd_writhe(b)}"
    try:
        ya, yb = yamada(a, budget=yamada_budget), yamada(b, budget=yamada_budget)
        if yamada_class(ya) != yamada_class(yb):
            return "yamada differs"
    except YamadaBudget:
        pass
    s3 = grp.symmetric_group(3)
    try:
        ha = grp.hom_count(grp.wirtinger(a), s3, budget=20000)
        hb = grp.hom_count(grp.wirtinger(b), s3, budget=20000)
        if ha != hb:
            return f"hom count to S3 {ha} != {hb}"
    except grp.BudgetExceeded:
        pass
    return None


class _Budget(Exception):
    pass


def _bidirectional(a, b, allowed, depth, budget, cap, monotone, counter):
    """Meet-in-the-middle BFS over canonical keys; returns the key path or None."""
    ka, kb = canonical_key(a), canonical_key(b)
    if ka == kb:
        return [ka]
    sides = [
        {"parent": {ka: None}, "code": {ka: a}, "frontier": [ka], "depth": 0},
        {"parent": {kb: None}, "code": {kb: b}, "frontier": [kb], "depth": 0},
    ]
    while sides[0]["depth"] + sides[1]["depth"] < depth:
        live = [s for s in sides if s["frontier"]]
        if not live:
            return None
        side = min(live, key=lambda s: len(s["frontier"]))
        i = sides.index(side)
        other = sides[1 - i]
        nxt = []
        for key in side["frontier"]:
            code = side["code"][key]
            n = len(code.signs)
            for m in moves(code, allowed):
                k2 = len(m.code.signs)
                if monotone and k2 > n:
                    continue
                if k2 > cap:
                    continue
                key2 = canonical_key(m.code)
                if key2 in side["parent"]:
                    continue
                counter[0] += 1
                if counter[0] > budget:
                    raise _Budget()
                side["parent"][key2] = key
                side["code"][key2] = m.code
                if key2 in other["parent"]:
                    return _join(sides, key2)
                nxt.append(key2)
        side["frontier"] = nxt
        side["depth"] += 1
    return None


def _join(sides, meet):
    def chain(side, k):
        out = []
        while k is not None:
            out.append(k)
            k = side["parent"][k]
        return out
    fwd = chain(sides[0], meet)[::-1]    # a ... meet
    back = chain(sides[1], meet)[1:]     # after meet ... b
    return fwd + back


def _trace_from_keys(start, keys, allowed):
    trace = MoveTrace(start)
    code = start
    for key in keys[1:]:
        for m in moves(code, allowed):
            if canonical_key(m.code) == key:
                trace.steps.append(TraceStep(m.kind, m.site, key))
                code = m.code
                break
        else:
            raise AssertionError("search path is not reproducible")
    return trace


def equivalent_bounded(a: GaussCode, b: GaussCode, depth=DEFAULT_DEPTH, budget=DEFAULT_BUDGET,
                       forbidden=False, allowed=None) -> SearchResult:
    check(a)
    check(b)
    if allowed is None:
        allowed = ALL_MOVES if forbidden else CLASSICAL_MOVES
    allowed = frozenset(allowed)
    forbidden = bool(allowed & FORBIDDEN_MOVES)
    if canonical_key(a) == canonical_key(b):
        return SearchResult("yes", MoveTrace(a), explored=0)
    w = distinguishing_witness(a, b, forbidden=forbidden)
    if w is not None:
        return SearchResult("no", witness=w)
    counter = [0]
    cap = max(len(a.signs), len(b.signs)) + 2
    try:
        for monotone in (True, False):
            keys = _bidirectional(a, b, allowed, depth, budget, cap, monotone, counter)
            if keys is not None:
                return SearchResult("yes", _trace_from_keys(a, keys, allowed), explored=counter[0])
    except _Budget:
        return SearchResult("unknown", explored=counter[0], budget_exhausted=True)
    return SearchResult("unknown", explored=counter[0])


def is_trivial_bounded(code: GaussCode, depth=DEFAULT_DEPTH, budget=DEFAULT_BUDGET) -> SearchResult:
    g = code.graph
    if len(g.vertices) != 1 or len(g.edges) != 1 or not g.edges[0].is_loop:
        raise ValueError("is_trivial_bounded needs a single-loop code")
    return equivalent_bounded(code, empty_code(g), depth=depth, budget=budget)
