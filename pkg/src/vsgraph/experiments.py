"""Reproductions: link detection, K6 parity, degree-1 virtual linking, virtual unknotting."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional

from . import corpus
from .gauss import GaussCode, check
from .graph import disjoint_cycle_pairs, CyclePair
from .group import hom_count, symmetric_group, wirtinger, BudgetExceeded as HomBudget
from .invariants import (linking_number, odd_writhe, restrict, t_link_profile, yamada, yamada_class,
                         BudgetExceeded as YamadaBudget)
from .moves import ALL_MOVES, moves
from .polynomial import HalfInteger
from .realizability import realizable
from .search import DEFAULT_BUDGET, DEFAULT_DEPTH, MoveTrace, is_trivial_bounded

CERTIFIED = "certified-nonsplit"
NO_CERTIFICATE = "no-certificate"


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class LinkEntry:
    pair: CyclePair
    lk: HalfInteger
    verdict: str


@dataclass
class LinkReport:
    entries: list = field(default_factory=list)

    @property
    def certified(self):
        return [e for e in self.entries if e.verdict == CERTIFIED]


def _pair_lk(code, pair):
    edges = pair.first.edge_ids | pair.second.edge_ids
    return linking_number(restrict(code, edges), pair.first, pair.second)


def detect_links(code: GaussCode) -> LinkReport:
    check(code)
    report = LinkReport()
    for pair in disjoint_cycle_pairs(code.graph):
        lk = _pair_lk(code, pair)
        report.entries.append(LinkEntry(pair, lk, CERTIFIED if lk else NO_CERTIFICATE))
    return report


def _is_k6(g):
    if len(g.vertices) != 6 or len(g.edges) != 15:
        return False
    pairs = {frozenset((e.tail, e.head)) for e in g.edges}
    return len(pairs) == 15 and all(len(p) == 2 for p in pairs)


def conway_gordon_parity(code: GaussCode, check_realizable=True) -> int:
    check(code)
    if not _is_k6(code.graph):
        raise PreconditionError("conway_gordon_parity needs a diagram of K6")
    if check_realizable and not realizable(code):
        raise PreconditionError("code is not classical (not realizable)")
    total = HalfInteger(0)
    for e in detect_links(code).entries:
        total = total + abs(e.lk)
    if not total.is_integer:
        raise PreconditionError("half-integral linking numbers in a classical code")
    return (total.numerator // 2) % 2


def virtualize(code: GaussCode, crossings) -> GaussCode:
    crossings = set(crossings)
    unknown = crossings - set(code.signs)
    if unknown:
        raise KeyError(f"unknown crossings {sorted(unknown)}")
    ps = {eid: tuple(p for p in seq if p.crossing not in crossings)
          for eid, seq in code.passages.items()}
    return GaussCode(code.graph, ps, {c: s for c, s in code.signs.items() if c not in crossings})


@dataclass
class IvlReport:
    applicable: bool
    note: str = ""
    odd_pairs: list = field(default_factory=list)           # (pair, lk) with odd lk
    per_crossing: list = field(default_factory=list)        # (crossing, pair, lk) witness or None
    steps_ok: bool = True                                   # every lk moved by 0 or 1/2

    @property
    def holds(self):
        return self.applicable and bool(self.odd_pairs) and \
            all(w is not None for _, w, _ in self.per_crossing) and self.steps_ok


def _odd_or_half(lk: HalfInteger):
    return not lk.is_integer or lk.is_odd_integer()


def ivl1_witness(code: GaussCode) -> IvlReport:
    """Check that every single virtualization of ``code`` leaves an odd or half-integral pair."""
    check(code)
    if not realizable(code):
        raise PreconditionError("ivl1_witness needs a classical (realizable) code")
    before = detect_links(code).entries
    odd = [(e.pair, e.lk) for e in before if e.lk.is_odd_integer()]
    if not odd:
        return IvlReport(False, "no cycle pair with odd linking number; the graph is not "
                                "shown to be intrinsically linked by this diagram")
    report = IvlReport(True, odd_pairs=odd)
    for c in code.crossings:
        after = detect_links(virtualize(code, {c})).entries
        witness = None
        for e0, e1 in zip(before, after):
            if abs((e1.lk - e0.lk).numerator) > 1:
                report.steps_ok = False
            if witness is None and _odd_or_half(e1.lk):
                witness = (e1.pair, e1.lk)
        report.per_crossing.append((c, witness[0] if witness else None,
                                    witness[1] if witness else None))
    return report


# -- virtual unknotting -------------------------------------------------------------

def _require_knot(code):
    g = code.graph
    if len(g.vertices) != 1 or len(g.edges) != 1 or not g.edges[0].is_loop:
        raise PreconditionError("a single-loop (knot) code is required")


@dataclass
class VuUpper:
    crossings: Optional[tuple]
    trace: Optional[MoveTrace]
    budget_exhausted: bool = False

    @property
    def size(self):
        return None if self.crossings is None else len(self.crossings)


def vu_upper(code: GaussCode, k=3, budget=DEFAULT_BUDGET, depth=DEFAULT_DEPTH) -> VuUpper:
    """Smallest set of at most ``k`` crossings whose virtualization is shown trivial."""
    check(code)
    _require_knot(code)
    exhausted = False
    for size in range(0, min(k, len(code.signs)) + 1):
        for subset in itertools.combinations(code.crossings, size):
            r = is_trivial_bounded(virtualize(code, subset), depth=depth, budget=budget)
            if r.status == "yes":
                return VuUpper(subset, r.trace, exhausted)
            exhausted = exhausted or r.budget_exhausted
    return VuUpper(None, None, exhausted)


_S3 = symmetric_group(3)


def nontriviality_certificate(code: GaussCode) -> Optional[str]:
    """A reason the knot code is not the unknot, or None if nothing certifies it."""
    w = odd_writhe(code)
    if w:
        return f"odd writhe {w}"
    try:
        h = hom_count(wirtinger(code), _S3, budget=20000)
        if h != 6:
            return f"hom count to S3 is {h} (unknot: 6)"
    except HomBudget:
        pass
    try:
        y = yamada(code)
        if yamada_class(y) != yamada_class(yamada(corpus.unknot())):
            return f"yamada {y}"
    except YamadaBudget:
        pass
    return None


def vu_lower_singletons(code: GaussCode):
    """Per crossing: (crossing, certificate or None) for its single virtualization."""
    check(code)
    _require_knot(code)
    return [(c, nontriviality_certificate(virtualize(code, {c}))) for c in code.crossings]


# -- forbidden moves -------------------------------------------------------------------

@dataclass
class ForbiddenDemo:
    first: GaussCode
    second: GaussCode
    profile_first: object
    profile_second: object
    sequences: int
    steps: int
    violations: int

    @property
    def separated(self):
        return self.profile_first != self.profile_second


def forbidden_separation_demo(samples=500, max_len=5, max_crossings=5, seed=0) -> ForbiddenDemo:
    """Two handcuff diagrams that no sequence of moves, forbidden ones included, relates."""
    a, b = corpus.handcuff_virtual(), corpus.handcuff_plain()
    pa, pb = t_link_profile(a), t_link_profile(b)
    rng = random.Random(seed)
    steps = violations = 0
    for _ in range(samples):
        code = rng.choice((a, b))
        ref = t_link_profile(code)
        for _ in range(rng.randint(1, max_len)):
            options = [m for m in moves(code, ALL_MOVES) if len(m.code.signs) <= max_crossings]
            if not options:
                break
            code = rng.choice(options).code
            steps += 1
            if t_link_profile(code) != ref:
                violations += 1
    return ForbiddenDemo(a, b, pa, pb, samples, steps, violations)
