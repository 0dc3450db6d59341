import random

import pytest

from vsgraph.corpus import figure_eight, hopf, kinked_unknot, planar_theta, trefoil, unknot
from vsgraph.gauss import empty_code
from vsgraph.graph import loop_graph
from vsgraph.moves import CLASSICAL_MOVES, MoveKind, canonical_key, moves
from vsgraph.search import (MoveTrace, ReplayError, TraceStep, distinguishing_witness,
                            equivalent_bounded, is_trivial_bounded, replay)


def inflate(code, steps, seed):
    """Apply random crossing-adding second and first moves."""
    rng = random.Random(seed)
    for kind in steps:
        options = [m for m in moves(code, {kind}) if len(m.code.signs) > len(code.signs)]
        code = rng.choice(options).code
    return code


def test_empty_loop_is_trivial():
    r = is_trivial_bounded(unknot())
    assert r.status == "yes" and len(r.trace) == 0


def test_trefoil_is_not_trivial():
    r = is_trivial_bounded(trefoil())
    assert r.status == "no" and "yamada" in r.witness


def test_kink_removal_replays():
    r = is_trivial_bounded(kinked_unknot())
    assert r.status == "yes"
    end = replay(r.trace)
    assert canonical_key(end) == canonical_key(unknot())


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_inflated_unknot_within_depth_six(seed):
    code = inflate(unknot(), [MoveKind.R2, MoveKind.R2, MoveKind.R2], seed)
    assert len(code.signs) == 6
    r = is_trivial_bounded(code, depth=6)
    assert r.status == "yes"
    assert len(r.trace) <= 6
    assert canonical_key(replay(r.trace, CLASSICAL_MOVES)) == canonical_key(unknot())


def test_inflated_trefoil_matches_trefoil():
    code = inflate(trefoil(), [MoveKind.R1, MoveKind.R2], 3)
    r = equivalent_bounded(code, trefoil())
    assert r.status == "yes"
    assert canonical_key(replay(r.trace)) == canonical_key(trefoil())


def test_witnesses():
    assert distinguishing_witness(trefoil(), figure_eight()) is not None
    assert distinguishing_witness(hopf(), unknot()).startswith("betti")
    assert distinguishing_witness(planar_theta(), empty_code(loop_graph())) is not None
    assert distinguishing_witness(trefoil(), trefoil()) is None


def test_budget_exhaustion_is_unknown():
    code = inflate(unknot(), [MoveKind.R2, MoveKind.R2, MoveKind.R2], 0)
    r = is_trivial_bounded(code, budget=5)
    assert r.status == "unknown" and r.budget_exhausted


def test_replay_rejects_tampered_trace():
    r = is_trivial_bounded(kinked_unknot())
    step = r.trace.steps[0]
    bad = MoveTrace(r.trace.start, [TraceStep(step.kind, step.site, "0" * 40)])
    with pytest.raises(ReplayError):
        replay(bad)
    with pytest.raises(ReplayError):
        replay(r.trace, allowed={MoveKind.R2})


def test_single_loop_required():
    with pytest.raises(ValueError):
        is_trivial_bounded(hopf())
