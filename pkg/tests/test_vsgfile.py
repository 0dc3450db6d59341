import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from helpers import BASE_GRAPHS, rand_code, rotated
from vsgraph.corpus import CORPUS, trefoil
from vsgraph.vsgfile import ParseError, load, parse, parse_document, serialize

DATA = Path(__file__).resolve().parent.parent / "data"


def test_trefoil_line():
    code = parse("vertices v\nedge a: v -> v : O1+ U2+ O3+ U1+ O2+ U3+\n")
    assert code == trefoil()


def test_comments_and_name():
    name, code = parse_document("# a knot\ngraph tre  # trailing\nvertices v\n"
                                "edge a: v -> v : O1+ U2+ O3+ U1+ O2+ U3+\n")
    assert name == "tre" and code == trefoil()


@pytest.mark.parametrize("text, line, col, fragment", [
    ("vertices v\nedge a: v -> v : Q1+ U1+\n", 2, 18, "bad passage token 'Q1+'"),
    ("vertices v\nedge a: v -> v : O1+ O1+\n", 2, 18, "role imbalance"),
    ("vertices v\nedge a: v -> w\n", 2, 14, "unknown vertex w"),
    ("vertices v\nedge a: v -> v : O1+ U1-\n", 2, 22, "conflicting signs"),
    ("vertices v\nwibble\n", 2, 1, "unknown directive"),
    ("vertices v\nedge a: v -> v\nrot v: a.t a.x\n", 3, 12, "bad end token"),
    ("vertices v v\n", 1, 12, "duplicate vertex"),
])
def test_diagnostics(text, line, col, fragment):
    with pytest.raises(ParseError) as exc:
        parse(text)
    d = exc.value.diagnostics[0]
    assert (d.line, d.col) == (line, col)
    assert fragment in d.message


def test_every_error_is_reported():
    with pytest.raises(ParseError) as exc:
        parse("vertices v\nedge a: v -> v : Q1+ X2-\n")
    assert len(exc.value.diagnostics) == 2


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_round_trip(name):
    code = CORPUS[name]()
    assert parse(serialize(code, name)) == code
    assert load(DATA / f"{name}.vsg") == code


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_round_trip_with_rotations(seed):
    rng = random.Random(seed)
    code = rand_code(rotated(rng.choice(BASE_GRAPHS), rng), rng.randint(0, 5), rng)
    text = serialize(code)
    assert parse(text) == code
    assert serialize(parse(text)) == text
