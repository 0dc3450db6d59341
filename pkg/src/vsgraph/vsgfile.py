"""Reader and writer for the ``.vsg`` text format.

    # comment
    graph trefoil
    vertices v
    edge a: v -> v : O1+ U2+ O3+ U1+ O2+ U3+
    rot v: a.t a.h

Each passage token is ``O`` or ``U``, a positive crossing number and the
crossing sign.  Both tokens of a crossing must carry the same sign.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .gauss import GaussCode, Passage, validate
from .graph import AbstractGraph, Edge, GraphError, TAIL, HEAD

_ID = re.compile(r"[A-Za-z0-9_]+\Z")
_TOKEN = re.compile(r"([OU])([1-9][0-9]*)([+-])\Z")
_END = re.compile(r"([A-Za-z0-9_]+)\.([th])\Z")


@dataclass
class Diagnostic:
    line: int
    col: int
    message: str

    def __str__(self):
        return f"{self.line}:{self.col}: {self.message}"


class ParseError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


def _words(line, start=0):
    """Whitespace-separated words of ``line[start:]`` with 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line) if m.start() >= start]


class _Parser:
    def __init__(self, text):
        self.text = text
        self.diags = []
        self.name = None
        self.vertices = []
        self.vertex_pos = {}
        self.edges = []
        self.passages = {}
        self.rotations = {}
        self.where = {}          # crossing -> (line, col) of first token
        self.signs = {}

    def error(self, line, col, msg):
        self.diags.append(Diagnostic(line, col, msg))

    def ident(self, word, ln, col, what):
        if not _ID.match(word):
            self.error(ln, col, f"bad {what} id {word!r}")
            return False
        return True

    def run(self):
        for ln, raw in enumerate(self.text.splitlines(), 1):
            line = raw.split("#", 1)[0]
            words = _words(line)
            if not words:
                continue
            head, col = words[0]
            handler = {"graph": self.graph_line, "vertices": self.vertices_line,
                       "edge": self.edge_line, "rot": self.rot_line}.get(head)
            if handler is None:
                self.error(ln, col, f"unknown directive {head!r}")
                continue
            handler(ln, line, words)

    def graph_line(self, ln, line, words):
        if len(words) != 2:
            self.error(ln, words[0][1], "expected 'graph NAME'")
            return
        if self.name is not None:
            self.error(ln, words[0][1], "duplicate graph line")
        if self.ident(words[1][0], ln, words[1][1], "graph"):
            self.name = words[1][0]

    def vertices_line(self, ln, line, words):
        for w, col in words[1:]:
            if not self.ident(w, ln, col, "vertex"):
                continue
            if w in self.vertex_pos:
                self.error(ln, col, f"duplicate vertex {w}")
                continue
            self.vertex_pos[w] = (ln, col)
            self.vertices.append(w)

    def edge_line(self, ln, line, words):
        m = re.match(r"\s*edge\s+([^\s:]+)\s*:\s*([^\s:]+)\s*->\s*([^\s:]+)\s*(?::(.*))?$", line)
        if not m:
            self.error(ln, words[0][1], "expected 'edge ID: TAIL -> HEAD : TOKENS'")
            return
        eid, tail, head = m.group(1), m.group(2), m.group(3)
        ok = all(self.ident(w, ln, m.start(i) + 1, what)
                 for i, w, what in ((1, eid, "edge"), (2, tail, "vertex"), (3, head, "vertex")))
        if not ok:
            return
        if eid in self.passages:
            self.error(ln, m.start(1) + 1, f"duplicate edge {eid}")
            return
        for v, i in ((tail, 2), (head, 3)):
            if v not in self.vertex_pos:
                self.error(ln, m.start(i) + 1, f"unknown vertex {v}")
        self.edges.append(Edge(eid, tail, head))
        seq = []
        if m.group(4) is not None:
            for tok, col in _words(line, m.start(4)):
                t = _TOKEN.match(tok)
                if not t:
                    self.error(ln, col, f"bad passage token {tok!r}")
                    continue
                c, sign = int(t.group(2)), 1 if t.group(3) == "+" else -1
                seq.append(Passage(c, t.group(1) == "O"))
                if c in self.signs and self.signs[c] != sign:
                    self.error(ln, col, f"crossing {c} has conflicting signs")
                self.signs.setdefault(c, sign)
                self.where.setdefault(c, (ln, col))
        self.passages[eid] = seq

    def rot_line(self, ln, line, words):
        m = re.match(r"\s*rot\s+([^\s:]+)\s*:(.*)$", line)
        if not m:
            self.error(ln, words[0][1], "expected 'rot VERTEX: EDGE.t|h ...'")
            return
        v = m.group(1)
        if v not in self.vertex_pos:
            self.error(ln, m.start(1) + 1, f"unknown vertex {v}")
            return
        if v in self.rotations:
            self.error(ln, m.start(1) + 1, f"duplicate rotation for {v}")
            return
        ends = []
        for tok, col in _words(line, m.start(2)):
            e = _END.match(tok)
            if not e:
                self.error(ln, col, f"bad end token {tok!r}")
                continue
            ends.append((e.group(1), TAIL if e.group(2) == "t" else HEAD))
        self.rotations[v] = (ln, tuple(ends))

    def build(self):
        self.run()
        if self.diags:
            raise ParseError(self.diags)
        rot = None
        if self.rotations:
            rot = {v: ends for v, (_, ends) in self.rotations.items()}
            missing = [v for v in self.vertices if v not in rot]
            if missing:
                line = min(ln for ln, _ in self.rotations.values())
                raise ParseError([Diagnostic(line, 1, f"no rotation for {', '.join(missing)}")])
        try:
            g = AbstractGraph(tuple(self.vertices), tuple(self.edges), rot)
        except GraphError as exc:
            raise ParseError([Diagnostic(1, 1, str(exc))]) from None
        code = GaussCode(g, self.passages, self.signs)
        problems = validate(code)
        if problems:
            diags = []
            for msg in problems:
                num = re.search(r"(\d+)\D*$", msg)
                ln, col = self.where.get(int(num.group(1)), (1, 1)) if num else (1, 1)
                diags.append(Diagnostic(ln, col, msg))
            raise ParseError(diags)
        return code


def parse_document(text):
    """Return ``(name, code)``; raises ParseError with positional diagnostics."""
    p = _Parser(text)
    code = p.build()
    return p.name, code


def parse(text) -> GaussCode:
    return parse_document(text)[1]


def load(path) -> GaussCode:
    with open(path) as fh:
        return parse(fh.read())


def serialize(code: GaussCode, name="diagram") -> str:
    g = code.graph
    lines = [f"graph {name}", "vertices " + " ".join(g.vertices)]
    for e in g.edges:
        toks = " ".join(f"{p}{'+' if code.signs[p.crossing] > 0 else '-'}" for p in code.seq(e.id))
        lines.append(f"edge {e.id}: {e.tail} -> {e.head} :" + (f" {toks}" if toks else ""))
    if g.rotations is not None:
        for v in g.vertices:
            lines.append(f"rot {v}: " + " ".join(f"{eid}.{side}" for eid, side in g.rotation(v)))
    return "\n".join(lines) + "\n"
