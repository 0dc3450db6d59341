"""Virtual spatial graph diagrams: Gauss codes, realizability, moves and invariants."""
from .graph import AbstractGraph, Cycle, CyclePair, Edge, betti, disjoint_cycle_pairs, simple_cycles
from .gauss import GaussCode, InvalidCode, Passage, ShadowCode, check, shadow, validate
from .planar import PlanarDiagram, extract_gauss, realize_virtual
from .realizability import brute_force_realizable, realizable
from .moves import MoveKind, canonical_key, moves, neighbors
from .search import equivalent_bounded, is_trivial_bounded, replay
from .invariants import linking_number, t_collection, t_link_profile, yamada
from .group import abelianization_rank, hom_count, wirtinger
from .vsgfile import ParseError, parse, serialize

__all__ = [
    "AbstractGraph", "Cycle", "CyclePair", "Edge", "betti", "disjoint_cycle_pairs", "simple_cycles",
    "GaussCode", "InvalidCode", "Passage", "ShadowCode", "check", "shadow", "validate",
    "PlanarDiagram", "extract_gauss", "realize_virtual",
    "brute_force_realizable", "realizable",
    "MoveKind", "canonical_key", "moves", "neighbors",
    "equivalent_bounded", "is_trivial_bounded", "replay",
    "linking_number", "t_collection", "t_link_profile", "yamada",
    "abelianization_rank", "hom_count", "wirtinger",
    "ParseError", "parse", "serialize",
]
__version__ = "0.1.0"
