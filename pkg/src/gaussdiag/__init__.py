"""Gauss diagrams for virtual knots.

Parse and serialize Gauss codes, detect and apply the Reidemeister moves
R1/R2/R3 (R3 via the matched-triple and 3-sign analysis), search for
simplifications toward the unknot, and render diagrams.
"""

from .codec import (
    ParseError,
    from_structured,
    parse_gauss_code,
    serialize_gauss_code,
    to_structured,
)
from .diagram import (
    EMPTY,
    HEAD,
    TAIL,
    Endpoint,
    GaussDiagram,
    adjacent,
    canonical,
    chords_cross,
    enumerate_diagrams,
    make_diagram,
    random_diagram,
    rotate,
    same_diagram,
    writhe,
)
from .moves import (
    CensusResult,
    ChordNumbers,
    Move,
    MoveNotApplicable,
    R1Delete,
    R1Insert,
    R2Delete,
    R2Insert,
    R3,
    TripleAnalysis,
    analyze_triple,
    apply_move,
    census_movable_triples,
    enumerate_moves,
    format_move,
    parse_move,
    r1_removable_chords,
    r2_removable_pairs,
    r3_movable_triples,
)
from .render import RenderOptions, render
from .simplify import (
    SearchLimits,
    SimplifyResult,
    TraceCheck,
    format_trace,
    reduce_greedy,
    simplify,
    verify_trace,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "HEAD",
    "TAIL",
    "CensusResult",
    "ChordNumbers",
    "Endpoint",
    "GaussDiagram",
    "Move",
    "MoveNotApplicable",
    "ParseError",
    "R1Delete",
    "R1Insert",
    "R2Delete",
    "R2Insert",
    "R3",
    "RenderOptions",
    "SearchLimits",
    "SimplifyResult",
    "TraceCheck",
    "TripleAnalysis",
    "adjacent",
    "analyze_triple",
    "apply_move",
    "canonical",
    "census_movable_triples",
    "chords_cross",
    "enumerate_diagrams",
    "enumerate_moves",
    "format_move",
    "format_trace",
    "from_structured",
    "make_diagram",
    "parse_gauss_code",
    "parse_move",
    "r1_removable_chords",
    "r2_removable_pairs",
    "r3_movable_triples",
    "random_diagram",
    "reduce_greedy",
    "render",
    "rotate",
    "same_diagram",
    "serialize_gauss_code",
    "simplify",
    "to_structured",
    "verify_trace",
    "writhe",
]
