"""Reidemeister moves R1, R2, R3 on Gauss diagrams.

R1 deletes/inserts a chord whose head and tail are adjacent.  R2
deletes/inserts a pair of opposite-sign chords with adjacent heads and
adjacent tails.  R3 rearranges a *matched* triple: three chords whose six
endpoints tile into three pairs, each pair adjacent in the full diagram,
classified as one heads-pair, one tails-pair, and one mixed pair whose
head and tail belong to distinct chords.

For a matched triple each chord gets three numbers: its crossing sign;
its parity (+1 iff it crosses an even number of the other two chords);
and its direction (+1 iff it points counterclockwise around the three
arcs, i.e. its head sits on the arc cyclically after its tail's arc).
The 3-sign is the product.  A matched triple is 3-movable exactly when
all three 3-signs agree; applying the move swaps the two chord ends on
each of the three arcs.

Six cyclically ordered endpoints admit at most two tilings into three
consecutive pairs.  Both are admissible only when the six positions fill
the whole circle (a standalone 3-chord diagram); a triple is matched when
EITHER tiling qualifies, and movable when either qualifying tiling has
equal 3-signs.  Analysis results report the witness tiling: the first
movable one (preferring the pairing that starts at the least position),
else the first qualifying one.  This keeps every verdict
rotation-invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Union

from .diagram import (
    HEAD,
    TAIL,
    Endpoint,
    GaussDiagram,
    _encode,
    chords_cross,
    enumerate_diagrams,
    label_key,
    make_diagram,
    rotate,
)


class MoveNotApplicable(Exception):
    """The move's precondition fails on the target diagram."""


@dataclass(frozen=True)
class R1Delete:
    chord: str


@dataclass(frozen=True)
class R1Insert:
    gap: int
    sign: int
    head_first: bool  # True: head immediately counterclockwise-before tail


@dataclass(frozen=True)
class R2Delete:
    chords: tuple

    def __post_init__(self):
        pair = tuple(sorted(self.chords, key=label_key))
        if len(pair) != 2 or pair[0] == pair[1]:
            raise ValueError("R2Delete needs two distinct chords")
        object.__setattr__(self, "chords", pair)


@dataclass(frozen=True)
class R2Insert:
    head_gap: int
    tail_gap: int
    first_sign: int
    crossed: bool


@dataclass(frozen=True)
class R3:
    chords: tuple

    def __post_init__(self):
        triple = tuple(sorted(self.chords, key=label_key))
        if len(triple) != 3 or len(set(triple)) != 3:
            raise ValueError("R3 needs three distinct chords")
        object.__setattr__(self, "chords", triple)


Move = Union[R1Delete, R1Insert, R2Delete, R2Insert, R3]


@dataclass(frozen=True)
class ChordNumbers:
    """Per-chord analysis record for a matched triple."""

    sign: int
    parity: int
    direction: int
    three_sign: int


@dataclass(frozen=True)
class TripleAnalysis:
    """Verdict for one chord triple.

    When matched, the three arcs are reported as (start, end) position
    pairs with end == start+1 (mod 2n), and ``chords`` maps each label to
    its ChordNumbers.  movable == matched and all three 3-signs equal.
    """

    matched: bool
    movable: bool
    heads_arc: tuple | None
    tails_arc: tuple | None
    mixed_arc: tuple | None
    chords: Mapping[str, ChordNumbers]


def r1_removable_chords(d: GaussDiagram) -> list:
    """Chords whose head and tail are adjacent, ordered by the position
    where the adjacent pair starts (the p of the (p, p+1) adjacency)."""
    m = len(d.endpoints)
    out = []
    for p in range(m):
        if d.endpoints[p].chord == d.endpoints[(p + 1) % m].chord:
            if d.endpoints[p].chord not in out:
                out.append(d.endpoints[p].chord)
    return out


def r2_removable_pairs(d: GaussDiagram) -> list:
    """Unordered pairs {a, b} with adjacent heads, adjacent tails, and
    opposite signs; ordered by their sorted endpoint positions."""
    m = len(d.endpoints)
    found = []
    labels = d.chords()
    for a, b in itertools.combinations(sorted(labels, key=label_key), 2):
        if d.signs[a] == d.signs[b]:
            continue
        ha, hb = d.head_position(a), d.head_position(b)
        ta, tb = d.tail_position(a), d.tail_position(b)
        if (hb - ha) % m not in (1, m - 1):
            continue
        if (tb - ta) % m not in (1, m - 1):
            continue
        found.append((tuple(sorted((ha, hb, ta, tb))), (a, b)))
    found.sort()
    return [pair for _, pair in found]


def _classify_tiling(d: GaussDiagram, pairs):
    """Check one candidate tiling (three ccw-oriented position pairs).

    Returns (heads_arc, tails_arc, mixed_arc) when every pair is adjacent
    in the full diagram and the pairs classify as exactly one heads-pair,
    one tails-pair, and one mixed pair with head and tail of distinct
    chords; otherwise None.
    """
    m = len(d.endpoints)
    heads = tails = mixed = None
    for a, b in pairs:
        if b != (a + 1) % m:
            return None
        ra, rb = d.endpoints[a].role, d.endpoints[b].role
        if ra == HEAD and rb == HEAD:
            if heads is not None:
                return None
            heads = (a, b)
        elif ra == TAIL and rb == TAIL:
            if tails is not None:
                return None
            tails = (a, b)
        else:
            if mixed is not None:
                return None
            if d.endpoints[a].chord == d.endpoints[b].chord:
                return None
            mixed = (a, b)
    if heads is None or tails is None or mixed is None:
        return None
    return heads, tails, mixed


def _chord_numbers(d: GaussDiagram, triple, arcs) -> dict:
    # arcs in ccw cyclic order = ascending start position (the wrap arc,
    # if any, starts at 2n-1 and sorts last)
    ordered = sorted(arcs)
    arc_of = {}
    for idx, (a, b) in enumerate(ordered):
        arc_of[a] = idx
        arc_of[b] = idx
    numbers = {}
    for c in triple:
        i = arc_of[d.tail_position(c)]
        j = arc_of[d.head_position(c)]
        direction = 1 if j == (i + 1) % 3 else -1
        crossings = sum(1 for x in triple if x != c and chords_cross(d, c, x))
        parity = 1 if crossings % 2 == 0 else -1
        sign = d.signs[c]
        numbers[c] = ChordNumbers(
            sign=sign, parity=parity, direction=direction,
            three_sign=sign * parity * direction,
        )
    return numbers


def _qualifying_tilings(d: GaussDiagram, labels) -> list:
    """Both candidate tilings of the triple's six endpoints, filtered to
    the qualifying ones; each entry is (arcs, numbers, movable).

    The six positions, sorted as q0 < ... < q5, admit exactly two tilings
    into consecutive pairs: (q0 q1)(q2 q3)(q4 q5) and (q1 q2)(q3 q4)(q5 q0).
    Both can qualify only when the six endpoints fill the whole circle.
    """
    q = sorted(p for c in labels for p in d.positions_of(c))
    candidates = (
        ((q[0], q[1]), (q[2], q[3]), (q[4], q[5])),
        ((q[1], q[2]), (q[3], q[4]), (q[5], q[0])),
    )
    out = []
    for pairs in candidates:
        arcs = _classify_tiling(d, pairs)
        if arcs is None:
            continue
        numbers = _chord_numbers(d, labels, arcs)
        movable = len({rec.three_sign for rec in numbers.values()}) == 1
        out.append((arcs, numbers, movable))
    return out


def analyze_triple(d: GaussDiagram, triple) -> TripleAnalysis:
    """Full matched/movable analysis of a chord triple.

    The triple is matched iff at least one tiling qualifies (see
    _classify_tiling) and movable iff some qualifying tiling has all
    three 3-signs equal.  The reported arcs and numbers come from the
    witness: the first movable tiling, else the first qualifying one.
    """
    labels = tuple(dict.fromkeys(triple))
    if len(labels) != 3:
        raise ValueError(f"need three distinct chords, got {tuple(triple)!r}")
    for c in labels:
        d.sign_of(c)
    qualifying = _qualifying_tilings(d, labels)
    if not qualifying:
        return TripleAnalysis(False, False, None, None, None, {})
    witness = next((w for w in qualifying if w[2]), qualifying[0])
    (heads, tails, mixed), numbers, movable = witness
    return TripleAnalysis(
        matched=True,
        movable=movable,
        heads_arc=heads,
        tails_arc=tails,
        mixed_arc=mixed,
        chords=numbers,
    )


def r3_movable_triples(d: GaussDiagram) -> list:
    """All movable triples, as label tuples in sorted order."""
    labels = sorted(d.chords(), key=label_key)
    out = []
    for triple in itertools.combinations(labels, 3):
        if analyze_triple(d, triple).movable:
            out.append(triple)
    return out


def _fresh_labels(d: GaussDiagram, count: int) -> list:
    out = []
    k = 1
    while len(out) < count:
        if str(k) not in d.signs:
            out.append(str(k))
        k += 1
    return out


def _check_gap(d: GaussDiagram, gap: int):
    m = len(d.endpoints)
    limit = max(1, m)
    if not 0 <= gap < limit:
        raise MoveNotApplicable(f"invalid gap {gap}: valid gaps are 0..{limit - 1}")


def apply_move(d: GaussDiagram, move: Move) -> GaussDiagram:
    """Apply one move, or raise MoveNotApplicable naming the failed condition."""
    m = len(d.endpoints)

    if isinstance(move, R1Delete):
        c = move.chord
        if c not in d.signs:
            raise MoveNotApplicable(f"chord {c} not in diagram")
        t, h = d.tail_position(c), d.head_position(c)
        if (h - t) % m not in (1, m - 1):
            raise MoveNotApplicable(
                f"chord {c} endpoints are not adjacent (positions {t} and {h})"
            )
        eps = [ep for ep in d.endpoints if ep.chord != c]
        signs = {k: v for k, v in d.signs.items() if k != c}
        return make_diagram(eps, signs)

    if isinstance(move, R2Delete):
        a, b = move.chords
        for c in (a, b):
            if c not in d.signs:
                raise MoveNotApplicable(f"chord {c} not in diagram")
        if d.signs[a] == d.signs[b]:
            raise MoveNotApplicable(f"chords {a} and {b} have the same sign")
        ha, hb = d.head_position(a), d.head_position(b)
        if (hb - ha) % m not in (1, m - 1):
            raise MoveNotApplicable(f"heads of chords {a} and {b} are not adjacent")
        ta, tb = d.tail_position(a), d.tail_position(b)
        if (tb - ta) % m not in (1, m - 1):
            raise MoveNotApplicable(f"tails of chords {a} and {b} are not adjacent")
        eps = [ep for ep in d.endpoints if ep.chord not in (a, b)]
        signs = {k: v for k, v in d.signs.items() if k not in (a, b)}
        return make_diagram(eps, signs)

    if isinstance(move, R1Insert):
        _check_gap(d, move.gap)
        if move.sign not in (1, -1):
            raise MoveNotApplicable(f"sign must be +1 or -1, got {move.sign!r}")
        (lab,) = _fresh_labels(d, 1)
        block = (
            [Endpoint(lab, HEAD), Endpoint(lab, TAIL)]
            if move.head_first
            else [Endpoint(lab, TAIL), Endpoint(lab, HEAD)]
        )
        eps = list(d.endpoints)
        eps[move.gap : move.gap] = block
        signs = dict(d.signs)
        signs[lab] = move.sign
        return make_diagram(eps, signs)

    if isinstance(move, R2Insert):
        _check_gap(d, move.head_gap)
        _check_gap(d, move.tail_gap)
        if move.first_sign not in (1, -1):
            raise MoveNotApplicable(f"sign must be +1 or -1, got {move.first_sign!r}")
        x, y = _fresh_labels(d, 2)
        heads_block = [Endpoint(x, HEAD), Endpoint(y, HEAD)]
        tails_block = (
            [Endpoint(x, TAIL), Endpoint(y, TAIL)]
            if move.crossed
            else [Endpoint(y, TAIL), Endpoint(x, TAIL)]
        )
        eps = list(d.endpoints)
        if move.head_gap == move.tail_gap:
            eps[move.head_gap : move.head_gap] = tails_block + heads_block
        elif move.head_gap > move.tail_gap:
            eps[move.head_gap : move.head_gap] = heads_block
            eps[move.tail_gap : move.tail_gap] = tails_block
        else:
            eps[move.tail_gap : move.tail_gap] = tails_block
            eps[move.head_gap : move.head_gap] = heads_block
        signs = dict(d.signs)
        signs[x] = move.first_sign
        signs[y] = -move.first_sign
        return make_diagram(eps, signs)

    if isinstance(move, R3):
        analysis = analyze_triple(d, move.chords)
        if not analysis.matched:
            raise MoveNotApplicable(f"triple {move.chords} is not matched")
        if not analysis.movable:
            raise MoveNotApplicable(
                f"triple {move.chords} is matched but its 3-signs differ"
            )
        eps = list(d.endpoints)
        for a, b in (analysis.heads_arc, analysis.tails_arc, analysis.mixed_arc):
            eps[a], eps[b] = eps[b], eps[a]
        return make_diagram(eps, d.signs)

    raise MoveNotApplicable(f"unknown move {move!r}")


def enumerate_moves(d: GaussDiagram, include_insertions: bool = False) -> list:
    """All applicable moves: R1 deletions, R2 deletions, R3 triples, then
    (optionally) every parameterized insertion."""
    moves = [R1Delete(c) for c in r1_removable_chords(d)]
    moves += [R2Delete(pair) for pair in r2_removable_pairs(d)]
    moves += [R3(t) for t in r3_movable_triples(d)]
    if include_insertions:
        gaps = range(max(1, len(d.endpoints)))
        for gap in gaps:
            for sign in (1, -1):
                for head_first in (True, False):
                    moves.append(R1Insert(gap, sign, head_first))
        for head_gap in gaps:
            for tail_gap in gaps:
                for sign in (1, -1):
                    for crossed in (True, False):
                        moves.append(R2Insert(head_gap, tail_gap, sign, crossed))
    return moves


# ---------------------------------------------------------------- move specs

_SIGN_TEXT = {1: "+", -1: "-"}


def format_move(move: Move) -> str:
    """Compact one-line spec, the CLI's move syntax."""
    if isinstance(move, R1Delete):
        return f"r1:del:{move.chord}"
    if isinstance(move, R1Insert):
        order = "hf" if move.head_first else "tf"
        return f"r1:ins:{move.gap}:{_SIGN_TEXT[move.sign]}:{order}"
    if isinstance(move, R2Delete):
        return "r2:del:{},{}".format(*move.chords)
    if isinstance(move, R2Insert):
        pattern = "x" if move.crossed else "u"
        return f"r2:ins:{move.head_gap}:{move.tail_gap}:{_SIGN_TEXT[move.first_sign]}:{pattern}"
    if isinstance(move, R3):
        return "r3:{},{},{}".format(*move.chords)
    raise ValueError(f"unknown move {move!r}")


def _parse_sign(text: str, spec: str) -> int:
    if text == "+":
        return 1
    if text == "-":
        return -1
    raise ValueError(f"move spec {spec!r}: sign must be + or -, got {text!r}")


def _parse_gap(text: str, spec: str, what: str = "gap") -> int:
    if not text.isdigit():
        raise ValueError(f"move spec {spec!r}: {what} must be a nonnegative integer")
    return int(text)


def parse_move(spec: str) -> Move:
    """Inverse of format_move; errors name the malformed field."""
    parts = spec.strip().split(":")
    if parts[0] == "r1" and len(parts) >= 2 and parts[1] == "del":
        if len(parts) != 3 or not parts[2]:
            raise ValueError(f"move spec {spec!r}: r1:del needs a chord label")
        return R1Delete(parts[2])
    if parts[0] == "r1" and len(parts) >= 2 and parts[1] == "ins":
        if len(parts) != 5:
            raise ValueError(f"move spec {spec!r}: r1:ins needs gap:sign:hf|tf")
        gap = _parse_gap(parts[2], spec)
        sign = _parse_sign(parts[3], spec)
        if parts[4] not in ("hf", "tf"):
            raise ValueError(f"move spec {spec!r}: order must be hf or tf")
        return R1Insert(gap, sign, parts[4] == "hf")
    if parts[0] == "r2" and len(parts) >= 2 and parts[1] == "del":
        if len(parts) != 3:
            raise ValueError(f"move spec {spec!r}: r2:del needs chord,chord")
        chords = parts[2].split(",")
        if len(chords) != 2 or not all(chords):
            raise ValueError(f"move spec {spec!r}: r2:del needs chord,chord")
        return R2Delete(tuple(chords))
    if parts[0] == "r2" and len(parts) >= 2 and parts[1] == "ins":
        if len(parts) != 6:
            raise ValueError(f"move spec {spec!r}: r2:ins needs hgap:tgap:sign:x|u")
        head_gap = _parse_gap(parts[2], spec, "head gap")
        tail_gap = _parse_gap(parts[3], spec, "tail gap")
        sign = _parse_sign(parts[4], spec)
        if parts[5] not in ("x", "u"):
            raise ValueError(f"move spec {spec!r}: pattern must be x or u")
        return R2Insert(head_gap, tail_gap, sign, parts[5] == "x")
    if parts[0] == "r3":
        if len(parts) != 2:
            raise ValueError(f"move spec {spec!r}: r3 needs chord,chord,chord")
        chords = parts[1].split(",")
        if len(chords) != 3 or not all(chords):
            raise ValueError(f"move spec {spec!r}: r3 needs chord,chord,chord")
        return R3(tuple(chords))
    raise ValueError(f"move spec {spec!r}: unknown move kind")


# ------------------------------------------------------------------- census

@dataclass(frozen=True)
class CensusResult:
    chords: int
    total: int
    matched: int
    movable: int
    movable_up_to_rotation: int


def _configuration_orbit_key(d: GaussDiagram, arcs) -> tuple:
    """Rotation-invariant key for a (diagram, qualifying tiling) pair.

    Minimises, over all rotations, the label-free diagram encoding paired
    with the rotated arc positions, so two configurations share a key iff
    some rotation carries one diagram onto the other and the tiling along
    with it.
    """
    m = len(d.endpoints)
    pair_positions = tuple((a, b) for a, b in arcs)
    best = None
    for k in range(m):
        code = _encode(rotate(d, k))[0]
        shifted = tuple(sorted(((a - k) % m, (b - k) % m) for a, b in pair_positions))
        key = (code, shifted)
        if best is None or key < best:
            best = key
    return best


def census_movable_triples(n: int) -> CensusResult:
    """Exhaustive triple-configuration census over every n-chord diagram.

    A configuration is a (diagram, triple, qualifying tiling) choice; a
    triple contributes one configuration per qualifying tiling (two only
    when the triple's endpoints fill the whole circle).  Counts matched
    configurations, movable ones (all three 3-signs equal), and the
    movable configurations up to rotation of the underlying diagram.
    n is capped at 5 to keep (2n-1)!! * 4^n enumeration at desk scale.
    """
    if n < 3:
        raise ValueError("census needs at least 3 chords")
    if n > 5:
        raise ValueError("census is capped at 5 chords")
    total = matched = movable = 0
    movable_orbits = set()
    for d in enumerate_diagrams(n):
        total += 1
        for triple in itertools.combinations(d.chords(), 3):
            for arcs, _numbers, is_movable in _qualifying_tilings(d, triple):
                matched += 1
                if is_movable:
                    movable += 1
                    movable_orbits.add(_configuration_orbit_key(d, arcs))
    return CensusResult(n, total, matched, movable, len(movable_orbits))
