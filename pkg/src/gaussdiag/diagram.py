"""Gauss diagrams for virtual knots: the core immutable value type.

A Gauss diagram is a circle with one directed, signed chord per classical
crossing.  Reading the circle counterclockwise from an arbitrary basepoint
gives a sequence of 2n chord endpoints; each chord points from its tail
(the overcrossing pass, letter O in Gauss codes) to its head (the
undercrossing pass, letter U).  The empty diagram presents the unknot.

The basepoint is representational only: every semantic operation is
rotation-invariant, and ``canonical`` quotients it away.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

TAIL = "tail"  # overcrossing pass, letter O
HEAD = "head"  # undercrossing pass, letter U

LABEL_CHARS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_"
)


def valid_label(text) -> bool:
    """Chord labels are nonempty strings over [A-Za-z0-9_]."""
    return isinstance(text, str) and text != "" and all(c in LABEL_CHARS for c in text)


def label_key(label: str):
    """Sort key putting numeric labels in numeric order ("2" before "10")."""
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


@dataclass(frozen=True)
class Endpoint:
    """One chord occurrence on the circle: a label plus its tail/head role."""

    chord: str
    role: str

    def __repr__(self):
        return "{}{}".format("T" if self.role == TAIL else "H", self.chord)


@dataclass(frozen=True)
class GaussDiagram:
    """2n chord endpoints read counterclockwise, plus one sign per chord.

    Construction validates the invariants: every chord label appears exactly
    twice (once as tail, once as head) and the sign map covers exactly the
    labels present.  Instances are immutable; operations return new values.
    """

    endpoints: tuple
    signs: Mapping[str, int]

    def __post_init__(self):
        endpoints = tuple(self.endpoints)
        object.__setattr__(self, "endpoints", endpoints)
        seen = {}
        for ep in endpoints:
            if not isinstance(ep, Endpoint):
                raise ValueError(f"not an Endpoint: {ep!r}")
            if not valid_label(ep.chord):
                raise ValueError(f"invalid chord label {ep.chord!r}")
            if ep.role not in (TAIL, HEAD):
                raise ValueError(f"invalid role {ep.role!r} for chord {ep.chord}")
            roles = seen.setdefault(ep.chord, [])
            if ep.role in roles:
                raise ValueError(f"duplicate {ep.role} for chord {ep.chord}")
            roles.append(ep.role)
        for chord, roles in seen.items():
            if len(roles) == 1:
                raise ValueError(f"chord {chord} appears only once")
        signs = dict(self.signs)
        for chord, sign in signs.items():
            if chord not in seen:
                raise ValueError(f"sign given for unknown chord {chord}")
            if sign not in (1, -1):
                raise ValueError(f"sign for chord {chord} must be +1 or -1, got {sign!r}")
        for chord in seen:
            if chord not in signs:
                raise ValueError(f"missing sign for chord {chord}")
        object.__setattr__(self, "signs", MappingProxyType(signs))
        pos = {}
        for i, ep in enumerate(endpoints):
            pos.setdefault(ep.chord, {})[ep.role] = i
        object.__setattr__(self, "_pos", pos)

    def __hash__(self):
        return hash((self.endpoints, tuple(sorted(self.signs.items()))))

    def __repr__(self):
        if not self.endpoints:
            return "GaussDiagram('')"
        toks = " ".join(
            ("O" if ep.role == TAIL else "U")
            + ep.chord
            + ("+" if self.signs[ep.chord] > 0 else "-")
            for ep in self.endpoints
        )
        return f"GaussDiagram({toks!r})"

    @property
    def n(self) -> int:
        """Number of chords."""
        return len(self.endpoints) // 2

    def chords(self) -> list:
        """Chord labels in order of first appearance around the circle."""
        out = []
        for ep in self.endpoints:
            if ep.chord not in out:
                out.append(ep.chord)
        return out

    def chord_at(self, p: int) -> str:
        return self.endpoints[p % len(self.endpoints)].chord

    def sign_of(self, chord: str) -> int:
        try:
            return self.signs[chord]
        except KeyError:
            raise ValueError(f"unknown chord {chord!r}") from None

    def tail_position(self, chord: str) -> int:
        self.sign_of(chord)
        return self._pos[chord][TAIL]

    def head_position(self, chord: str) -> int:
        self.sign_of(chord)
        return self._pos[chord][HEAD]

    def positions_of(self, chord: str) -> tuple:
        """The chord's two endpoint positions, ascending."""
        t, h = self.tail_position(chord), self.head_position(chord)
        return (t, h) if t < h else (h, t)


def make_diagram(endpoints: Iterable[Endpoint], signs: Mapping[str, int]) -> GaussDiagram:
    """Validate and build a diagram; preserves the given order and basepoint."""
    return GaussDiagram(tuple(endpoints), signs)


EMPTY = make_diagram((), {})


def adjacent(d: GaussDiagram, p: int, q: int) -> bool:
    """True iff positions p and q are cyclically consecutive in d."""
    m = len(d.endpoints)
    if m == 0:
        raise ValueError("empty diagram has no positions")
    for x in (p, q):
        if not 0 <= x < m:
            raise ValueError(f"position {x} out of range for {m} endpoints")
    if p == q:
        raise ValueError("positions must differ")
    return q == (p + 1) % m or p == (q + 1) % m


def chords_cross(d: GaussDiagram, a: str, b: str) -> bool:
    """Interleaving test: exactly one endpoint of b lies strictly inside
    the counterclockwise arc between a's endpoints.  Symmetric in a, b."""
    if a == b:
        raise ValueError("chords_cross needs two distinct chords")
    p1, p2 = d.positions_of(a)
    inside = sum(1 for q in d.positions_of(b) if p1 < q < p2)
    return inside == 1


def writhe(d: GaussDiagram) -> int:
    """Sum of the crossing signs."""
    return sum(d.signs.values())


def rotate(d: GaussDiagram, k: int) -> GaussDiagram:
    """Move the basepoint: endpoint sequence cyclically shifted by k."""
    m = len(d.endpoints)
    if m == 0:
        return d
    k %= m
    return make_diagram(d.endpoints[k:] + d.endpoints[:k], d.signs)


def _encode(d: GaussDiagram):
    """Relabel chords 1..n by first appearance and encode each endpoint as
    (role O<U, chord number, sign +<-); the key for canonical comparison."""
    mapping = {}
    for ep in d.endpoints:
        if ep.chord not in mapping:
            mapping[ep.chord] = len(mapping) + 1
    enc = tuple(
        (
            0 if ep.role == TAIL else 1,
            mapping[ep.chord],
            0 if d.signs[ep.chord] > 0 else 1,
        )
        for ep in d.endpoints
    )
    return enc, mapping


def canonical(d: GaussDiagram) -> GaussDiagram:
    """Canonical representative under rotation and relabeling.

    Among all 2n rotations, relabel chords by order of first appearance and
    keep the rotation whose encoded endpoint sequence is lexicographically
    least.  Idempotent and rotation-invariant; mirror images are NOT
    identified.
    """
    if d.n == 0:
        return d
    best = None
    for k in range(len(d.endpoints)):
        rot = rotate(d, k)
        enc, mapping = _encode(rot)
        if best is None or enc < best[0]:
            best = (enc, rot, mapping)
    _, rot, mapping = best
    relabel = {old: str(new) for old, new in mapping.items()}
    endpoints = tuple(Endpoint(relabel[ep.chord], ep.role) for ep in rot.endpoints)
    signs = {relabel[c]: s for c, s in rot.signs.items()}
    return make_diagram(endpoints, signs)


def same_diagram(d1: GaussDiagram, d2: GaussDiagram) -> bool:
    """True iff the diagrams agree up to rotation and relabeling."""
    return canonical(d1) == canonical(d2)


def _matchings(positions: list) -> Iterator[list]:
    # all perfect matchings; each pair (p, q) has p = least remaining position
    if not positions:
        yield []
        return
    first = positions[0]
    for i in range(1, len(positions)):
        rest = positions[1:i] + positions[i + 1 :]
        for tail in _matchings(rest):
            yield [(first, positions[i])] + tail


def enumerate_diagrams(n: int) -> Iterator[GaussDiagram]:
    """Every diagram on 2n positions with chords labeled 1..n by first
    appearance: all perfect matchings x orientations x signs, so
    (2n-1)!! * 4^n diagrams, no duplicates.  Intended for small n."""
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    import itertools

    labels = [str(i + 1) for i in range(n)]
    for matching in _matchings(list(range(2 * n))):
        for tails in itertools.product((0, 1), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                eps = [None] * (2 * n)
                for (p, q), lab, t in zip(matching, labels, tails):
                    tp, hp = (p, q) if t == 0 else (q, p)
                    eps[tp] = Endpoint(lab, TAIL)
                    eps[hp] = Endpoint(lab, HEAD)
                yield make_diagram(eps, dict(zip(labels, signs)))


def random_diagram(n: int, seed: int) -> GaussDiagram:
    """Uniformly random n-chord diagram, deterministic for a given seed.

    Uses Python's random.Random (Mersenne Twister), which is stable across
    platforms and versions for the methods used here.  The matching is built
    by repeatedly pairing the least unmatched position with a uniformly
    chosen partner, which is uniform over perfect matchings; orientation and
    sign are fair independent coin flips per chord.
    """
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    rng = random.Random(seed)
    unmatched = list(range(2 * n))
    pairs = []
    while unmatched:
        first = unmatched.pop(0)
        partner = unmatched.pop(rng.randrange(len(unmatched)))
        pairs.append((first, partner))
    eps = [None] * (2 * n)
    signs = {}
    for k, (p, q) in enumerate(pairs):
        lab = str(k + 1)
        tp, hp = (p, q) if rng.randrange(2) == 0 else (q, p)
        eps[tp] = Endpoint(lab, TAIL)
        eps[hp] = Endpoint(lab, HEAD)
        signs[lab] = 1 if rng.randrange(2) == 0 else -1
    return make_diagram(eps, signs)
