"""Walk the two worked examples and the three figure triples end to end.

Prints each step and asserts the expected outcome, so a silent exit 0
means every reproduced value matched.

    python scripts/reproduce_examples.py
"""

from __future__ import annotations

from gaussdiag import (
    EMPTY,
    R2Delete,
    R3,
    analyze_triple,
    apply_move,
    parse_gauss_code,
    r2_removable_pairs,
    r3_movable_triples,
    reduce_greedy,
    format_trace,
    serialize_gauss_code,
    simplify,
    verify_trace,
    writhe,
)

EX1 = "O1- U2- O3- U1- U4+ U3- O2- O4+"
EX2 = "O3+ U4- O1+ U2- U1+ U3+ O2- O4-"
FIGURES = {
    "a": "U3+ U2- O1- O2- O3+ U1-",
    "b": "U3+ U2- U1- O2- O3+ O1-",
    "c": "U3+ U2- O1- O2- U1- O3+",
}


def banner(title: str) -> None:
    print(f"\n=== {title} " + "=" * max(0, 60 - len(title)))


def example_1() -> None:
    banner("example 1: reduce to the unknot")
    d = parse_gauss_code(EX1)
    print(f"start          {serialize_gauss_code(d)}   (writhe {writhe(d)})")

    pairs = r2_removable_pairs(d)
    print(f"removable pairs {pairs}")
    assert pairs == [("1", "4")]

    after = apply_move(d, R2Delete(("1", "4")))
    print(f"after r2:del:1,4 {serialize_gauss_code(after)}")
    assert serialize_gauss_code(after) == "U2- O3- U3- O2-"

    res = reduce_greedy(d)
    print("greedy trace:")
    print(format_trace(res.trace))
    assert res.final == EMPTY
    assert len(res.trace) == 3
    assert verify_trace(d, res.trace)
    print("greedy reduction reaches the empty diagram; trace verified")


def example_2() -> None:
    banner("example 2: rearrange a triple, then reduce")
    d = parse_gauss_code(EX2)
    print(f"start          {serialize_gauss_code(d)}")

    triples = r3_movable_triples(d)
    print(f"movable triples {triples}")
    analysis = analyze_triple(d, ("1", "3", "4"))
    for chord, rec in analysis.chords.items():
        print(f"  chord {chord}: sign {rec.sign:+d} parity {rec.parity:+d} "
              f"direction {rec.direction:+d} 3-sign {rec.three_sign:+d}")
    assert analysis.movable
    assert all(rec.three_sign == 1 for rec in analysis.chords.values())

    after = apply_move(d, R3(("1", "3", "4")))
    print(f"after r3:1,3,4  {serialize_gauss_code(after)}")
    assert serialize_gauss_code(after) == "O4- O1+ U4- U2- U3+ U1+ O2- O3+"

    res = simplify(d)
    print("search trace:")
    print(format_trace(res.trace))
    assert res.final == EMPTY
    assert verify_trace(d, res.trace)
    print("search reaches the empty diagram; trace verified")


def figure_triples() -> None:
    banner("figure triples: matched / movable classification")
    for name, code in FIGURES.items():
        a = analyze_triple(parse_gauss_code(code), ("1", "2", "3"))
        signs = {c: rec.three_sign for c, rec in a.chords.items()}
        print(f"({name}) {code}:  matched={a.matched}  movable={a.movable}  "
              f"3-signs={signs}")
    assert analyze_triple(parse_gauss_code(FIGURES["a"]), ("1", "2", "3")).movable
    assert not analyze_triple(parse_gauss_code(FIGURES["c"]), ("1", "2", "3")).movable


if __name__ == "__main__":
    example_1()
    example_2()
    figure_triples()
    print("\nall reproduced values matched")
