"""Walk through the scoring pipeline on two tiny hand-built graphs.

Everything here is exact rational arithmetic, so the printed values are the
ground truth the test suite freezes.  Run from the repository root:

    python demos/01_scoring_walkthrough.py
"""
from fractions import Fraction

from cqcmine import (
    MiningParams,
    Pattern,
    contrast,
    interestingness,
    is_cqc,
    is_redundant,
    load_layer_pair,
)


def show(label, value):
    print(f"  {label:<38} {value}")


def vertex_ids(pair, labels):
    return frozenset(pair.vertex_id(x) for x in labels)


def square_example():
    # layer 1: a single edge; layer 2: a 4-clique on A..D plus a pendant E
    pair = load_layer_pair(
        [("A", "B")],
        [("A", "B"), ("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"), ("C", "D"), ("A", "E")],
    )
    abcd = vertex_ids(pair, "ABCD")
    print("Four vertices forming a clique in layer 2 and almost nothing in layer 1:")
    show("min-degree density, layer 1", pair.gamma_density(abcd, 1))
    show("min-degree density, layer 2", pair.gamma_density(abcd, 2))
    show("average density, layer 1", pair.alpha_density(abcd, 1))
    show("average density, layer 2", pair.alpha_density(abcd, 2))
    show("contrast |alpha1 - alpha2|", contrast(pair, abcd))

    strict = MiningParams(delta=1)
    show("qualifies at delta=1", is_cqc(pair, abcd, strict))
    show("interestingness", interestingness(pair, abcd, strict))

    abcde = vertex_ids(pair, "ABCDE")
    print("\nAdding the pendant vertex E dilutes both densities:")
    show("average density, layer 2", pair.alpha_density(abcde, 2))
    show("min-degree density, layer 2", pair.gamma_density(abcde, 2))
    show("interestingness (disqualified)", interestingness(pair, abcde, strict))


def redundancy_example():
    pair = load_layer_pair(
        [("A", "B"), ("A", "C"), ("A", "D"), ("B", "C"), ("C", "D"), ("E", "F")],
        [("A", "B"), ("B", "C"), ("B", "E"), ("B", "F"), ("D", "E"), ("D", "F"), ("E", "F")],
    )
    params = MiningParams(min_size=3)
    o = Pattern.from_vertices(pair, vertex_ids(pair, "ABCD"), params)
    p = Pattern.from_vertices(pair, vertex_ids(pair, "ACD"), params)
    q = Pattern.from_vertices(pair, vertex_ids(pair, "BDEF"), params)

    print("\nThree overlapping patterns and their scores:")
    for name, pat in (("ABCD", o), ("ACD", p), ("BDEF", q)):
        show(name, pat.interestingness)

    r = Fraction(1, 10)
    print("\nRedundancy is directional: a pattern is dropped only when a better")
    print("one already covers enough of its edges.")
    show("ABCD redundant given ACD", is_redundant(o, p, r))
    show("ACD redundant given ABCD", is_redundant(p, o, r))
    show("BDEF redundant given ACD", is_redundant(q, p, r))
    print("\nSo a greedy pass keeps ACD and BDEF and drops ABCD.")


if __name__ == "__main__":
    square_example()
    redundancy_example()
