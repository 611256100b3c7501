"""Shared fixtures: two small hand-checked layer pairs plus instance generators.

The contrast pair has five vertices; layer 2 contains a 4-clique on A..D and
a pendant edge to E, layer 1 only the edge A-B.  So {A,B,C,D} is complete in
layer 2, near-empty in layer 1, and every density around it can be verified
by hand.

The redundancy pair has six vertices arranged so that the triangle {A,C,D}
outscores its superset {A,B,C,D} while {B,D,E,F} covers entirely different
edges.  Scoring it with min_size=3 exercises every branch of the redundancy
relation.
"""
import random

import pytest

from cqcmine import LayerPair, MiningParams, load_layer_pair

CONTRAST_L1 = [("A", "B")]
CONTRAST_L2 = [
    ("A", "B"),
    ("A", "C"),
    ("A", "D"),
    ("B", "C"),
    ("B", "D"),
    ("C", "D"),
    ("A", "E"),
]

REDUNDANT_L1 = [
    ("A", "B"),
    ("A", "C"),
    ("A", "D"),
    ("B", "C"),
    ("C", "D"),
    ("E", "F"),
]
REDUNDANT_L2 = [
    ("A", "B"),
    ("B", "C"),
    ("B", "E"),
    ("B", "F"),
    ("D", "E"),
    ("D", "F"),
    ("E", "F"),
]


@pytest.fixture
def contrast_pair() -> LayerPair:
    return load_layer_pair(CONTRAST_L1, CONTRAST_L2)


@pytest.fixture
def redundant_pair() -> LayerPair:
    return load_layer_pair(REDUNDANT_L1, REDUNDANT_L2)


def ids(pair: LayerPair, labels: str) -> frozenset[int]:
    """Map a string of single-letter labels to a vertex-id set."""
    return frozenset(pair.vertex_id(c) for c in labels)


def random_pair(rng: random.Random, n: int, p1: float, p2: float) -> LayerPair:
    """Erdos-Renyi style two-layer instance over n labeled vertices.

    A spanning path backbone keeps the vertex universe at exactly n even
    when a layer comes out sparse.
    """
    labels = [f"x{i}" for i in range(n)]

    def layer(p):
        return [
            (labels[i], labels[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]

    e1 = layer(p1)
    e2 = layer(p2)
    e1.extend((labels[i], labels[i + 1]) for i in range(n - 1))
    return load_layer_pair(e1, e2)


# density mixes for the small-instance family: sparse/dense in either order,
# both balanced, both sparse, both dense
DENSITY_MIX = (
    (0.2, 0.7),
    (0.7, 0.2),
    (0.45, 0.45),
    (0.25, 0.25),
    (0.7, 0.7),
    (0.15, 0.55),
)


def small_instance(seed: int, max_n: int = 12) -> tuple[LayerPair, MiningParams]:
    """Deterministic small instance: mixed densities, varied parameters."""
    rng = random.Random(10_000 + seed)
    n = rng.randint(5, max_n)
    p1, p2 = DENSITY_MIX[seed % len(DENSITY_MIX)]
    pair = random_pair(rng, n, p1, p2)
    params = MiningParams(
        delta=rng.choice(["1/2", "3/5", "2/3", "1"]),
        delta_prime=rng.choice([0, "1/10"]),
        r=rng.choice(["1/10", "1/2"]),
        min_size=rng.choice([2, 3, 4]),
    )
    return pair, params
