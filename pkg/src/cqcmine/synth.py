"""Synthetic two-layer benchmark graphs.

Each layer is a power-law-ish random graph grown by preferential
attachment up to an exact edge budget, after which a configurable number
of quasi-cliques is planted per layer: a random vertex subset receives
extra internal edges until its average density reaches the target.
Embeddings are drawn independently per layer, so the planted dense sets
rarely coincide across layers and contrast emerges naturally.

Everything is driven by one ``random.Random(seed)`` stream; a fixed seed
reproduces the graphs exactly.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .graphs import LayerPair, load_layer_pair
from .patterns import _as_fraction


@dataclass(frozen=True)
class SynthConfig:
    n: int
    target_edges: int
    n_embedded: int = 0
    qc_size: int = 10
    qc_density: float = 0.6
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least 2 vertices")
        capacity = self.n * (self.n - 1) // 2
        if not self.n - 1 <= self.target_edges <= capacity:
            raise ValueError(
                f"edge budget {self.target_edges} infeasible for n={self.n}: "
                f"need between {self.n - 1} (to attach every vertex) and {capacity}"
            )
        if self.n_embedded < 0:
            raise ValueError("n_embedded must be non-negative")
        if self.n_embedded > 0:
            if not 2 <= self.qc_size <= self.n:
                raise ValueError(f"qc_size must be in [2, {self.n}]")
            dens = _as_fraction(self.qc_density)
            if not 0 < dens <= 1:
                raise ValueError("qc_density must be in (0, 1]")


@dataclass(frozen=True)
class Embedding:
    """Ground truth for one planted quasi-clique."""

    layer: int
    vertices: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"layer": self.layer, "vertices": list(self.vertices)}


def _power_law_edges(rng: random.Random, n: int, target_edges: int) -> set[tuple[int, int]]:
    """Grow one layer by preferential attachment, then top up with
    urn-sampled extra edges until the budget is met exactly."""
    edges: set[tuple[int, int]] = set()
    urn: list[int] = []  # every edge drops both endpoints here: picks ~ degree

    def add_edge(u: int, v: int) -> None:
        edges.add((u, v) if u < v else (v, u))
        urn.append(u)
        urn.append(v)

    add_edge(0, 1)
    quota = max(1, target_edges // n)
    for t in range(2, n):
        wanted = min(quota, t)
        chosen: set[int] = set()
        while len(chosen) < wanted:
            chosen.add(rng.choice(urn))
        for w in chosen:
            add_edge(t, w)

    rejects = 0
    while len(edges) < target_edges:
        u = rng.choice(urn)
        v = rng.choice(urn)
        if u == v or ((u, v) if u < v else (v, u)) in edges:
            rejects += 1
            if rejects >= 200:
                # near-complete graph: place the remainder directly
                missing = [
                    (a, b)
                    for a in range(n)
                    for b in range(a + 1, n)
                    if (a, b) not in edges
                ]
                for a, b in rng.sample(missing, target_edges - len(edges)):
                    add_edge(a, b)
            continue
        rejects = 0
        add_edge(u, v)
    return edges


def _plant_quasi_clique(
    rng: random.Random,
    n: int,
    edges: set[tuple[int, int]],
    qc_size: int,
    qc_density: Fraction,
) -> tuple[int, ...]:
    members = sorted(rng.sample(range(n), qc_size))
    all_pairs = [
        (members[i], members[j])
        for i in range(qc_size)
        for j in range(i + 1, qc_size)
    ]
    need = math.ceil(qc_density * len(all_pairs))
    missing = [p for p in all_pairs if p not in edges]
    shortfall = need - (len(all_pairs) - len(missing))
    if shortfall > 0:
        for u, v in rng.sample(missing, shortfall):
            edges.add((u, v))
    return tuple(members)


def generate(config: SynthConfig) -> tuple[LayerPair, tuple[Embedding, ...]]:
    """Build the two layers and return them with the planted ground truth."""
    rng = random.Random(config.seed)
    dens = _as_fraction(config.qc_density)

    layers: list[set[tuple[int, int]]] = []
    truth: list[Embedding] = []
    for layer_no in (1, 2):
        edges = _power_law_edges(rng, config.n, config.target_edges)
        layers.append(edges)
        for _ in range(config.n_embedded):
            members = _plant_quasi_clique(rng, config.n, edges, config.qc_size, dens)
            truth.append(Embedding(layer_no, tuple(f"v{i}" for i in members)))

    def labeled(edges: set[tuple[int, int]]) -> list[tuple[str, str]]:
        return [(f"v{u}", f"v{v}") for u, v in sorted(edges)]

    pair = load_layer_pair(labeled(layers[0]), labeled(layers[1]))
    return pair, tuple(truth)
