"""Pattern model: what counts as a contrasting quasi-clique and how patterns compete.

A pattern is a vertex set that is degree-dense (a delta-quasi-clique) in at
least one layer while the two layers differ in average density by more than a
contrast threshold.  Patterns are ranked by interestingness, which is the set
size times the contrast; small or insufficiently dense sets are disqualified
outright by assigning them interestingness -1.  A result set keeps only
patterns that are pairwise non-redundant in terms of shared induced edges.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from .graphs import LayerPair

RationalLike = Union[int, float, str, Fraction]

#: Disqualified patterns get this fixed interestingness.
DISQUALIFIED = Fraction(-1)


def _as_fraction(value: RationalLike) -> Fraction:
    # str(float) round-trips the decimal the user typed, so Fraction("0.1")
    # style exactness is preserved instead of inheriting binary noise.
    if type(value) is Fraction:
        return value
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class MiningParams:
    """Thresholds shared by every operation in a mining run.

    Attributes:
        delta: minimum degree density the denser layer must reach. Values
            below 1/2 are allowed but disable the distance-based candidate
            restriction, so they are only practical on small graphs.
        delta_prime: contrast must strictly exceed this.
        r: redundancy threshold on the shared-edge fraction.
        min_size: sets smaller than this are disqualified (interestingness -1).
        base_gamma: sets whose best layer density is below this are
            disqualified regardless of ``delta``.
    """

    delta: Fraction = Fraction(1, 2)
    delta_prime: Fraction = Fraction(0)
    r: Fraction = Fraction(1, 10)
    min_size: int = 4
    base_gamma: Fraction = Fraction(1, 2)

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta", _as_fraction(self.delta))
        object.__setattr__(self, "delta_prime", _as_fraction(self.delta_prime))
        object.__setattr__(self, "r", _as_fraction(self.r))
        object.__setattr__(self, "base_gamma", _as_fraction(self.base_gamma))
        if not 0 < self.delta <= 1:
            raise ValueError("delta must lie in (0, 1]")
        if not 0 <= self.delta_prime < 1:
            raise ValueError("delta_prime must lie in [0, 1)")
        if not 0 < self.r <= 1:
            raise ValueError("r must lie in (0, 1]")
        if self.min_size < 2:
            raise ValueError("min_size must be at least 2")
        if not 0 <= self.base_gamma <= 1:
            raise ValueError("base_gamma must lie in [0, 1]")


def is_delta_quasi_clique(
    pair: LayerPair, members: frozenset[int] | set[int], layer: int, delta: RationalLike
) -> bool:
    """True iff every member has degree >= ceil(delta * (|S| - 1)) inside the set."""
    k = len(members)
    if k < 2:
        raise ValueError("quasi-clique membership requires at least two vertices")
    need = math.ceil(_as_fraction(delta) * (k - 1))
    adj = pair.adjacency(layer)
    return all(len(adj[v] & members) >= need for v in members)


def contrast(pair: LayerPair, members: frozenset[int] | set[int]) -> Fraction:
    """Absolute difference of the two layers' average densities."""
    return abs(pair.alpha_density(members, 1) - pair.alpha_density(members, 2))


def is_cqc(pair: LayerPair, members: frozenset[int] | set[int], params: MiningParams) -> bool:
    """True iff the set is a delta-quasi-clique in at least one layer and the
    contrast strictly exceeds delta_prime."""
    k = len(members)
    if k < 2:
        raise ValueError("is_cqc requires at least two vertices")
    gamma = max(pair.gamma_density(members, 1), pair.gamma_density(members, 2))
    if gamma < params.delta:
        return False
    return contrast(pair, members) > params.delta_prime


def interestingness(
    pair: LayerPair, members: frozenset[int] | set[int], params: MiningParams
) -> Fraction:
    """Size times contrast, or -1 for disqualified sets.

    A set is disqualified when its best layer density falls below
    ``base_gamma`` or it has fewer than ``min_size`` vertices.
    """
    k = len(members)
    if k < 2:
        raise ValueError("interestingness requires at least two vertices")
    gamma = max(pair.gamma_density(members, 1), pair.gamma_density(members, 2))
    if gamma < params.base_gamma or k < params.min_size:
        return DISQUALIFIED
    return k * contrast(pair, members)


@dataclass(frozen=True)
class Pattern:
    """An evaluated vertex set with all scores cached.

    ``key`` is the sorted vertex-id tuple and serves as the deterministic
    identity used in orderings.  The induced edge sets are kept so redundancy
    checks need no graph access.
    """

    vertices: frozenset[int]
    key: tuple[int, ...]
    edges1: frozenset[tuple[int, int]]
    edges2: frozenset[tuple[int, int]]
    gamma1: Fraction
    gamma2: Fraction
    alpha1: Fraction
    alpha2: Fraction
    contrast: Fraction
    interestingness: Fraction
    dense_layer: int

    @property
    def e1(self) -> int:
        return len(self.edges1)

    @property
    def e2(self) -> int:
        return len(self.edges2)

    def size(self) -> int:
        return len(self.key)

    @classmethod
    def from_vertices(
        cls,
        pair: LayerPair,
        members: frozenset[int] | set[int],
        params: MiningParams,
    ) -> "Pattern":
        members = frozenset(members)
        k = len(members)
        if k < 2:
            raise ValueError("patterns require at least two vertices")
        g1 = pair.gamma_density(members, 1)
        g2 = pair.gamma_density(members, 2)
        a1 = pair.alpha_density(members, 1)
        a2 = pair.alpha_density(members, 2)
        c = abs(a1 - a2)
        if max(g1, g2) < params.base_gamma or k < params.min_size:
            score = DISQUALIFIED
        else:
            score = k * c
        return cls(
            vertices=members,
            key=tuple(sorted(members)),
            edges1=pair.induced_edges(members, 1),
            edges2=pair.induced_edges(members, 2),
            gamma1=g1,
            gamma2=g2,
            alpha1=a1,
            alpha2=a2,
            contrast=c,
            interestingness=score,
            dense_layer=1 if g1 >= g2 else 2,
        )

    def sort_key(self) -> tuple:
        """Global pattern order: interestingness desc, size asc, vertex ids asc."""
        return (-self.interestingness, len(self.key), self.key)


def is_redundant(o: Pattern, p: Pattern, r: RationalLike) -> bool:
    """True iff ``o`` is redundant relative to ``p``.

    Requires distinct vertex sets, interestingness of ``o`` not above that of
    ``p``, and an average shared-edge fraction of at least ``r``.  A layer in
    which ``o`` has no edges contributes fraction 1 (an empty edge set is
    trivially covered).
    """
    if o.key == p.key:
        return False
    if o.interestingness > p.interestingness:
        return False
    r = _as_fraction(r)
    n1 = len(o.edges1)
    n2 = len(o.edges2)
    # an induced edge is shared only if both endpoints are, so fewer than two
    # shared vertices means zero overlap in both layers
    if n1 and n2 and len(o.vertices & p.vertices) < 2:
        return 0 >= r
    num, den = r.numerator, r.denominator
    # cross-multiplied form of (t1 + t2) / 2 >= r with t_i = 1 on empty layers
    if n1 and n2:
        x1 = len(o.edges1 & p.edges1)
        x2 = len(o.edges2 & p.edges2)
        return (x1 * n2 + x2 * n1) * den >= 2 * num * n1 * n2
    if n1:
        return (n1 + len(o.edges1 & p.edges1)) * den >= 2 * num * n1
    if n2:
        return (n2 + len(o.edges2 & p.edges2)) * den >= 2 * num * n2
    return den >= num


class ResultSet:
    """Greedily grown set of pairwise non-redundant patterns.

    Patterns must be offered in non-increasing interestingness order; the
    greedy rule then yields a maximal non-redundant set.
    """

    def __init__(self, r: RationalLike) -> None:
        self.r = _as_fraction(r)
        self.patterns: list[Pattern] = []

    def try_accept(self, pattern: Pattern) -> bool:
        """Accept ``pattern`` unless it is redundant (in either direction)
        with an already accepted pattern.  Returns True on acceptance."""
        for q in self.patterns:
            if is_redundant(pattern, q, self.r) or is_redundant(q, pattern, self.r):
                return False
        self.patterns.append(pattern)
        return True

    def total_interestingness(self) -> Fraction:
        return sum((p.interestingness for p in self.patterns), Fraction(0))

    def __iter__(self) -> Iterator[Pattern]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)


def _sig6(value: Fraction) -> float:
    """Round to six significant digits for serialization."""
    return float(f"{float(value):.6g}")


def pattern_json_dict(pattern: Pattern, pair: LayerPair) -> dict:
    """JSON-ready dict for one pattern, with externally visible labels."""
    return {
        "vertices": sorted(pair.label(v) for v in pattern.vertices),
        "e1": pattern.e1,
        "e2": pattern.e2,
        "gamma1": _sig6(pattern.gamma1),
        "gamma2": _sig6(pattern.gamma2),
        "alpha1": _sig6(pattern.alpha1),
        "alpha2": _sig6(pattern.alpha2),
        "contrast": _sig6(pattern.contrast),
        "interestingness": _sig6(pattern.interestingness),
        "dense_layer": pattern.dense_layer,
    }
