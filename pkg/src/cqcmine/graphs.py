"""Two-layer graphs sharing one vertex set, plus the density primitives built on them.

A :class:`LayerPair` holds two undirected simple graphs over a common vertex
universe.  Vertices carry arbitrary string labels externally and are mapped to
dense integer ids internally; every algorithm in this package works on the ids
and only translates back to labels at output boundaries.

All density values are returned as :class:`fractions.Fraction` so that
comparisons against thresholds are exact.  Floating point only ever appears
when results are serialized.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Sequence

logger = logging.getLogger(__name__)

# An edge as it appears in input data: a pair of vertex labels.
LabelEdge = tuple[str, str]


class EdgeListFormatError(ValueError):
    """A line of an edge-list file could not be parsed."""


def read_edge_list(path: str | Path) -> list[LabelEdge]:
    """Read a whitespace-separated edge list.

    One edge per line, two labels separated by whitespace.  Blank lines and
    lines starting with ``#`` are ignored.  Labels are arbitrary tokens
    without whitespace.

    Raises:
        EdgeListFormatError: if a non-comment line does not contain exactly
            two tokens.  The message includes the path and 1-based line number.
        OSError: if the file cannot be read.
    """
    path = Path(path)
    edges: list[LabelEdge] = []
    with path.open("r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise EdgeListFormatError(
                    f"{path}:{lineno}: expected two vertex labels, got {len(parts)}: {line!r}"
                )
            edges.append((parts[0], parts[1]))
    return edges


def write_edge_list(path: str | Path, edges: Iterable[LabelEdge]) -> None:
    """Write an edge list in the format accepted by :func:`read_edge_list`."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as handle:
        for u, v in edges:
            handle.write(f"{u} {v}\n")


@dataclass(frozen=True, eq=False)
class LayerPair:
    """Two undirected graphs over one shared vertex universe.

    Layers are addressed by the numbers 1 and 2 throughout the public API.
    Instances are immutable; build them with :func:`load_layer_pair` or
    :func:`complement`.
    """

    n: int
    labels: tuple[str, ...]
    _label_ids: dict[str, int] = field(repr=False)
    _adj: tuple[tuple[frozenset[int], ...], tuple[frozenset[int], ...]] = field(repr=False)
    _ball_cache: dict[tuple[int, int], frozenset[int]] = field(
        default_factory=dict, repr=False
    )
    _mask_cache: dict = field(default_factory=dict, repr=False)

    # -- basic access -----------------------------------------------------

    def vertex_id(self, label: str) -> int:
        return self._label_ids[label]

    def label(self, vid: int) -> str:
        return self.labels[vid]

    def adjacency(self, layer: int) -> tuple[frozenset[int], ...]:
        """Adjacency sets of the given layer, indexed by vertex id."""
        return self._adj[_layer_index(layer)]

    def vertices(self) -> range:
        return range(self.n)

    def edge_count(self, layer: int) -> int:
        adj = self.adjacency(layer)
        return sum(len(s) for s in adj) // 2

    def edges(self, layer: int) -> Iterator[tuple[int, int]]:
        """All edges of a layer as (u, v) id pairs with u < v."""
        adj = self.adjacency(layer)
        for u in range(self.n):
            for v in adj[u]:
                if u < v:
                    yield (u, v)

    # -- induced-subgraph primitives --------------------------------------

    def degree_within(self, v: int, members: frozenset[int] | set[int], layer: int) -> int:
        """Number of neighbors of ``v`` inside ``members`` in the given layer.

        ``v`` itself does not have to belong to ``members``.
        """
        return len(self.adjacency(layer)[v] & members)

    def edges_within(self, members: frozenset[int] | set[int], layer: int) -> int:
        """Number of edges of the induced subgraph on ``members``."""
        adj = self.adjacency(layer)
        return sum(len(adj[v] & members) for v in members) // 2

    def edges_between(
        self,
        a: frozenset[int] | set[int],
        b: frozenset[int] | set[int],
        layer: int,
    ) -> int:
        """Number of edges with one endpoint in ``a`` and the other in ``b``.

        Raises:
            ValueError: if the two sets overlap.
        """
        if a & b:
            raise ValueError("edges_between requires disjoint vertex sets")
        adj = self.adjacency(layer)
        if len(a) > len(b):
            a, b = b, a
        return sum(len(adj[v] & b) for v in a)

    def induced_edges(
        self, members: frozenset[int] | set[int], layer: int
    ) -> frozenset[tuple[int, int]]:
        """The induced edge set on ``members`` as (u, v) pairs with u < v."""
        adj = self.adjacency(layer)
        out = set()
        for u in members:
            for v in adj[u] & members:
                if u < v:
                    out.add((u, v))
        return frozenset(out)

    # -- densities ---------------------------------------------------------

    def gamma_density(self, members: frozenset[int] | set[int], layer: int) -> Fraction:
        """Minimum-degree density: min over members of degree inside the set,
        divided by (size - 1).

        Raises:
            ValueError: for sets of fewer than two vertices.
        """
        k = len(members)
        if k < 2:
            raise ValueError("gamma_density requires at least two vertices")
        adj = self.adjacency(layer)
        min_deg = min(len(adj[v] & members) for v in members)
        return Fraction(min_deg, k - 1)

    def alpha_density(self, members: frozenset[int] | set[int], layer: int) -> Fraction:
        """Average density: edge count over the maximum possible edge count.

        Raises:
            ValueError: for sets of fewer than two vertices.
        """
        k = len(members)
        if k < 2:
            raise ValueError("alpha_density requires at least two vertices")
        return Fraction(2 * self.edges_within(members, layer), k * (k - 1))

    # -- neighborhood structure -------------------------------------------

    def ball2(self, v: int, layer: int) -> frozenset[int]:
        """Vertices within distance two of ``v`` in the given layer (``v`` included).

        Cached per (vertex, layer); used to restrict candidate sets, since a
        quasi-clique at density 0.5 or above has diameter at most two.
        """
        key = (v, layer)
        cached = self._ball_cache.get(key)
        if cached is not None:
            return cached
        adj = self.adjacency(layer)
        ball = set(adj[v])
        ball.add(v)
        if len(ball) < self.n:
            for w in adj[v]:
                ball |= adj[w]
                if len(ball) == self.n:
                    break
        result = frozenset(ball)
        self._ball_cache[key] = result
        return result

    # -- bitmask views (performance-critical callers) -----------------------

    def bit_adjacency(self, layer: int) -> tuple[int, ...]:
        """Adjacency rows as integers with bit v set for each neighbor v.

        The search engine runs on these: intersection and degree counting
        become single machine-level operations instead of set algebra.
        Built once per layer and cached.
        """
        li = _layer_index(layer)
        cached = self._mask_cache.get(li)
        if cached is None:
            rows = []
            for nbrs in self._adj[li]:
                m = 0
                for w in nbrs:
                    m |= 1 << w
                rows.append(m)
            cached = tuple(rows)
            self._mask_cache[li] = cached
        return cached

    def ball2_mask(self, v: int, layer: int) -> int:
        """Bitmask form of :meth:`ball2`, cached per (vertex, layer)."""
        key = (v, layer)
        cached = self._mask_cache.get(key)
        if cached is None:
            adj = self.bit_adjacency(layer)
            full = (1 << self.n) - 1
            ball = adj[v] | (1 << v)
            rest = adj[v]
            while rest and ball != full:
                low = rest & -rest
                rest ^= low
                ball |= adj[low.bit_length() - 1]
            cached = ball
            self._mask_cache[key] = cached
        return cached


def _layer_index(layer: int) -> int:
    if layer not in (1, 2):
        raise ValueError(f"layer must be 1 or 2, got {layer!r}")
    return layer - 1


def load_layer_pair(
    edges1: Sequence[LabelEdge] | Iterable[LabelEdge],
    edges2: Sequence[LabelEdge] | Iterable[LabelEdge],
) -> LayerPair:
    """Build a :class:`LayerPair` from two label edge lists.

    The vertex universe is the union of all endpoints appearing in either
    list, in first-seen order.  Duplicate edges are deduplicated silently;
    self-loops are dropped and counted in a warning.
    """
    label_ids: dict[str, int] = {}
    labels: list[str] = []

    def intern(label: str) -> int:
        vid = label_ids.get(label)
        if vid is None:
            vid = len(labels)
            label_ids[label] = vid
            labels.append(label)
        return vid

    raw: list[list[tuple[int, int]]] = []
    for layer_no, edge_list in ((1, edges1), (2, edges2)):
        dropped = 0
        pairs: list[tuple[int, int]] = []
        for a, b in edge_list:
            ia, ib = intern(a), intern(b)
            if ia == ib:
                dropped += 1
                continue
            pairs.append((ia, ib))
        if dropped:
            logger.warning("dropped %d self-loop(s) in layer %d", dropped, layer_no)
        raw.append(pairs)

    n = len(labels)
    adj_layers: list[tuple[frozenset[int], ...]] = []
    for pairs in raw:
        sets: list[set[int]] = [set() for _ in range(n)]
        for ia, ib in pairs:
            sets[ia].add(ib)
            sets[ib].add(ia)
        adj_layers.append(tuple(frozenset(s) for s in sets))

    return LayerPair(
        n=n,
        labels=tuple(labels),
        _label_ids=label_ids,
        _adj=(adj_layers[0], adj_layers[1]),
    )


def complement(pair: LayerPair, which: int) -> LayerPair:
    """Return a new pair with the chosen layer's edge set complemented.

    The other layer and the vertex universe (including isolated vertices)
    are unchanged.  Applying the operation twice restores the original
    adjacency.
    """
    idx = _layer_index(which)
    everyone = frozenset(range(pair.n))
    old = pair._adj[idx]
    flipped = tuple(everyone - old[v] - {v} for v in range(pair.n))
    new_adj = (flipped, pair._adj[1]) if idx == 0 else (pair._adj[0], flipped)
    return LayerPair(
        n=pair.n,
        labels=pair.labels,
        _label_ids=pair._label_ids,
        _adj=new_adj,
    )
