"""Best-first mining over a joint set-enumeration tree.

Every node of the tree is a vertex set ``O`` together with one candidate set
per layer: the vertices that may still be added while keeping a quasi-clique
in that layer reachable.  Expanding a node picks one candidate ``u`` and
splits the subtree in two: the sets containing ``u`` (rooted at ``O + u``)
and the sets avoiding ``u`` (same ``O``, ``u`` struck from both candidate
sets).  Each vertex set is therefore generated at most once.

Subtrees carry an upper bound on the interestingness any descendant can
reach, derived from per-layer edge-surplus bounds.  A max-priority queue
ordered by that bound (exact interestingness for already-found patterns)
yields patterns in non-increasing interestingness order, so the greedy
redundancy filter can accept them immediately.

Two candidate-maintenance levels exist.  A structural screen always runs:
candidates must lie within distance two of every member (valid because
patterns at density 1/2 or higher have diameter at most two) and pass a
single degree-feasibility sweep.  Without this screen the enumeration is
intractable already at a few hundred vertices, and it never changes the
mined pattern set.  The optional pruning on top (iterated degree
feasibility, member feasibility, bound-based subtree discarding) is what
``--no-prune`` switches off.

Internally the engine works on integer bitmasks (see
:meth:`~cqcmine.graphs.LayerPair.bit_adjacency`); the public helpers accept
and return plain frozensets.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from heapq import heappop, heappush
from itertools import count
from typing import Optional

from .graphs import LayerPair
from .patterns import MiningParams, Pattern, ResultSet

_KIND_SUBTREE = 0  # at equal priority, explore subtrees before accepting patterns:
_KIND_PATTERN = 1  # needed so tied patterns surface before any of them is accepted


@dataclass(frozen=True)
class PruneConfig:
    """Which optional search reductions are active."""

    candidate_pruning: bool = True
    bound_pruning: bool = True
    diameter_pruning: bool = False

    @classmethod
    def none(cls) -> "PruneConfig":
        return cls(candidate_pruning=False, bound_pruning=False, diameter_pruning=False)


@dataclass(frozen=True)
class SearchNode:
    """A subtree root: current members plus per-layer candidate sets."""

    members: frozenset[int]
    cand1: frozenset[int]
    cand2: frozenset[int]

    def joint_candidates(self) -> frozenset[int]:
        return self.cand1 | self.cand2


@dataclass
class MiningStats:
    nodes_visited: int = 0
    patterns_emitted: int = 0
    patterns_accepted: int = 0
    subtrees_pruned_by_bound: int = 0
    candidates_pruned: int = 0
    wall_time_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "nodes_visited": self.nodes_visited,
            "patterns_emitted": self.patterns_emitted,
            "patterns_accepted": self.patterns_accepted,
            "subtrees_pruned_by_bound": self.subtrees_pruned_by_bound,
            "candidates_pruned": self.candidates_pruned,
            "wall_time_s": self.wall_time_s,
        }


@dataclass(frozen=True)
class SubtreeRecord:
    """Snapshot of an enqueued subtree, for bound auditing in tests."""

    members: frozenset[int]
    cand1: frozenset[int]
    cand2: frozenset[int]
    td12: int  # twice the layer-1-over-layer-2 surplus bound (matched term)
    td21: int
    bound: object  # Fraction, or math.inf at the root


@dataclass
class MiningTrace:
    """Optional instrumentation collected during a run (test support)."""

    subtrees: list[SubtreeRecord] = field(default_factory=list)
    emitted: list[frozenset[int]] = field(default_factory=list)
    offered: list[Pattern] = field(default_factory=list)
    visited: list[frozenset[int]] = field(default_factory=list)


def root_node(pair: LayerPair) -> SearchNode:
    everyone = frozenset(range(pair.n))
    return SearchNode(frozenset(), everyone, everyone)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _set_of(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


class _Pri:
    """Exact rational heap key, compared DESCENDING (heapq pops the largest
    value first).  A zero denominator encodes plus infinity.  Plain integer
    cross-multiplication; building Fractions per push and comparing them per
    sift dominated the mining loop."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int) -> None:
        self.num = num
        self.den = den

    def __lt__(self, other: "_Pri") -> bool:
        return self.num * other.den > other.num * self.den

    def __eq__(self, other: "_Pri") -> bool:
        return self.num * other.den == other.num * self.den


class _Engine:
    """Bitmask working state shared by all search operations."""

    __slots__ = (
        "pair", "adj1", "adj2", "full", "degsum",
        "d_num", "d_den", "g_num", "g_den", "p_num", "p_den",
        "req_d", "req_g", "min_size", "use_ball",
        "candidate_pruning", "bound_pruning", "diameter_pruning",
    )

    def __init__(self, pair: LayerPair, params: MiningParams, config: PruneConfig):
        self.pair = pair
        self.adj1 = pair.bit_adjacency(1)
        self.adj2 = pair.bit_adjacency(2)
        self.full = (1 << pair.n) - 1
        self.degsum = tuple(
            r1.bit_count() + r2.bit_count() for r1, r2 in zip(self.adj1, self.adj2)
        )
        self.d_num, self.d_den = params.delta.numerator, params.delta.denominator
        self.g_num, self.g_den = params.base_gamma.numerator, params.base_gamma.denominator
        self.p_num, self.p_den = params.delta_prime.numerator, params.delta_prime.denominator
        # degree requirement tables, indexed by prospective set size minus one
        self.req_d = tuple(-(-self.d_num * m // self.d_den) for m in range(pair.n + 2))
        self.req_g = tuple(-(-self.g_num * m // self.g_den) for m in range(pair.n + 2))
        self.min_size = params.min_size
        self.use_ball = 2 * self.d_num >= self.d_den  # delta >= 1/2
        self.candidate_pruning = config.candidate_pruning
        self.bound_pruning = config.bound_pruning
        self.diameter_pruning = config.diameter_pruning

    def _need(self, m: int) -> int:
        """ceil(delta * m) in pure integer arithmetic."""
        return -((-self.d_num * m) // self.d_den)

    # -- candidate maintenance ---------------------------------------------

    def _viability(self, adj, mm: int, k: int, cand: int, check: int) -> int:
        """One degree-feasibility sweep over the ``check`` subset of a
        candidate mask (snapshot semantics: degrees measured against the
        incoming ``cand``).

        A candidate v survives iff some superset X with O + v <= X <= O + cand
        can still meet v's own degree requirement; the best case packs all of
        v's candidate neighbors into X (the slack grows monotonically up to
        that size, so only that single check is needed).
        """
        if not mm:
            return cand
        req = self.req_d
        keep = cand
        rest = check & cand
        while rest:
            low = rest & -rest
            rest ^= low
            row = adj[low.bit_length() - 1]
            d_c = (row & cand).bit_count()
            if (row & mm).bit_count() + d_c < req[k + d_c]:
                keep ^= low
        return keep

    def _r1_fixpoint(self, adj, mm: int, k: int, cand: int, dirty: int) -> int:
        """Degree-feasibility run to fixpoint via a worklist: a removal only
        affects its neighbors' candidate degrees, so only those get
        rechecked.  Same fixpoint as repeated full sweeps (removals are
        monotone), far fewer checks."""
        if not mm:
            return cand
        req = self.req_d
        dirty &= cand
        while dirty:
            low = dirty & -dirty
            dirty ^= low
            row = adj[low.bit_length() - 1]
            d_c = (row & cand).bit_count()
            if (row & mm).bit_count() + d_c < req[k + d_c]:
                cand ^= low
                dirty |= row & cand
        return cand

    def _feasible(self, adj, mm: int, k: int, cand: int) -> bool:
        """False iff some member can never reach its degree requirement in
        any proper extension drawn from ``cand``; the layer is then dead
        for growth."""
        req = self.req_d
        rest = mm
        while rest:
            low = rest & -rest
            rest ^= low
            row = adj[low.bit_length() - 1]
            d_c = (row & cand).bit_count()
            if (row & mm).bit_count() + d_c < req[k + (d_c if d_c > 1 else 1) - 1]:
                return False
        return True

    def _diameter(self, adj, mm: int, cand: int) -> int:
        """Strict common-neighbor filter (only sound at delta >= 1/2): a
        candidate not adjacent to a member must share a neighbor with it
        inside the subtree's vertex pool."""
        if not mm or not cand:
            return cand
        pool = mm | cand
        keep = cand
        for v in _bits(cand):
            row = adj[v]
            for w in _bits(mm & ~row):
                if not row & adj[w] & pool:
                    keep &= ~(1 << v)
                    break
        return keep

    def _filter_layer(self, adj, mm: int, k: int, cand: int, dirty: int) -> int:
        """Candidate maintenance for one layer.  ``dirty`` is the subset
        whose viability may have changed (everything for a fresh node, the
        struck vertex's neighbors for a residual node)."""
        if not cand or not mm:
            return cand
        if not self.candidate_pruning:
            # structural screen only: a single snapshot sweep
            return self._viability(adj, mm, k, cand, dirty)
        cand = self._r1_fixpoint(adj, mm, k, cand, dirty)
        if self.diameter_pruning and self.use_ball:
            while cand:
                prev = cand
                shrunk = self._diameter(adj, mm, cand)
                if shrunk != cand:
                    removed = cand & ~shrunk
                    touched = 0
                    for v in _bits(removed):
                        touched |= adj[v]
                    cand = self._r1_fixpoint(adj, mm, k, shrunk, touched)
                if cand and not self._feasible(adj, mm, k, cand):
                    cand = 0
                if cand == prev:
                    break
        elif cand and not self._feasible(adj, mm, k, cand):
            cand = 0
        return cand

    def filter_candidates(
        self, mm: int, k: int, c1: int, c2: int, dirty1: int = -1, dirty2: int = -1
    ) -> tuple[int, int, int]:
        """Apply per-layer maintenance; layers are independent (each rule
        reads only its own layer's adjacency and candidates).

        Returns the shrunk candidate masks and the number of removals.
        """
        before = c1.bit_count() + c2.bit_count()
        c1 = self._filter_layer(self.adj1, mm, k, c1, dirty1 & c1)
        c2 = self._filter_layer(self.adj2, mm, k, c2, dirty2 & c2)
        return c1, c2, before - c1.bit_count() - c2.bit_count()

    # -- bounds --------------------------------------------------------------

    def surplus_twice(self, adj_i, adj_j, mm: int, cand: int, base2: int) -> int:
        """Twice the upper bound on E_i(X) - E_j(X) over all X with
        O <= X <= O + cand (integral: candidate terms carry halves).

        ``cand`` need not be layer i's candidate set; the telescoping proof
        only uses that X \\ O is drawn from it.
        """
        total = base2
        for v in _bits(cand):
            row_i = adj_i[v]
            t = (
                2 * ((row_i & mm).bit_count() - (adj_j[v] & mm).bit_count())
                + (row_i & cand).bit_count()
            )
            if t > 0:
                total += t
        return total

    def bound_terms(self, mm: int, c1: int, c2: int, e1: int, e2: int) -> tuple[int, int, int, int]:
        """The four edge-surplus sums (t12, x21, t21, x12); twice the sound
        priority bound is their maximum.

        A valid pattern X in the subtree is a quasi-clique in SOME layer i
        and candidate maintenance keeps X \\ O inside that layer's candidate
        set, but which layer holds more edges is independent of i.  Both
        surplus directions are therefore bounded over each candidate set
        (t12/x21 over the first, t21/x12 over the second); taking only the
        matched directions would let the queue discard or delay patterns
        that are quasi-cliques in their lighter layer.
        """
        adj1, adj2 = self.adj1, self.adj2
        base12 = 2 * (e1 - e2)
        t12 = base12
        x21 = -base12
        rest = c1
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            r1 = adj1[v]
            r2 = adj2[v]
            gap = 2 * ((r1 & mm).bit_count() - (r2 & mm).bit_count())
            t = gap + (r1 & c1).bit_count()
            if t > 0:
                t12 += t
            t = (r2 & c1).bit_count() - gap
            if t > 0:
                x21 += t
        t21 = -base12
        x12 = base12
        rest = c2
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            r1 = adj1[v]
            r2 = adj2[v]
            gap = 2 * ((r2 & mm).bit_count() - (r1 & mm).bit_count())
            t = gap + (r2 & c2).bit_count()
            if t > 0:
                t21 += t
            t = (r1 & c2).bit_count() - gap
            if t > 0:
                x12 += t
        return t12, x21, t21, x12

    def reduced_terms(
        self, mm: int, c1: int, c2: int, rem1: int, rem2: int, sums: tuple[int, int, int, int]
    ) -> tuple[int, int, int, int]:
        """Surplus sums for a node that only LOST candidates (``rem1``/``rem2``
        no longer in ``c1``/``c2``), derived from the ancestor's ``sums``.

        Deducting each removed vertex's clamped share, measured against the
        shrunken candidate sets, keeps every remaining share at or above its
        true value, so the result still upper-bounds the exact recomputation
        while costing only the removed vertices' popcounts.
        """
        adj1, adj2 = self.adj1, self.adj2
        t12, x21, t21, x12 = sums
        rest = rem1
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            r1 = adj1[v]
            r2 = adj2[v]
            gap = 2 * ((r1 & mm).bit_count() - (r2 & mm).bit_count())
            t = gap + (r1 & c1).bit_count()
            if t > 0:
                t12 -= t
            t = (r2 & c1).bit_count() - gap
            if t > 0:
                x21 -= t
        rest = rem2
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            r1 = adj1[v]
            r2 = adj2[v]
            gap = 2 * ((r2 & mm).bit_count() - (r1 & mm).bit_count())
            t = gap + (r2 & c2).bit_count()
            if t > 0:
                t21 -= t
            t = (r1 & c2).bit_count() - gap
            if t > 0:
                x12 -= t
        return t12, x21, t21, x12

    # -- expansion -------------------------------------------------------------

    def pick_vertex(self, mm: int, joint: int) -> int:
        """Candidate with the highest combined degree toward the members;
        ties fall to the smallest id (ascending bit order)."""
        adj1, adj2 = self.adj1, self.adj2
        degsum = self.degsum
        k = mm.bit_count()
        best_v = -1
        best_d = -1
        while joint:
            low = joint & -joint
            joint ^= low
            v = low.bit_length() - 1
            if degsum[v] <= best_d:
                continue  # total degree already too small to win
            d1 = (adj1[v] & mm).bit_count()
            if d1 + k <= best_d:
                continue  # second layer cannot close the gap
            d = d1 + (adj2[v] & mm).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        return best_v

    def valid_pattern(self, mm: int, k: int, e1: int, e2: int) -> bool:
        """Integer-only test: contrasting quasi-clique with positive
        interestingness (what the miner emits)."""
        if k < 2 or k < self.min_size or e1 == e2:
            return False
        # contrast > delta_prime, cross-multiplied
        if 2 * abs(e1 - e2) * self.p_den <= self.p_num * k * (k - 1):
            return False
        need_d = self.req_d[k - 1]
        need_g = self.req_g[k - 1]
        thresh = need_d if need_d > need_g else need_g
        adj1, adj2 = self.adj1, self.adj2
        min1 = min2 = k
        rest = mm
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            d1 = (adj1[v] & mm).bit_count()
            d2 = (adj2[v] & mm).bit_count()
            if d1 < min1:
                min1 = d1
            if d2 < min2:
                min2 = d2
            if min1 < thresh and min2 < thresh:
                return False
        return min1 >= thresh or min2 >= thresh

    def expand_masks(self, mm: int, k: int, c1: int, c2: int, e1: int, e2: int):
        """Split on the best candidate vertex.

        Returns (u, new-members mask, its e1, its e2, surviving child mask
        tuples, candidates removed while filtering).  Each child tuple ends
        with the masks of candidates the child LOST relative to this node,
        or -1 when the loss is not incremental (the grown child changes the
        member set, so its surplus sums must be recomputed from scratch).
        """
        u = self.pick_vertex(mm, c1 | c2)
        ub = 1 << u
        nm = mm | ub
        ne1 = e1 + (self.adj1[u] & mm).bit_count()
        ne2 = e2 + (self.adj2[u] & mm).bit_count()
        removed = 0
        children = []

        cc1 = c1 & ~ub if c1 & ub else 0
        cc2 = c2 & ~ub if c2 & ub else 0
        if self.use_ball:
            if cc1:
                cc1 &= self.pair.ball2_mask(u, 1)
            if cc2:
                cc2 &= self.pair.ball2_mask(u, 2)
        cc1, cc2, r = self.filter_candidates(nm, k + 1, cc1, cc2)
        removed += r
        if cc1 | cc2:
            children.append((nm, k + 1, cc1, cc2, ne1, ne2, -1, -1))

        # dropping u from the candidate pool only disturbs u's neighbors
        rc1, rc2, r = self.filter_candidates(
            mm, k, c1 & ~ub, c2 & ~ub, self.adj1[u], self.adj2[u]
        )
        removed += r
        if rc1 | rc2:
            children.append((mm, k, rc1, rc2, e1, e2, c1 & ~rc1, c2 & ~rc2))

        return u, nm, ne1, ne2, children, removed


# ---------------------------------------------------------------------------
# public operations (frozenset interface over the mask engine)


def prune_candidates(
    pair: LayerPair,
    node: SearchNode,
    params: MiningParams,
    config: PruneConfig = PruneConfig(),
) -> SearchNode:
    """Return ``node`` with provably useless candidates removed."""
    eng = _Engine(pair, params, config)
    mm = _mask_of(node.members)
    c1, c2, _ = eng.filter_candidates(
        mm, len(node.members), _mask_of(node.cand1), _mask_of(node.cand2)
    )
    return SearchNode(node.members, _set_of(c1), _set_of(c2))


def edge_diff_bound(pair: LayerPair, node: SearchNode, i: int, j: int) -> Fraction:
    """Upper bound on E_i(X) - E_j(X) over descendants X that remain
    quasi-cliques in layer i (hence stay within layer i's candidates)."""
    if {i, j} != {1, 2}:
        raise ValueError("layer arguments must be 1 and 2 in some order")
    eng = _Engine(pair, MiningParams(), PruneConfig())
    mm = _mask_of(node.members)
    cand = _mask_of(node.cand1 if i == 1 else node.cand2)
    e_i = pair.edges_within(node.members, i)
    e_j = pair.edges_within(node.members, j)
    adj_i = eng.adj1 if i == 1 else eng.adj2
    adj_j = eng.adj2 if i == 1 else eng.adj1
    return Fraction(eng.surplus_twice(adj_i, adj_j, mm, cand, 2 * (e_i - e_j)), 2)


def interestingness_bound(pair: LayerPair, node: SearchNode):
    """Best interestingness any descendant pattern of this subtree can reach.

    Infinite at the root (no members yet); descendants are worth exploring
    only while the bound is positive.
    """
    if not node.members:
        return math.inf
    eng = _Engine(pair, MiningParams(), PruneConfig())
    mm = _mask_of(node.members)
    e1 = pair.edges_within(node.members, 1)
    e2 = pair.edges_within(node.members, 2)
    twice = max(eng.bound_terms(mm, _mask_of(node.cand1), _mask_of(node.cand2), e1, e2))
    return Fraction(twice, len(node.members))


def expand(
    pair: LayerPair,
    node: SearchNode,
    params: MiningParams,
    config: PruneConfig = PruneConfig(),
) -> tuple[Optional[Pattern], list[SearchNode]]:
    """Expansion step: returns the pattern emitted at the grown vertex set
    (if it qualifies) and the surviving child subtrees."""
    eng = _Engine(pair, params, config)
    mm = _mask_of(node.members)
    e1 = pair.edges_within(node.members, 1)
    e2 = pair.edges_within(node.members, 2)
    _, nm, ne1, ne2, children, _ = eng.expand_masks(
        mm, len(node.members), _mask_of(node.cand1), _mask_of(node.cand2), e1, e2
    )
    pattern = None
    if eng.valid_pattern(nm, len(node.members) + 1, ne1, ne2):
        pattern = Pattern.from_vertices(pair, _set_of(nm), params)
    nodes = [
        SearchNode(_set_of(cmm), _set_of(cc1), _set_of(cc2))
        for cmm, _, cc1, cc2, _, _, _, _ in children
    ]
    return pattern, nodes


# ---------------------------------------------------------------------------
# the mining loop


def mine(
    pair: LayerPair,
    params: MiningParams = MiningParams(),
    config: PruneConfig = PruneConfig(),
    trace: Optional[MiningTrace] = None,
) -> tuple[ResultSet, MiningStats]:
    """Mine all contrasting quasi-cliques and return the redundancy-filtered
    result set together with run statistics.

    Patterns are offered to the result set in non-increasing interestingness
    order (ties: smaller sets first, then by vertex ids), so the outcome
    matches a global greedy pass over every valid pattern.
    """
    t0 = time.perf_counter()
    stats = MiningStats()
    result = ResultSet(params.r)
    eng = _Engine(pair, params, config)
    heap: list = []
    seq = count()

    def push_subtree(
        mm: int, k: int, c1: int, c2: int, e1: int, e2: int,
        rem1: int = -1, rem2: int = -1, psums=None,
    ) -> None:
        joint = c1 | c2
        if not joint:
            return
        if config.bound_pruning and k + joint.bit_count() < params.min_size:
            stats.subtrees_pruned_by_bound += 1
            return
        if rem1 < 0 or psums is None:
            sums = eng.bound_terms(mm, c1, c2, e1, e2)
        else:
            sums = eng.reduced_terms(mm, c1, c2, rem1, rem2, psums)
        if k:
            twice = max(sums)
            if trace is not None:
                # audits want the freshly recomputed per-direction terms;
                # the bound recorded is the actual queue priority
                et12, _, et21, _ = (
                    sums if psums is None else eng.bound_terms(mm, c1, c2, e1, e2)
                )
                trace.subtrees.append(
                    SubtreeRecord(
                        _set_of(mm), _set_of(c1), _set_of(c2), et12, et21, Fraction(twice, k)
                    )
                )
            if config.bound_pruning and twice <= 0:
                stats.subtrees_pruned_by_bound += 1
                return
            priority = _Pri(twice, k)
        else:
            if trace is not None:
                et12, _, et21, _ = (
                    sums if psums is None else eng.bound_terms(mm, c1, c2, e1, e2)
                )
                trace.subtrees.append(
                    SubtreeRecord(_set_of(mm), _set_of(c1), _set_of(c2), et12, et21, math.inf)
                )
            priority = _Pri(1, 0)
        # among equal-priority subtrees the pop order is irrelevant to the
        # offer order (kind sorts all of them ahead of any tied pattern), so
        # the raw mask is a good enough deterministic tie-break
        heappush(
            heap,
            (priority, _KIND_SUBTREE, k, mm, next(seq), (mm, k, c1, c2, e1, e2, sums)),
        )

    def push_pattern(pat: Pattern) -> None:
        stats.patterns_emitted += 1
        if trace is not None:
            trace.emitted.append(pat.vertices)
        score = pat.interestingness
        heappush(
            heap,
            (
                _Pri(score.numerator, score.denominator),
                _KIND_PATTERN,
                len(pat.key),
                pat.key,
                next(seq),
                pat,
            ),
        )

    stats.nodes_visited = 1
    c1, c2, removed = eng.filter_candidates(0, 0, eng.full, eng.full)
    stats.candidates_pruned += removed
    push_subtree(0, 0, c1, c2, 0, 0)

    while heap:
        _, kind, _, _, _, payload = heappop(heap)
        if kind == _KIND_PATTERN:
            if trace is not None:
                trace.offered.append(payload)
            if result.try_accept(payload):
                stats.patterns_accepted += 1
        else:
            mm, k, c1, c2, e1, e2, sums = payload
            _, nm, ne1, ne2, children, removed = eng.expand_masks(mm, k, c1, c2, e1, e2)
            stats.nodes_visited += 1
            stats.candidates_pruned += removed
            if trace is not None:
                trace.visited.append(_set_of(nm))
            if eng.valid_pattern(nm, k + 1, ne1, ne2):
                push_pattern(Pattern.from_vertices(pair, _set_of(nm), params))
            for cmm, ck, cc1, cc2, ce1, ce2, rm1, rm2 in children:
                push_subtree(cmm, ck, cc1, cc2, ce1, ce2, rm1, rm2, sums)

    stats.wall_time_s = time.perf_counter() - t0
    return result, stats


# ---------------------------------------------------------------------------
# dense mining over one pair (both layers at once), for the complement baseline


def mine_dense_pair(
    pair: LayerPair,
    params: MiningParams = MiningParams(),
    config: PruneConfig = PruneConfig(),
) -> tuple[list[frozenset[int]], MiningStats]:
    """Enumerate vertex sets that are delta-quasi-cliques in BOTH layers.

    Used by the complement-graph baseline: on a (graph, complemented-graph)
    pair, dense-in-both sets are exactly the candidate contrasts.  Traversal
    order does not matter because callers re-score and re-sort the output,
    so a plain stack drives the same split-on-one-vertex tree.  Candidates
    must stay viable in both layers at once, hence the single candidate set.
    """
    t0 = time.perf_counter()
    stats = MiningStats()
    found: list[frozenset[int]] = []
    eng = _Engine(pair, params, config)

    def sweep(mm: int, k: int, cand: int, dirty: int, fixpoint: bool) -> int:
        # viability in BOTH layers at once over the shared candidate set
        req = eng.req_d
        dirty &= cand
        while dirty:
            low = dirty & -dirty
            dirty ^= low
            v = low.bit_length() - 1
            r1 = eng.adj1[v]
            d1 = (r1 & cand).bit_count()
            if (r1 & mm).bit_count() + d1 >= req[k + d1]:
                r2 = eng.adj2[v]
                d2 = (r2 & cand).bit_count()
                if (r2 & mm).bit_count() + d2 >= req[k + d2]:
                    continue
            else:
                r2 = eng.adj2[v]
            cand ^= low
            if fixpoint:
                dirty |= (r1 | r2) & cand
        return cand

    def screen(mm: int, k: int, cand: int, dirty: int) -> int:
        before = cand.bit_count()
        if mm and cand:
            cand = sweep(mm, k, cand, dirty, eng.candidate_pruning)
            if eng.candidate_pruning:
                use_diameter = eng.diameter_pruning and eng.use_ball
                while cand:
                    prev = cand
                    if use_diameter:
                        cand = eng._diameter(eng.adj1, mm, cand)
                        cand = eng._diameter(eng.adj2, mm, cand)
                        if cand != prev:
                            cand = sweep(mm, k, cand, cand, True)
                    if cand and (
                        not eng._feasible(eng.adj1, mm, k, cand)
                        or not eng._feasible(eng.adj2, mm, k, cand)
                    ):
                        cand = 0
                    if cand == prev:
                        break
        stats.candidates_pruned += before - cand.bit_count()
        return cand

    def dense_in_both(mm: int, k: int) -> bool:
        if k < params.min_size:
            return False
        need = eng.req_d[k - 1]
        for v in _bits(mm):
            if (eng.adj1[v] & mm).bit_count() < need or (eng.adj2[v] & mm).bit_count() < need:
                return False
        return True

    def pushable(k: int, cand: int) -> bool:
        if not cand:
            return False
        if config.bound_pruning and k + cand.bit_count() < params.min_size:
            stats.subtrees_pruned_by_bound += 1
            return False
        return True

    stats.nodes_visited = 1
    stack: list[tuple[int, int, int]] = []
    root_cand = screen(0, 0, eng.full, -1)
    if pushable(0, root_cand):
        stack.append((0, 0, root_cand))

    while stack:
        mm, k, cand = stack.pop()
        u = eng.pick_vertex(mm, cand)
        ub = 1 << u
        nm = mm | ub
        stats.nodes_visited += 1
        if dense_in_both(nm, k + 1):
            found.append(_set_of(nm))
            stats.patterns_emitted += 1

        resid = screen(mm, k, cand & ~ub, eng.adj1[u] | eng.adj2[u])
        if pushable(k, resid):
            stack.append((mm, k, resid))

        child = cand & ~ub
        if eng.use_ball:
            child &= pair.ball2_mask(u, 1) & pair.ball2_mask(u, 2)
        child = screen(nm, k + 1, child, -1)
        if pushable(k + 1, child):
            stack.append((nm, k + 1, child))

    stats.wall_time_s = time.perf_counter() - t0
    return found, stats
