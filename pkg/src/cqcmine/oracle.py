"""Exhaustive reference miner for small instances.

Enumerates every vertex subset with bitmask arithmetic, keeps the valid
contrasting quasi-cliques, sorts them exactly the way the search engine
offers patterns (interestingness descending, then size, then vertex ids)
and applies the same greedy redundancy filter.  Everything stays in integer
or rational arithmetic, so agreement with the engine is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import LayerPair
from .patterns import MiningParams, Pattern, ResultSet

MAX_ORACLE_VERTICES = 16


@dataclass(frozen=True)
class OracleResult:
    """All valid patterns plus the greedy-filtered subset, both sorted."""

    all_patterns: tuple[Pattern, ...]
    accepted: tuple[Pattern, ...]

    def total_interestingness(self) -> Fraction:
        return sum((p.interestingness for p in self.accepted), Fraction(0))


def _bit_adjacency(pair: LayerPair, layer: int) -> list[int]:
    masks = [0] * pair.n
    for v, nbrs in enumerate(pair.adjacency(layer)):
        m = 0
        for w in nbrs:
            m |= 1 << w
        masks[v] = m
    return masks


def _ceil_mul(num: int, den: int, m: int) -> int:
    return -((-num * m) // den)


def enumerate_all(pair: LayerPair, params: MiningParams = MiningParams()) -> OracleResult:
    """Check all 2^n subsets; n is capped to keep this honest brute force."""
    n = pair.n
    if n > MAX_ORACLE_VERTICES:
        raise ValueError(f"oracle supports at most {MAX_ORACLE_VERTICES} vertices, got {n}")

    bits1 = _bit_adjacency(pair, 1)
    bits2 = _bit_adjacency(pair, 2)
    d_num, d_den = params.delta.numerator, params.delta.denominator
    g_num, g_den = params.base_gamma.numerator, params.base_gamma.denominator
    p_num, p_den = params.delta_prime.numerator, params.delta_prime.denominator
    min_size = params.min_size

    valid: list[Pattern] = []
    for mask in range(1, 1 << n):
        k = mask.bit_count()
        if k < 2 or k < min_size:
            continue
        rest = mask
        sum1 = sum2 = 0
        min1 = min2 = k
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d1 = (bits1[v] & mask).bit_count()
            d2 = (bits2[v] & mask).bit_count()
            sum1 += d1
            sum2 += d2
            if d1 < min1:
                min1 = d1
            if d2 < min2:
                min2 = d2
        best_min = max(min1, min2)
        if best_min < _ceil_mul(d_num, d_den, k - 1):
            continue
        if best_min < _ceil_mul(g_num, g_den, k - 1):
            continue
        e1, e2 = sum1 // 2, sum2 // 2
        if e1 == e2:
            continue
        if 2 * abs(e1 - e2) * p_den <= p_num * k * (k - 1):
            continue
        members = frozenset(v for v in range(n) if mask >> v & 1)
        valid.append(Pattern.from_vertices(pair, members, params))

    valid.sort(key=Pattern.sort_key)
    filt = ResultSet(params.r)
    for pat in valid:
        filt.try_accept(pat)
    return OracleResult(tuple(valid), tuple(filt))
