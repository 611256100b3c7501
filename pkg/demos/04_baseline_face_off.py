"""Compare the direct contrast miner against the complement-graph baseline.

The baseline reduces contrast mining to two dense-in-both-layers runs, one
per complemented layer.  Dense-in-a-complement is a stricter sparsity
requirement than low average density, so the baseline usually reports a
subset of the direct miner's patterns, and it does so while visiting more
of the search tree.  Run:

    python demos/04_baseline_face_off.py [--n 300] [--edges 1200] [--seed 11]
"""
import argparse

from cqcmine import MiningParams, SynthConfig, generate, mine, mine_baseline


def describe(tag, patterns, stats):
    total = sum(float(p.interestingness) for p in patterns)
    print(
        f"  {tag:<9} {len(patterns):3d} patterns  "
        f"sum I={total:8.3f}  {stats.nodes_visited:>9,} nodes  {stats.wall_time_s:7.2f}s"
    )


def main():
    cli = argparse.ArgumentParser(description=__doc__)
    cli.add_argument("--n", type=int, default=300)
    cli.add_argument("--edges", type=int, default=1200)
    cli.add_argument("--seed", type=int, default=11)
    args = cli.parse_args()

    config = SynthConfig(
        n=args.n,
        target_edges=args.edges,
        n_embedded=2,
        qc_size=10,
        qc_density=0.6,
        seed=args.seed,
    )
    pair, _ = generate(config)
    print(f"Instance: {pair.n} vertices, {pair.edge_count(1)} + {pair.edge_count(2)} edges.")

    params = MiningParams(min_size=6)
    direct, direct_stats = mine(pair, params)
    via_complements, base_stats = mine_baseline(pair, params)

    print("\nSame scoring, two strategies:")
    describe("direct", list(direct), direct_stats)
    describe("baseline", list(via_complements), base_stats)

    direct_keys = {p.key for p in direct}
    base_keys = {p.key for p in via_complements}
    print(f"\nPatterns found by both: {len(direct_keys & base_keys)}")
    print(f"Only direct:   {len(direct_keys - base_keys)}")
    print(f"Only baseline: {len(base_keys - direct_keys)}")
    print(
        "\nThe baseline only sees sets whose sparse layer is sparse vertex by"
        "\nvertex, so the direct miner usually keeps a few patterns it cannot"
        "\nreach; any baseline-only patterns are greedy-order artifacts, since"
        "\ndifferent candidate pools survive the redundancy filter differently."
        "\nThe cost gap between the two widens as the instance grows."
    )


if __name__ == "__main__":
    main()
