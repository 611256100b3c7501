"""Command-line driver.

Subcommands: ``mine`` (direct best-first miner), ``baseline`` (complement
dense-mining strategy), ``oracle`` (exhaustive small-instance reference),
``gen`` (synthetic two-layer benchmark), ``stats`` (aggregate run stats
into a comparison CSV).  Patterns are emitted as JSON lines in acceptance
order; statistics as a single JSON object.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .baseline import mine_baseline
from .graphs import EdgeListFormatError, load_layer_pair, read_edge_list, write_edge_list
from .oracle import enumerate_all
from .patterns import MiningParams, Pattern, _sig6, pattern_json_dict
from .search import PruneConfig, mine
from .synth import SynthConfig, generate

REPORT_ROWS = (
    "runtime_s",
    "nodes_visited",
    "avg_interestingness",
    "sum_interestingness",
    "avg_gamma",
    "avg_size",
)


def _add_mining_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph1", required=True, help="edge-list file for the first layer")
    sub.add_argument("--graph2", required=True, help="edge-list file for the second layer")
    sub.add_argument("--delta", type=float, default=0.5, help="quasi-clique density threshold")
    sub.add_argument(
        "--delta-prime", type=float, default=0.0, dest="delta_prime",
        help="minimum contrast between the layers (strict)",
    )
    sub.add_argument("--r", type=float, default=0.1, help="redundancy overlap threshold")
    sub.add_argument("--min-size", type=int, default=4, help="smallest reportable pattern")
    sub.add_argument(
        "--base-gamma", type=float, default=0.5,
        help="patterns below this min-degree density score -1",
    )
    sub.add_argument("--no-prune", action="store_true", help="disable search optimizations")
    sub.add_argument(
        "--diameter-prune", action="store_true",
        help="also apply the strict common-neighbor candidate filter",
    )
    sub.add_argument("--seed", type=int, default=0, help="reserved; mining is deterministic")
    sub.add_argument("--out", default=None, help="pattern output path (default: stdout)")
    sub.add_argument("--stats", default=None, help="write run statistics JSON to this path")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cqcmine",
        description="Mine vertex sets that are dense in one graph layer and sparse in the other.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_mine = subs.add_parser("mine", help="run the best-first contrast miner")
    _add_mining_arguments(p_mine)

    p_base = subs.add_parser("baseline", help="run the complement-graph dense-mining strategy")
    _add_mining_arguments(p_base)

    p_oracle = subs.add_parser("oracle", help="exhaustive reference miner (small graphs only)")
    _add_mining_arguments(p_oracle)
    p_oracle.add_argument(
        "--all", action="store_true",
        help="emit every valid pattern instead of the greedy non-redundant result",
    )

    p_gen = subs.add_parser("gen", help="generate a synthetic two-layer benchmark")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--edges", type=int, required=True, help="edge budget per layer")
    p_gen.add_argument("--n-embedded", type=int, default=0, help="planted quasi-cliques per layer")
    p_gen.add_argument("--qc-size", type=int, default=10, help="planted quasi-clique size")
    p_gen.add_argument("--qc-density", type=float, default=0.6, help="planted average density")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--graph1", required=True, help="output path for layer 1 edges")
    p_gen.add_argument("--graph2", required=True, help="output path for layer 2 edges")
    p_gen.add_argument("--truth", default=None, help="output path for ground-truth JSON")

    p_stats = subs.add_parser("stats", help="tabulate stats JSON files into a comparison CSV")
    p_stats.add_argument("files", nargs="+", help="stats JSON files, one column each")
    p_stats.add_argument("--out", default=None, help="CSV output path (default: stdout)")

    return parser


def _params_from(args: argparse.Namespace) -> MiningParams:
    return MiningParams(
        delta=args.delta,
        delta_prime=args.delta_prime,
        r=args.r,
        min_size=args.min_size,
        base_gamma=args.base_gamma,
    )


def _prune_config(args: argparse.Namespace) -> PruneConfig:
    if args.no_prune:
        return PruneConfig.none()
    return PruneConfig(diameter_pruning=args.diameter_prune)


def _load_pair(args: argparse.Namespace):
    return load_layer_pair(read_edge_list(args.graph1), read_edge_list(args.graph2))


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _pattern_lines(patterns, pair) -> str:
    return "".join(json.dumps(pattern_json_dict(p, pair)) + "\n" for p in patterns)


def _aggregates(patterns: list[Pattern]) -> dict:
    """The four quality metrics of a result set; averages are null when empty."""
    n = len(patterns)
    if n == 0:
        return {
            "patterns": 0,
            "avg_interestingness": None,
            "sum_interestingness": 0.0,
            "avg_gamma": None,
            "avg_size": None,
        }
    total_i = sum((p.interestingness for p in patterns), Fraction(0))
    total_g = sum((max(p.gamma1, p.gamma2) for p in patterns), Fraction(0))
    total_k = sum(len(p.key) for p in patterns)
    return {
        "patterns": n,
        "avg_interestingness": _sig6(total_i / n),
        "sum_interestingness": _sig6(total_i),
        "avg_gamma": _sig6(total_g / n),
        "avg_size": _sig6(Fraction(total_k, n)),
    }


def _base_stats(command: str, args: argparse.Namespace, pair, params: MiningParams) -> dict:
    return {
        "command": command,
        "graph1": args.graph1,
        "graph2": args.graph2,
        "params": {
            "delta": _sig6(params.delta),
            "delta_prime": _sig6(params.delta_prime),
            "r": _sig6(params.r),
            "min_size": params.min_size,
            "base_gamma": _sig6(params.base_gamma),
        },
        "n_vertices": pair.n,
        "n_edges1": pair.edge_count(1),
        "n_edges2": pair.edge_count(2),
    }


def _dump_stats(path: str | None, payload: dict) -> None:
    if path is not None:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def _run_mine(args: argparse.Namespace) -> int:
    pair = _load_pair(args)
    params = _params_from(args)
    result, stats = mine(pair, params, _prune_config(args))
    patterns = list(result)
    _write_text(args.out, _pattern_lines(patterns, pair))
    payload = _base_stats("mine", args, pair, params)
    payload.update(stats.to_dict())
    payload["runtime_s"] = payload.pop("wall_time_s")
    payload.update(_aggregates(patterns))
    _dump_stats(args.stats, payload)
    return 0


def _run_baseline(args: argparse.Namespace) -> int:
    pair = _load_pair(args)
    params = _params_from(args)
    result, stats = mine_baseline(pair, params, _prune_config(args))
    patterns = list(result)
    _write_text(args.out, _pattern_lines(patterns, pair))
    payload = _base_stats("baseline", args, pair, params)
    payload.update(stats.to_dict())
    payload["runtime_s"] = payload.pop("wall_time_s")
    payload.update(_aggregates(patterns))
    _dump_stats(args.stats, payload)
    return 0


def _run_oracle(args: argparse.Namespace) -> int:
    pair = _load_pair(args)
    params = _params_from(args)
    import time

    t0 = time.perf_counter()
    outcome = enumerate_all(pair, params)
    runtime = time.perf_counter() - t0
    patterns = list(outcome.all_patterns if args.all else outcome.accepted)
    _write_text(args.out, _pattern_lines(patterns, pair))
    payload = _base_stats("oracle", args, pair, params)
    payload["nodes_visited"] = (1 << pair.n) - 1  # subsets examined
    payload["runtime_s"] = runtime
    payload.update(_aggregates(patterns))
    _dump_stats(args.stats, payload)
    return 0


def _run_gen(args: argparse.Namespace) -> int:
    config = SynthConfig(
        n=args.n,
        target_edges=args.edges,
        n_embedded=args.n_embedded,
        qc_size=args.qc_size,
        qc_density=args.qc_density,
        seed=args.seed,
    )
    pair, truth = generate(config)
    for layer, path in ((1, args.graph1), (2, args.graph2)):
        edges = [
            (pair.label(u), pair.label(v)) for u, v in sorted(pair.edges(layer))
        ]
        write_edge_list(path, edges)
    if args.truth is not None:
        payload = {
            "n": config.n,
            "target_edges": config.target_edges,
            "n_embedded": config.n_embedded,
            "qc_size": config.qc_size,
            "qc_density": config.qc_density,
            "seed": config.seed,
            "embeddings": [e.to_dict() for e in truth],
        }
        Path(args.truth).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return 0


def _run_stats(args: argparse.Namespace) -> int:
    columns = []
    for name in args.files:
        try:
            data = json.loads(Path(name).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise EdgeListFormatError(f"{name}: cannot read stats file: {exc}") from exc
        if not isinstance(data, dict):
            raise EdgeListFormatError(f"{name}: stats file must hold a JSON object")
        columns.append((Path(name).stem, data))

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["metric"] + [stem for stem, _ in columns])
    for row in REPORT_ROWS:
        values = []
        for _, data in columns:
            value = data.get(row)
            values.append("" if value is None else value)
        writer.writerow([row] + values)
    _write_text(args.out, buf.getvalue())
    return 0


_RUNNERS = {
    "mine": _run_mine,
    "baseline": _run_baseline,
    "oracle": _run_oracle,
    "gen": _run_gen,
    "stats": _run_stats,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except (EdgeListFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
