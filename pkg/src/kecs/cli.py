"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from kecs import generators
from kecs.decremental import DecrementalKECS
from kecs.graph import GraphError, ParseError, format_partition, parse_graph, serialize_graph
from kecs.reference import brute_partition_recursive_mincut
from kecs.sparsify import kecs_certificate
from kecs.static import maximal_kecs


class UsageError(Exception):
    pass


def _read_graph(path: str):
    if path == "-":
        return parse_graph(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def _check_k(k: int) -> None:
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")


def cmd_partition(args) -> int:
    _check_k(args.k)
    g = _read_graph(args.input)
    t0 = time.perf_counter()
    result = maximal_kecs(g, args.k, use_certificate=not args.no_certificate)
    ms = (time.perf_counter() - t0) * 1000
    sys.stdout.write(format_partition(result.partition))
    if args.stats:
        stats = {
            "n": g.n,
            "m": g.m,
            "k": args.k,
            "oracle_queries": result.stats.query_count,
            "oracle_updates": result.stats.update_units,
            "oracle_preprocess": result.stats.preprocess_units,
            "recursion_depth": result.recursion_depth,
            "wall_time_ms": round(ms, 3),
        }
        with open(args.stats, "w", encoding="utf-8") as fh:
            json.dump(stats, fh, indent=2)
            fh.write("\n")
    return 0


def cmd_decremental(args) -> int:
    _check_k(args.k)
    g = _read_graph(args.input)
    state = DecrementalKECS(g, args.k)
    out = sys.stdout
    with open(args.stream, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) != 3 or line[0] not in ("d", "q") or not (line[1].isdigit() and line[2].isdigit()):
                raise ParseError(lineno, f"expected 'd u v' or 'q u v', got {raw.strip()!r}")
            u, v = int(line[1]), int(line[2])
            try:
                if line[0] == "d":
                    state.delete(u, v)
                else:
                    out.write("1\n" if state.same_part(u, v) else "0\n")
            except GraphError as exc:
                raise ParseError(lineno, str(exc)) from None
    out.write(format_partition(state.current_partition()))
    return 0


def cmd_verify(args) -> int:
    _check_k(args.k)
    g = _read_graph(args.input)
    if g.n > args.cap:
        raise UsageError(f"{g.n} vertices exceeds --cap {args.cap}")
    got = maximal_kecs(g, args.k).partition
    want = brute_partition_recursive_mincut(g, args.k)
    if got == want:
        print("ok")
        return 0
    print("mismatch")
    print("--- solver")
    sys.stdout.write(format_partition(got))
    print("--- brute force")
    sys.stdout.write(format_partition(want))
    return 1


def cmd_gen(args) -> int:
    kind = args.kind
    try:
        if kind == "random":
            g = generators.random_multigraph(_need(args, "n"), _need(args, "m"), args.seed)
        elif kind == "tree":
            g = generators.tree(_need(args, "n"), args.seed)
        elif kind in ("path", "cycle", "complete"):
            g = generators.KINDS[kind](_need(args, "n"))
        elif kind == "petersen":
            g = generators.petersen()
        elif kind == "two_cliques":
            g = generators.two_cliques(_need(args, "a"), _need(args, "b"),
                                       _need(args, "bridges"), args.detours or 0)
        else:
            raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(generators.KINDS)}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(serialize_graph(g))
    return 0


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--kind {args.kind} needs --{name}")
    return value


def cmd_sparsify(args) -> int:
    _check_k(args.k)
    sys.stdout.write(serialize_graph(kecs_certificate(_read_graph(args.input), args.k)))
    return 0


def _sizes(text: str) -> list[int]:
    try:
        return [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def bench_rows(sizes, k: int, seed: int, density: int = 4):
    """Yield ``(n, m, k, queries, depth, ms)`` per size on random sparse graphs."""
    for n in sizes:
        g = generators.random_multigraph(n, density * n, seed)
        t0 = time.perf_counter()
        result = maximal_kecs(g, k)
        ms = (time.perf_counter() - t0) * 1000
        yield n, g.m, k, result.stats.query_count, result.recursion_depth, ms


def cmd_bench(args) -> int:
    _check_k(args.k)
    print("n,m,k,queries,depth,ms")
    for n, m, k, queries, depth, ms in bench_rows(args.sizes, args.k, args.seed, args.density):
        print(f"{n},{m},{k},{queries},{depth},{ms:.1f}", flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kecs", description="Maximal k-edge-connected subgraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="compute the maximal k-edge-connected subgraphs")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--no-certificate", action="store_true")
    p.add_argument("--stats", metavar="FILE")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("decremental", help="replay a deletion/query stream")
    p.add_argument("--input", required=True)
    p.add_argument("--stream", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_decremental)

    p = sub.add_parser("verify", help="compare against the brute-force partition")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=60)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph")
    p.add_argument("--kind", required=True)
    for name in ("n", "m", "a", "b", "bridges", "detours"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sparsify", help="emit the sparse certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("bench", help="scaling table on random sparse graphs")
    p.add_argument("--sizes", type=_sizes, default=[1000, 10000, 100000])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=int, default=4, help="edges per vertex")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
