"""Command-line entry point: ``sinkfvs gen|solve|bound|verify|bench``.

Exit codes: 0 success, 1 usage error, 2 input or parse error (including an
FVS that fails verification), 3 size guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bench import BenchConfig, records_from_csv, records_to_csv, run_benchmark, summarize
from .bounds import lower_bound
from .digraph import GraphError
from .generators import gen_erdos_renyi, gen_k_regular
from .graphio import ParseError, parse_graph, parse_vertex_set, write_graph, write_vertex_set
from .scaling import GuardError
from .solvers import PIPELINES, is_fvs, is_minimal_fvs, solve

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    if args.kind == "er":
        g = gen_erdos_renyi(args.n, args.p, args.seed)
    else:
        g = gen_k_regular(args.n, args.k, args.seed)
    _emit(write_graph(g), args.output)
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    start = time.perf_counter()
    result = solve(g, args.algo)
    wall_ms = (time.perf_counter() - start) * 1e3
    if args.json:
        summary = {
            "algorithm": result.algorithm,
            "n": g.n,
            "arcs": g.num_arcs,
            "fvs_size": result.size,
            "fvs": list(result.final),
            "selected": list(result.selected),
            "wall_ms": round(wall_ms, 3),
        }
        print(json.dumps(summary))
    else:
        _emit(write_vertex_set(result.final), args.output)
    return EXIT_OK


def _cmd_bound(args) -> int:
    g = parse_graph(_read(args.graph))
    fvs = parse_vertex_set(_read(args.fvs))
    cert = lower_bound(g, fvs)
    if args.json:
        print(json.dumps({
            "fvs_size": cert.fvs_size,
            "cycles": len(cert.cycles),
            "t": cert.t,
            "k": cert.k,
            "ratio": cert.ratio,
            "epsilon": cert.epsilon,
        }))
    else:
        print(cert.t)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    fvs = parse_vertex_set(_read(args.fvs))
    unknown = [v for v in fvs if v not in g]
    if unknown:
        raise InputError(f"unknown vertex ids {unknown[:5]}")
    if not is_fvs(g, fvs):
        print("invalid: graph minus the set still has a cycle")
        return EXIT_INPUT
    print("valid minimal" if is_minimal_fvs(g, fvs) else "valid not-minimal")
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.bench_cmd == "summarize":
        _emit(summarize(records_from_csv(_read(args.csv))), args.output)
        return EXIT_OK
    if not args.config:
        raise argparse.ArgumentError(None, "bench needs --config or the summarize subcommand")
    try:
        config = BenchConfig.from_dict(json.loads(_read(args.config)))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"bad config: {exc}") from None
    records = run_benchmark(config, workers=args.workers, timing=not args.no_timing)
    _emit(records_to_csv(records), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sinkfvs", description="Feedback vertex set heuristics and benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a random digraph")
    gen_sub = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    er = gen_sub.add_parser("er", help="Erdos-Renyi digraph")
    er.add_argument("--n", type=int, required=True)
    er.add_argument("--p", type=float, required=True)
    er.add_argument("--seed", type=int, default=0)
    er.add_argument("-o", "--output")
    kreg = gen_sub.add_parser("kreg", help="k-regular digraph via 2-switches")
    kreg.add_argument("--n", type=int, required=True)
    kreg.add_argument("--k", type=int, required=True)
    kreg.add_argument("--seed", type=int, default=0)
    kreg.add_argument("-o", "--output")
    gen.set_defaults(func=_cmd_gen)

    sol = sub.add_parser("solve", help="compute an FVS")
    sol.add_argument("graph", help="graph file, or - for stdin")
    sol.add_argument("--algo", choices=[*PIPELINES, "exact"], default="sh")
    sol.add_argument("--json", action="store_true", help="print a JSON summary instead of ids")
    sol.add_argument("-o", "--output")
    sol.set_defaults(func=_cmd_solve)

    bnd = sub.add_parser("bound", help="cycle-packing lower bound from a known FVS")
    bnd.add_argument("graph")
    bnd.add_argument("--fvs", required=True)
    bnd.add_argument("--json", action="store_true")
    bnd.set_defaults(func=_cmd_bound)

    ver = sub.add_parser("verify", help="check that a vertex set is a (minimal) FVS")
    ver.add_argument("graph")
    ver.add_argument("--fvs", required=True)
    ver.set_defaults(func=_cmd_verify)

    ben = sub.add_parser("bench", help="run a benchmark sweep to CSV")
    ben.add_argument("--config")
    ben.add_argument("--workers", type=int, default=None,
                     help="worker processes (default: FVS_THREADS or CPU count)")
    ben.add_argument("--no-timing", action="store_true", help="write wall_ms as 0")
    ben.add_argument("-o", "--output")
    ben_sub = ben.add_subparsers(dest="bench_cmd", parser_class=_Parser)
    summ = ben_sub.add_parser("summarize", help="mean ratios per sweep point")
    summ.add_argument("csv")
    summ.add_argument("-o", "--output")
    ben.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentError as exc:
        parser.print_usage(sys.stderr)
        print(f"sinkfvs: error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"sinkfvs: size limit: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, GraphError, InputError, ValueError) as exc:
        print(f"sinkfvs: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
