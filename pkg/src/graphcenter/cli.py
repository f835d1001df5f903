"""Command-line entry point: ``graphcenter {center,partition,gen,bench}``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bitmatrix import default_threads
from .graph import GraphError, Morphology, export_dot, generate_morphology, parse_edge_list, serialize_edge_list
from .partition import partition

log = logging.getLogger("graphcenter")


def _read_graph(path: str):
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_edge_list(data)


def _threads(args) -> int:
    return args.threads or default_threads()


def cmd_center(args) -> int:
    result = partition(_read_graph(args.file), threads=_threads(args))
    print(f"radius {result.radius}; center: {' '.join(result.center())}")
    return 0


def cmd_partition(args) -> int:
    g = _read_graph(args.file)
    result = partition(g, use_doubling=not args.no_doubling, threads=_threads(args))
    if args.format == "dot":
        sys.stdout.write(export_dot(g, result))
    else:
        print(result.to_json())
    return 0


def cmd_gen(args) -> int:
    from .baseline import oracle_partition

    g = generate_morphology(Morphology(args.nodes, args.edges, args.depth), args.seed)
    text = serialize_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    measured = oracle_partition(g)
    print(f"N={g.n} NA={g.num_edges} P_target={args.depth} P_measured={measured.depth} "
          f"radius={measured.radius}", file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    from .bench import DESK_PRESET, emit_table, parse_spec_file, run_benchmark

    specs = parse_spec_file(Path(args.spec_file).read_text()) if args.spec_file else DESK_PRESET
    threads = _threads(args)
    records = run_benchmark(specs, seeds=args.seeds, repetitions=args.reps, threads=threads)
    table = emit_table(records, args.format, threads=threads if args.format == "markdown" else None)
    print(f"threads={threads}", file=sys.stderr)
    if args.out:
        out = Path(args.out)
        out.write_text(table)
        if not args.no_figure:
            from .report import plot_benchmark

            fig = plot_benchmark(records, out.with_suffix(".png"))
            log.info("figure written to %s", fig)
    else:
        sys.stdout.write(table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads for the matrix products (default: $ECC_THREADS or all cores)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="graphcenter", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("center", parents=[common], help="print radius and center nodes")
    p.add_argument("file", help="edge-list file, '-' for stdin")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("partition", parents=[common], help="layer every node by distance to the center")
    p.add_argument("file", help="edge-list file, '-' for stdin")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--no-doubling", action="store_true", help="compute every power instead of squaring")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", parents=[common], help="generate a random graph with a target morphology")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="time against Floyd-Warshall")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--preset", choices=("desk",), default="desk")
    src.add_argument("--spec-file", help="file of 'N NA P' lines")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--out", help="write table here; a .png figure is written next to it")
    p.add_argument("--no-figure", action="store_true")
    p.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose or args.command == "bench" else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
