"""
Command-line front end: solve, validate, classify, oracle, gen and bench.

Exit status is 0 on success, 1 for bad input and 2 when an internal
consistency check fails.
"""

import sys
import argparse
import logging
from typing import List, Optional, Tuple

from src.graph_core import (ParameterAlgebraError, WeightedGraph, generate_random_cactus,
                            parse_graph, serialize_graph, validate_cactus)
from src.dfs_cactus import block_decomposition, build_dfs_structure, classify_vertex, dump_structure
from src.domination.params import DomParams
from src.domination.solver import solve_cactus
from src.domination.tracing import ExtractionError
from src.oracle import brute_force_gamma, brute_force_params
from src.bench import BenchInstanceError, BoundViolationError, format_table, run_scaling
from config.solver_config import solver_config

logger = logging.getLogger(__name__)

INTERNAL_ERRORS = (ParameterAlgebraError, ExtractionError, BoundViolationError, BenchInstanceError)


class UsageError(ValueError):
    """Unknown flag, missing argument or malformed option value."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vertex_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}")


def _size_list(text: str) -> List[int]:
    sizes = _vertex_list(text)
    if not sizes:
        raise argparse.ArgumentTypeError("expected at least one size")
    return sizes


def _read_graph(path: str) -> WeightedGraph:
    if path == "-":
        return parse_graph(sys.stdin)
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle)


def _params_line(params: DomParams) -> str:
    return "params=" + " ".join(str(x) for x in params.as_tuple()) + "\n"


def _root(args) -> int:
    return args.root if args.root is not None else solver_config.default_root


def cmd_solve(args) -> str:
    graph = _read_graph(args.file)
    structure = build_dfs_structure(graph, _root(args))
    result = solve_cactus(graph, structure, extract_set=args.set)
    blocks = block_decomposition(structure, graph).block_count
    output = result.to_text(blocks, include_set=args.set)
    if args.params:
        output += _params_line(result.root_params)
    return output


def cmd_validate(args) -> str:
    report = validate_cactus(_read_graph(args.file))
    lines = [f"cactus={'yes' if report.is_cactus else 'no'}"]
    if report.witness is not None:
        lines.append(f"witness={report.witness[0]} {report.witness[1]}")
    lines.append(f"connected={'yes' if report.is_connected else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> str:
    graph = _read_graph(args.file)
    structure = build_dfs_structure(graph, _root(args))
    if args.dump:
        return dump_structure(structure, graph)
    return "".join(f"{v}\t{classify_vertex(structure, graph, v).value}\n"
                   for v in range(graph.vertex_count))


def cmd_oracle(args) -> str:
    graph = _read_graph(args.file)
    if args.params is not None:
        return _params_line(brute_force_params(graph, args.params))
    result = brute_force_gamma(graph, must_include=args.include, must_exclude=args.exclude,
                               deleted=args.delete)
    return result.to_text()


def _weight_range(args) -> Tuple[float, float]:
    low, high = solver_config.weight_range
    return (args.weight_min if args.weight_min is not None else low,
            args.weight_max if args.weight_max is not None else high)


def cmd_gen(args) -> str:
    graph = generate_random_cactus(args.seed, args.n, args.cycle_fraction,
                                   (args.max_cycle_len if args.max_cycle_len is not None
                                    else solver_config.max_cycle_len),
                                   _weight_range(args), integer_weights=args.integer_weights)
    return serialize_graph(graph)


def cmd_bench(args) -> str:
    rows = run_scaling(args.seed, args.sizes or solver_config.bench_sizes, args.cycle_fraction,
                       args.reps if args.reps is not None else solver_config.bench_repetitions,
                       max_cycle_len=args.max_cycle_len, weight_range=_weight_range(args))
    return format_table(rows, csv=args.csv, verbose=args.verbose)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cactus-domination",
                     description="Weighted domination number of vertex-weighted cactus graphs")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Compute gamma and operation counts")
    solve.add_argument("file", help="Graph file, or - for standard input")
    solve.add_argument("--root", type=int, help="DFS root (default from CACTUS_DEFAULT_ROOT)")
    solve.add_argument("--set", action="store_true", help="Also print a minimum-weight dominating set")
    solve.add_argument("--params", action="store_true", help="Also print the root parameters")
    solve.set_defaults(handler=cmd_solve)

    validate = commands.add_parser("validate", help="Check that the graph is a connected cactus")
    validate.add_argument("file")
    validate.set_defaults(handler=cmd_validate)

    classify = commands.add_parser("classify", help="Classify vertices as C, G or H")
    classify.add_argument("file")
    classify.add_argument("--root", type=int)
    classify.add_argument("--dump", action="store_true", help="Print the full DFS structure")
    classify.set_defaults(handler=cmd_classify)

    oracle = commands.add_parser("oracle", help="Brute-force gamma for small graphs")
    oracle.add_argument("file")
    oracle.add_argument("--include", type=_vertex_list, default=[])
    oracle.add_argument("--exclude", type=_vertex_list, default=[])
    oracle.add_argument("--delete", type=_vertex_list, default=[])
    oracle.add_argument("--params", type=int, metavar="V", help="Print (g00, g1, g0, g) at V")
    oracle.set_defaults(handler=cmd_oracle)

    gen = commands.add_parser("gen", help="Print a random cactus")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--cycle-fraction", type=float, default=0.5)
    gen.add_argument("--max-cycle-len", type=int)
    gen.add_argument("--weight-min", type=float)
    gen.add_argument("--weight-max", type=float)
    gen.add_argument("--integer-weights", action="store_true")
    gen.set_defaults(handler=cmd_gen)

    bench = commands.add_parser("bench", help="Scaling table with operation bounds")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--sizes", type=_size_list)
    bench.add_argument("--cycle-fraction", type=float, default=0.5)
    bench.add_argument("--reps", type=int)
    bench.add_argument("--max-cycle-len", type=int)
    bench.add_argument("--weight-min", type=float)
    bench.add_argument("--weight-max", type=float)
    bench.add_argument("--csv", action="store_true")
    bench.add_argument("--verbose", action="store_true", help="Add the DFS traversal-step column")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the exit status."""
    try:
        args = build_parser().parse_args(argv)
        logger.debug(f"Running command {args.command}")
        output = args.handler(args)
    except SystemExit as e:
        # --help
        return e.code or 0
    except INTERNAL_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    sys.stdout.write(output)
    return 0
