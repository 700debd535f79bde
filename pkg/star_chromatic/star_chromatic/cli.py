"""
Command-line interface for star-chromatic.
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .bounds import bound_report
from .errors import DomainError, InternalError, StarColoringError
from .oracle import validate_coloring
from .selftest import CheckResult, SelfTestConfig, SelfTestRunner
from .star_tree import color_tree, index_summary
from .tree_model import Tree, TwoHProfile, materialize, regular_2h_tree, root_at, two_ball
from .utils import (
    coloring_to_dot,
    dump_coloring,
    format_tree,
    load_coloring_file,
    load_tree_file,
    random_caterpillar,
    random_tree,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL = 3

GENERATOR_KINDS = ["random", "caterpillar", "regular2h", "profile"]


@dataclass
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """
    Configuration for one CLI run.
    """

    command: str = ""
    input: Optional[str] = None
    coloring: Optional[str] = None
    output: Optional[str] = None
    output_format: str = "plain"
    profile: Optional[str] = None

    # Generators
    seed: int = 0
    kind: str = "random"
    params: List[int] = field(default_factory=list)

    # Self-test and benchmarks
    max_n: int = 8
    bench_sizes: List[int] = field(default_factory=list)
    thread_count: int = 1

    verbose: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        known = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__ and v is not None}
        return cls(**known)


def setup_parser() -> argparse.ArgumentParser:
    """Set up the argument parser."""
    parser = argparse.ArgumentParser(
        description="star-chromatic: exact star chromatic index and optimal star edge colourings of trees"
    )
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    def add_io(sub: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
        sub.add_argument("--output", "-o", type=str, help="Write the result to this file instead of stdout")
        sub.add_argument(
            "--format",
            "-f",
            dest="output_format",
            choices=list(formats),
            default=default,
            help=f"Output format (default: {default})",
        )

    index_parser = subparsers.add_parser("index", help="Print the star chromatic index of a tree")
    index_parser.add_argument("--input", "-i", required=True, help="Tree file ('u v' per line)")
    add_io(index_parser, ["plain", "json"], "plain")

    color_parser = subparsers.add_parser("color", help="Compute an optimum star edge colouring")
    color_parser.add_argument("--input", "-i", required=True, help="Tree file ('u v' per line)")
    add_io(color_parser, ["json", "dot", "plain"], "json")

    bounds_parser = subparsers.add_parser("bounds", help="Bounds and exact index for a 2H-tree profile")
    bounds_parser.add_argument("--profile", "-p", required=True, help="Child counts, e.g. 2,3,3")
    add_io(bounds_parser, ["plain", "json"], "plain")

    validate_parser = subparsers.add_parser("validate", help="Check a colouring against a tree")
    validate_parser.add_argument("--input", "-i", required=True, help="Tree file")
    validate_parser.add_argument("--coloring", "-c", required=True, help="Colouring JSON file")

    gen_parser = subparsers.add_parser("gen", help="Generate a tree file")
    gen_parser.add_argument("kind", choices=GENERATOR_KINDS, help="Kind of tree")
    gen_parser.add_argument(
        "params",
        type=int,
        nargs="*",
        help="random: N; caterpillar: SPINE MAX_LEGS; regular2h: R T; profile: N_1 ... N_t",
    )
    gen_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    gen_parser.add_argument("--output", "-o", type=str, help="Write the tree to this file")

    selftest_parser = subparsers.add_parser("selftest", help="Run the acceptance checks")
    selftest_parser.add_argument(
        "--max-n", type=int, default=8, help="Largest tree size for oracle checks (default: 8)"
    )
    selftest_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    selftest_parser.add_argument(
        "--threads",
        dest="thread_count",
        type=int,
        default=1,
        help="Number of checks to run in parallel (default: 1)",
    )

    bench_parser = subparsers.add_parser("bench", help="Time color on random trees")
    bench_parser.add_argument("bench_sizes", type=int, nargs="*", help="Tree sizes")
    bench_parser.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")

    return parser


def write_output(text: str, path: Optional[str]) -> None:
    """Print text, or save it to path."""
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        print(f"Results saved to {path}")
    else:
        print(text, end="")


def vertex_rows(tree: Tree, labels: Sequence[int]) -> List[Dict[str, Any]]:
    """Ball profile, bounds and local index of every non-isolated vertex."""
    rows = []
    for v in range(tree.vertex_count):
        if tree.degree(v) == 0:
            continue
        profile = two_ball(tree, v)
        report = bound_report(profile)
        rows.append(
            {
                "vertex": labels[v],
                "profile": list(profile.n),
                "lower": report.lower,
                "upper": report.upper,
                "local_index": report.exact,
            }
        )
    return rows


def run_index_command(config: RunConfig) -> int:
    """Run the index command."""
    assert config.input is not None
    tree, labels = load_tree_file(config.input)
    summary = index_summary(tree)
    data = {
        "index": summary.index,
        "vertices": tree.vertex_count,
        "max_degree": tree.max_degree,
        "distinct_profiles": summary.distinct_profiles,
        "attained_at": labels[summary.vertex] if summary.vertex is not None else None,
    }
    rows = vertex_rows(tree, labels)
    if config.output_format == "json":
        text = json.dumps({**data, "per_vertex": rows}, indent=2) + "\n"
    else:
        text = "".join(f"{key}: {value}\n" for key, value in data.items())
        for row in rows:
            profile = ",".join(str(x) for x in row["profile"])
            text += (
                f"vertex {row['vertex']}: profile {profile} lower {row['lower']} "
                f"upper {row['upper']} index {row['local_index']}\n"
            )
    write_output(text, config.output)
    return EXIT_OK


def run_color_command(config: RunConfig) -> int:
    """Run the color command."""
    assert config.input is not None
    tree, labels = load_tree_file(config.input)
    m, coloring = color_tree(tree)
    if config.output_format == "dot":
        text = coloring_to_dot(tree, coloring, labels, root_at(tree, 0))
    elif config.output_format == "plain":
        lines = [f"{labels[u]} {labels[v]} {coloring.color(u, v)}" for u, v in tree.edges()]
        text = "".join(line + "\n" for line in lines)
    else:
        text = dump_coloring(coloring, labels)
    write_output(text, config.output)
    return EXIT_OK


def run_bounds_command(config: RunConfig) -> int:
    """Run the bounds command."""
    assert config.profile is not None
    report = bound_report(TwoHProfile.parse(config.profile))
    if config.output_format == "json":
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = (
            f"lower: {report.lower} ({report.source['lower']})\n"
            f"upper: {report.upper} ({report.source['upper']})\n"
            f"exact: {report.exact} ({report.source['exact']})\n"
        )
    write_output(text, config.output)
    return EXIT_OK


def run_validate_command(config: RunConfig) -> int:
    """Run the validate command; exit 1 when the colouring is not a star colouring."""
    assert config.input is not None and config.coloring is not None
    tree, labels = load_tree_file(config.input)
    coloring = load_coloring_file(config.coloring, labels)
    verdict = validate_coloring(tree, coloring)
    if verdict.valid:
        print("valid")
        return EXIT_OK
    assert verdict.violation is not None
    witness = "-".join(str(labels[v]) for v in verdict.violation.witness)
    print(f"invalid: {verdict.violation.kind} at {witness}")
    return EXIT_INVALID


def generate_tree_text(kind: str, params: Sequence[int], seed: int) -> str:
    """Tree file text for a generator; identical inputs give identical text."""
    expected = {"random": 1, "caterpillar": 2, "regular2h": 2}
    if kind in expected and len(params) != expected[kind]:
        raise DomainError(f"'{kind}' takes {expected[kind]} parameter(s), got {len(params)}")
    if kind == "random":
        tree = random_tree(params[0], seed)
    elif kind == "caterpillar":
        tree = random_caterpillar(params[0], params[1], seed)
    elif kind == "regular2h":
        tree, _ = regular_2h_tree(params[0], params[1])
    elif kind == "profile":
        tree, _ = materialize(TwoHProfile.of(params))
    else:
        raise DomainError(f"unknown generator '{kind}'")
    return format_tree(tree)


def run_gen_command(config: RunConfig) -> int:
    """Run the gen command."""
    write_output(generate_tree_text(config.kind, config.params, config.seed), config.output)
    return EXIT_OK


def on_check_finished(result: CheckResult) -> None:
    """Called as each self-test check finishes."""
    print(f"[{result.status:>7}] {result.name} ({result.seconds:.2f}s) {result.detail}")


def run_selftest_command(config: RunConfig) -> int:
    """Run the selftest command."""
    runner = SelfTestRunner(
        SelfTestConfig(max_n=config.max_n, seed=config.seed, thread_count=config.thread_count),
        on_check_callback=on_check_finished,
    )
    results = runner.run_all_sync()
    failed = [r for r in results if not r.ok]
    skipped = sum(1 for r in results if r.status == "skipped")
    print(f"\n{len(results) - len(failed) - skipped} passed, {len(failed)} failed, {skipped} skipped")
    return EXIT_INTERNAL if failed else EXIT_OK


def run_bench_command(config: RunConfig) -> int:
    """Run the bench command."""
    print(f"{'n':>8}  {'seed':>6}  {'index':>5}  {'seconds':>9}")
    for n in config.bench_sizes:
        tree = random_tree(n, config.seed)
        start = time.perf_counter()
        m, _ = color_tree(tree)
        elapsed = time.perf_counter() - start
        print(f"{n:>8}  {config.seed:>6}  {m:>5}  {elapsed:>9.3f}")
    return EXIT_OK


COMMANDS = {
    "index": run_index_command,
    "color": run_color_command,
    "bounds": run_bounds_command,
    "validate": run_validate_command,
    "gen": run_gen_command,
    "selftest": run_selftest_command,
    "bench": run_bench_command,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run a command and return its exit code."""
    parser = setup_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_OK

    config = RunConfig.from_args(args)
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger(__name__).debug("Running with %s", asdict(config))

    try:
        return COMMANDS[config.command](config)
    except InternalError as e:
        print(f"Internal error: {e}")
        return EXIT_INTERNAL
    except (ValueError, OSError) as e:
        print(f"Error: {e}")
        return EXIT_INPUT_ERROR
    except StarColoringError as e:
        print(f"Internal error: {e}")
        return EXIT_INTERNAL


def main() -> None:
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
