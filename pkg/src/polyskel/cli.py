"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 bad input,
3 graph is not perfect.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

from .complex import VerificationReport, dumps
from .errors import NotPerfectError, ParseError
from .graphs import format_graph, is_perfect, parse_graph
from .posets import comparability_graph, format_poset, parse_poset, random_poset
from .stable import antichain_indicators, chain_polytope_vertices, verify_stable_polytope
from .order import verify_order_polytope
from .sweep import Summary, sweep_graphs, sweep_posets

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_PERFECT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _yes(flag: bool | None) -> str:
    return {True: "yes", False: "NO", None: "skipped"}[flag]


def _render_text(title: str, report: VerificationReport) -> str:
    labels = report.labels
    lines = [title, f"vertices: {len(report.vertices)}"]
    for k, v in enumerate(report.vertices):
        tag = f" {labels[k]}" if labels else ""
        lines.append(f"  {k}: ({','.join(map(str, v))}){tag}")
    lines.append(f"skeleton edges: {len(report.edges)}")
    lines.append("  " + " ".join(f"{i}-{j}" for i, j in report.edges))
    lines.append(f"cliques checked: {report.cliques_checked}")
    lines.append(f"skeleton agrees with oracle: {_yes(report.skeleton_agrees)}")
    lines.append(f"constructions isolate cliques: {_yes(report.constructions_agree)}")
    lines.append(f"oracle accepts every clique: {_yes(report.cliques_are_faces)}")
    lines.append(f"clique complex equals simplicial faces: {_yes(report.complex_equal)}")
    for key, value in report.extra.items():
        shown = _yes(value) if isinstance(value, bool) else value
        lines.append(f"{key.replace('_', ' ')}: {shown}")
    lines.append(f"all faces: {_yes(report.all_faces)}")
    if report.counterexample is not None:
        lines.append(f"counterexample: {report.counterexample}")
    return "\n".join(lines) + "\n"


def _emit(args: argparse.Namespace, title: str, report: VerificationReport) -> int:
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(_render_text(title, report))
    return EXIT_OK if report.all_faces else EXIT_FAIL


def cmd_order(args: argparse.Namespace) -> int:
    P = parse_poset(_read(args.file))
    report = verify_order_polytope(P, oracle=args.verify_oracle)
    return _emit(args, f"order polytope, d={P.d}", report)


def cmd_stab(args: argparse.Namespace) -> int:
    G = parse_graph(_read(args.file))
    report = verify_stable_polytope(G, oracle=args.verify_oracle, checked=not args.unchecked)
    return _emit(args, f"stable set polytope, n={G.n}", report)


def cmd_chain_polytope(args: argparse.Namespace) -> int:
    P = parse_poset(_read(args.file))
    G = comparability_graph(P)
    if not is_perfect(G):
        raise NotPerfectError("comparability graph is not perfect")
    report = verify_stable_polytope(
        G,
        oracle=args.verify_oracle,
        instance={"poset": [[i + 1, j + 1] for i, j in P.covers()], "d": P.d},
    )
    report.extra["antichains_match"] = chain_polytope_vertices(P) == antichain_indicators(P)
    code = _emit(args, f"chain polytope, d={P.d}", report)
    if not report.extra["antichains_match"]:
        return EXIT_FAIL
    return code


def cmd_sweep(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.graphs:
        top = args.max_n
        sizes = [top] if args.sample else range(1, top + 1)
        results = sweep_graphs(sizes, sample=args.sample, seed=args.seed,
                               jobs=args.jobs, oracle=args.verify_oracle)
    else:
        top = args.max_d
        sizes = [top] if args.sample else range(1, top + 1)
        results = sweep_posets(sizes, sample=args.sample, seed=args.seed,
                               jobs=args.jobs, oracle=args.verify_oracle)
    summary = Summary(results)
    if args.json:
        sys.stdout.write(dumps(summary.to_dict()) + "\n")
    else:
        sys.stdout.write(summary.to_text())
    # timing goes to stderr so stdout stays byte-identical across runs
    print(f"runtime: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return EXIT_OK if summary.failures == 0 else EXIT_FAIL


def cmd_random(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    P = random_poset(args.size, rng, args.density)
    if args.graph:
        sys.stdout.write(format_graph(comparability_graph(P)))
    else:
        sys.stdout.write(format_poset(P))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyskel",
        description="Skeletons and simplicial faces of order and stable set polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument("--verify-oracle", action=argparse.BooleanOptionalAction,
                       default=True, help="cross-check with the exact LP face oracle")

    p = sub.add_parser("order", help="verify the order polytope of a poset file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("stab", help="verify the stable set polytope of a graph file")
    p.add_argument("file")
    p.add_argument("--unchecked", action="store_true",
                   help="run even if the graph is not perfect")
    common(p)
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("chain-polytope",
                       help="verify the chain polytope of a poset via its comparability graph")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_chain_polytope)

    p = sub.add_parser("sweep", help="verify many posets or perfect graphs")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--posets", action="store_true", help="order polytopes (default)")
    which.add_argument("--graphs", action="store_true", help="stable set polytopes")
    p.add_argument("--max-d", type=_positive, default=4)
    p.add_argument("--max-n", type=_positive, default=4)
    p.add_argument("--sample", type=_positive, default=None,
                   help="random instances at the maximum size instead of exhaustive")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--jobs", type=_positive, default=1)
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("random", help="print a random poset or perfect graph")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--poset", action="store_true", help="random poset (default)")
    which.add_argument("--graph", action="store_true",
                       help="comparability graph of a random poset")
    p.add_argument("--size", type=_positive, default=5)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotPerfectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PERFECT


if __name__ == "__main__":
    sys.exit(main())
