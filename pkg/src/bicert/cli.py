"""Command line entry points: check, gen, bench.

Exit codes: 0 bipartite, 1 odd cycle found, 2 usage or parse error,
3 internal invariant failure (a certificate failed its own verifier, or
the algorithms disagreed).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .certificates import CheckOutcome, verify_outcome
from .checkers import ALGORITHM_NAMES, run_instrumented
from .errors import InputError, InternalInvariantError
from .formats import parse_dimacs, parse_edge_list, write_dimacs, write_dot, write_edge_list
from .generators import GenSpec, generate
from .graph import Graph

EXIT_BIPARTITE = 0
EXIT_ODD_CYCLE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_PARSERS = {"edgelist": parse_edge_list, "dimacs": parse_dimacs}
_WRITERS = {"edgelist": write_edge_list, "dimacs": write_dimacs}

# CLI spellings to GenSpec kinds
_KIND_FLAGS = {
    "random": "random",
    "planted-bipartite": "planted_bipartite",
    "planted-odd-cycle": "planted_odd_cycle",
    "forest": "forest",
}

BENCH_CSV_HEADER = (
    "algorithm", "kind", "n", "m", "seed", "rep", "verdict", "elapsed_ns", "ops_counter",
)


@dataclass
class ResultReport:
    """One checker's answer on one graph."""

    algorithm: str
    verdict: str
    n: int
    m: int
    sides: tuple[list[int], list[int]] | None
    cycle: list[int] | None
    elapsed_ns: int

    def to_dict(self, timing: bool) -> dict:
        out: dict = {
            "algorithm": self.algorithm,
            "verdict": self.verdict,
            "n": self.n,
            "m": self.m,
        }
        if self.sides is not None:
            out["sides"] = {"side0": self.sides[0], "side1": self.sides[1]}
        if self.cycle is not None:
            out["cycle"] = self.cycle
        if timing:
            out["elapsed_ns"] = self.elapsed_ns
        return out

    def render(self, timing: bool) -> str:
        lines = [
            f"algorithm={self.algorithm} verdict={self.verdict} n={self.n} m={self.m}"
        ]
        if self.sides is not None:
            lines.append("  side0: " + " ".join(map(str, self.sides[0])))
            lines.append("  side1: " + " ".join(map(str, self.sides[1])))
        if self.cycle is not None:
            lines.append("  cycle: " + " ".join(map(str, self.cycle)))
        if timing:
            lines.append(f"  elapsed_ns: {self.elapsed_ns}")
        return "\n".join(lines)


@dataclass
class BenchRow:
    algorithm: str
    kind: str
    n: int
    m: int
    seed: int
    rep: int
    verdict: str
    elapsed_ns: int
    ops_counter: int

    def sort_key(self):
        return (self.algorithm, self.kind, self.n, self.m, self.seed, self.rep)

    def values(self):
        return [self.algorithm, self.kind, self.n, self.m, self.seed,
                self.rep, self.verdict, self.elapsed_ns, self.ops_counter]


def _timed_run(g: Graph, algorithm: str) -> tuple[CheckOutcome, int, int]:
    """Outcome, ops counter, and wall nanoseconds around the checker only."""
    t0 = time.perf_counter_ns()
    outcome, ops = run_instrumented(g, algorithm)
    elapsed = time.perf_counter_ns() - t0
    return outcome, ops, elapsed


def _report(g: Graph, algorithm: str, outcome: CheckOutcome, elapsed: int) -> ResultReport:
    if outcome.bipartition is not None:
        return ResultReport(algorithm, outcome.branch, g.n, g.m,
                            outcome.bipartition.sides(), None, elapsed)
    return ResultReport(algorithm, outcome.branch, g.n, g.m,
                        None, list(outcome.odd_cycle.vertices), elapsed)


def cmd_check(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text()
    g = _PARSERS[args.format](text)
    algos = ALGORITHM_NAMES if args.algo == "all" else (args.algo,)
    reports: list[ResultReport] = []
    outcomes: list[CheckOutcome] = []
    for name in algos:
        outcome, _, elapsed = _timed_run(g, name)
        if not verify_outcome(g, outcome):
            raise InternalInvariantError(
                f"checker {name!r} returned a certificate its verifier rejects"
            )
        outcomes.append(outcome)
        reports.append(_report(g, name, outcome, elapsed))
    if len({o.branch for o in outcomes}) > 1:
        raise InternalInvariantError(
            "algorithms disagree: " +
            ", ".join(f"{r.algorithm}={r.verdict}" for r in reports)
        )
    if args.dot:
        Path(args.dot).write_text(write_dot(g, outcomes[0]))
    if args.json:
        print(json.dumps([r.to_dict(args.timing) for r in reports], indent=2))
    else:
        for r in reports:
            print(r.render(args.timing))
    return EXIT_BIPARTITE if outcomes[0].is_bipartite else EXIT_ODD_CYCLE


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(
        kind=_KIND_FLAGS[args.kind],
        n=args.n,
        n_left=args.left,
        n_right=args.right,
        m=args.m,
        p=args.p,
        cycle_len=args.cycle_len,
        allow_loops=args.loops,
        allow_multi=args.multi,
        seed=args.seed,
    )
    g = generate(spec)
    sys.stdout.write(_WRITERS[args.format](g))
    return EXIT_BIPARTITE


def _bench_spec(kind: str, n: int, m: int, seed: int, cycle_len: int) -> GenSpec:
    if kind == "random":
        return GenSpec(kind="random", n=n, m=m, seed=seed)
    if kind == "planted_bipartite":
        return GenSpec(kind="planted_bipartite", n_left=n // 2,
                       n_right=n - n // 2, m=m, seed=seed)
    if kind == "planted_odd_cycle":
        base = n - cycle_len
        if base < 0:
            raise InputError(
                f"size n={n} is smaller than cycle_len={cycle_len}"
            )
        return GenSpec(kind="planted_odd_cycle", n_left=base // 2,
                       n_right=base - base // 2, m=m, cycle_len=cycle_len,
                       seed=seed)
    return GenSpec(kind="forest", n=n, seed=seed)


def cmd_bench(args: argparse.Namespace) -> int:
    sizes: list[tuple[int, int]] = []
    for token in args.sizes:
        parts = token.split(",")
        if len(parts) != 2:
            raise InputError(f"size {token!r} must look like 'n,m'")
        try:
            sizes.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"size {token!r} must be two integers") from None

    rows: list[BenchRow] = []
    writer = csv.writer(sys.stdout, lineterminator="\n")

    def emit_and_exit(code: int) -> int:
        rows.sort(key=BenchRow.sort_key)
        writer.writerow(BENCH_CSV_HEADER)
        for row in rows:
            writer.writerow(row.values())
        return code

    for kind_flag in args.kinds:
        kind = _KIND_FLAGS[kind_flag]
        for n, m in sizes:
            for seed in args.seeds:
                g = generate(_bench_spec(kind, n, m, seed, args.cycle_len))
                group_verdicts: set[str] = set()
                for rep in range(args.repeat):
                    for algorithm in ALGORITHM_NAMES:
                        outcome, ops, elapsed = _timed_run(g, algorithm)
                        if not verify_outcome(g, outcome):
                            print(
                                f"internal error: {algorithm} certificate rejected",
                                file=sys.stderr,
                            )
                            return emit_and_exit(EXIT_INTERNAL)
                        group_verdicts.add(outcome.branch)
                        rows.append(BenchRow(algorithm, kind, g.n, g.m, seed,
                                             rep, outcome.branch, elapsed, ops))
                if len(group_verdicts) > 1:
                    print(
                        f"internal error: algorithms disagree on kind={kind}"
                        f" n={g.n} m={g.m} seed={seed}",
                        file=sys.stderr,
                    )
                    return emit_and_exit(EXIT_INTERNAL)
    return emit_and_exit(EXIT_BIPARTITE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicert",
        description="Certifying bipartiteness checks with verifiable output.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check a graph file")
    p_check.add_argument("file")
    p_check.add_argument("--format", choices=sorted(_PARSERS), default="edgelist")
    p_check.add_argument("--algo", choices=[*ALGORITHM_NAMES, "all"], default="all")
    p_check.add_argument("--json", action="store_true",
                         help="emit a JSON report instead of text")
    p_check.add_argument("--timing", action="store_true",
                         help="include elapsed_ns (off by default; it breaks"
                              " byte-for-byte reproducibility)")
    p_check.add_argument("--dot", metavar="PATH",
                         help="also write a DOT rendering of the certificate")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="generate a seeded graph")
    p_gen.add_argument("--kind", choices=sorted(_KIND_FLAGS), required=True)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--left", type=int)
    p_gen.add_argument("--right", type=int)
    p_gen.add_argument("--m", type=int)
    p_gen.add_argument("--p", type=float)
    p_gen.add_argument("--cycle-len", type=int, dest="cycle_len")
    p_gen.add_argument("--loops", action="store_true")
    p_gen.add_argument("--multi", action="store_true")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--format", choices=sorted(_WRITERS), default="edgelist")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="time all four checkers")
    p_bench.add_argument("--kinds", nargs="+", choices=sorted(_KIND_FLAGS),
                         required=True)
    p_bench.add_argument("--sizes", nargs="+", required=True,
                         metavar="N,M", help="size cells, e.g. 100,200")
    p_bench.add_argument("--seeds", nargs="+", type=int, required=True)
    p_bench.add_argument("--repeat", type=int, default=1)
    p_bench.add_argument("--cycle-len", type=int, default=3, dest="cycle_len",
                         help="cycle length for planted-odd-cycle cells")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
