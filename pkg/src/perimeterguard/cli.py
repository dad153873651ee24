"""Command-line interface.

Subcommands: solve, oracle, gen, bench, render.  Exit codes: 0 success,
2 bad input, 3 infeasible decision query, 4 instance too large for the
brute-force oracle.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .bench import DEFAULT_SEEDS, run_suite, write_csv
from .documents import (
    parse_instance,
    parse_solution,
    solution_from_lr,
    solution_from_mc,
    write_instance,
    write_solution,
)
from .errors import GuardingError, InstanceTooLarge, ValidationError
from .generate import gen_random
from .oracle import brute_feasible_lr_multi, brute_solve_lr, brute_solve_mc
from .rationals import format_fraction
from .render import render_svg
from .solver_lr import partition_feasible, solve_lr
from .solver_mc import solve_mc_multi
from .validate import validate_solution

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3
EXIT_TOO_LARGE = 4


def _read(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_solve(args) -> int:
    doc = parse_instance(_read(args.input))
    decision = doc.ell is not None or doc.budget is not None
    if decision and args.output:
        raise ValidationError("decision queries answer yes or no; drop --output")

    if doc.problem == "lr":
        if doc.ell is not None:
            ok = partition_feasible(doc.perimeters, doc.fleet, doc.ell)
            print(f"ratio {format_fraction(doc.ell)}: {'feasible' if ok else 'infeasible'}")
            return EXIT_OK if ok else EXIT_INFEASIBLE
        tick = time.perf_counter()
        sol = solve_lr(doc.perimeters, doc.fleet)
        wall = time.perf_counter() - tick
        out = solution_from_lr(sol, wall_time=wall)
        print(f"objective {format_fraction(sol.objective)}")
    else:
        tick = time.perf_counter()
        sol = solve_mc_multi(doc.perimeters, doc.types)
        wall = time.perf_counter() - tick
        if doc.budget is not None:
            ok = sol.total_cost <= doc.budget
            print(
                f"minimum cost {sol.total_cost}, budget {format_fraction(doc.budget)}: "
                f"{'within budget' if ok else 'over budget'}"
            )
            return EXIT_OK if ok else EXIT_INFEASIBLE
        out = solution_from_mc(sol, wall_time=wall)
        print(f"cost {sol.total_cost}")

    print(f"robots per type: {list(out.counts)}")
    print(f"solved in {wall:.3f}s")
    validate_solution(doc, out)
    if args.output:
        _write_text(args.output, write_solution(out))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    doc = parse_instance(_read(args.input))
    if doc.problem == "lr":
        if doc.ell is not None:
            ok = brute_feasible_lr_multi(doc.perimeters, doc.fleet, doc.ell)
            print(f"ratio {format_fraction(doc.ell)}: {'feasible' if ok else 'infeasible'}")
            return EXIT_OK if ok else EXIT_INFEASIBLE
        best = brute_solve_lr(doc.perimeters, doc.fleet)
        print(f"objective {format_fraction(best)}")
        return EXIT_OK
    cost = sum(brute_solve_mc(per, doc.types) for per in doc.perimeters)
    if doc.budget is not None:
        ok = cost <= doc.budget
        print(
            f"minimum cost {cost}, budget {format_fraction(doc.budget)}: "
            f"{'within budget' if ok else 'over budget'}"
        )
        return EXIT_OK if ok else EXIT_INFEASIBLE
    print(f"cost {cost}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    doc = gen_random(
        args.problem, t=args.t, q=args.q, m=args.m, seed=args.seed, target_length=args.L
    )
    _write_text(args.out, write_instance(doc))
    return EXIT_OK


def _cmd_bench(args) -> int:
    rows = run_suite(args.suite, seeds=args.seeds, full=args.full, jobs=args.jobs)
    scale = "full" if args.full else "desk"
    write_csv(rows, args.out, comments=(f"suite: {args.suite} ({scale} scale)",))
    means = [r for r in rows if r.seed == "mean"]
    print(f"{args.suite}: {len(means)} cells, {args.seeds} seeds each -> {args.out}")
    for r in means:
        cell = f"t={r.t} q={r.q} m={r.m}" + (f" L={r.L}" if r.L is not None else "")
        print(f"  {cell}: {r.seconds:.3f}s")
    return EXIT_OK


def _cmd_render(args) -> int:
    instance = parse_instance(_read(args.input))
    solution = parse_solution(_read(args.solution))
    render_svg(instance, solution, args.out)
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perimeterguard",
        description="Exact solvers for guarding circular perimeters with heterogeneous robots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance exactly")
    p.add_argument("--input", required=True, help="instance JSON")
    p.add_argument("--output", help="write the solution JSON here")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="solve by brute force (small instances only)")
    p.add_argument("--input", required=True, help="instance JSON")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--problem", required=True, choices=("lr", "mc"))
    p.add_argument("--t", required=True, type=int, help="number of robot types")
    p.add_argument("--q", required=True, type=int, help="segments per perimeter")
    p.add_argument("--m", type=int, default=1, help="number of perimeters")
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--L", type=int, help="total guarded length (mc only)")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="run a timing suite and write CSV")
    p.add_argument("--suite", required=True, choices=("table1", "table2", "table3"))
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--seeds", type=int, default=DEFAULT_SEEDS)
    p.add_argument("--full", action="store_true", help="run the full-size grid")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("render", help="draw an instance plus solution as SVG")
    p.add_argument("--input", required=True, help="instance JSON")
    p.add_argument("--solution", required=True, help="solution JSON")
    p.add_argument("--out", required=True, help="SVG output path")
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except GuardingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
