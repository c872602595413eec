"""Command-line entry point: ``minimax-lab <command> ...``.

Exit status is 0 on success, 1 on a domain error (bad input, infeasible
request) and 2 when a computation exceeds its resource budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .applications import (
    density_report,
    enforcing_constant_lower,
    fooling_series,
    game_of_hypergraph,
    nu_star,
    tau_star,
)
from .core import (
    FAMILIES,
    ZOO,
    FiniteGame,
    GameOracle,
    family_by_name,
    format_fraction,
    oracle_by_name,
    oracle_from_game,
    to_fraction,
    truncate,
)
from .errors import DomainError, ResourceLimitError
from .solver import solve
from .structure import dimensions, staircase_exact, staircase_greedy
from .truncation import extract_violating_core, gap_report, value_grid

F = format_fraction


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text):
    try:
        return to_fraction(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _schedule(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated naturals, got {text!r}") from None


def _size(text):
    sched = _schedule(text)
    if len(sched) == 1:
        sched = sched * 2
    if len(sched) != 2 or min(sched) < 1:
        raise argparse.ArgumentTypeError(f"expected N or N,M, got {text!r}")
    return sched


def _is_file(source: str) -> bool:
    return source.endswith(".json") or Path(source).exists()


def _load_game(source: str, size) -> FiniteGame:
    if _is_file(source):
        return io.loads_game(io.read_text(source))
    return truncate(oracle_by_name(source), *size)


def _load_oracle(source: str) -> GameOracle:
    if _is_file(source):
        return oracle_from_game(io.loads_game(io.read_text(source)), Path(source).stem)
    return oracle_by_name(source)


def _solve_report(game, res):
    return {
        "value": F(res.value),
        "p": io.strategy_to_json(res.p_opt),
        "q": io.strategy_to_json(res.q_opt),
        "pivots": res.iterations,
        "shape": list(game.shape),
    }


def cmd_solve(args):
    game = _load_game(args.game, args.size)
    return {"inputs": {"game": args.game, "size": list(args.size)}, **_solve_report(game, solve(game))}


def cmd_grid(args):
    oracle = _load_oracle(args.oracle)
    grid = value_grid(oracle, args.rows, args.cols)
    if args.format == "csv":
        return grid.to_csv()
    out = {
        "inputs": {"oracle": args.oracle, "rows": list(args.rows), "cols": list(args.cols),
                   "tol": F(args.tol)},
        "values": [[F(v) for v in row] for row in grid.values],
    }
    if grid.row_limits is not None:
        out["row_limits"] = [F(v) for v in grid.row_limits]
    if args.report:
        r = gap_report(grid, args.tol)
        out["gap"] = {
            "upper_estimate": F(r.upper_estimate),
            "lower_estimate": F(r.lower_estimate),
            "converged": r.converged,
            "upper_cell": list(r.upper_cell),
            "lower_cell": list(r.lower_cell),
            "lower_exact": r.lower_exact,
        }
    return out


def cmd_extract(args):
    oracle = _load_oracle(args.oracle)
    core = extract_violating_core(oracle, args.vlow, args.vbar, args.depth)
    return {
        "inputs": {"oracle": args.oracle, "vlow": F(args.vlow), "vbar": F(args.vbar),
                   "depth": args.depth},
        "p_steps": [io.strategy_to_json(p) for p in core.p_steps],
        "q_steps": [io.strategy_to_json(q) for q in core.q_steps],
        "rows": core.rows,
        "cols": core.cols,
    }


def cmd_detect(args):
    inputs = {"source": args.source, "mode": "greedy" if args.greedy else "exact"}
    if args.greedy:
        if args.budget is None:
            raise DomainError("--greedy needs --budget")
        inputs.update(budget=args.budget, window=args.window)
        w = staircase_greedy(_load_oracle(args.source), args.budget, window=args.window)
    else:
        inputs["size"] = list(args.size)
        _, w = staircase_exact(_load_game(args.source, args.size))
    return {"inputs": inputs, "size": w.size, "rows": list(w.rows), "cols": list(w.cols),
            "stalled": w.stalled}


def cmd_dims(args):
    game = _load_game(args.game, args.size)
    return {"inputs": {"game": args.game, "size": list(args.size)}, **dimensions(game)}


def cmd_hyper(args):
    h = io.loads_hypergraph(io.read_text(args.hypergraph))
    out = {"inputs": {"hypergraph": args.hypergraph}}
    show_all = not (args.nu or args.tau or args.game)
    if args.nu or show_all:
        v, f = nu_star(h)
        out["nu_star"] = {"value": F(v), "matching": io.fraction_list(f.weights)}
    if args.tau or show_all:
        v, g = tau_star(h)
        out["tau_star"] = {"value": F(v), "cover": io.fraction_list(g.weights)}
    if args.game or show_all:
        game = game_of_hypergraph(h)
        out["game"] = {**io.game_to_json(game), **_solve_report(game, solve(game))}
    return out


def _load_family(source):
    if source in FAMILIES:
        return family_by_name(source)
    if _is_file(source):
        return io.loads_family(io.read_text(source))
    raise DomainError(f"unknown family {source!r}; known: {', '.join(sorted(FAMILIES))}")


def cmd_series(args):
    family = _load_family(args.family)
    out = {"inputs": {"family": args.family, "eps": F(args.eps), "horizon": args.horizon}}
    out["enforcing_constant_lower"] = F(enforcing_constant_lower(family, args.horizon))
    a = fooling_series(family, args.eps, args.horizon)
    terms = a.prefix(args.horizon)[1:]
    out["fooling_series"] = {"total": F(sum(terms)), "terms": io.fraction_list(terms)}
    return out


def cmd_density(args):
    r = density_report(_load_oracle(args.oracle), args.prefix)
    return {
        "inputs": {"oracle": args.oracle, "prefix": args.prefix},
        "rows": list(r.rows),
        "row_estimates": io.fraction_list(r.row_estimates),
        "cols": list(r.cols),
        "col_estimates": io.fraction_list(r.col_estimates),
        "pair": None if r.pair is None else io.fraction_list(r.pair),
        "caveat": r.caveat,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="minimax-lab", description="Finite analysis of infinite win-lose games.")
    parser.add_argument("-o", "--output", help="write the report here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    zoo = ", ".join(sorted(ZOO))
    size_help = "truncation N or N,M used when the source is a zoo game (default 8)"

    p = sub.add_parser("solve", help="solve a finite game exactly")
    p.add_argument("game", help=f"game JSON file or zoo name ({zoo})")
    p.add_argument("--size", type=_size, default=(8, 8), help=size_help)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("grid", help="values of truncations on a schedule")
    p.add_argument("oracle", help=f"zoo name ({zoo}) or game JSON file")
    p.add_argument("--rows", type=_schedule, default=(1, 2, 4, 8, 16, 32, 64))
    p.add_argument("--cols", type=_schedule, default=(1, 2, 4, 8, 16, 32, 64))
    p.add_argument("--tol", type=_rational, default=to_fraction(0), help="rational, e.g. 1/32")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--report", action="store_true", help="add the two gap estimates")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("extract", help="alternating strategies witnessing a gap")
    p.add_argument("oracle")
    p.add_argument("--vlow", type=_rational, required=True)
    p.add_argument("--vbar", type=_rational, required=True)
    p.add_argument("--depth", type=int, default=10)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("detect", help="find a staircase (larger number game) submatrix")
    p.add_argument("source", help="game JSON file or zoo name")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exhaustive search (default)")
    mode.add_argument("--greedy", action="store_true", help="alternating greedy construction")
    p.add_argument("--budget", type=int, help="target size for --greedy")
    p.add_argument("--window", type=int, help="index scan window for --greedy")
    p.add_argument("--size", type=_size, default=(8, 8), help=size_help)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("dims", help="VC, Littlestone and threshold dimension")
    p.add_argument("game")
    p.add_argument("--size", type=_size, default=(8, 8), help=size_help)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("hyper", help="fractional matching and cover of a hypergraph")
    p.add_argument("hypergraph", help="hypergraph JSON file")
    p.add_argument("--nu", action="store_true")
    p.add_argument("--tau", action="store_true")
    p.add_argument("--game", action="store_true", help="solve the incidence game")
    p.set_defaults(func=cmd_hyper)

    p = sub.add_parser("series", help="enforcing constant and fooling series of a family")
    p.add_argument("--family", required=True, help=f"{', '.join(sorted(FAMILIES))} or a family JSON file")
    p.add_argument("--eps", type=_rational, required=True)
    p.add_argument("--horizon", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("density", help="prefix density estimates of rows and columns")
    p.add_argument("oracle")
    p.add_argument("--prefix", type=int, required=True)
    p.set_defaults(func=cmd_density)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except ResourceLimitError as exc:
        print(f"minimax-lab: resource limit: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"minimax-lab: error: {exc}", file=sys.stderr)
        return 1
    text = report if isinstance(report, str) else io.dumps(report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
