"""Command-line entry point: ``coopeq {solve,forecast,paper-suite,oracle-check}``.

Exit codes: 0 success, 1 failed assertion or oracle disagreement, 2 bad input.
"""
import argparse
import sys

from .equilibria import CoalitionStructure
from .exact import fmt_number
from .forecast import forecast_pair, n_player_selfish_value, n_player_value
from .games import PublicGoods, Traveler
from .harness import REPORT_FORMATS, GameSpecError, emit_report, load_game_spec_file, run_paper_suite
from .oracle import Grid, oracle_cooperative_weight, oracle_value
from .solver import cooperative_equilibrium

ORACLE_TOL = 5e-3
FORECAST_FIELDS = ("incentive", "risk", "tau", "e_nobody", "e_deviated", "value")


def _forecasts(target):
    if isinstance(target, PublicGoods) and target.N > 2:
        return n_player_selfish_value(target), n_player_value(target)
    game = target if not hasattr(target, "instantiate") else target.instantiate()
    return forecast_pair(game)


def _dump_forecast(fc, out):
    out.write(f"structure: {fc.structure.name}\n")
    for name in FORECAST_FIELDS:
        out.write(f"  {name}: {fmt_number(getattr(fc, name))}\n")
    if fc.by_defectors:
        vals = ", ".join(fmt_number(v) for v in fc.by_defectors)
        out.write(f"  payoff_by_defectors: [{vals}]\n")


def cmd_forecast(args, out):
    label, target = load_game_spec_file(args.specfile)
    out.write(f"game: {label}\n")
    for fc in _forecasts(target):
        _dump_forecast(fc, out)
    return 0


def cmd_solve(args, out):
    label, target = load_game_spec_file(args.specfile)
    ce = cooperative_equilibrium(target)
    out.write(f"game: {label}\n")
    _dump_forecast(ce.selfish, out)
    _dump_forecast(ce.cooperative, out)
    out.write("cooperative_equilibrium:\n")
    out.write(f"  guaranteed_value: {fmt_number(ce.guaranteed_value)}\n")
    out.write(f"  coincides_with_nash: {str(ce.coincides_with_nash).lower()}\n")
    out.write("  strategy:\n")
    for s in ce.strategy.support:
        out.write(f"    {ce.game.strategies[s]}: {fmt_number(ce.strategy[s])}\n")
    if ce.symmetric_nash is not None:
        out.write(f"  symmetric_mixed_nash_first_weight: {fmt_number(ce.symmetric_nash[0])}\n")
    return 0


def cmd_paper_suite(args, out):
    rows = run_paper_suite()
    text = emit_report(rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    failed = [r.label for r in rows if r.match_class == "exact-assert" and not r.ok]
    for label in failed:
        print(f"assertion failed: {label}", file=sys.stderr)
    return 1 if failed else 0


def cmd_oracle_check(args, out):
    label, target = load_game_spec_file(args.specfile)
    if isinstance(target, PublicGoods) and target.N > 2:
        raise GameSpecError("oracle-check covers two-player games")
    if isinstance(target, Traveler) and target.hi - target.lo > 20:
        raise GameSpecError("oracle-check needs a truncated Traveler range (hi - lo <= 20)")
    game = target if not hasattr(target, "instantiate") else target.instantiate()
    grid = Grid(args.step)
    bad = False
    out.write(f"game: {label}  step: {args.step}  risk-mode: {args.risk_mode}\n")
    for fc in forecast_pair(game):
        orc = oracle_value(game, fc.structure, grid, args.risk_mode)
        for name in FORECAST_FIELDS:
            exact = float(getattr(fc, name))
            diff = abs(exact - orc[name])
            compared = args.risk_mode == "best-reply" or name in ("incentive", "e_nobody",
                                                                    "e_deviated")
            flag = "ok" if diff <= ORACLE_TOL else ("MISMATCH" if compared else "differs")
            bad |= compared and diff > ORACLE_TOL
            out.write(f"  {fc.structure.name:<11} {name:<10} exact={exact:.6f} "
                      f"oracle={orc[name]:.6f} {flag}\n")
    if game.n_strategies == 2 and args.risk_mode == "best-reply":
        exact = float(cooperative_equilibrium(game).cooperation)
        orc = oracle_cooperative_weight(game, grid)
        flag = "ok" if abs(exact - orc) <= ORACLE_TOL else "MISMATCH"
        bad |= flag != "ok"
        out.write(f"  equilibrium first-strategy weight exact={exact:.6f} "
                  f"oracle={orc:.6f} {flag}\n")
    return 1 if bad else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coopeq",
        description="Cooperative equilibria of symmetric one-shot games.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="forecasts and cooperative equilibrium of a game spec")
    p.add_argument("specfile")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("forecast", help="incentive, risk, probability and values only")
    p.add_argument("specfile")
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("paper-suite", help="run the reproduction suite and emit a report")
    p.add_argument("--format", default="csv",
                   choices=[*REPORT_FORMATS, "markdown-table", "structured-text"])
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_paper_suite)

    p = sub.add_parser("oracle-check", help="compare the exact forecast with the grid oracle")
    p.add_argument("specfile")
    p.add_argument("--step", type=float, default=1e-3, help="grid step (default: %(default)g)")
    p.add_argument("--risk-mode", default="best-reply",
                   choices=["best-reply", "all-deviations"])
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (GameSpecError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
