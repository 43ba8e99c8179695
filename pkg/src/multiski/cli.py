"""Command-line frontend.

One executable, one subcommand per capability:

  solve         optimal worst-case ratio of a varying-price schedule
  check-eq      equilibrium verdicts for profiles or coalition specs
  enumerate-eq  all coalition equilibria for small license costs
  beta-table    consistency guarantee of the prediction-tunable algorithm
  alg1          one run of the algorithm, with its full decision trace
  simulate      run a pledge profile against concrete active times
  experiment    seeded Monte-Carlo benchmark, written as CSV
  oracle-diff   fuzz the closed-form solver against the brute-force oracle

Exit codes: 0 success / equilibrium holds, 1 verification answered "no",
2 internal oracle disagreement, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .core import PriceSchedule
from .equilibria import (
    EquilibriumSpec,
    check_rational_no_selfpred,
    check_predictionless,
    enumerate_rational_eq,
    oracle_certified,
)
from .experiments import (
    ExperimentConfig,
    default_output_dir,
    run_experiment,
    write_csv,
)
from .game import PledgeProfile, run_game
from .predictor import beta_table, decide_run, robustness_bound, run_alg1
from .varying_price import oracle_c_opt, solve

EXIT_OK = 0
EXIT_NO = 1
EXIT_ORACLE_DISAGREEMENT = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2)
        raise _UsageError(message)


def _fr(x: Fraction) -> str:
    return f"{x} ({float(x):.6f})"


def _emit(args: argparse.Namespace, obj: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(obj, default=str))
    else:
        for line in text_lines:
            print(line)


def _load_schedule(path: str) -> PriceSchedule:
    with open(path) as fh:
        return PriceSchedule.from_json(fh.read())


def _parse_spec(text: str, license_cost: int, n_agents: Optional[int]) -> EquilibriumSpec:
    try:
        day_part, weight_part = text.split(":")
        r = int(day_part)
        weights = tuple(int(w) for w in weight_part.split(","))
    except ValueError as err:
        raise _UsageError(f"--spec expects 'r:w1,w2,...', got {text!r}") from err
    n = n_agents if n_agents is not None else len(weights)
    return EquilibriumSpec(r, weights, license_cost, n)


def _cmd_solve(args: argparse.Namespace) -> int:
    schedule = _load_schedule(args.schedule)
    sol = solve(schedule)
    lines = [
        f"c_opt = {_fr(sol.c_opt)}",
        f"optimal buy days: {sorted(sol.optimal_buy_days)}",
        f"case: {sol.witness_case}",
    ]
    obj = {
        "c_opt": str(sol.c_opt),
        "c_opt_decimal": float(sol.c_opt),
        "optimal_buy_days": sorted(sol.optimal_buy_days),
        "one_competitive": sol.one_competitive,
        "witness_case": sol.witness_case,
    }
    if args.oracle:
        orc = oracle_c_opt(schedule)
        agree = (
            orc.c_opt == sol.c_opt and orc.optimal_buy_days == sol.optimal_buy_days
        )
        obj["oracle_agrees"] = agree
        lines.append(f"oracle agrees: {agree}")
        if not agree:
            lines.append(
                f"oracle found c_opt = {_fr(orc.c_opt)}, days {sorted(orc.optimal_buy_days)}"
            )
            _emit(args, obj, lines)
            return EXIT_ORACLE_DISAGREEMENT
    _emit(args, obj, lines)
    return EXIT_OK


def _cmd_check_eq(args: argparse.Namespace) -> int:
    if (args.profile is None) == (args.spec is None):
        raise _UsageError("use exactly one of --profile / --spec")
    if args.profile is not None:
        with open(args.profile) as fh:
            cfg, profile = PledgeProfile.from_json(fh.read())
        verdict = check_predictionless(cfg, profile)
        obj = {
            "is_equilibrium": verdict.is_equilibrium,
            "failing_condition": verdict.failing_condition,
            "ratios": [str(r) for r in verdict.ratios],
        }
        lines = [f"equilibrium: {verdict.is_equilibrium}"]
        if verdict.is_equilibrium:
            lines += [
                f"agent {i + 1} ratio: {_fr(r)}" for i, r in enumerate(verdict.ratios)
            ]
        else:
            lines.append(f"failing condition: {verdict.failing_condition}")
        if args.oracle:
            certified = oracle_certified(cfg, profile)
            obj["oracle_certified"] = certified
            lines.append(f"oracle certified: {certified}")
            if certified != verdict.is_equilibrium:
                _emit(args, obj, lines)
                return EXIT_ORACLE_DISAGREEMENT
        _emit(args, obj, lines)
        return EXIT_OK if verdict.is_equilibrium else EXIT_NO

    if args.B is None:
        raise _UsageError("--spec needs --B")
    spec = _parse_spec(args.spec, args.B, args.n)
    verdict = check_rational_no_selfpred(spec)
    obj = {
        "is_equilibrium": verdict.is_equilibrium,
        "failing_condition": verdict.failing_condition,
        "ratios": [str(r) for r in verdict.ratios],
    }
    lines = [f"equilibrium: {verdict.is_equilibrium}"]
    if verdict.is_equilibrium:
        for i, r in enumerate(verdict.ratios):
            who = f"pledger {i + 1}" if i < len(spec.weights) else "freerider"
            lines.append(f"{who} ratio: {_fr(r)}")
    else:
        lines.append(f"failing condition: {verdict.failing_condition}")
    _emit(args, obj, lines)
    return EXIT_OK if verdict.is_equilibrium else EXIT_NO


def _cmd_enumerate_eq(args: argparse.Namespace) -> int:
    days = None if args.r is None else [args.r]
    specs = list(enumerate_rational_eq(args.B, args.n, days))
    obj = {
        "count": len(specs),
        "equilibria": [
            {"r": s.r, "weights": list(s.weights)} for s in specs
        ],
    }
    lines = [
        f"r={s.r} weights={','.join(map(str, s.weights))}" for s in specs
    ] + [f"{len(specs)} equilibria"]
    _emit(args, obj, lines)
    return EXIT_OK


def _cmd_beta_table(args: argparse.Namespace) -> int:
    result = beta_table(args.r, args.w, args.B, args.lam)
    obj = {
        "beta": str(result.beta),
        "beta_decimal": float(result.beta),
        "row": result.table_row,
        "conditions": [[name, ok] for name, ok in result.conditions_evaluated],
    }
    lines = [f"beta = {_fr(result.beta)}", f"row: {result.table_row}"]
    _emit(args, obj, lines)
    return EXIT_OK


def _cmd_alg1(args: argparse.Namespace) -> int:
    schedule = _load_schedule(args.schedule)
    decision = decide_run(schedule, args.lam, args.T, args.That)
    cost, ratio = run_alg1(schedule, args.lam, args.T, args.That)
    bound = robustness_bound(schedule, args.lam)
    obj = {
        "i_star": decision.i_star,
        "r0": decision.r0,
        "r1": decision.r1,
        "r2": decision.r2,
        "r3": decision.r3,
        "branch": decision.branch,
        "buy_day": decision.buy_day_taken,
        "cost": cost,
        "ratio": str(ratio),
        "ratio_decimal": float(ratio),
        "robustness_bound": str(bound),
    }
    lines = [
        f"i_star={decision.i_star} r0={decision.r0} r1={decision.r1} "
        f"r2={decision.r2} r3={decision.r3}",
        f"branch: {decision.branch}",
        f"buy day: {decision.buy_day_taken if decision.buy_day_taken else 'never'}",
        f"cost = {cost}, ratio = {_fr(ratio)}",
        f"robustness bound = {_fr(bound)}",
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    with open(args.profile) as fh:
        cfg, profile = PledgeProfile.from_json(fh.read())
    try:
        active = [int(x) for x in args.T.split(",")]
    except ValueError as err:
        raise _UsageError(f"--T expects comma-separated days, got {args.T!r}") from err
    outcome = run_game(cfg, profile, active)
    obj = {
        "purchase_day": outcome.purchase_day,
        "costs": list(outcome.costs),
        "opts": list(outcome.opts),
        "ratios": [None if r is None else str(r) for r in outcome.ratios],
    }
    lines = [f"purchase day: {outcome.purchase_day}"]
    for i in range(cfg.n_agents):
        r = outcome.ratios[i]
        lines.append(
            f"agent {i + 1}: cost={outcome.costs[i]} opt={outcome.opts[i]} "
            f"ratio={'inf' if r is None else _fr(r)}"
        )
    _emit(args, obj, lines)
    return EXIT_OK


def _cmd_experiment(args: argparse.Namespace) -> int:
    lambdas = [lam.strip() for lam in args.lambdas.split(",") if lam.strip()]
    sigmas = [float(s) for s in args.sigmas.split(",") if s.strip()]
    cfg = ExperimentConfig.make(
        r=args.r,
        w=args.w,
        lambdas=lambdas,
        sigmas=sigmas,
        license_cost=args.B,
        samples_per_cell=args.samples,
        master_seed=args.seed,
    )
    rows = run_experiment(cfg)
    out = args.out or f"{default_output_dir()}/eq_{args.r}_{args.w}.csv"
    write_csv(rows, out)
    obj = {"rows": len(rows), "out": out}
    _emit(args, obj, [f"wrote {len(rows)} rows to {out}"])
    return EXIT_OK


def _cmd_oracle_diff(args: argparse.Namespace) -> int:
    mismatches = 0
    checked = 0
    if args.schedule:
        schedules = [_load_schedule(args.schedule)]
    else:
        rng = random.Random(args.seed)
        schedules = []
        for _ in range(args.samples):
            h = rng.randint(1, 2 * args.B + 2)
            low = 0 if args.zeros else 1
            prices = [rng.randint(low, args.B) for _ in range(h)]
            schedules.append(PriceSchedule.from_prices(prices, args.B))
    for schedule in schedules:
        checked += 1
        sol = solve(schedule)
        orc = oracle_c_opt(schedule)
        if (
            sol.c_opt != orc.c_opt
            or sol.optimal_buy_days != orc.optimal_buy_days
        ):
            mismatches += 1
            print(f"MISMATCH on {schedule.to_json()}")
            print(f"  solver: {_fr(sol.c_opt)} days {sorted(sol.optimal_buy_days)}")
            print(f"  oracle: {_fr(orc.c_opt)} days {sorted(orc.optimal_buy_days)}")
    obj = {"checked": checked, "mismatches": mismatches}
    _emit(args, obj, [f"checked {checked} schedules, {mismatches} mismatches"])
    return EXIT_OK if mismatches == 0 else EXIT_ORACLE_DISAGREEMENT


def build_parser() -> _Parser:
    parser = _Parser(prog="multiski", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimal ratio for a schedule")
    p.add_argument("--schedule", required=True, help="schedule JSON file")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("check-eq", help="equilibrium verdicts")
    p.add_argument("--profile", help="pledge-profile JSON file")
    p.add_argument("--spec", help="coalition spec r:w1,w2,...")
    p.add_argument("--B", type=int, help="license cost for --spec")
    p.add_argument("--n", type=int, help="number of agents (default: pledgers)")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    p.set_defaults(fn=_cmd_check_eq)

    p = sub.add_parser("enumerate-eq", help="list coalition equilibria")
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="restrict to one purchase day")
    p.set_defaults(fn=_cmd_enumerate_eq)

    p = sub.add_parser("beta-table", help="consistency guarantee")
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="trust dial in (0, 1]")
    p.set_defaults(fn=_cmd_beta_table)

    p = sub.add_parser("alg1", help="run the prediction-tunable algorithm once")
    p.add_argument("--schedule", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--T", type=int, required=True, help="actual active time")
    p.add_argument("--That", type=int, required=True, help="predicted active time")
    p.set_defaults(fn=_cmd_alg1)

    p = sub.add_parser("simulate", help="run a pledge profile")
    p.add_argument("--profile", required=True)
    p.add_argument("--T", required=True, help="comma-separated active times")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("experiment", help="Monte-Carlo benchmark to CSV")
    p.add_argument("--B", type=int, default=100)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--lambdas", default="0.2,1")
    p.add_argument("--sigmas", default="0,25,50,75,100,125,150,175,200,225,250")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help=f"output CSV (default {default_output_dir()}/eq_R_W.csv)")
    p.set_defaults(fn=_cmd_experiment)

    p = sub.add_parser("oracle-diff", help="fuzz solver vs oracle")
    p.add_argument("--schedule", help="check one schedule JSON file")
    p.add_argument("--B", type=int, default=6)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zeros", action="store_true", help="allow free days")
    p.set_defaults(fn=_cmd_oracle_diff)

    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())
