"""Exact engine for group-license (multiagent) rent-or-buy problems.

Library layout:

  core           price schedules, total-cost curves, offline optima
  varying_price  optimal single-agent strategies + brute-force oracle
  game           the multiagent pledge game and its single-agent reduction
  equilibria     equilibrium verifiers, enumerators, deviation oracle
  predictor      the prediction-tunable algorithm and its guarantees
  experiments    seeded Monte-Carlo benchmark harness (CSV output)
  cli            the `multiski` executable
"""

from .core import (
    DerivedCosts,
    PriceSchedule,
    derive_costs,
    opt_offline,
    ratio,
    realized_ratio,
)
from .equilibria import (
    EquilibriumSpec,
    EqVerdict,
    agent_worst_ratio,
    check_prediction_eq_run,
    check_predictionless,
    check_rational_no_selfpred,
    deviation_oracle,
    enumerate_rational_eq,
    equilibrium_ratios,
    oracle_certified,
    pledge_weight_ok,
    purchase_deadline_bound,
)
from .experiments import (
    ExperimentConfig,
    ExperimentRow,
    format_csv,
    run_experiment,
    sample_instance,
    write_csv,
)
from .game import (
    GameConfig,
    PledgeProfile,
    RunOutcome,
    induced_prices,
    purchase_day,
    run_game,
    z_value,
    z_value_vs_induced_min,
)
from .predictor import (
    AlgDecision,
    AlgParams,
    BetaResult,
    beta_table,
    coalition_schedule,
    compute_days,
    decide_run,
    empirical_consistency,
    improvement_threshold,
    robustness_bound,
    run_alg1,
    worst_realized_ratio,
)
from .varying_price import (
    SolveResult,
    StrategyRatio,
    oracle_c_opt,
    solve,
    strategy_worst_ratio,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
