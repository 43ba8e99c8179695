"""Optimal deterministic strategies for rent-or-buy with known varying prices.

``solve`` computes the best achievable worst-case ratio in closed form:

  * if a free day sits right after the cheapest total cost (day M_*+1), or a
    bargain day sits on day M_*, waiting for it is 1-competitive;
  * otherwise the optimum is min({P_r / r : r <= M_*} ∪ {Q_{M_*} / M_*}) and
    the optimal buy days are exactly the days attaining it.

``oracle_c_opt`` recomputes the same answer by enumerating every buy-day
strategy and taking the worst adversarial active time for each; it is the
independent correctness check for ``solve`` and for everything layered on
top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    PriceSchedule,
    derive_costs,
    pair_gt,
    pair_to_fraction,
    ratio_pair,
)

WITNESS_FREE = "free-day"
WITNESS_BARGAIN = "bargain-day"
WITNESS_GENERAL = "general"


@dataclass(frozen=True)
class SolveResult:
    c_opt: Fraction
    optimal_buy_days: frozenset[int]
    one_competitive: bool
    witness_case: str

    @property
    def canonical_day(self) -> int:
        """The earliest optimal buy day (the waiting day in the 1-competitive
        cases)."""
        return min(self.optimal_buy_days)


@dataclass(frozen=True)
class StrategyRatio:
    """Worst-case ratio of one fixed strategy; ``divergent`` marks strategies
    whose ratio grows without bound (the reported value is the worst seen
    within the scan window)."""

    value: Fraction
    divergent: bool


def strategy_worst_ratio(
    schedule: PriceSchedule, buy_day: Optional[int]
) -> StrategyRatio:
    """Worst over all active times T of cost/optimum for the strategy that
    rents until ``buy_day`` - 1 and then buys (or never buys, if None).

    Beyond T = horizon + B both the strategy cost and the optimum are
    constant, so the scan window [1, horizon + B] is exhaustive for bounded
    strategies; renting forever is flagged divergent.
    """
    d = derive_costs(schedule)
    h = schedule.horizon
    if buy_day is not None and not 1 <= buy_day <= h + schedule.license_cost:
        raise ValueError(f"buy day {buy_day} outside [1, {h + schedule.license_cost}]")
    scan_hi = h + schedule.license_cost
    buy_cost = None if buy_day is None else schedule.total_cost(buy_day)
    worst = (0, 1)
    worst_finite = (0, 1)
    for t in range(1, scan_hi + 1):
        cost = t if (buy_day is None or t < buy_day) else buy_cost
        cur = ratio_pair(cost, d.opt_offline(t))
        if pair_gt(cur, worst):
            worst = cur
        if cur[1] != 0 and pair_gt(cur, worst_finite):
            worst_finite = cur
    divergent = buy_day is None or worst[1] == 0
    return StrategyRatio(Fraction(*worst_finite), divergent)


def solve(schedule: PriceSchedule) -> SolveResult:
    d = derive_costs(schedule)
    m = d.m_star
    if m == 0:
        # the license is free on day 1; taking it costs nothing
        return SolveResult(Fraction(1), frozenset({1}), True, WITNESS_FREE)
    bargain_at_m = schedule.price(m) == 1
    free_after_m = m + 1 <= len(schedule.prices) and schedule.price(m + 1) == 0
    if bargain_at_m or free_after_m:
        days = set()
        if bargain_at_m:
            days.add(m)
        if free_after_m:
            days.add(m + 1)
        witness = WITNESS_BARGAIN if bargain_at_m else WITNESS_FREE
        return SolveResult(Fraction(1), frozenset(days), True, witness)

    # general case: best ratio over early buys (P_r / r for r <= M_*) and
    # late buys matching the suffix minimum (P_r / M_* with P_r = Q_{M_*})
    best = (schedule.total_cost(1), 1)
    days_by_ratio: dict[tuple[int, int], set[int]] = {}

    def consider(num: int, den: int, day: int) -> None:
        nonlocal best
        if pair_gt(best, (num, den)):
            best = (num, den)
        days_by_ratio.setdefault(
            (Fraction(num, den).numerator, Fraction(num, den).denominator), set()
        ).add(day)

    for r in range(1, m + 1):
        consider(schedule.total_cost(r), r, r)
    q = d.suffix_min(m)
    hi = max(len(schedule.prices), m)
    for r in range(m, hi + 1):
        if schedule.total_cost(r) == q:
            consider(q, m, r)
    tail_day = q - schedule.license_cost + 1  # lone tail day with P = Q, if any
    if tail_day > hi and tail_day >= m:
        consider(q, m, tail_day)

    c_opt = Fraction(*best)
    days = frozenset(days_by_ratio[(c_opt.numerator, c_opt.denominator)])
    return SolveResult(c_opt, days, c_opt == 1, WITNESS_GENERAL)


def oracle_c_opt(
    schedule: PriceSchedule, oracle_bound: Optional[int] = None
) -> SolveResult:
    """Brute-force minimum of ``strategy_worst_ratio`` over every buy day.

    Buy days are enumerated through horizon + B, which covers every day that
    can match the suffix minimum of the constant-B tail.  Must agree with
    ``solve`` exactly, argmin set included.
    """
    bound = 3 * schedule.license_cost if oracle_bound is None else oracle_bound
    if schedule.horizon > bound:
        raise ValueError(
            f"horizon {schedule.horizon} exceeds the oracle bound {bound}"
        )
    best: Optional[StrategyRatio] = None
    days: set[int] = set()
    for d in range(1, schedule.horizon + schedule.license_cost + 1):
        r = strategy_worst_ratio(schedule, d)
        if r.divergent:
            continue
        if best is None or r.value < best.value:
            best, days = r, {d}
        elif r.value == best.value:
            days.add(d)
    assert best is not None  # buying on day 1 is always bounded
    one = best.value == 1
    if one:
        sample = min(days)
        witness = (
            WITNESS_BARGAIN if schedule.price(sample) == 1 else WITNESS_FREE
        )
    else:
        witness = WITNESS_GENERAL
    return SolveResult(best.value, frozenset(days), one, witness)
