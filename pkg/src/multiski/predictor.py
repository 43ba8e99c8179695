"""The prediction-tunable rent-or-buy algorithm and its guarantee formulas.

The algorithm takes a trust dial lambda in (0, 1] and an integer prediction
of the active time.  It precomputes two candidate buy days from the schedule
alone:

  * ``r2`` for runs the predictor calls long: the cheapest-total-cost day at
    or after the interpolated start ceil((1-lam)(r0-1) + lam*r1) that also
    respects the per-day robustness cap (see below);
  * ``r3`` for runs the predictor calls short: the latest day whose
    worst-case ratio still respects the cap, deferring the purchase as long
    as the guarantee allows.

The cap is the robustness bound lam - 1 + c_opt/lam: every day the
algorithm may buy on satisfies P_d / opt(d) <= bound, which makes the bound
hold for every prediction and every active time.  At lam = 1 the cap equals
c_opt and the algorithm collapses to best-response play.

The printed buy-day shortcut for coalition-shaped schedules (buy at
ceil(lam*r) when B + ceil(lam*r) - 1 < r - 1 + w, else at r) ignores the
cap; on a small set of (r, w, lambda) cells the shortcut day would break the
robustness bound and no day satisfies both that bound and the consistency
value ``beta_table`` reports.  ``compute_days`` keeps the cap; see
``beta_table`` for how the table is evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Optional, Sequence

from .core import PriceSchedule, derive_costs, realized_ratio
from .equilibria import ExactLike, exact, pledge_weight_ok
from .varying_price import solve

BRANCH_LARGE = "prediction-large"
BRANCH_SMALL = "prediction-small"


@dataclass(frozen=True)
class AlgParams:
    lam: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.lam <= 1:
            raise ValueError(f"lambda must be in (0, 1], got {self.lam}")

    @classmethod
    def of(cls, lam: ExactLike) -> "AlgParams":
        return cls(exact(lam))


@dataclass(frozen=True)
class AlgDecision:
    i_star: int
    r0: int
    r1: int
    r2: int
    r3: int
    branch: Optional[str] = None
    buy_day_taken: Optional[int] = None


def baseline_day(schedule: PriceSchedule) -> int:
    """r0: the first day attaining the minimum total cost, except that a free
    day right after it takes precedence.  Isolated so the reading can be
    swapped in one place."""
    d = derive_costs(schedule)
    if d.first_free_day is not None and d.first_free_day == d.m_star + 1:
        return d.m_star + 1
    return d.i_star


def robustness_bound(schedule: PriceSchedule, lam: ExactLike) -> Fraction:
    """lam - 1 + c_opt/lam: the ratio guarantee held for every prediction."""
    params = AlgParams.of(lam)
    return params.lam - 1 + solve(schedule).c_opt / params.lam


@lru_cache(maxsize=4096)
def _decision(schedule: PriceSchedule, lam: Fraction) -> AlgDecision:
    d = derive_costs(schedule)
    sol = solve(schedule)
    r1 = sol.canonical_day
    r0 = baseline_day(schedule)
    start = ceil((1 - lam) * (r0 - 1) + lam * r1)
    bound = lam - 1 + sol.c_opt / lam
    bn, bd = bound.numerator, bound.denominator
    b = schedule.license_cost
    m = d.m_star

    # Eligible = days whose buy-there worst ratio P_t / opt(t) respects the
    # bound.  From day K on, the price is the constant tail and the optimum
    # is pinned at M_*, so eligibility there is just t <= tail_max; only the
    # explicit region needs a scan.
    k = max(len(schedule.prices) + 1, d.i_star, m, 1)
    tail_max = (bn * m) // bd - b + 1  # last t with (t - 1 + B) / M_* <= bound
    r2: Optional[int] = None
    r2_cost: Optional[int] = None
    r3 = None
    for t in range(1, k):
        cost = schedule.total_cost(t)
        opt = d.opt_offline(t)
        if opt == 0:
            eligible = cost == 0
        else:
            eligible = cost * bd <= bn * opt
        if not eligible:
            continue
        r3 = t
        if t >= start and (r2_cost is None or cost < r2_cost):
            r2, r2_cost = t, cost
    if tail_max >= k:
        r3 = tail_max
        first_tail = max(k, start)
        if first_tail <= tail_max:
            cost = first_tail - 1 + b  # cheapest eligible tail day
            if r2_cost is None or cost < r2_cost:
                r2, r2_cost = first_tail, cost
    if r2 is None:
        r2 = r1
    if schedule.total_cost(r2) > schedule.total_cost(r1):
        r2 = r1
    assert r3 is not None  # r1 is always eligible
    return AlgDecision(i_star=d.i_star, r0=r0, r1=r1, r2=r2, r3=r3)


def compute_days(schedule: PriceSchedule, lam: ExactLike) -> AlgDecision:
    return _decision(schedule, AlgParams.of(lam).lam)


def prediction_prefix_min(schedule: PriceSchedule, predicted: int) -> int:
    """M_That: the cheapest total cost among the first That days, the
    quantity the branch condition compares the prediction against."""
    if predicted < 1:
        raise ValueError(f"prediction must be a positive integer, got {predicted}")
    return derive_costs(schedule).prefix_min(predicted)


def decide_run(
    schedule: PriceSchedule, lam: ExactLike, active: int, predicted: int
) -> AlgDecision:
    """The decision for one run: branch on whether the predicted horizon
    reaches the prefix minimum, pick the branch's buy day, drop it if the
    run ends first."""
    if active < 1:
        raise ValueError(f"active time must be >= 1, got {active}")
    if predicted != int(predicted) or predicted < 1:
        raise ValueError(f"prediction must be an integer >= 1, got {predicted}")
    base = compute_days(schedule, lam)
    if predicted >= prediction_prefix_min(schedule, predicted):
        branch, day = BRANCH_LARGE, base.r2
    else:
        branch, day = BRANCH_SMALL, base.r3
    taken = day if day <= active else None
    return replace(base, branch=branch, buy_day_taken=taken)


def run_alg1(
    schedule: PriceSchedule, lam: ExactLike, active: int, predicted: int
) -> tuple[int, Fraction]:
    """Cost and realized ratio of one run."""
    decision = decide_run(schedule, lam, active, predicted)
    if decision.buy_day_taken is None:
        cost = active
    else:
        cost = schedule.total_cost(decision.buy_day_taken)
    opt = derive_costs(schedule).opt_offline(active)
    r = realized_ratio(cost, opt)
    if r is None:
        raise AssertionError("positive cost against a zero optimum")
    return cost, r


# ---------------------------------------------------------------------------
# guarantee formulas for coalition-shaped schedules


def coalition_schedule(r: int, w: int, license_cost: int) -> PriceSchedule:
    """One pledger's view of a coalition buy: pay w on day r, full price
    on every other day."""
    return PriceSchedule.from_day_prices(
        {r: w}, license_cost, max(r, 2 * license_cost)
    )


def _require_equilibrium(r: int, w: int, b: int) -> None:
    if r > 2 * b - 1:
        raise ValueError(f"day {r} exceeds 2B-1 = {2 * b - 1}")
    if not 1 <= w <= b:
        raise ValueError(f"weight {w} outside [1, {b}]")
    if not pledge_weight_ok(r, w, b):
        raise ValueError(f"(r={r}, w={w}) is not an equilibrium pledge for B={b}")


@dataclass(frozen=True)
class BetaResult:
    beta: Fraction
    table_row: str
    conditions_evaluated: tuple[tuple[str, bool], ...]


def beta_table(r: int, w: int, license_cost: int, lam: ExactLike) -> BetaResult:
    """Consistency guarantee for a pledger of weight w on day r using trust
    dial lambda, as a row of closed-form cases.

    Rows are evaluated top to bottom with their conditions taken verbatim;
    cells none of them covers fall through to the general form
    max(P_{r2}/M_*, P_{r3}/r3 if r3 <= M_*) evaluated with the shortcut
    buy days (row tag "derived").
    """
    b = license_cost
    _require_equilibrium(r, w, b)
    lam = AlgParams.of(lam).lam
    m = w if r == 1 else min(b, r - 1 + w)
    c = ceil(lam * r)
    x = Fraction(w - 1) / (r * lam) + (lam - 1) ** 2 / lam
    conds: list[tuple[str, bool]] = []

    def note(name: str, value: bool) -> bool:
        conds.append((name, value))
        return value

    if r == 1:
        low = w == 1 or lam <= Fraction(w * (w - 1), r * (b - 1))
        note("day-1 pledge small or lambda below w(w-1)/(r(B-1))", low)
        if low:
            return BetaResult(Fraction(1), "1", tuple(conds))
        return BetaResult(Fraction(w), "w", tuple(conds))

    if 2 <= r <= m:
        c3 = note("x <= 1 - 1/B", x <= 1 - Fraction(1, b))
        c2 = note("(B+ceil(lam r)-1)/(r+w-1) < 1", Fraction(b + c - 1, r + w - 1) < 1)
        if c3 and c2:
            beta = 1 + max(Fraction(c - 1, b), Fraction(w - 1, r))
            return BetaResult(beta, "1+max((ceil(lam r)-1)/B,(w-1)/r)", tuple(conds))
        if c2 and note("x > 1 - 1/B", x > 1 - Fraction(1, b)):
            return BetaResult(
                1 + Fraction(c - 1, b), "1+(ceil(lam r)-1)/B", tuple(conds)
            )
        early = note("r+w-1 <= B", r + w - 1 <= b)
        if note("x <= 1 - 1/M", x <= 1 - Fraction(1, m)) and early:
            return BetaResult(1 + Fraction(w - 1, r), "1+(w-1)/r", tuple(conds))
        if note("M x > B-1", m * x > b - 1) and early:
            return BetaResult(Fraction(1), "1", tuple(conds))
    if m < r <= 2 * b - 1:
        if note("B+ceil(lam r)-1 < r+w-1", b + c - 1 < r + w - 1):
            return BetaResult(
                1 + Fraction(c - 1, b), "1+(ceil(lam r)-1)/B", tuple(conds)
            )
        return BetaResult(Fraction(r + w - 1, b), "(r+w-1)/B", tuple(conds))

    # general form from the shortcut buy days
    r2 = c if b + c - 1 < r - 1 + w else r
    p2 = (r2 - 1 + w) if r2 == r else (r2 - 1 + b)
    beta = Fraction(p2, m)
    if r <= m and m * x <= b - 1:  # the short-branch day stays at r
        beta = max(beta, 1 + Fraction(w - 1, r))
    return BetaResult(beta, "derived", tuple(conds))


def improvement_threshold(r: int, w: int, license_cost: int) -> Fraction:
    """Largest trust dial at which a correct predictor is guaranteed to beat
    predictionless play: M_* (w-1) / (r (B-1))."""
    b = license_cost
    _require_equilibrium(r, w, b)
    m = w if r == 1 else min(b, r - 1 + w)
    return Fraction(m * (w - 1), r * (b - 1))


def empirical_consistency(
    r: int,
    w: int,
    license_cost: int,
    lam: ExactLike,
    active_range: Optional[Sequence[int]] = None,
) -> Fraction:
    """Exact max realized ratio under a perfect predictor over the active
    times in ``active_range`` (default 1..4B); independent check that the
    ``beta_table`` value really bounds the algorithm."""
    b = license_cost
    schedule = coalition_schedule(r, w, b)
    if active_range is None:
        active_range = range(1, 4 * b + 1)
    return worst_realized_ratio(schedule, lam, active_range, None)


def worst_realized_ratio(
    schedule: PriceSchedule,
    lam: ExactLike,
    active_values: Sequence[int],
    predicted_values: Optional[Sequence[int]],
) -> Fraction:
    """Exact max of run_alg1's ratio over a grid of runs.

    ``predicted_values`` of None means a perfect predictor (paired with each
    active time).  The ratio depends on the prediction only through the
    branch taken, so distinct buy days are evaluated once; results match
    per-run ``run_alg1`` calls exactly.
    """
    lam = AlgParams.of(lam).lam
    base = _decision(schedule, lam)
    d = derive_costs(schedule)
    prefix = d.prefix_min
    t_hi = max(active_values)
    pm = [0] + [prefix(t) for t in range(1, t_hi + 1)]
    opt = [0] + [t if t < pm[t] else pm[t] for t in range(1, t_hi + 1)]
    r2_cost = schedule.total_cost(base.r2)
    r3_cost = schedule.total_cost(base.r3)
    worst_n, worst_d = 0, 1

    def scan(day: int, day_cost: int) -> None:
        nonlocal worst_n, worst_d
        for t in active_values:
            cost = t if day > t else day_cost
            o = opt[t]
            if o == 0:
                cost, o = (1, 1) if cost == 0 else (cost, 0)
            if cost * worst_d > worst_n * o:
                worst_n, worst_d = cost, o

    if predicted_values is None:
        r2, r3 = base.r2, base.r3
        for t in active_values:
            if t >= pm[t]:
                cost = t if r2 > t else r2_cost
            else:
                cost = t if r3 > t else r3_cost
            o = opt[t]
            if o == 0:
                cost, o = (1, 1) if cost == 0 else (cost, 0)
            if cost * worst_d > worst_n * o:
                worst_n, worst_d = cost, o
    else:
        buy_days = set()
        for that in predicted_values:
            m_that = prefix(that)
            buy_days.add(base.r2 if that >= m_that else base.r3)
        for day in buy_days:
            scan(day, schedule.total_cost(day))
    if worst_d == 0:
        raise AssertionError("positive cost against a zero optimum")
    return Fraction(worst_n, worst_d)
