"""Verifiers and enumerators for the game's equilibrium notions.

Three layers, each with an exact, enumeration-based safety net:

  * ``check_predictionless`` decides whether a pledge profile is a
    worst-case-ratio equilibrium (no agent can lower its competitive ratio
    given the others' pledge functions) via the four structural conditions
    on the purchase day, free-day agents, bargain-day agents, and everyone
    else.
  * ``check_rational_no_selfpred`` decides the coalition form: pledgers
    split exactly B on one day r <= 2B-1, each weight obeying a closed-form
    inequality; freeriders wait.
  * ``check_prediction_eq_run`` checks one run of a profile of
    prediction-using agents against per-agent robustness parameters.

``deviation_oracle`` computes an agent's best achievable worst-case ratio by
brute force over its induced single-agent schedule and is the ground truth
the closed-form verdicts are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterator, Optional, Sequence, Union

from .core import PriceSchedule, derive_costs, pair_gt, ratio_pair
from .game import GameConfig, PledgeProfile, induced_prices, purchase_day, z_value
from .varying_price import StrategyRatio, oracle_c_opt, solve

ExactLike = Union[int, str, Fraction]


def exact(value: ExactLike) -> Fraction:
    """Convert to an exact rational; floats are rejected because they do not
    round-trip (pass "0.2" or Fraction(1, 5) instead)."""
    if isinstance(value, float):
        raise TypeError(
            f"refusing inexact float {value!r}; pass a string or Fraction"
        )
    return Fraction(value)


@dataclass(frozen=True)
class EquilibriumSpec:
    """Coalition shape: pledgers jointly buy on day r with the given weights;
    the remaining n - len(weights) agents freeride."""

    r: int
    weights: tuple[int, ...]
    license_cost: int
    n_agents: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"purchase day must be >= 1, got {self.r}")
        if not self.weights:
            raise ValueError("need at least one pledger")
        if any(w < 1 for w in self.weights):
            raise ValueError("pledger weights must be >= 1")
        if self.n_agents < len(self.weights):
            raise ValueError(
                f"{len(self.weights)} pledgers but only {self.n_agents} agents"
            )

    @property
    def n_freeriders(self) -> int:
        return self.n_agents - len(self.weights)

    def as_profile(self) -> tuple[GameConfig, PledgeProfile]:
        """Materialize as a pledge profile (pledgers first, then freeriders)."""
        horizon = max(2 * self.license_cost, self.r + 1)
        cfg = GameConfig(self.n_agents, self.license_cost, horizon)
        tables: list[dict[int, int]] = [
            {self.r: w} for w in self.weights
        ] + [dict() for _ in range(self.n_freeriders)]
        return cfg, PledgeProfile.from_tables(tables)


@dataclass(frozen=True)
class EqVerdict:
    is_equilibrium: bool
    failing_condition: Optional[str]
    ratios: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        assert (self.failing_condition is None) == self.is_equilibrium


# ---------------------------------------------------------------------------
# predictionless profiles


def check_predictionless(cfg: GameConfig, profile: PledgeProfile) -> EqVerdict:
    """Decide whether a pledge profile is a worst-case-ratio equilibrium.

    The license must be bought on some first day r with pledges summing to
    exactly B there.  Each agent is then classified by what it faces on its
    induced schedule: a free day at r (the others cover B), a bargain day
    (the others leave exactly 1 to pay), or the general case, which must
    satisfy a per-day cap on the others' pledges everywhere else.

    Requires horizon >= 2B so late deviations are visible.
    """
    profile.validate(cfg)
    b = cfg.license_cost
    if cfg.horizon < 2 * b:
        raise ValueError(
            f"equilibrium checking needs horizon >= 2B = {2 * b}, got {cfg.horizon}"
        )

    r = purchase_day(cfg, profile)
    if r is None:
        return _fail("i: the license is never bought", cfg.n_agents)
    total_at_r = sum(profile.pledge(i, r) for i in range(cfg.n_agents))
    if total_at_r != b:
        return _fail(
            f"i: pledges on day {r} sum to {total_at_r}, not exactly B={b}",
            cfg.n_agents,
        )

    z = [z_value(cfg, profile, i) for i in range(cfg.n_agents)]
    support_max = max(profile.support_days(), default=1)
    ratios: list[Fraction] = []
    for i in range(cfg.n_agents):
        others_r = profile.others_total(i, r)
        free_case = others_r == b and r <= z[i] + 1
        first_bargain = next(
            (
                k
                for k in range(1, min(r, z[i]) + 1)
                if profile.others_total(i, k) == b - 1
            ),
            None,
        )
        if free_case:
            if r != z[i] + 1:
                return _fail(
                    f"ii: agent {i} gets a free day at r={r} < Z+1={z[i] + 1}; "
                    "waiting longer is strictly better",
                    cfg.n_agents,
                )
            if profile.pledge(i, r) != 0:
                return _fail(
                    f"ii: agent {i} pledges on its own free day {r}", cfg.n_agents
                )
            ratios.append(Fraction(1))
            continue
        if first_bargain is not None:
            k = first_bargain
            sub_a = k == r == z[i] and profile.pledge(i, r) == 1
            sub_b = (
                k == z[i] == r - 1
                and profile.pledge(i, r - 1) == 0
                and profile.pledge(i, r) == 0
                and profile.others_total(i, r) == b
            )
            if not (sub_a or sub_b):
                return _fail(
                    f"iii: agent {i} has a bargain day at {k} but neither pays 1 "
                    f"on day r={r}=Z nor gets day r free right after",
                    cfg.n_agents,
                )
            ratios.append(Fraction(1))
            continue
        # general agents: the others' pledges must never make another day
        # strictly more attractive than the purchase day
        c_num = profile.pledge(i, r) + r - 1
        c_den = min(r, z[i])
        scan_hi = max(
            cfg.horizon, support_max, ceil(Fraction(z[i] * c_num, c_den)) - b + 2
        )
        for j in range(1, scan_hi + 1):
            if j == r:
                continue
            lhs = profile.others_total(i, j)
            # lhs <= b + j - 1 - min(j, z_i) * c, exactly
            if lhs * c_den > (b + j - 1) * c_den - min(j, z[i]) * c_num:
                return _fail(
                    f"iv: agent {i} would rather move to day {j} "
                    f"(others pledge {lhs} there)",
                    cfg.n_agents,
                )
        ratios.append(Fraction(c_num, c_den))
    return EqVerdict(True, None, tuple(ratios))


def _fail(reason: str, n_agents: int) -> EqVerdict:
    return EqVerdict(False, reason, tuple())


def equilibrium_ratios(cfg: GameConfig, profile: PledgeProfile) -> tuple[Fraction, ...]:
    """Per-agent worst-case ratios of an accepted predictionless equilibrium:
    1 for free-day and bargain-day agents, (f_i(r)+r-1)/min(r, Z_i) for the
    rest.  Rejects profiles that are not equilibria."""
    verdict = check_predictionless(cfg, profile)
    if not verdict.is_equilibrium:
        raise ValueError(f"not an equilibrium: {verdict.failing_condition}")
    return verdict.ratios


# ---------------------------------------------------------------------------
# coalition (no-self-prediction) equilibria


def pledge_weight_ok(r: int, w: int, license_cost: int) -> bool:
    """Single pledger's condition for pledging w on day r to be a best
    response when the rest of the coalition covers B - w."""
    b = license_cost
    if r <= b:
        return (w - 1) * min(b, r - 1 + w) <= r * (b - 1)
    return r - 1 + w <= 2 * b - 1


def check_rational_no_selfpred(spec: EquilibriumSpec) -> EqVerdict:
    """Coalition equilibrium test: weights sum to exactly B, the day is at
    most 2B-1, and every pledger's weight passes ``pledge_weight_ok``.

    Ratios are returned pledgers-first (1 + (w-1)/r early, (r+w-1)/B late),
    then one entry per freerider (1 early, (r-1)/B late).
    """
    b = spec.license_cost
    if spec.r > 2 * b - 1:
        raise ValueError(f"purchase day {spec.r} exceeds 2B-1 = {2 * b - 1}")
    if sum(spec.weights) != b:
        raise ValueError(
            f"coalition weights sum to {sum(spec.weights)}, must equal B={b}"
        )
    for idx, w in enumerate(spec.weights):
        if not pledge_weight_ok(spec.r, w, b):
            side = "early-day" if spec.r <= b else "late-day"
            return EqVerdict(
                False, f"pledger {idx} (w={w}): {side} bound violated", tuple()
            )
    ratios = [_pledger_ratio(spec.r, w, b) for w in spec.weights]
    ratios += [_freerider_ratio(spec.r, b)] * spec.n_freeriders
    return EqVerdict(True, None, tuple(ratios))


def _pledger_ratio(r: int, w: int, b: int) -> Fraction:
    if r <= b:
        return 1 + Fraction(w - 1, r)
    return Fraction(r + w - 1, b)


def _freerider_ratio(r: int, b: int) -> Fraction:
    if r <= b + 1:
        return Fraction(1)
    return Fraction(r - 1, b)


def enumerate_rational_eq(
    license_cost: int,
    n_agents: int,
    r_values: Optional[Sequence[int]] = None,
    max_license: int = 20,
) -> Iterator[EquilibriumSpec]:
    """All coalition equilibria for the given size, in lexicographic order
    (day, coalition size, weight vector).  Weight vectors are ordered
    compositions of B, so (1, 2) and (2, 1) are distinct specs."""
    b = license_cost
    if b > max_license:
        raise ValueError(
            f"B={b} exceeds the enumeration cap {max_license}; raise max_license"
        )
    days = range(1, 2 * b) if r_values is None else r_values
    for r in days:
        if not 1 <= r <= 2 * b - 1:
            continue
        for size in range(1, n_agents + 1):
            for comp in _compositions(b, size):
                spec = EquilibriumSpec(r, comp, b, n_agents)
                if check_rational_no_selfpred(spec).is_equilibrium:
                    yield spec


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` positive integers."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# deviation oracle


def deviation_oracle(
    cfg: GameConfig,
    profile: PledgeProfile,
    agent: int,
    oracle_bound: Optional[int] = None,
) -> Fraction:
    """Best worst-case ratio the agent could get by any rent-then-buy
    strategy against the others' fixed pledges, by brute-force enumeration
    over its induced schedule."""
    induced = induced_prices(cfg, profile, agent)
    return oracle_c_opt(induced, oracle_bound).c_opt


def agent_worst_ratio(
    cfg: GameConfig, profile: PledgeProfile, agent: int
) -> StrategyRatio:
    """Worst-case ratio of the agent's pledge function as played, against
    the others' pledges, over all of the agent's possible active times."""
    induced = induced_prices(cfg, profile, agent)
    d = derive_costs(induced)
    r = purchase_day(cfg, profile)
    scan_hi = cfg.horizon + cfg.license_cost
    worst = (0, 1)
    worst_finite = (0, 1)
    for t in range(1, scan_hi + 1):
        if r is None or t < r:
            cost = t
        else:
            cost = (r - 1) + profile.pledge(agent, r)
        cur = ratio_pair(cost, d.opt_offline(t))
        if pair_gt(cur, worst):
            worst = cur
        if cur[1] != 0 and pair_gt(cur, worst_finite):
            worst_finite = cur
    divergent = r is None or worst[1] == 0
    return StrategyRatio(Fraction(*worst_finite), divergent)


def oracle_certified(
    cfg: GameConfig, profile: PledgeProfile, oracle_bound: Optional[int] = None
) -> bool:
    """True iff no agent can beat its current worst-case ratio: the
    enumeration-based equilibrium test."""
    for i in range(cfg.n_agents):
        current = agent_worst_ratio(cfg, profile, i)
        if current.divergent:
            return False
        if deviation_oracle(cfg, profile, i, oracle_bound) < current.value:
            return False
    return True


# ---------------------------------------------------------------------------
# runs of profiles with predictions


def check_prediction_eq_run(
    spec: EquilibriumSpec,
    lambdas: Sequence[ExactLike],
    m_star: Optional[int] = None,
) -> EqVerdict:
    """Check one run in which the coalition pledges at least B on day r and
    each pledger k carries a robustness parameter lambda_k >= 1.

    The weight bound is (w_k-1)/r <= lambda*(B-1)/M + lambda + 1/lambda - 2
    when r <= M, and r+w_k-1 <= lambda*(2B-1) + (lambda + 1/lambda - 2)*B
    when r > M, with M = min(B, r-1+w_k) per pledger unless given.  Ratios
    (pledgers only): 1 + min((B-1)/M, (w_k-1)/r) early,
    min(M+B-1, r+w_k-1)/M late.
    """
    b = spec.license_cost
    if sum(spec.weights) < b:
        raise ValueError(
            f"run weights sum to {sum(spec.weights)} < B={b}: no purchase"
        )
    lams = [exact(lam) for lam in lambdas]
    if len(lams) != len(spec.weights):
        raise ValueError(f"{len(lams)} lambdas for {len(spec.weights)} pledgers")
    if any(lam < 1 for lam in lams):
        raise ValueError("robustness parameters must be >= 1")

    ratios = []
    for idx, (w, lam) in enumerate(zip(spec.weights, lams)):
        m = m_star if m_star is not None else min(b, spec.r - 1 + w)
        slack = lam + 1 / lam - 2
        if spec.r <= m:
            ok = Fraction(w - 1, spec.r) <= lam * Fraction(b - 1, m) + slack
            tag = "early-day"
            rat = 1 + min(Fraction(b - 1, m), Fraction(w - 1, spec.r))
        else:
            ok = spec.r + w - 1 <= lam * (2 * b - 1) + slack * b
            tag = "late-day"
            rat = Fraction(min(m + b - 1, spec.r + w - 1), m)
        if not ok:
            return EqVerdict(
                False, f"pledger {idx} (w={w}, lambda={lam}): {tag} bound", tuple()
            )
        ratios.append(rat)
    return EqVerdict(True, None, tuple(ratios))


def purchase_deadline_bound(
    lambdas: Sequence[Optional[ExactLike]], schedule: PriceSchedule
) -> Optional[Fraction]:
    """Latest purchase day any agent with a finite robustness parameter can
    tolerate: M_* (1/lam - 1) + M_* lam P_{r1}/r1 at the smallest finite
    lambda, where r1 is the canonical optimal buy day.  None entries mean an
    unbounded parameter; all-unbounded returns None."""
    finite = [exact(lam) for lam in lambdas if lam is not None]
    if any(lam < 1 for lam in finite):
        raise ValueError("robustness parameters must be >= 1")
    if not finite:
        return None
    lam = min(finite)
    d = derive_costs(schedule)
    r1 = solve(schedule).canonical_day
    per_day = Fraction(schedule.total_cost(r1), r1)
    return d.m_star * (1 / lam - 1) + d.m_star * lam * per_day
