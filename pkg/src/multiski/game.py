"""The multiagent rent-or-buy engine.

Agents rent a shared resource for 1 $/day and may pledge toward a group
license costing B.  The license is bought on the first day the active
agents' pledges add up to at least B; pledges on other days are nullified
and cost nothing.  ``run_game`` evaluates a fixed pledge profile against
concrete active times; ``induced_prices`` is the single-agent reduction
(from one agent's seat, the others' pledges turn the game into rent-or-buy
with varying prices).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .core import PriceSchedule, derive_costs, realized_ratio


@dataclass(frozen=True)
class GameConfig:
    n_agents: int
    license_cost: int
    horizon: int

    def __post_init__(self) -> None:
        if self.n_agents < 1:
            raise ValueError(f"need at least one agent, got {self.n_agents}")
        if self.license_cost < 2:
            raise ValueError(f"license cost must be >= 2, got {self.license_cost}")
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")


@dataclass(frozen=True)
class PledgeProfile:
    """Per-agent pledge tables; ``pledges[i]`` maps day -> amount, with every
    unlisted day pledging 0.  Agents are 0-indexed here; days are 1-based."""

    pledges: tuple[Mapping[int, int], ...]

    @classmethod
    def from_tables(cls, tables: Sequence[Mapping[int, int]]) -> "PledgeProfile":
        frozen = []
        for i, table in enumerate(tables):
            clean = {}
            for day, amount in table.items():
                day, amount = int(day), int(amount)
                if day < 1:
                    raise ValueError(f"agent {i}: days are 1-based, got {day}")
                if amount < 0:
                    raise ValueError(f"agent {i}: pledge on day {day} is negative")
                if amount:
                    clean[day] = amount
            frozen.append(clean)
        return cls(tuple(frozen))

    def pledge(self, agent: int, day: int) -> int:
        return self.pledges[agent].get(day, 0)

    def validate(self, cfg: GameConfig) -> None:
        if len(self.pledges) != cfg.n_agents:
            raise ValueError(
                f"profile has {len(self.pledges)} agents, config has {cfg.n_agents}"
            )
        for i, table in enumerate(self.pledges):
            for day, amount in table.items():
                if amount > cfg.license_cost:
                    raise ValueError(
                        f"agent {i} pledges {amount} > B={cfg.license_cost} on day {day}"
                    )

    def others_total(self, agent: int, day: int) -> int:
        return sum(
            table.get(day, 0) for j, table in enumerate(self.pledges) if j != agent
        )

    def support_days(self) -> set[int]:
        days: set[int] = set()
        for table in self.pledges:
            days.update(table)
        return days

    @classmethod
    def from_json(cls, text: str) -> tuple[GameConfig, "PledgeProfile"]:
        obj = json.loads(text)
        cfg = GameConfig(int(obj["n"]), int(obj["B"]), int(obj["H"]))
        tables: list[dict[int, int]] = [dict() for _ in range(cfg.n_agents)]
        for agent_key, entries in obj.get("pledges", {}).items():
            idx = int(agent_key) - 1
            if not 0 <= idx < cfg.n_agents:
                raise ValueError(f"agent id {agent_key} outside 1..{cfg.n_agents}")
            for day, amount in entries:
                tables[idx][int(day)] = int(amount)
        profile = cls.from_tables(tables)
        profile.validate(cfg)
        return cfg, profile

    def to_json(self, cfg: GameConfig) -> str:
        return json.dumps(
            {
                "n": cfg.n_agents,
                "B": cfg.license_cost,
                "H": cfg.horizon,
                "pledges": {
                    str(i + 1): sorted([d, a] for d, a in table.items())
                    for i, table in enumerate(self.pledges)
                    if table
                },
            }
        )


@dataclass(frozen=True)
class RunOutcome:
    purchase_day: Optional[int]
    costs: tuple[int, ...]
    opts: tuple[int, ...]
    ratios: tuple[Optional[Fraction], ...]  # None: positive cost, zero optimum


def purchase_day(
    cfg: GameConfig, profile: PledgeProfile, active: Optional[Sequence[int]] = None
) -> Optional[int]:
    """First day on which the pledges of still-active agents reach B."""
    for day in range(1, cfg.horizon + 1):
        total = 0
        for i in range(cfg.n_agents):
            if active is None or active[i] >= day:
                total += profile.pledge(i, day)
        if total >= cfg.license_cost:
            return day
    return None


def induced_prices(
    cfg: GameConfig, profile: PledgeProfile, agent: int, active: Optional[Sequence[int]] = None
) -> PriceSchedule:
    """Prices agent ``agent`` faces given the other agents' pledges: on day j
    it would pay max(B - sum of the others' pledges on j, 0) to complete the
    license.  ``active`` restricts the others' pledges to their lifetimes;
    by default everyone is assumed to outlast the game."""
    b = cfg.license_cost
    last = max(profile.support_days(), default=0)
    dense = []
    for day in range(1, last + 1):
        others = 0
        for j in range(cfg.n_agents):
            if j != agent and (active is None or active[j] >= day):
                others += profile.pledge(j, day)
        dense.append(max(b - others, 0))
        if dense[-1] == 0:
            break
    return PriceSchedule.from_prices(dense, b, max(cfg.horizon, len(dense)))


def run_game(
    cfg: GameConfig, profile: PledgeProfile, active_times: Sequence[int]
) -> RunOutcome:
    """Ground-truth evaluation of one play of the game.

    Each agent rents while active and the license is unbought, pays its
    day-r pledge if it is active on the purchase day r, and is benchmarked
    against the offline optimum of its own induced schedule truncated at its
    active time.
    """
    profile.validate(cfg)
    if len(active_times) != cfg.n_agents:
        raise ValueError(
            f"{len(active_times)} active times for {cfg.n_agents} agents"
        )
    if any(t < 1 for t in active_times):
        raise ValueError("active times must be >= 1")

    r = purchase_day(cfg, profile, active_times)
    costs = []
    opts = []
    ratios = []
    for i in range(cfg.n_agents):
        t_i = active_times[i]
        if r is None or t_i < r:
            cost = t_i
        else:
            cost = (r - 1) + profile.pledge(i, r)
        induced = induced_prices(cfg, profile, i, active_times)
        opt = derive_costs(induced).opt_offline(t_i)
        costs.append(cost)
        opts.append(opt)
        ratios.append(realized_ratio(cost, opt))
    return RunOutcome(r, tuple(costs), tuple(opts), tuple(ratios))


def z_value(cfg: GameConfig, profile: PledgeProfile, agent: int) -> int:
    """Cheapest total cost of completing the license within the first B days,
    given the others' pledges: min over k <= B of k-1 + max(B - others(k), 0)."""
    b = cfg.license_cost
    return min(
        k - 1 + max(b - profile.others_total(agent, k), 0) for k in range(1, b + 1)
    )


def z_value_vs_induced_min(
    cfg: GameConfig, profile: PledgeProfile, agent: int
) -> tuple[int, int, bool]:
    """Report (z_value, induced M_*, agree?).

    The day-B cap in ``z_value`` cannot actually bite (day-1 completion costs
    at most B while every later day costs at least its rent), so the two
    quantities are expected to agree; this helper reports rather than
    asserts that.
    """
    z = z_value(cfg, profile, agent)
    m = derive_costs(induced_prices(cfg, profile, agent)).m_star
    return z, m, z == m
