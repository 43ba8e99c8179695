"""Price schedules, derived cost quantities, offline optima, and exact ratios.

Everything downstream (solvers, equilibrium verifiers, the prediction
algorithm) is built on three primitives defined here:

  * a per-day buying-price schedule with a fixed 1 $/day rent,
  * the total-cost curve P_i = i - 1 + p_i and its running minima,
  * the offline optimum min(T, min_{i <= T} P_i) for a known active time T.

All quantities are integers or `fractions.Fraction`; no floating point is
used in any comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional


@dataclass(frozen=True)
class PriceSchedule:
    """A buying-price sequence indexed by day (1-based), with license cost B.

    Days beyond the explicit entries cost the full license price B, so the
    schedule models an infinite sequence with a finite description.  The
    sequence is truncated at the first free day (price 0); renting always
    costs 1 $/day.
    """

    prices: tuple[int, ...]
    license_cost: int
    horizon: int

    @classmethod
    def from_prices(
        cls,
        prices: Iterable[int],
        license_cost: int,
        horizon: Optional[int] = None,
    ) -> "PriceSchedule":
        prices = [int(p) for p in prices]
        b = int(license_cost)
        if b < 2:
            raise ValueError(f"license cost must be >= 2, got {b}")
        for day, p in enumerate(prices, start=1):
            if not 0 <= p <= b:
                raise ValueError(f"price on day {day} must be in [0, {b}], got {p}")
        if 0 in prices:  # keep nothing after the first free day
            prices = prices[: prices.index(0) + 1]
        if horizon is None:
            horizon = max(1, len(prices))
        horizon = int(horizon)
        if horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {horizon}")
        if horizon < len(prices):
            raise ValueError(
                f"horizon {horizon} is shorter than the explicit schedule ({len(prices)} days)"
            )
        return cls(tuple(prices), b, horizon)

    @classmethod
    def from_day_prices(
        cls,
        entries: Mapping[int, int],
        license_cost: int,
        horizon: Optional[int] = None,
    ) -> "PriceSchedule":
        """Build from sparse {day: price}; omitted days default to B."""
        b = int(license_cost)
        if entries:
            days = sorted(int(d) for d in entries)
            if days[0] < 1:
                raise ValueError(f"days are 1-based, got day {days[0]}")
            zero_days = [d for d in days if int(entries[d]) == 0]
            if zero_days and days[-1] > min(zero_days):
                raise ValueError(
                    f"day {days[-1]} listed after the free day {min(zero_days)}"
                )
            dense = [int(entries.get(d, b)) for d in range(1, days[-1] + 1)]
        else:
            dense = []
        return cls.from_prices(dense, b, horizon)

    @classmethod
    def constant(cls, license_cost: int, horizon: Optional[int] = None) -> "PriceSchedule":
        """Classical rent-or-buy: every day costs the full license price."""
        b = int(license_cost)
        return cls.from_prices([b], b, horizon if horizon is not None else b)

    @classmethod
    def from_json(cls, text: str) -> "PriceSchedule":
        obj = json.loads(text)
        entries = {int(day): int(price) for day, price in obj.get("prices", [])}
        return cls.from_day_prices(entries, obj["B"], obj.get("H"))

    def to_json(self) -> str:
        return json.dumps(
            {
                "B": self.license_cost,
                "H": self.horizon,
                "prices": [[d, p] for d, p in enumerate(self.prices, start=1)],
            }
        )

    def price(self, day: int) -> int:
        if day < 1:
            raise ValueError(f"days are 1-based, got {day}")
        return self.prices[day - 1] if day <= len(self.prices) else self.license_cost

    def total_cost(self, day: int) -> int:
        """P_day: rent for day-1 days, then buy at that day's price."""
        return day - 1 + self.price(day)


@dataclass(frozen=True)
class DerivedCosts:
    """Total-cost curve and its running minima for one schedule.

    ``total_cost[i-1]`` is P_i for the explicit horizon; ``prefix_min`` and
    ``suffix_min`` extend past the horizon using the constant-B tail, so all
    lookups are valid for arbitrarily late days.
    """

    schedule: PriceSchedule
    total_cost: tuple[int, ...]
    m_star: int
    i_star: int
    first_free_day: Optional[int]
    first_bargain_day: Optional[int]
    _prefix: tuple[int, ...] = field(repr=False)

    def prefix_min(self, t: int) -> int:
        """min(P_i : 1 <= i <= t)."""
        if t < 1:
            raise ValueError(f"days are 1-based, got {t}")
        h = len(self._prefix)
        if t <= h:
            return self._prefix[t - 1]
        return min(self._prefix[h - 1], h + self.schedule.license_cost)

    def suffix_min(self, t: int) -> int:
        """Q_t = min(P_i : i >= t)."""
        if t < 1:
            raise ValueError(f"days are 1-based, got {t}")
        h = len(self.total_cost)
        tail_first = h + self.schedule.license_cost  # P_{h+1}; tail is increasing
        if t > h:
            return t - 1 + self.schedule.license_cost
        return min(min(self.total_cost[t - 1 :]), tail_first)

    def opt_offline(self, active_days: int) -> int:
        """Offline optimum for a known active time: rent throughout, or rent
        and then buy once on the cheapest day seen so far."""
        if active_days < 1:
            raise ValueError(f"active time must be >= 1, got {active_days}")
        return min(active_days, self.prefix_min(active_days))


@lru_cache(maxsize=4096)
def derive_costs(schedule: PriceSchedule) -> DerivedCosts:
    """Populate P_i, its first minimizer, and free/bargain day markers."""
    h = schedule.horizon
    total = tuple(schedule.total_cost(d) for d in range(1, h + 1))
    prefix = []
    running = total[0]
    for v in total:
        running = v if v < running else running
        prefix.append(running)
    # the constant-B tail is strictly increasing, so the global minimum of P
    # is always attained within the explicit horizon
    m_star = prefix[-1]
    i_star = total.index(m_star) + 1
    free = next((d for d, p in enumerate(schedule.prices, 1) if p == 0), None)
    bargain = next((d for d, p in enumerate(schedule.prices, 1) if p == 1), None)
    return DerivedCosts(
        schedule=schedule,
        total_cost=total,
        m_star=m_star,
        i_star=i_star,
        first_free_day=free,
        first_bargain_day=bargain,
        _prefix=tuple(prefix),
    )


def opt_offline(schedule: PriceSchedule, active_days: int) -> int:
    return derive_costs(schedule).opt_offline(active_days)


def ratio(cost: int, opt: int) -> Fraction:
    """Exact cost/optimum ratio in lowest terms."""
    if opt < 1:
        raise ValueError(f"offline optimum must be >= 1, got {opt}")
    return Fraction(cost, opt)


def realized_ratio(cost: int, opt: int) -> Optional[Fraction]:
    """Ratio allowing a zero optimum (a free day on day 1).

    cost 0 against optimum 0 counts as ratio 1; a positive cost against a
    zero optimum has no finite ratio and is reported as None.
    """
    if opt == 0:
        return Fraction(1) if cost == 0 else None
    return Fraction(cost, opt)


# Worst-ratio bookkeeping without Fraction overhead: ratios are (num, den)
# pairs under cross-multiplication, with den == 0 (num > 0) meaning infinite
# and the 0/0 case normalized to 1/1 at construction.

def ratio_pair(cost: int, opt: int) -> tuple[int, int]:
    if opt == 0 and cost == 0:
        return (1, 1)
    return (cost, opt)


def pair_gt(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[0] * b[1] > b[0] * a[1]


def pair_to_fraction(a: tuple[int, int]) -> Optional[Fraction]:
    """Finite pairs become Fractions; infinite pairs become None."""
    if a[1] == 0:
        return None
    return Fraction(a[0], a[1])
