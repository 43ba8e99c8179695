"""Rent-or-buy with a known varying price, and what "optimal" means there.

Each day you either rent for 1 $ or buy at that day's posted price; the
worst case is taken over how long you actually stay active.
"""

from multiski import PriceSchedule, derive_costs, oracle_c_opt, solve

# classical rent-or-buy: the license always costs the full price
classic = PriceSchedule.constant(100)
sol = solve(classic)
print(f"constant price 100: best worst-case ratio {sol.c_opt} "
      f"(buy on day {sorted(sol.optimal_buy_days)})")

# a one-day discount deep into the season
discount = PriceSchedule.from_day_prices({75: 70}, 100, 200)
d = derive_costs(discount)
print(f"\ndiscount day 75 at 70: total cost there {d.total_cost[74]}, "
      f"cheapest total {d.m_star} (day {d.i_star})")
sol = solve(discount)
print(f"best ratio {sol.c_opt} = {float(sol.c_opt)}, "
      f"buy days {sorted(sol.optimal_buy_days)}")

# a bargain day on the cheapest-cost day makes waiting free of regret
bargain = PriceSchedule.from_prices([3, 1, 2], 3)
sol = solve(bargain)
print(f"\nprices 3,1,2 (B=3): ratio {sol.c_opt}, case {sol.witness_case}, "
      f"wait until day {sol.canonical_day}")

# the closed form always agrees with brute-force enumeration
for schedule in (classic, discount, bargain):
    assert solve(schedule) == oracle_c_opt(schedule)
print("\nbrute-force oracle agrees on all three schedules")
