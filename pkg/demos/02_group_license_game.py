"""The multiagent game: agents rent individually or pledge toward a shared
license; one agent's seat reduces to rent-or-buy with varying prices."""

from multiski import (
    GameConfig,
    PledgeProfile,
    induced_prices,
    run_game,
    z_value,
)

cfg = GameConfig(n_agents=3, license_cost=100, horizon=200)
profile = PledgeProfile.from_tables([{75: 50}, {75: 50}, {}])

out = run_game(cfg, profile, [75, 75, 75])
print(f"license bought on day {out.purchase_day}")
for i in range(3):
    print(f"  agent {i + 1}: paid {out.costs[i]}, offline optimum "
          f"{out.opts[i]}, ratio {out.ratios[i]}")

# agent 3 never pledges: from its seat, day 75 is free
free_view = induced_prices(cfg, profile, 2)
print(f"\nfreerider's induced price on day 75: {free_view.price(75)}")

# agent 1's seat: day 75 costs the 50 the others leave uncovered
my_view = induced_prices(cfg, profile, 0)
print(f"pledger's induced price on day 75: {my_view.price(75)}")
print(f"pledger's cheapest completion within 100 days: "
      f"{z_value(cfg, profile, 0)}")

# if an agent leaves before the pledge day, the license is never bought
out = run_game(cfg, profile, [10, 75, 75])
print(f"\nwith agent 1 leaving on day 10, purchase day = {out.purchase_day}")
