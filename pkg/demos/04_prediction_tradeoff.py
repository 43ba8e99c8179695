"""The trust dial: how much a correct self-prediction can help an agent
playing a coalition equilibrium, and what it risks when the prediction is
wrong."""

from fractions import Fraction

from multiski import (
    beta_table,
    coalition_schedule,
    decide_run,
    improvement_threshold,
    robustness_bound,
    run_alg1,
)

R, W, B = 75, 70, 100
schedule = coalition_schedule(R, W, B)

print(f"pledging {W} on day {R} (B={B}): predictionless ratio "
      f"{1 + Fraction(W - 1, R)}")
print(f"trust dial pays off below lambda = {improvement_threshold(R, W, B)}\n")

print("lambda   consistency (perfect predictor)   robustness (any predictor)")
for tenths in range(2, 11, 2):
    lam = Fraction(tenths, 10)
    beta = beta_table(R, W, B, lam).beta
    bound = robustness_bound(schedule, lam)
    print(f"  {str(lam):5}  {str(beta):>10} = {float(beta):.3f}"
          f"          {str(bound):>8} = {float(bound):.3f}")

print("\none run at lambda=0.2, active 200 days, prediction spot on:")
decision = decide_run(schedule, "0.2", 200, 200)
cost, ratio = run_alg1(schedule, "0.2", 200, 200)
print(f"  buy days r2={decision.r2} r3={decision.r3}, branch "
      f"{decision.branch}, bought day {decision.buy_day_taken}, "
      f"cost {cost}, ratio {ratio}")

print("same dial, prediction badly short (10 vs 400 actual):")
decision = decide_run(schedule, "0.2", 400, 10)
cost, ratio = run_alg1(schedule, "0.2", 400, 10)
print(f"  branch {decision.branch}, bought {decision.buy_day_taken}, "
      f"cost {cost}, ratio {ratio} <= bound "
      f"{robustness_bound(schedule, '0.2')}")
