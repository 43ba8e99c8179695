"""Which coalition splits are stable?  Enumerate them for a small license,
verify one by hand, and watch the deviation oracle reject an unstable one."""

from fractions import Fraction

from multiski import (
    EquilibriumSpec,
    agent_worst_ratio,
    check_rational_no_selfpred,
    deviation_oracle,
    enumerate_rational_eq,
)

print("all stable splits for B=6, two agents:")
for spec in enumerate_rational_eq(6, 2):
    verdict = check_rational_no_selfpred(spec)
    print(f"  day {spec.r:2d}  weights {spec.weights}  "
          f"ratios {[str(x) for x in verdict.ratios]}")

# a familiar large split: two agents cover 100 on day 75
spec = EquilibriumSpec(75, (50, 50), 100, 3)
verdict = check_rational_no_selfpred(spec)
print(f"\n(75, 50+50) with a freerider: equilibrium={verdict.is_equilibrium}, "
      f"ratios {[str(x) for x in verdict.ratios]}")

# the same split on day 10 is too eager: deviating pays
cfg, profile = EquilibriumSpec(10, (50, 50), 100, 2).as_profile()
current = agent_worst_ratio(cfg, profile, 0).value
best = deviation_oracle(cfg, profile, 0)
print(f"\n(10, 50+50): current worst ratio {current} = {float(current):.3f}, "
      f"best response achieves {best} = {float(best):.3f}")
assert best < current
