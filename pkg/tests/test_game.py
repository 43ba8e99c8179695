import random
from fractions import Fraction

import pytest

from multiski import (
    GameConfig,
    PledgeProfile,
    agent_worst_ratio,
    induced_prices,
    run_game,
    z_value,
    z_value_vs_induced_min,
)


def _profile(tables):
    return PledgeProfile.from_tables(tables)


def test_coalition_buy_with_freerider():
    cfg = GameConfig(3, 100, 200)
    profile = _profile([{75: 50}, {75: 50}, {}])
    out = run_game(cfg, profile, [75, 75, 75])
    assert out.purchase_day == 75
    assert out.costs == (124, 124, 74)
    assert out.ratios == (Fraction(124, 75), Fraction(124, 75), Fraction(1))


def test_no_purchase_when_nobody_pledges():
    cfg = GameConfig(2, 100, 200)
    out = run_game(cfg, _profile([{}, {}]), [50, 50])
    assert out.purchase_day is None
    assert out.costs == (50, 50)
    assert out.ratios == (Fraction(1), Fraction(1))


def test_small_split_buy():
    cfg = GameConfig(2, 3, 6)
    out = run_game(cfg, _profile([{2: 1}, {2: 2}]), [2, 2])
    assert out.purchase_day == 2
    assert out.costs == (2, 3)
    assert out.ratios == (Fraction(1), Fraction(3, 2))


def test_inactive_agents_do_not_count_toward_the_buy():
    cfg = GameConfig(2, 3, 6)
    out = run_game(cfg, _profile([{2: 1}, {2: 2}]), [1, 5])
    assert out.purchase_day is None  # agent 1 left before day 2
    assert out.costs == (1, 5)


def test_run_game_rejects_mismatched_lengths():
    cfg = GameConfig(2, 3, 6)
    with pytest.raises(ValueError):
        run_game(cfg, _profile([{}, {}]), [1])


def test_induced_prices_substitution():
    cfg = GameConfig(2, 3, 6)
    p = induced_prices(cfg, _profile([{}, {2: 2}]), 0)
    assert p.price(1) == 3
    assert p.price(2) == 1
    assert p.price(3) == 3


def test_induced_prices_all_zero_profile():
    cfg = GameConfig(2, 3, 6)
    p = induced_prices(cfg, _profile([{}, {}]), 0)
    assert [p.price(d) for d in range(1, 7)] == [3] * 6


def test_induced_prices_coalition_view():
    cfg = GameConfig(2, 100, 200)
    p = induced_prices(cfg, _profile([{75: 70}, {75: 30}]), 0)
    assert p.price(75) == 70
    assert all(p.price(d) == 100 for d in (1, 74, 76, 150))


def test_z_value_examples():
    cfg = GameConfig(2, 3, 6)
    assert z_value(cfg, _profile([{}, {}]), 0) == 3
    assert z_value(cfg, _profile([{}, {2: 2}]), 0) == 2
    assert z_value(cfg, _profile([{2: 1}, {}]), 1) == 3


def test_z_value_agrees_with_induced_minimum():
    rng = random.Random(3)
    for _ in range(200):
        b = rng.randint(2, 8)
        n = rng.randint(1, 3)
        cfg = GameConfig(n, b, 2 * b)
        tables = [
            {rng.randint(1, 2 * b): rng.randint(0, b) for _ in range(rng.randint(0, 3))}
            for _ in range(n)
        ]
        profile = _profile(tables)
        for i in range(n):
            z, m, agree = z_value_vs_induced_min(cfg, profile, i)
            assert agree, (tables, i, z, m)


def test_purchase_day_monotone_in_pledges():
    rng = random.Random(4)
    for _ in range(200):
        b = rng.randint(2, 6)
        n = rng.randint(1, 3)
        cfg = GameConfig(n, b, 2 * b)
        tables = [
            {rng.randint(1, 2 * b): rng.randint(0, b) for _ in range(rng.randint(0, 2))}
            for _ in range(n)
        ]
        profile = _profile(tables)
        active = [rng.randint(1, 2 * b) for _ in range(n)]
        before = run_game(cfg, profile, active).purchase_day
        # bump one agent's pledge on the purchase day (or any day if none)
        agent = rng.randrange(n)
        day = before if before is not None else rng.randint(1, 2 * b)
        bumped = [dict(t) for t in tables]
        bumped[agent][day] = min(b, bumped[agent].get(day, 0) + 1)
        after = run_game(cfg, _profile(bumped), active).purchase_day
        if before is not None:
            assert after is not None and after <= before


def test_realized_ratio_below_strategy_worst_case():
    # with everyone outliving the horizon, a run can never beat the
    # strategy's adversarial bound on the induced schedule
    rng = random.Random(5)
    for _ in range(100):
        b = rng.randint(2, 6)
        n = rng.randint(1, 3)
        cfg = GameConfig(n, b, 2 * b)
        tables = [
            {rng.randint(1, b): rng.randint(0, b) for _ in range(rng.randint(0, 2))}
            for _ in range(n)
        ]
        profile = _profile(tables)
        for t_i in (1, b, 2 * b):
            active = [2 * b] * n
            active[0] = t_i
            out = run_game(cfg, profile, active)
            worst = agent_worst_ratio(cfg, profile, 0)
            if out.ratios[0] is not None and not worst.divergent:
                assert Fraction(1) <= out.ratios[0] <= worst.value


def test_profile_json_roundtrip():
    cfg = GameConfig(3, 100, 200)
    profile = _profile([{75: 50}, {75: 50}, {}])
    cfg2, profile2 = PledgeProfile.from_json(profile.to_json(cfg))
    assert cfg2 == cfg
    assert profile2 == profile
