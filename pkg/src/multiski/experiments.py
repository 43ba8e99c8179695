"""Seeded Monte-Carlo benchmark of the prediction-tunable algorithm.

For a fixed coalition cell (r, w) and license cost B, the harness draws an
active time T uniformly from [1, 4B] and a prediction That = max(1,
round(T + eps)) with eps ~ Normal(0, sigma), runs the algorithm for every
requested trust dial on the same (T, That) draw (paired comparison across
lambdas within a sigma cell), and aggregates the average realized ratio and
the number of suboptimal samples per (lambda, sigma) cell.

Reproducibility: every sample gets its own RNG seeded from
(master seed, sigma index, sample index), so results are bit-identical
regardless of evaluation order or parallel scheduling.  Floating point
appears only in the final averaging; every per-sample ratio is exact and is
checked against the robustness bound inline (a violation aborts the run).
"""

from __future__ import annotations

import hashlib
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import derive_costs
from .equilibria import EquilibriumSpec, ExactLike, check_rational_no_selfpred, exact
from .predictor import coalition_schedule, compute_days, robustness_bound

OUTPUT_DIR_ENV = "MULTISKI_OUT_DIR"

CSV_HEADER = "r,w,lambda,sigma,n_samples,avg_ratio,n_suboptimal,seed"


@dataclass(frozen=True)
class ExperimentConfig:
    license_cost: int
    r: int
    w: int
    lambdas: tuple[Fraction, ...]
    sigmas: tuple[float, ...]
    samples_per_cell: int = 1000
    master_seed: int = 0

    @classmethod
    def make(
        cls,
        r: int,
        w: int,
        lambdas: Sequence[ExactLike],
        sigmas: Sequence[float],
        license_cost: int = 100,
        samples_per_cell: int = 1000,
        master_seed: int = 0,
    ) -> "ExperimentConfig":
        lams = tuple(exact(lam) for lam in lambdas)
        if any(not 0 < lam <= 1 for lam in lams):
            raise ValueError("trust dials must be in (0, 1]")
        if any(s < 0 for s in sigmas):
            raise ValueError("noise levels must be >= 0")
        if samples_per_cell < 1:
            raise ValueError("need at least one sample per cell")
        spec = EquilibriumSpec(
            r, (w,) + (1,) * (license_cost - w), license_cost, license_cost
        )
        verdict = check_rational_no_selfpred(spec)
        if not verdict.is_equilibrium:
            raise ValueError(
                f"(r={r}, w={w}) is not an equilibrium cell: {verdict.failing_condition}"
            )
        return cls(
            license_cost,
            r,
            w,
            lams,
            tuple(float(s) for s in sigmas),
            samples_per_cell,
            int(master_seed),
        )


@dataclass(frozen=True)
class ExperimentRow:
    r: int
    w: int
    lam: Fraction
    sigma: float
    n_samples: int
    avg_ratio: float
    n_suboptimal: int
    seed: int


def _sample_rng(master_seed: int, sigma_index: int, sample_index: int) -> random.Random:
    key = f"{master_seed}:{sigma_index}:{sample_index}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def sample_instance(rng: random.Random, license_cost: int, sigma: float) -> tuple[int, int]:
    """One (active time, prediction) draw: T uniform on [1, 4B], prediction
    T plus centered Gaussian noise, rounded and clamped to >= 1."""
    if sigma < 0:
        raise ValueError("noise level must be >= 0")
    t = rng.randint(1, 4 * license_cost)
    eps = rng.gauss(0.0, sigma) if sigma > 0 else 0.0
    that = max(1, round(t + eps))
    return t, that


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    """One row per (lambda, sigma) cell, lambda ascending then sigma
    ascending.  Deterministic for a fixed config."""
    schedule = coalition_schedule(cfg.r, cfg.w, cfg.license_cost)
    costs = derive_costs(schedule)
    per_lambda = {}
    for lam in cfg.lambdas:
        decision = compute_days(schedule, lam)
        bound = robustness_bound(schedule, lam)
        per_lambda[lam] = (decision, bound.numerator, bound.denominator)

    # ratio sums accumulated exactly per cell, in sample order
    sums: dict[tuple[Fraction, float], Fraction] = {
        (lam, s): Fraction(0) for lam in cfg.lambdas for s in cfg.sigmas
    }
    subopt: dict[tuple[Fraction, float], int] = {k: 0 for k in sums}

    for sigma_index, sigma in enumerate(cfg.sigmas):
        for sample_index in range(cfg.samples_per_cell):
            rng = _sample_rng(cfg.master_seed, sigma_index, sample_index)
            t, that = sample_instance(rng, cfg.license_cost, sigma)
            m_that = costs.prefix_min(that)
            opt = costs.opt_offline(t)
            for lam in cfg.lambdas:
                decision, bn, bd = per_lambda[lam]
                day = decision.r2 if that >= m_that else decision.r3
                cost = t if day > t else schedule.total_cost(day)
                if cost * bd > bn * opt:  # ratio above the robustness bound
                    raise AssertionError(
                        f"robustness bound violated at (r={cfg.r}, w={cfg.w}, "
                        f"lam={lam}, T={t}, That={that})"
                    )
                key = (lam, sigma)
                sums[key] += Fraction(cost, opt)
                if cost > opt:
                    subopt[key] += 1

    rows = []
    for lam in sorted(cfg.lambdas):
        for sigma in sorted(cfg.sigmas):
            key = (lam, sigma)
            rows.append(
                ExperimentRow(
                    r=cfg.r,
                    w=cfg.w,
                    lam=lam,
                    sigma=sigma,
                    n_samples=cfg.samples_per_cell,
                    avg_ratio=float(sums[key] / cfg.samples_per_cell),
                    n_suboptimal=subopt[key],
                    seed=cfg.master_seed,
                )
            )
    return rows


def format_csv(rows: Sequence[ExperimentRow]) -> str:
    if not rows:
        raise ValueError("no rows to write")
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            f"{row.r},{row.w},{float(row.lam):g},{row.sigma:g},{row.n_samples},"
            f"{row.avg_ratio:.6f},{row.n_suboptimal},{row.seed}"
        )
    return "\n".join(lines) + "\n"


def write_csv(rows: Sequence[ExperimentRow], path: str) -> None:
    text = format_csv(rows)
    try:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as err:
        raise OSError(f"cannot write experiment CSV to {path}: {err}") from err


def default_output_dir() -> str:
    return os.environ.get(OUTPUT_DIR_ENV, "runs")
