"""Attack sweeps: sample the throughput curve, integrate it, normalize to E.

A sweep removes the planned entities in equal batches, re-routes all
remaining traffic from scratch after each batch, and records
(fraction_remaining, normalized throughput) points.  Elasticity is the
trapezoid area under that curve on a percent axis, divided by the maximal
possible area 100 * max_removal_fraction, so a curve pinned at 1 over the
full sweep scores exactly 1.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .attacks import AttackPlan, plan_random_links, plan_random_nodes, plan_targeted_degree
from .graph import Graph, remove_links, remove_nodes
from .routing import (
    DEFAULT_MODE,
    MODES,
    delivered_flow_count,
    normalized_throughput,
    raw_throughput,
    route_all_pairs,
)

DEFAULT_STEPS = 80
DEFAULT_MAX_REMOVAL = 0.8
DEFAULT_TRIALS = 20


@dataclass(frozen=True)
class ThroughputCurve:
    """Sampled degradation curve for one sweep.

    samples hold (fraction_remaining, throughput) pairs with strictly
    decreasing fractions, starting at (1.0, 1.0) for the intact graph.
    kind names the removed entity ("node"/"link"), which is also the
    fraction axis.  clamp_events counts bottleneck-mode samples that were
    cut back to 1.0.
    """

    samples: tuple[tuple[float, float], ...]
    mode: str
    kind: str
    max_removal_fraction: float
    steps: int
    clamp_events: int = 0
    strategy: str | None = None
    seed: int | None = None


@dataclass(frozen=True)
class ElasticityResult:
    """Area under a throughput curve and its normalized elasticity score."""

    area: float
    elasticity: float
    strategy: str | None
    mode: str
    trials: int
    seed: int | None
    steps: int
    max_removal_fraction: float
    clamp_events: int
    per_trial_elasticity: tuple[float, ...] = field(default=())
    elasticity_std: float = 0.0

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "mode": self.mode,
            "trials": self.trials,
            "seed": self.seed,
            "steps": self.steps,
            "max_removal_fraction": self.max_removal_fraction,
            "area": self.area,
            "elasticity": self.elasticity,
            "clamp_events": self.clamp_events,
            "elasticity_std": self.elasticity_std,
            "per_trial_elasticity": list(self.per_trial_elasticity),
        }


@dataclass(frozen=True)
class AveragedSweep:
    """Multi-trial outcome: mean result, pointwise-mean curve, trial curves."""

    result: ElasticityResult
    mean_curve: ThroughputCurve
    trial_curves: tuple[ThroughputCurve, ...]


def _batch_targets(total: int, fraction: float, steps: int) -> list[int]:
    # Cumulative removal target after step k, rounded half-up; the final
    # step lands on round(fraction * total) regardless of divisibility.
    return [int(k * fraction * total / steps + 0.5) for k in range(1, steps + 1)]


def sweep(
    g: Graph,
    plan: AttackPlan,
    max_removal_fraction: float = DEFAULT_MAX_REMOVAL,
    steps: int = DEFAULT_STEPS,
    mode: str = DEFAULT_MODE,
) -> ThroughputCurve:
    """Run one attack sweep and sample the normalized throughput curve.

    Entities are removed in plan order over `steps` equal batches, always
    starting again from the intact graph so earlier batches cannot skew
    later ids.  Batches that round to no removals are skipped, keeping the
    fraction axis strictly decreasing.  A degenerate baseline (nothing
    deliverable in the intact graph) yields the conventional curve 1 at the
    intact sample and 0 afterwards.
    """
    if mode not in MODES:
        raise ValueError(f"unknown throughput mode {mode!r}")
    if not 0.0 < max_removal_fraction <= 1.0:
        raise ValueError("max_removal_fraction must lie in (0, 1]")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if plan.kind not in ("node", "link"):
        raise ValueError(f"unknown plan kind {plan.kind!r}")
    total = g.n if plan.kind == "node" else g.m
    needed = math.ceil(max_removal_fraction * total)
    if len(plan.order) < needed:
        raise ValueError(f"plan covers {len(plan.order)} entities, sweep needs {needed}")

    # flow-ratio needs only deliverable-pair counts, which come straight
    # from component sizes; routing is required for the bottleneck mode.
    if mode == "flow-ratio":
        delivered_initial = delivered_flow_count(g)
        degenerate = delivered_initial == 0
        baseline = None
    else:
        baseline = raw_throughput(route_all_pairs(g))
        degenerate = baseline.raw == 0.0
    samples = [(1.0, 1.0)]
    clamp_events = 0
    previous = 0
    for target in _batch_targets(total, max_removal_fraction, steps):
        if target == previous:
            continue
        previous = target
        victims = plan.order[:target]
        if plan.kind == "node":
            current, _ = remove_nodes(g, victims)
        else:
            current = remove_links(g, victims)
        if degenerate:
            tp = 0.0
        elif mode == "flow-ratio":
            tp = delivered_flow_count(current) / delivered_initial
        else:
            tp = normalized_throughput(current, baseline, mode)
            if tp > 1.0:
                clamp_events += 1
                tp = 1.0
        samples.append(((total - target) / total, tp))

    return ThroughputCurve(
        samples=tuple(samples),
        mode=mode,
        kind=plan.kind,
        max_removal_fraction=max_removal_fraction,
        steps=steps,
        clamp_events=clamp_events,
        strategy=plan.strategy,
        seed=plan.seed,
    )


def area_under_curve(curve: ThroughputCurve) -> float:
    """Trapezoidal area under the curve on a percent axis.

    A constant-1 curve swept over 80 percentage points integrates to
    exactly 80.  Exact summation keeps that identity free of float drift.
    """
    s = curve.samples
    if not s:
        raise ValueError("curve has no samples")
    terms = (
        (s[i][0] - s[i + 1][0]) * (s[i][1] + s[i + 1][1]) * 0.5
        for i in range(len(s) - 1)
    )
    return 100.0 * math.fsum(terms)


def elasticity(curve: ThroughputCurve) -> ElasticityResult:
    """Normalize the curve area to E = area / (100 * swept width)."""
    if curve.max_removal_fraction <= 0.0:
        raise ValueError("sweep width must be positive")
    area = area_under_curve(curve)
    value = area / (100.0 * curve.max_removal_fraction)
    return ElasticityResult(
        area=area,
        elasticity=value,
        strategy=curve.strategy,
        mode=curve.mode,
        trials=1,
        seed=curve.seed,
        steps=curve.steps,
        max_removal_fraction=curve.max_removal_fraction,
        clamp_events=curve.clamp_events,
        per_trial_elasticity=(value,),
        elasticity_std=0.0,
    )


def _trial_plan(g: Graph, strategy: str, seed: int, recompute: bool) -> AttackPlan:
    if strategy == "degree":
        return plan_targeted_degree(g, g.n, recompute=recompute)
    if strategy == "random-node":
        return plan_random_nodes(g, g.n, seed)
    if strategy == "random-link":
        return plan_random_links(g, g.m, seed)
    raise ValueError(f"unknown attack strategy {strategy!r}")


def _run_trial(args) -> ThroughputCurve:
    g, strategy, seed, recompute, max_removal_fraction, steps, mode = args
    plan = _trial_plan(g, strategy, seed, recompute)
    return sweep(g, plan, max_removal_fraction, steps, mode)


def averaged_elasticity(
    g: Graph,
    strategy: str,
    trials: int = DEFAULT_TRIALS,
    seed: int = 42,
    *,
    max_removal_fraction: float = DEFAULT_MAX_REMOVAL,
    steps: int = DEFAULT_STEPS,
    mode: str = DEFAULT_MODE,
    recompute: bool = True,
    jobs: int = 1,
) -> AveragedSweep:
    """Average elasticity over seeded trials of a (possibly stochastic) attack.

    Trial k uses seed + k; the targeted strategy is deterministic, so it is
    forced to a single trial.  Returns the mean result (per-trial values and
    their sample standard deviation included), the pointwise-mean curve, and
    every per-trial curve.  Aggregation runs in fixed trial order, so worker
    count never changes the outcome.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if strategy == "degree":
        trials = 1
    args = [
        (g, strategy, seed + k, recompute, max_removal_fraction, steps, mode)
        for k in range(trials)
    ]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, trials)) as pool:
            curves = tuple(pool.map(_run_trial, args))
    else:
        curves = tuple(_run_trial(a) for a in args)

    fractions = [f for f, _ in curves[0].samples]
    for c in curves[1:]:
        if [f for f, _ in c.samples] != fractions:
            raise RuntimeError("trial curves fell out of alignment")
    mean_samples = tuple(
        (f, math.fsum(c.samples[i][1] for c in curves) / trials)
        for i, f in enumerate(fractions)
    )
    mean_curve = ThroughputCurve(
        samples=mean_samples,
        mode=mode,
        kind=curves[0].kind,
        max_removal_fraction=max_removal_fraction,
        steps=steps,
        clamp_events=sum(c.clamp_events for c in curves),
        strategy=strategy,
        seed=seed,
    )

    per_trial = tuple(elasticity(c) for c in curves)
    values = tuple(r.elasticity for r in per_trial)
    mean_e = math.fsum(values) / trials
    mean_area = math.fsum(r.area for r in per_trial) / trials
    if trials > 1:
        var = math.fsum((v - mean_e) ** 2 for v in values) / (trials - 1)
        std = math.sqrt(var)
    else:
        std = 0.0
    result = ElasticityResult(
        area=mean_area,
        elasticity=mean_e,
        strategy=strategy,
        mode=mode,
        trials=trials,
        seed=seed,
        steps=steps,
        max_removal_fraction=max_removal_fraction,
        clamp_events=mean_curve.clamp_events,
        per_trial_elasticity=values,
        elasticity_std=std,
    )
    return AveragedSweep(result=result, mean_curve=mean_curve, trial_curves=curves)
