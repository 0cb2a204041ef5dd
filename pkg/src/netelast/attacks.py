"""Deterministic, seeded construction of node/link removal sequences."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .graph import Graph

STRATEGIES = ("degree", "random-node", "random-link")


@dataclass(frozen=True)
class AttackPlan:
    """An ordered removal sequence for one sweep.

    kind is "node" or "link"; order holds node ids or canonical (u, v)
    link tuples in removal order, without duplicates.  seed is recorded for
    stochastic strategies, recompute for the targeted one.
    """

    kind: str
    strategy: str
    order: tuple
    seed: int | None = None
    recompute: bool | None = None

    def to_dict(self) -> dict:
        order = [list(e) for e in self.order] if self.kind == "link" else list(self.order)
        out = {"kind": self.kind, "strategy": self.strategy, "seed": self.seed, "order": order}
        if self.recompute is not None:
            out["recompute"] = self.recompute
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "AttackPlan":
        kind = data["kind"]
        raw = data["order"]
        order = tuple(tuple(e) for e in raw) if kind == "link" else tuple(raw)
        return cls(
            kind=kind,
            strategy=data["strategy"],
            order=order,
            seed=data.get("seed"),
            recompute=data.get("recompute"),
        )


def plan_targeted_degree(g: Graph, count: int, recompute: bool = True) -> AttackPlan:
    """Greedy highest-degree removal order, ties broken by lowest node id.

    With recompute (the default, the stricter worst case) degrees are
    re-evaluated on the degraded graph after every removal; otherwise the
    initial degrees fix the whole order.
    """
    if not 0 <= count <= g.n:
        raise ValueError(f"count must lie in 0..{g.n}")
    if recompute:
        degree = g.degrees()
        alive = [True] * g.n
        order = []
        for _ in range(count):
            best = -1
            best_deg = -1
            for v in range(g.n):
                if alive[v] and degree[v] > best_deg:
                    best, best_deg = v, degree[v]
            order.append(best)
            alive[best] = False
            for u in g.adjacency[best]:
                if alive[u]:
                    degree[u] -= 1
    else:
        ranked = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        order = ranked[:count]
    return AttackPlan(kind="node", strategy="degree", order=tuple(order), recompute=recompute)


def _fisher_yates(count_total: int, rng: random.Random) -> list[int]:
    ids = list(range(count_total))
    for i in range(count_total - 1, 0, -1):
        j = rng.randrange(i + 1)
        ids[i], ids[j] = ids[j], ids[i]
    return ids


def plan_random_nodes(g: Graph, count: int, seed: int) -> AttackPlan:
    """Uniform node sample without replacement (seeded Fisher-Yates shuffle)."""
    if not 0 <= count <= g.n:
        raise ValueError(f"count must lie in 0..{g.n}")
    order = _fisher_yates(g.n, random.Random(seed))[:count]
    return AttackPlan(kind="node", strategy="random-node", order=tuple(order), seed=seed)


def plan_random_links(g: Graph, count: int, seed: int) -> AttackPlan:
    """Uniform link sample without replacement (seeded Fisher-Yates shuffle)."""
    if not 0 <= count <= g.m:
        raise ValueError(f"count must lie in 0..{g.m}")
    picks = _fisher_yates(g.m, random.Random(seed))[:count]
    order = tuple(g.edges[i] for i in picks)
    return AttackPlan(kind="link", strategy="random-link", order=order, seed=seed)
