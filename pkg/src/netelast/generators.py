"""Synthetic topology generators: fixed families plus seeded random models."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph, make_graph


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path requires n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Hub node 0 joined to n-1 leaves."""
    if n < 1:
        raise ValueError("star requires n >= 1")
    return make_graph(n, [(0, i) for i in range(1, n)])


def wheel_graph(n: int) -> Graph:
    """Hub node 0 joined to every node of the rim cycle 1..n-1."""
    if n < 4:
        raise ValueError("wheel requires n >= 4")
    pairs = [(0, i) for i in range(1, n)]
    rim = list(range(1, n))
    pairs += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return make_graph(n, pairs)


def grid_graph(rows: int, cols: int) -> Graph:
    """4-neighbor lattice; node (r, c) gets id r*cols + c."""
    if rows < 1 or cols < 1:
        raise ValueError("grid requires rows, cols >= 1")
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return make_graph(rows * cols, pairs)


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each of the n(n-1)/2 links present independently with probability p."""
    if n < 1:
        raise ValueError("erdos_renyi requires n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return make_graph(n, pairs)


def scale_free_ba(n: int, seed_nodes: int, links_per_node: int, seed: int = 0) -> Graph:
    """Preferential-attachment graph grown from a complete seed graph.

    Each new node attaches links_per_node distinct links to existing nodes,
    chosen with probability proportional to current degree (lottery over a
    degree-repeated node list; collisions are re-drawn so the graph stays
    simple).  When every existing node still has degree zero the draw falls
    back to uniform over existing nodes.
    """
    if seed_nodes < 1 or n < seed_nodes:
        raise ValueError("scale_free_ba requires 1 <= seed_nodes <= n")
    if not 1 <= links_per_node <= seed_nodes:
        raise ValueError("scale_free_ba requires 1 <= links_per_node <= seed_nodes")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(seed_nodes) for j in range(i + 1, seed_nodes)]
    lottery: list[int] = []
    for u, v in pairs:
        lottery.append(u)
        lottery.append(v)
    for src in range(seed_nodes, n):
        targets: set[int] = set()
        while len(targets) < links_per_node:
            if lottery:
                pick = lottery[rng.randrange(len(lottery))]
            else:
                pick = rng.randrange(src)
            if pick not in targets:
                targets.add(pick)
        for t in sorted(targets):
            pairs.append((t, src))
            lottery.append(t)
            lottery.append(src)
    return make_graph(n, pairs)


_GENERATORS = {
    "path": (path_graph, (int,), False),
    "cycle": (cycle_graph, (int,), False),
    "complete": (complete_graph, (int,), False),
    "star": (star_graph, (int,), False),
    "wheel": (wheel_graph, (int,), False),
    "grid": (grid_graph, (int, int), False),
    "erdos_renyi": (erdos_renyi, (int, float), True),
    "scale_free_ba": (scale_free_ba, (int, int, int), True),
}

_ALIASES = {"er": "erdos_renyi", "ba": "scale_free_ba"}


def generate(kind: str, params: Sequence, seed: int = 0) -> Graph:
    """Build a named topology; deterministic given (kind, params, seed)."""
    kind = _ALIASES.get(kind, kind)
    if kind not in _GENERATORS:
        raise ValueError(f"unknown topology kind {kind!r}")
    fn, sig, seeded = _GENERATORS[kind]
    if len(params) != len(sig):
        raise ValueError(f"{kind} takes {len(sig)} parameter(s), got {len(params)}")
    args = [cast(p) for cast, p in zip(sig, params)]
    return fn(*args, seed) if seeded else fn(*args)


def parse_generator_spec(spec: str) -> tuple[str, tuple]:
    """Parse compact ``kind:param:param`` syntax, e.g. ``ba:1000:3:3``."""
    parts = spec.split(":")
    kind = _ALIASES.get(parts[0], parts[0])
    if kind not in _GENERATORS:
        raise ValueError(f"unknown topology kind {parts[0]!r}")
    _, sig, _ = _GENERATORS[kind]
    raw = parts[1:]
    if len(raw) != len(sig):
        raise ValueError(f"{kind} takes {len(sig)} parameter(s), got {len(raw)}")
    try:
        params = tuple(cast(p) for cast, p in zip(sig, raw))
    except ValueError:
        raise ValueError(f"bad parameters in generator spec {spec!r}") from None
    return kind, params
