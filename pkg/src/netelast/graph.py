"""Immutable undirected simple graphs over dense integer node ids.

The substrate for the whole toolkit: edge-list ingestion, connectivity
labeling, copy-on-remove node/link deletion, and canonical serialization.
Graphs are treated as immutable after construction, so they can be shared
freely across sweeps and worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with node ids exactly 0..n-1.

    adjacency[u] is sorted ascending; edges is the canonical link list:
    (u, v) with u < v, sorted lexicographically.  labels, when present,
    maps each dense id back to the external id it was loaded under.
    """

    n: int
    adjacency: list[list[int]]
    edges: list[tuple[int, int]]
    labels: list[int] | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        a, b = (u, v) if len(self.adjacency[u]) <= len(self.adjacency[v]) else (v, u)
        return b in self.adjacency[a]


@dataclass(frozen=True)
class ComponentLabeling:
    """Connected-component ids (contiguous from 0) and their sizes."""

    component_id: list[int]
    component_sizes: list[int]

    @property
    def count(self) -> int:
        return len(self.component_sizes)


def make_graph(n: int, pairs: Iterable[tuple[int, int]], labels: list[int] | None = None) -> Graph:
    """Build a Graph from (u, v) pairs.

    Self-loops are dropped and duplicate links deduplicated, mirroring the
    edge-list ingestion rules.  Node ids outside 0..n-1 are an error.
    """
    if n < 0:
        raise ValueError("node count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            continue
        seen.add((u, v) if u < v else (v, u))
    edges = sorted(seen)
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    for nbrs in adjacency:
        nbrs.sort()
    return Graph(n=n, adjacency=adjacency, edges=edges, labels=labels)


def load_edge_list(source: str | Iterable[str]) -> Graph:
    """Parse edge-list text into a Graph.

    Format: one link per line as ``<u> <v>`` (whitespace separated,
    nonnegative integers); blank lines and lines starting with ``#`` are
    ignored.  Self-loops are dropped and duplicates deduplicated (a node
    mentioned only in a self-loop still counts as present).  External ids
    that already form a dense 0..n-1 range are kept verbatim, so canonical
    serializations reload to the identical graph; anything sparser is
    relabeled to dense ids in first-appearance order, with the original ids
    retained as labels.  Empty input gives the empty graph.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    appearance: list[int] = []
    seen: set[int] = set()
    raw_pairs: list[tuple[int, int]] = []

    for line_no, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        tokens = text.split()
        if len(tokens) != 2:
            raise EdgeListParseError(line_no, f"expected two integer tokens, got {text!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"expected two integer tokens, got {text!r}") from None
        if a < 0 or b < 0:
            raise EdgeListParseError(line_no, "node ids must be nonnegative")
        for ext in (a, b):
            if ext not in seen:
                seen.add(ext)
                appearance.append(ext)
        if a != b:
            raw_pairs.append((a, b))

    n = len(appearance)
    if not n:
        return make_graph(0, [])
    if max(seen) == n - 1:
        return make_graph(n, raw_pairs)
    dense = {ext: i for i, ext in enumerate(appearance)}
    pairs = [(dense[a], dense[b]) for a, b in raw_pairs]
    return make_graph(n, pairs, labels=appearance)


def dump_edge_list(g: Graph) -> str:
    """Canonical serialization: sorted edges, one ``u v`` line each."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


def connected_components(g: Graph) -> ComponentLabeling:
    """Label connected components by BFS; ids assigned in scan order of node 0..n-1."""
    component_id = [-1] * g.n
    sizes: list[int] = []
    for start in range(g.n):
        if component_id[start] >= 0:
            continue
        cid = len(sizes)
        component_id[start] = cid
        size = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if component_id[v] < 0:
                    component_id[v] = cid
                    size += 1
                    queue.append(v)
        sizes.append(size)
    return ComponentLabeling(component_id=component_id, component_sizes=sizes)


def remove_nodes(g: Graph, victims: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return a new re-densified Graph without the victim nodes.

    The second element maps new dense ids back to the ids they had in g
    (survivors in ascending order).  The input graph is left untouched.
    """
    victim_set = set(victims)
    for v in victim_set:
        if not (0 <= v < g.n):
            raise ValueError(f"victim id {v} out of range for n={g.n}")
    survivors = [v for v in range(g.n) if v not in victim_set]
    new_id = {old: i for i, old in enumerate(survivors)}
    pairs = [(new_id[u], new_id[v]) for u, v in g.edges if u in new_id and v in new_id]
    labels = [g.labels[old] for old in survivors] if g.labels is not None else None
    return make_graph(len(survivors), pairs, labels=labels), survivors


def remove_links(g: Graph, victims: Iterable[tuple[int, int]]) -> Graph:
    """Return a new Graph with the victim links removed; nodes are kept.

    Isolated nodes produced by the removal stay in the graph (they still
    count toward percent-remaining bookkeeping in link sweeps).
    """
    normalized: set[tuple[int, int]] = set()
    edge_set = set(g.edges)
    for u, v in victims:
        key = (u, v) if u < v else (v, u)
        if key not in edge_set:
            raise ValueError(f"edge {key} not present in graph")
        normalized.add(key)
    pairs = [e for e in g.edges if e not in normalized]
    return make_graph(g.n, pairs, labels=g.labels)
