"""Undirected graph container, edge-list I/O, random generation and DOT export."""
from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Iterator

import numpy as np

if TYPE_CHECKING:
    from .partition import PartitionResult

log = logging.getLogger(__name__)


class GraphError(ValueError):
    """Raised for invalid graphs or infeasible generation requests."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over dense indices ``0..n-1``.

    ``labels[i]`` is the original label of node ``i`` and ``adjacency[i]``
    the set of its neighbours.
    """

    labels: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise GraphError("labels and adjacency differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise GraphError("duplicate node labels")
        for i, nbrs in enumerate(self.adjacency):
            if i in nbrs:
                raise GraphError(f"self-loop on node {self.labels[i]!r}")
            for j in nbrs:
                if not 0 <= j < len(self.labels) or i not in self.adjacency[j]:
                    raise GraphError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, labels: Iterable[str], edges: Iterable[tuple[int, int]]) -> Graph:
        labels = tuple(str(x) for x in labels)
        adj: list[set[int]] = [set() for _ in labels]
        for i, j in edges:
            if i == j:
                continue
            adj[i].add(j)
            adj[j].add(i)
        return cls(labels, tuple(frozenset(s) for s in adj))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    @cached_property
    def _index_map(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.labels)}

    def index(self, label: str) -> int:
        return self._index_map[label]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(i, j)`` with ``i < j``, sorted."""
        for i in range(self.n):
            for j in sorted(self.adjacency[i]):
                if j > i:
                    yield i, j

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for i, nbrs in enumerate(self.adjacency):
            a[i, list(nbrs)] = True
        return a

    def __repr__(self):
        return f"Graph(N={self.n}, NA={self.num_edges})"


@dataclass(frozen=True)
class Morphology:
    """Target shape of a generated graph: node count, edge count, depth."""

    N: int
    NA: int
    P: int

    def validate(self):
        N, NA, P = self.N, self.NA, self.P
        if N < 1:
            raise GraphError(f"N must be >= 1, got {N}")
        if not N - 1 <= NA <= N * (N - 1) // 2:
            raise GraphError(
                f"NA={NA} outside connected simple-graph bounds [{N - 1}, {N * (N - 1) // 2}] for N={N}"
            )
        if P < 0:
            raise GraphError(f"P must be >= 0, got {P}")
        if P > N - 1:
            raise GraphError(f"P={P} exceeds N-1={N - 1}")


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#`` and blank lines are skipped. Duplicate edges and
    self-loops are dropped (a self-loop line still declares its node).
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    dupes = loops = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 labels, got {len(tokens)}", lineno)
        u, v = (index.setdefault(t, len(index)) for t in tokens)
        if u == v:
            loops += 1
            continue
        key = (min(u, v), max(u, v))
        if key in edges:
            dupes += 1
        edges.add(key)
    if not index:
        raise ParseError("empty graph")
    if dupes or loops:
        log.warning("dropped %d duplicate edge(s) and %d self-loop(s)", dupes, loops)
    return Graph.from_edges(index, edges)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`; edges sorted by (min index, max index).

    Isolated nodes are written as a self-loop line so they survive a round trip.
    """
    lines = [f"{g.labels[i]} {g.labels[j]}" for i, j in g.edges()]
    lines += [f"{g.labels[i]} {g.labels[i]}" for i in range(g.n) if not g.adjacency[i]]
    return "".join(line + "\n" for line in lines)


def check_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def generate_morphology(m: Morphology, seed: int) -> Graph:
    """Random connected graph with exactly ``m.N`` nodes and ``m.NA`` edges.

    A backbone path puts nodes on levels ``0..2P``. Every other node hangs off
    a random interior backbone node and shares its level, and the extra edges
    only join nodes whose levels differ by at most one. While that band has
    room the depth is exactly ``P``; otherwise wider bands are used and the
    depth drops. Measure it with :func:`graphcenter.baseline.oracle_partition`.
    """
    m.validate()
    N, NA, P = m.N, m.NA, m.P
    rng = random.Random(seed)
    if N == 1:
        return Graph.from_edges(["0"], [])

    span = 2 * P
    if span > N - 1:
        log.warning("depth %d needs %d backbone nodes, only %d available; using a full path", P, span + 1, N)
        span = N - 1

    ids = list(range(N))
    rng.shuffle(ids)
    level = [0] * N
    edges: set[tuple[int, int]] = set()

    def add(u, v):
        edges.add((min(u, v), max(u, v)))

    for pos in range(span + 1):
        level[ids[pos]] = pos
        if pos:
            add(ids[pos - 1], ids[pos])
    # hanging a node off an end would lengthen the diameter
    lo, hi = _hub_window(N, NA, span)
    hubs = ids[lo : hi + 1]
    for v in ids[span + 1 :]:
        parent = rng.choice(hubs)
        level[v] = level[parent]
        add(parent, v)

    need = NA - len(edges)
    if need:
        lv = np.asarray(level)
        iu, ju = np.triu_indices(N, k=1)
        gap = np.abs(lv[iu] - lv[ju])
        taken = np.zeros(len(iu), dtype=bool)
        if edges:
            e = np.array(sorted(edges))
            # position of (i, j) in the row-major upper triangle
            pos = e[:, 0] * (2 * N - e[:, 0] - 1) // 2 + (e[:, 1] - e[:, 0] - 1)
            taken[pos] = True
        tolerance = 1
        while need:
            tier = np.flatnonzero(~taken & (gap <= tolerance))
            pick = tier.tolist() if len(tier) <= need else rng.sample(tier.tolist(), need)
            for p in pick:
                add(int(iu[p]), int(ju[p]))
            taken[pick] = True
            need -= len(pick)
            if need:
                log.warning("level band %d exhausted; %d edge(s) left to place at wider bands", tolerance, need)
                tolerance += 1

    return Graph.from_edges((str(i) for i in range(N)), edges)


def _band_pairs(counts: list[float]) -> float:
    within = sum(c * (c - 1) / 2 for c in counts)
    return within + sum(a * b for a, b in zip(counts, counts[1:]))


def _hub_window(N: int, NA: int, span: int) -> tuple[int, int]:
    """Widest central range of interior backbone levels whose one-level band fits ``NA`` edges."""
    if span < 2:
        return 0, 0
    extra = N - span - 1
    mid = span // 2
    for width in range(span - 1, 0, -1):
        lo = max(1, mid - (width - 1) // 2)
        hi = min(span - 1, lo + width - 1)
        counts = [1.0] * (span + 1)
        for lv in range(lo, hi + 1):
            counts[lv] += extra / (hi - lo + 1)
        if _band_pairs(counts) >= 1.1 * NA:
            return lo, hi
    return mid, mid


_PALETTE = (
    "#d7191c", "#fdae61", "#ffffbf", "#abdda4", "#2b83ba",
    "#9e0142", "#f46d43", "#e6f598", "#66c2a5", "#5e4fa2",
)


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, p: PartitionResult, name: str = "G") -> str:
    """DOT rendering with each node tagged by its layer; center nodes are doubled circles."""
    missing = [x for x in g.labels if x not in p.layers]
    if missing:
        raise GraphError(f"partition lacks {len(missing)} node(s), e.g. {missing[0]!r}")
    out = [f"graph {_quote(name)} {{", "  node [style=filled];"]
    for label in g.labels:
        k = p.layers[label]
        attrs = [f"layer={k}", f'fillcolor="{_PALETTE[k % len(_PALETTE)]}"']
        if k == 0:
            attrs += ["shape=doublecircle", "penwidth=2"]
        out.append(f"  {_quote(label)} [{', '.join(attrs)}];")
    by_layer: dict[int, list[str]] = {}
    for label in g.labels:
        by_layer.setdefault(p.layers[label], []).append(label)
    for k in sorted(by_layer):
        members = "; ".join(_quote(x) for x in by_layer[k])
        out.append(f"  {{ rank=same; {members}; }}")
    for i, j in g.edges():
        out.append(f"  {_quote(g.labels[i])} -- {_quote(g.labels[j])};")
    out.append("}")
    return "\n".join(out) + "\n"
