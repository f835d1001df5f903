"""Reference distance computations: Floyd-Warshall and per-source BFS."""
from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError
from .partition import PartitionResult

UNREACHABLE = np.iinfo(np.int64).max // 4


@dataclass(frozen=True)
class DistanceMatrix:
    width: int
    d: np.ndarray

    def eccentricities(self) -> list[int]:
        return self.d.max(axis=1).tolist() if self.width else []


def floyd_warshall(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances by the textbook recurrence over intermediate ``k``.

    The two inner loops are a single vectorised ``minimum`` per ``k``; no
    bit-level tricks, so this is the plain O(N^3) baseline.
    """
    n = g.n
    d = np.where(g.adjacency_matrix(), 1, UNREACHABLE).astype(np.int64)
    np.fill_diagonal(d, 0)
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    if (d >= UNREACHABLE).any():
        raise GraphError("graph not connected")
    return DistanceMatrix(n, d)


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_distance_matrix(g: Graph) -> DistanceMatrix:
    rows = [bfs_distances(g, s) for s in range(g.n)]
    d = np.array(rows, dtype=np.int64).reshape(g.n, g.n)
    if (d < 0).any():
        raise GraphError("graph not connected")
    return DistanceMatrix(g.n, d)


def _eccentricity(g: Graph, source: int) -> int:
    dist = bfs_distances(g, source)
    if min(dist) < 0:
        raise GraphError("graph not connected")
    return max(dist)


def bfs_eccentricities(g: Graph, threads: int = 1) -> list[int]:
    """Eccentricity of every node, one BFS per source."""
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda s: _eccentricity(g, s), range(g.n)))
    return [_eccentricity(g, s) for s in range(g.n)]


def partition_from_eccentricities(g: Graph, ecc: list[int]) -> PartitionResult:
    radius = min(ecc)
    return PartitionResult(radius, {label: e - radius for label, e in zip(g.labels, ecc)})


def oracle_partition(g: Graph) -> PartitionResult:
    """Center and layers computed directly from BFS eccentricities."""
    return partition_from_eccentricities(g, bfs_eccentricities(g))


def floyd_warshall_partition(g: Graph) -> PartitionResult:
    return partition_from_eccentricities(g, floyd_warshall(g).eccentricities())
