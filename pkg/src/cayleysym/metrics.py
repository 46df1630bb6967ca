"""Breadth-first distances, girth, diameter and ball subgraphs."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import ContractViolation
from .graph_core import Graph

INFINITY = math.inf


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ContractViolation(f"vertex {v} out of range [0, {g.n})")


def bfs_distances(g: Graph, v: int) -> List[float]:
    """Shortest-path distances from ``v``; unreachable vertices get INFINITY."""
    _check_vertex(g, v)
    dist: List[float] = [INFINITY] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] == INFINITY:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    best = INFINITY
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, dist[x] + dist[y] + 1)
    return None if best == INFINITY else int(best)


def eccentricity(g: Graph, v: int) -> float:
    return max(bfs_distances(g, v))


def diameter(g: Graph) -> Optional[int]:
    """Largest eccentricity, or None when the graph is disconnected."""
    if g.n == 0:
        return 0
    ecc = max(eccentricity(g, v) for v in range(g.n))
    return None if ecc == INFINITY else int(ecc)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or INFINITY not in bfs_distances(g, 0)


@dataclass(frozen=True)
class BallSubgraph:
    graph: Graph
    vertex_map: Tuple[int, ...]
    center: int
    radius: int

    @property
    def center_index(self) -> int:
        return self.vertex_map.index(self.center)

    def local_index(self, v: int) -> int:
        return self.vertex_map.index(v)


def ball_subgraph(g: Graph, v: int, r: int) -> BallSubgraph:
    """Induced subgraph on vertices within distance ``r`` of ``v``, in ascending original order."""
    if r < 0:
        raise ContractViolation(f"radius must be >= 0, got {r}")
    dist = bfs_distances(g, v)
    inside = tuple(x for x in range(g.n) if dist[x] <= r)
    return BallSubgraph(g.induced(inside), inside, v, r)
