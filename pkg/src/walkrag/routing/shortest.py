"""Snapping and deterministic Dijkstra shortest paths.

Determinism contract: nodes are settled in (distance, node_id) order,
neighbors relaxed in sorted-id order, and an equal-cost relaxation only
replaces the predecessor when the new one has a smaller id. Identical
inputs therefore always yield the identical node sequence.
"""

from __future__ import annotations

import heapq
import math

from ..errors import NoRoute, TooFar
from .geo import LatLon, haversine
from .segments import RouteCandidate, route_from_nodes

DEFAULT_MAX_SNAP_M = 500.0


def snap_to_graph(point: LatLon, graph, max_snap_m: float = DEFAULT_MAX_SNAP_M) -> int:
    """Nearest graph node to the point; ties broken by lowest node id."""
    best_id: int | None = None
    best_d = math.inf
    for node_id in sorted(graph.nodes):
        d = haversine(point, graph.nodes[node_id])
        if d < best_d:
            best_d = d
            best_id = node_id
    if best_id is None or best_d > max_snap_m:
        raise TooFar(best_d, max_snap_m)
    return best_id


def dijkstra_nodes(graph, src: int, dst: int, weight_fn=None) -> list[int]:
    """Minimum-cost node sequence src..dst under an optional weight override.

    weight_fn(u, v, base_length) lets callers search a penalized overlay
    without mutating the shared graph.
    """
    if src not in graph.nodes or dst not in graph.nodes:
        raise NoRoute(src, dst)
    if src == dst:
        return [src]

    dist: dict[int, float] = {src: 0.0}
    pred: dict[int, int] = {}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(0.0, src)]

    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == dst:
            break
        for v, base in graph.neighbors(u):
            if v in done:
                continue
            w = base if weight_fn is None else weight_fn(u, v, base)
            nd = d + w
            old = dist.get(v, math.inf)
            if nd < old:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
            elif nd == old and u < pred.get(v, u + 1):
                pred[v] = u

    if dst not in done:
        raise NoRoute(src, dst)

    path = [dst]
    while path[-1] != src:
        path.append(pred[path[-1]])
    path.reverse()
    return path


def shortest_path(graph, src: int, dst: int) -> RouteCandidate:
    """Minimum-total-length continuous route; NoRoute when dst is unreachable."""
    return route_from_nodes(dijkstra_nodes(graph, src, dst), graph)
