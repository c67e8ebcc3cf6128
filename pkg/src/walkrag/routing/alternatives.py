"""Alternative route generation by the edge-penalty method.

After each accepted route, the weights of its edges are multiplied by a
penalty factor inside a private overlay (the shared graph is never
touched) and the search re-runs. Generation stops after k routes or as
soon as a re-run reproduces an already-seen node sequence, which is the
signal that no further distinct alternative exists under the penalty.
"""

from __future__ import annotations

from ..errors import NoRoute
from .segments import RouteCandidate, route_from_nodes
from .shortest import dijkstra_nodes

DEFAULT_K = 3
DEFAULT_PENALTY_FACTOR = 1.4


def alternative_routes(
    graph,
    src: int,
    dst: int,
    k: int = DEFAULT_K,
    penalty_factor: float = DEFAULT_PENALTY_FACTOR,
) -> list[RouteCandidate]:
    """1..k pairwise-distinct continuous routes, shortest first.

    Raises NoRoute only when even the shortest path fails; route lengths
    are always true lengths, not penalized ones.
    """
    if k < 1:
        raise ValueError("k must be >= 1")

    overlay: dict[tuple[int, int], float] = {}

    def weight(u: int, v: int, base: float) -> float:
        return base * overlay.get((min(u, v), max(u, v)), 1.0)

    routes: list[RouteCandidate] = []
    seen: set[tuple[int, ...]] = set()

    while len(routes) < k:
        try:
            nodes = dijkstra_nodes(graph, src, dst, weight_fn=None if not routes else weight)
        except NoRoute:
            if routes:
                break
            raise
        key = tuple(nodes)
        if key in seen:
            break
        seen.add(key)
        routes.append(route_from_nodes(nodes, graph))
        for u, v in zip(nodes, nodes[1:]):
            edge = (min(u, v), max(u, v))
            overlay[edge] = overlay.get(edge, 1.0) * penalty_factor

    return routes
