"""Walkable street graph built from a map extract.

A way counts as walkable when its tags say pedestrians belong on it:
highway in {footway, path, pedestrian, living_street, steps, track},
or an explicit sidewalk (left/right/both), or foot=yes/designated.
Each consecutive node pair of a walkable way becomes one undirected edge
weighted by its haversine length.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import EmptyGraph
from ..routing.geo import LatLon, haversine
from .osm import MapExtract

WALKABLE_HIGHWAYS = {"footway", "path", "pedestrian", "living_street", "steps", "track"}
SIDEWALK_VALUES = {"left", "right", "both"}
FOOT_VALUES = {"yes", "designated"}


def is_walkable_way(tags: dict[str, str]) -> bool:
    if tags.get("highway") in WALKABLE_HIGHWAYS:
        return True
    if tags.get("sidewalk") in SIDEWALK_VALUES:
        return True
    if tags.get("foot") in FOOT_VALUES:
        return True
    return False


@dataclass
class PedestrianGraph:
    """Undirected weighted graph; adjacency lists sorted by neighbor id."""

    nodes: dict[int, LatLon] = field(default_factory=dict)
    adjacency: dict[int, list[tuple[int, float]]] = field(default_factory=dict)

    def coords(self, node_id: int) -> LatLon:
        return self.nodes[node_id]

    def neighbors(self, node_id: int) -> list[tuple[int, float]]:
        return self.adjacency.get(node_id, [])

    def edge_count(self) -> int:
        return sum(len(v) for v in self.adjacency.values()) // 2

    def edge_length(self, u: int, v: int) -> float:
        for nbr, length in self.adjacency[u]:
            if nbr == v:
                return length
        raise KeyError((u, v))

    def _add_edge(self, u: int, v: int, length: float) -> None:
        self.adjacency.setdefault(u, [])
        self.adjacency.setdefault(v, [])
        if all(nbr != v for nbr, _ in self.adjacency[u]):
            self.adjacency[u].append((v, length))
            self.adjacency[v].append((u, length))

    def _finalize(self) -> None:
        for node_id in self.adjacency:
            self.adjacency[node_id].sort()


def build_pedestrian_graph(extract: MapExtract) -> PedestrianGraph:
    """Keep only the nodes of walkable ways; edge weights are haversine meters.

    Raises EmptyGraph when the extract contains no walkable way.
    """
    index = extract.node_index()
    graph = PedestrianGraph()
    any_walkable = False
    for way in extract.ways:
        if not is_walkable_way(way.tags):
            continue
        any_walkable = True
        for node_id in way.node_ids:
            node = index[node_id]
            graph.nodes.setdefault(node_id, (node.lat, node.lon))
            graph.adjacency.setdefault(node_id, [])
        for u, v in zip(way.node_ids, way.node_ids[1:]):
            if u == v:
                continue  # zero-length edges would break the positive-weight invariant
            length = haversine(graph.nodes[u], graph.nodes[v])
            if length > 0.0:
                graph._add_edge(u, v, length)
    if not any_walkable:
        raise EmptyGraph("no walkable way in extract")
    graph._finalize()
    return graph


def save_graph(graph: PedestrianGraph, path: Path) -> None:
    """Serialize as JSON: sorted node rows plus one row per undirected edge."""
    nodes = [[nid, lat, lon] for nid, (lat, lon) in sorted(graph.nodes.items())]
    edges = sorted(
        [u, v, length]
        for u, nbrs in graph.adjacency.items()
        for v, length in nbrs
        if u < v
    )
    path.write_text(json.dumps({"nodes": nodes, "edges": edges}), encoding="utf-8")


def load_graph(path: Path) -> PedestrianGraph:
    data = json.loads(path.read_text(encoding="utf-8"))
    graph = PedestrianGraph()
    for nid, lat, lon in data["nodes"]:
        graph.nodes[int(nid)] = (float(lat), float(lon))
        graph.adjacency[int(nid)] = []
    for u, v, length in data["edges"]:
        graph._add_edge(int(u), int(v), float(length))
    graph._finalize()
    return graph
