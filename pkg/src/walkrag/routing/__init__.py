from .alternatives import DEFAULT_K, DEFAULT_PENALTY_FACTOR, alternative_routes
from .geo import (
    EARTH_RADIUS_M,
    LatLon,
    bearing_change,
    compass_point,
    haversine,
    initial_bearing,
    point_polyline_distance_m,
    point_segment_distance_m,
)
from .segments import (
    Instruction,
    InstructionKind,
    RouteCandidate,
    Segment,
    classify_turn,
    route_from_nodes,
    route_to_geojson,
    segmentize,
)
from .shortest import DEFAULT_MAX_SNAP_M, dijkstra_nodes, shortest_path, snap_to_graph

__all__ = [
    "DEFAULT_K",
    "DEFAULT_PENALTY_FACTOR",
    "alternative_routes",
    "EARTH_RADIUS_M",
    "LatLon",
    "bearing_change",
    "compass_point",
    "haversine",
    "initial_bearing",
    "point_polyline_distance_m",
    "point_segment_distance_m",
    "Instruction",
    "InstructionKind",
    "RouteCandidate",
    "Segment",
    "classify_turn",
    "route_from_nodes",
    "route_to_geojson",
    "segmentize",
    "DEFAULT_MAX_SNAP_M",
    "dijkstra_nodes",
    "shortest_path",
    "snap_to_graph",
]
