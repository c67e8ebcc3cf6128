"""Route segments and turn-by-turn instructions.

Instruction kinds come from the heading change at each interior node:
within +/-30 deg is Continue, -150..-30 is TurnLeft, +30..+150 is
TurnRight, and anything sharper is treated as a Continue with a U-turn
note. The first instruction is always Depart and a final Arrive closes
the list, so a route with S segments carries S+1 instructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .geo import LatLon, bearing_change, compass_point, haversine, initial_bearing


class InstructionKind(str, Enum):
    DEPART = "Depart"
    CONTINUE = "Continue"
    TURN_LEFT = "TurnLeft"
    TURN_RIGHT = "TurnRight"
    ARRIVE = "Arrive"


@dataclass(frozen=True)
class Instruction:
    kind: InstructionKind
    text: str
    distance_m: float


@dataclass(frozen=True)
class Segment:
    start: int
    end: int
    polyline: tuple[LatLon, ...]
    length_m: float
    instruction: Instruction


@dataclass(frozen=True)
class RouteCandidate:
    nodes: tuple[int, ...]
    segments: tuple[Segment, ...]
    total_length_m: float

    def instructions(self) -> list[Instruction]:
        """All instructions in order, including the closing Arrive."""
        out = [seg.instruction for seg in self.segments]
        if self.segments:
            out.append(Instruction(InstructionKind.ARRIVE, "Arrive at destination", 0.0))
        return out

    def polyline(self) -> list[LatLon]:
        """Full route geometry, origin to destination, joints deduplicated."""
        if not self.segments:
            return []
        points = list(self.segments[0].polyline)
        for seg in self.segments[1:]:
            points.extend(seg.polyline[1:])
        return points

    def is_continuous(self) -> bool:
        return all(
            a.end == b.start and a.polyline[-1] == b.polyline[0]
            for a, b in zip(self.segments, self.segments[1:])
        )


TURN_STRAIGHT_DEG = 30.0
TURN_SHARP_DEG = 150.0


def classify_turn(change_deg: float) -> tuple[InstructionKind, bool]:
    """(kind, u_turn_note) for a signed heading change; negative = left."""
    if abs(change_deg) <= TURN_STRAIGHT_DEG:
        return InstructionKind.CONTINUE, False
    if -TURN_SHARP_DEG <= change_deg < -TURN_STRAIGHT_DEG:
        return InstructionKind.TURN_LEFT, False
    if TURN_STRAIGHT_DEG < change_deg <= TURN_SHARP_DEG:
        return InstructionKind.TURN_RIGHT, False
    return InstructionKind.CONTINUE, True


def _instruction_for(kind: InstructionKind, u_turn: bool, bearing: float, length_m: float) -> Instruction:
    dist = f"{length_m:.0f} m"
    if kind is InstructionKind.DEPART:
        text = f"Depart heading {compass_point(bearing)} for {dist}"
    elif kind is InstructionKind.TURN_LEFT:
        text = f"Turn left and continue for {dist}"
    elif kind is InstructionKind.TURN_RIGHT:
        text = f"Turn right and continue for {dist}"
    elif u_turn:
        text = f"Make a U-turn and continue for {dist}"
    else:
        text = f"Continue for {dist}"
    return Instruction(kind, text, length_m)


def segmentize(node_seq: list[int], graph) -> list[Segment]:
    """One segment per consecutive node pair, each carrying its entry instruction."""
    segments: list[Segment] = []
    prev_bearing: float | None = None
    for u, v in zip(node_seq, node_seq[1:]):
        a = graph.coords(u)
        b = graph.coords(v)
        length = haversine(a, b)
        bearing = initial_bearing(a, b)
        if prev_bearing is None:
            instruction = _instruction_for(InstructionKind.DEPART, False, bearing, length)
        else:
            kind, u_turn = classify_turn(bearing_change(prev_bearing, bearing))
            instruction = _instruction_for(kind, u_turn, bearing, length)
        segments.append(Segment(u, v, (a, b), length, instruction))
        prev_bearing = bearing
    return segments


def route_from_nodes(node_seq: list[int], graph) -> RouteCandidate:
    segments = segmentize(node_seq, graph)
    return RouteCandidate(
        nodes=tuple(node_seq),
        segments=tuple(segments),
        total_length_m=sum(seg.length_m for seg in segments),
    )


def route_to_geojson(route: RouteCandidate) -> dict:
    """Route geometry as a GeoJSON LineString (lon, lat order)."""
    return {
        "type": "LineString",
        "coordinates": [[lon, lat] for lat, lon in route.polyline()],
    }

