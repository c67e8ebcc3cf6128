"""Versioned route payload: the structured answer handed to generation.

Schema (payload_version 1), field-for-field:

  { payload_version, origin, destination,
    instructions: [{kind, text, distance_m}],
    walkability: {ws, tau, indicators: [{kind, c, w}], flags: [text]},
    segments: [{index, length_m, pois: [{name, category}]}] }

Serialization is canonical — fixed key order, 2-space indent, ASCII,
distances rounded to 2 decimals and score terms to 6 — so identical
payloads are identical bytes on every platform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ..geodata.features import FeatureRecord
from ..walkability import INDICATOR_ORDER, ScoredRoute

PAYLOAD_VERSION = 1


@dataclass(frozen=True)
class PayloadInstruction:
    kind: str
    text: str
    distance_m: float


@dataclass(frozen=True)
class PayloadIndicator:
    kind: str
    c: float
    w: float


@dataclass(frozen=True)
class PayloadPoi:
    name: str
    category: str


@dataclass(frozen=True)
class PayloadSegment:
    index: int
    length_m: float
    pois: tuple[PayloadPoi, ...] = ()


@dataclass(frozen=True)
class RoutePayload:
    origin: str
    destination: str
    instructions: tuple[PayloadInstruction, ...]
    ws: float
    tau: float
    indicators: tuple[PayloadIndicator, ...]
    flags: tuple[str, ...]
    segments: tuple[PayloadSegment, ...]
    payload_version: int = PAYLOAD_VERSION

    def to_dict(self) -> dict:
        return {
            "payload_version": self.payload_version,
            "origin": self.origin,
            "destination": self.destination,
            "instructions": [
                {"kind": i.kind, "text": i.text, "distance_m": i.distance_m}
                for i in self.instructions
            ],
            "walkability": {
                "ws": self.ws,
                "tau": self.tau,
                "indicators": [
                    {"kind": i.kind, "c": i.c, "w": i.w} for i in self.indicators
                ],
                "flags": list(self.flags),
            },
            "segments": [
                {
                    "index": s.index,
                    "length_m": s.length_m,
                    "pois": [{"name": p.name, "category": p.category} for p in s.pois],
                }
                for s in self.segments
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "RoutePayload":
        walk = data["walkability"]
        return cls(
            payload_version=int(data["payload_version"]),
            origin=data["origin"],
            destination=data["destination"],
            instructions=tuple(
                PayloadInstruction(i["kind"], i["text"], i["distance_m"])
                for i in data["instructions"]
            ),
            ws=walk["ws"],
            tau=walk["tau"],
            indicators=tuple(
                PayloadIndicator(i["kind"], i["c"], i["w"]) for i in walk["indicators"]
            ),
            flags=tuple(walk["flags"]),
            segments=tuple(
                PayloadSegment(
                    s["index"],
                    s["length_m"],
                    tuple(PayloadPoi(p["name"], p["category"]) for p in s["pois"]),
                )
                for s in data["segments"]
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "RoutePayload":
        return cls.from_dict(json.loads(text))

    def poi_names(self) -> list[str]:
        return [p.name for s in self.segments for p in s.pois]


def _round_score(x: float) -> float:
    return round(x, 6)


def _round_distance(x: float) -> float:
    return round(x, 2)


def build_route_payload(
    origin: str,
    destination: str,
    scored: ScoredRoute,
    joined_pois: dict[int, list[FeatureRecord]],
) -> RoutePayload:
    """Assemble the payload for one scored, enriched route."""
    route = scored.route
    instructions = tuple(
        PayloadInstruction(ins.kind.value, ins.text, _round_distance(ins.distance_m))
        for ins in route.instructions()
    )
    indicators = tuple(
        PayloadIndicator(
            kind.value,
            _round_score(scored.score.c.get(kind, 0.0)),
            _round_score(scored.score.weights.w[kind]),
        )
        for kind in INDICATOR_ORDER
    )
    segments = []
    for i, seg in enumerate(route.segments):
        pois = tuple(
            PayloadPoi(p.name or p.feature_id, p.category or "")
            for p in joined_pois.get(i, [])
        )
        segments.append(PayloadSegment(i, _round_distance(seg.length_m), pois))
    return RoutePayload(
        origin=origin,
        destination=destination,
        instructions=instructions,
        ws=_round_score(scored.score.ws),
        tau=scored.score.tau,
        indicators=indicators,
        flags=tuple(scored.flags),
        segments=tuple(segments),
    )
