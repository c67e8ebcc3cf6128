"""Walkability feature extraction from map tags.

The kind rules are a fixed, testable table:

  Sidewalk      highway=footway, or any footway=* / sidewalk=* tag
  GreenArea     landuse in {grass, forest, meadow, recreation_ground},
                natural in {wood, tree, scrub}, or leisure in {park, garden}
  Accessibility wheelchair in {yes, designated}
  POI           tourism=<category>

One record is emitted per matching rule, so a wheelchair-accessible museum
node yields both an Accessibility and a POI record. Area features (ways)
are reduced to the arithmetic centroid of their vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..routing.geo import LatLon
from .osm import MapExtract


class FeatureKind(str, Enum):
    SIDEWALK = "Sidewalk"
    GREEN_AREA = "GreenArea"
    ACCESSIBILITY = "Accessibility"
    POI = "POI"


GREEN_LANDUSE = {"grass", "forest", "meadow", "recreation_ground"}
GREEN_NATURAL = {"wood", "tree", "scrub"}
GREEN_LEISURE = {"park", "garden"}
ACCESSIBLE_WHEELCHAIR = {"yes", "designated"}


@dataclass(frozen=True)
class FeatureRecord:
    feature_id: str
    kind: FeatureKind
    point: LatLon
    tags: dict[str, str] = field(default_factory=dict, compare=False)
    name: str | None = None
    category: str | None = None


FeatureSet = list[FeatureRecord]


def kinds_for_tags(tags: dict[str, str]) -> list[tuple[FeatureKind, str | None]]:
    """All (kind, category) pairs the tag set matches, in table order."""
    matched: list[tuple[FeatureKind, str | None]] = []
    if tags.get("highway") == "footway" or "footway" in tags or "sidewalk" in tags:
        matched.append((FeatureKind.SIDEWALK, None))
    if (
        tags.get("landuse") in GREEN_LANDUSE
        or tags.get("natural") in GREEN_NATURAL
        or tags.get("leisure") in GREEN_LEISURE
    ):
        matched.append((FeatureKind.GREEN_AREA, None))
    if tags.get("wheelchair") in ACCESSIBLE_WHEELCHAIR:
        matched.append((FeatureKind.ACCESSIBILITY, None))
    if tags.get("tourism"):
        matched.append((FeatureKind.POI, tags["tourism"]))
    return matched


def _centroid(points: list[LatLon]) -> LatLon:
    n = len(points)
    return (sum(p[0] for p in points) / n, sum(p[1] for p in points) / n)


def extract_features(extract: MapExtract) -> FeatureSet:
    """One FeatureRecord per (entity, matching kind rule); empty set if none."""
    features: FeatureSet = []
    node_index = extract.node_index()

    for node in extract.nodes:
        for kind, category in kinds_for_tags(node.tags):
            features.append(
                FeatureRecord(
                    feature_id=f"n{node.node_id}:{kind.value}",
                    kind=kind,
                    point=(node.lat, node.lon),
                    tags=node.tags,
                    name=node.tags.get("name"),
                    category=category,
                )
            )

    for way in extract.ways:
        if not way.node_ids:
            continue
        matches = kinds_for_tags(way.tags)
        if not matches:
            continue
        point = _centroid([(node_index[r].lat, node_index[r].lon) for r in way.node_ids])
        for kind, category in matches:
            features.append(
                FeatureRecord(
                    feature_id=f"w{way.way_id}:{kind.value}",
                    kind=kind,
                    point=point,
                    tags=way.tags,
                    name=way.tags.get("name"),
                    category=category,
                )
            )

    return features
