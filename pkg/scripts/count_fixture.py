#!/usr/bin/env python3
"""Independently count the fixture city and write fixtures/city/manifest.json.

This script intentionally avoids the walkrag package: it re-derives the
walkable-way rule, the feature-kind table, and the edge count straight
from the XML with minidom, so the manifest can serve as an oracle for the
ingest command's printed statistics.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from xml.dom import minidom

ROOT = Path(__file__).resolve().parent.parent
CITY = ROOT / "fixtures" / "city"

WALKABLE_HIGHWAY = {"footway", "path", "pedestrian", "living_street", "steps", "track"}
GREEN_LANDUSE = {"grass", "forest", "meadow", "recreation_ground"}
GREEN_NATURAL = {"wood", "tree", "scrub"}
GREEN_LEISURE = {"park", "garden"}


def tags_of(elem) -> dict[str, str]:
    return {
        t.getAttribute("k"): t.getAttribute("v")
        for t in elem.getElementsByTagName("tag")
    }


def walkable(tags: dict[str, str]) -> bool:
    return (
        tags.get("highway") in WALKABLE_HIGHWAY
        or tags.get("sidewalk") in {"left", "right", "both"}
        or tags.get("foot") in {"yes", "designated"}
    )


def feature_kinds(tags: dict[str, str]) -> list[str]:
    kinds = []
    if tags.get("highway") == "footway" or "footway" in tags or "sidewalk" in tags:
        kinds.append("Sidewalk")
    if (
        tags.get("landuse") in GREEN_LANDUSE
        or tags.get("natural") in GREEN_NATURAL
        or tags.get("leisure") in GREEN_LEISURE
    ):
        kinds.append("GreenArea")
    if tags.get("wheelchair") in {"yes", "designated"}:
        kinds.append("Accessibility")
    if tags.get("tourism"):
        kinds.append("POI")
    return kinds


def main() -> None:
    doc = minidom.parse(str(CITY / "map.osm"))
    node_elems = doc.getElementsByTagName("node")
    way_elems = doc.getElementsByTagName("way")

    positions = {}
    for n in node_elems:
        positions[int(n.getAttribute("id"))] = (
            float(n.getAttribute("lat")),
            float(n.getAttribute("lon")),
        )

    graph_nodes: set[int] = set()
    edges: set[tuple[int, int]] = set()
    kind_counts: dict[str, int] = {}

    for w in way_elems:
        tags = tags_of(w)
        refs = [int(nd.getAttribute("ref")) for nd in w.getElementsByTagName("nd")]
        if walkable(tags):
            graph_nodes.update(refs)
            for a, b in zip(refs, refs[1:]):
                if a != b and positions[a] != positions[b]:
                    edges.add((min(a, b), max(a, b)))
        for kind in feature_kinds(tags):
            kind_counts[kind] = kind_counts.get(kind, 0) + 1

    for n in node_elems:
        for kind in feature_kinds(tags_of(n)):
            kind_counts[kind] = kind_counts.get(kind, 0) + 1

    with (CITY / "gazetteer.csv").open(encoding="utf-8") as fh:
        gazetteer_rows = sum(1 for _ in csv.DictReader(fh))

    manifest = {
        "nodes": len(node_elems),
        "ways": len(way_elems),
        "graph_nodes": len(graph_nodes),
        "graph_edges": len(edges),
        "features": sum(kind_counts.values()),
        "features_by_kind": dict(sorted(kind_counts.items())),
        "gazetteer_entries": gazetteer_rows,
    }
    out = CITY / "manifest.json"
    out.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(json.dumps(manifest, indent=2))


if __name__ == "__main__":
    main()
