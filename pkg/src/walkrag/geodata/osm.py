"""OSM-XML subset parsing: `node` and `way` elements with `tag` children.

Only the attributes the engine needs are kept (ids, coordinates, ordered
node refs, key/value tags); every other element is skipped. A parsed
extract can be re-serialized and re-parsed into an entity-wise identical
extract, which is what the round-trip tests rely on.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import BinaryIO
from xml.sax.saxutils import quoteattr

from ..errors import DanglingReference, MalformedInput


@dataclass(frozen=True)
class MapNode:
    node_id: int
    lat: float
    lon: float
    tags: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class MapWay:
    way_id: int
    node_ids: tuple[int, ...]
    tags: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class MapExtract:
    nodes: tuple[MapNode, ...]
    ways: tuple[MapWay, ...]

    def node_index(self) -> dict[int, MapNode]:
        return {n.node_id: n for n in self.nodes}


def _collect_tags(elem: ET.Element) -> dict[str, str]:
    tags: dict[str, str] = {}
    for child in elem:
        if child.tag == "tag":
            k = child.attrib.get("k")
            if k is not None:
                tags[k] = child.attrib.get("v", "")
    return tags


def parse_map_extract(stream: BinaryIO) -> MapExtract:
    """Parse an OSM-XML stream into a MapExtract.

    Raises MalformedInput on XML syntax errors, bad attributes, duplicate
    node ids, or out-of-range coordinates, and DanglingReference when a
    way points at a node absent from the document.
    """
    try:
        root = ET.parse(stream).getroot()
    except ET.ParseError as exc:
        line = exc.position[0] if exc.position else 0
        raise MalformedInput(line, str(exc)) from exc

    nodes: list[MapNode] = []
    seen_ids: set[int] = set()
    ways: list[MapWay] = []

    for elem in root:
        if elem.tag == "node":
            try:
                node_id = int(elem.attrib["id"])
                lat = float(elem.attrib["lat"])
                lon = float(elem.attrib["lon"])
            except (KeyError, ValueError) as exc:
                raise MalformedInput(0, f"bad node attributes: {elem.attrib}") from exc
            if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
                raise MalformedInput(0, f"node {node_id} coordinates out of range")
            if node_id in seen_ids:
                raise MalformedInput(0, f"duplicate node id {node_id}")
            seen_ids.add(node_id)
            nodes.append(MapNode(node_id, lat, lon, _collect_tags(elem)))
        elif elem.tag == "way":
            try:
                way_id = int(elem.attrib["id"])
            except (KeyError, ValueError) as exc:
                raise MalformedInput(0, f"bad way attributes: {elem.attrib}") from exc
            refs: list[int] = []
            for child in elem:
                if child.tag == "nd":
                    try:
                        refs.append(int(child.attrib["ref"]))
                    except (KeyError, ValueError) as exc:
                        raise MalformedInput(0, f"bad nd ref in way {way_id}") from exc
            ways.append(MapWay(way_id, tuple(refs), _collect_tags(elem)))
        # anything else (relation, bounds, ...) is skipped

    for way in ways:
        for ref in way.node_ids:
            if ref not in seen_ids:
                raise DanglingReference(way.way_id, ref)

    return MapExtract(tuple(nodes), tuple(ways))


def serialize_map_extract(extract: MapExtract) -> bytes:
    """Render a MapExtract back to the OSM-XML subset, UTF-8."""
    out: list[str] = ['<?xml version="1.0" encoding="UTF-8"?>', '<osm version="0.6">']
    for node in extract.nodes:
        attrs = f'id="{node.node_id}" lat="{node.lat!r}" lon="{node.lon!r}"'
        if node.tags:
            out.append(f"  <node {attrs}>")
            for k, v in node.tags.items():
                out.append(f"    <tag k={quoteattr(k)} v={quoteattr(v)}/>")
            out.append("  </node>")
        else:
            out.append(f"  <node {attrs}/>")
    for way in extract.ways:
        out.append(f'  <way id="{way.way_id}">')
        for ref in way.node_ids:
            out.append(f'    <nd ref="{ref}"/>')
        for k, v in way.tags.items():
            out.append(f"    <tag k={quoteattr(k)} v={quoteattr(v)}/>")
        out.append("  </way>")
    out.append("</osm>")
    return ("\n".join(out) + "\n").encode("utf-8")
