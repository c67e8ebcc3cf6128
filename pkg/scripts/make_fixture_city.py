#!/usr/bin/env python3
"""Generate the Riverton fixture city: map extract, gazetteer, air-quality
table, passage corpus, and the 40-query evaluation dataset.

Riverton is a 7x7 walkable grid (~150 m blocks) with a harbor spur, two
diagonal shortcuts, parks, and tourism POIs. Everything is generated
deterministically so the fixtures can be regenerated byte-identically.

The script ends with a self-check that runs the full engine over the
generated dataset and aborts if any query misclassifies, any expected
passage misses the top-3, or any eval verdict is not "correct".
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CITY = ROOT / "fixtures" / "city"
CORPUS = ROOT / "fixtures" / "corpus"
QUERIES = ROOT / "fixtures" / "queries"

LAT0, LON0 = 47.3600, 8.5500
DLAT, DLON = 0.00135, 0.00200  # ~150 m blocks
GRID = 7


def nid(r: int, c: int) -> int:
    return 1000 + r * 20 + c


def coords(r: float, c: float) -> tuple[float, float]:
    return (LAT0 + r * DLAT, LON0 + c * DLON)


def build_city():
    nodes: dict[int, tuple[float, float, dict]] = {}
    ways: list[tuple[int, list[int], dict]] = []

    for r in range(GRID):
        for c in range(GRID):
            nodes[nid(r, c)] = (*coords(r, c), {})

    # horizontal block streets: even rows footway, rows 1/5 path, row 3 pedestrian
    for r in range(GRID):
        if r in (1, 5):
            tags = {"highway": "path", "foot": "yes"}
        elif r == 3:
            tags = {"highway": "pedestrian"}
        else:
            tags = {"highway": "footway"}
        for c in range(GRID - 1):
            ways.append((5000 + r * 10 + c, [nid(r, c), nid(r, c + 1)], dict(tags)))

    # vertical block streets: even cols footway, cols 1/5 living_street, col 3 path
    for c in range(GRID):
        if c in (1, 5):
            tags = {"highway": "living_street"}
        elif c == 3:
            tags = {"highway": "path", "foot": "designated"}
        else:
            tags = {"highway": "footway"}
        for r in range(GRID - 1):
            if c == 5 and r == 0:
                continue  # replaced by the steps way below
            ways.append((6000 + c * 10 + r, [nid(r, c), nid(r + 1, c)], dict(tags)))

    # stairs on the south stretch of column 5
    ways.append((7003, [nid(0, 5), nid(1, 5)], {"highway": "steps"}))

    # diagonal footway shortcuts through the center
    ways.append((7001, [nid(2, 2), nid(3, 3)], {"highway": "footway"}))
    ways.append((7002, [nid(3, 3), nid(4, 4)], {"highway": "footway"}))

    # harbor spur: residential but walkable thanks to its sidewalks
    nodes[2101] = (47.3587, 8.5510, {})
    nodes[2102] = (47.3587, 8.5530, {})
    ways.append(
        (8001, [nid(0, 0), 2101, 2102],
         {"highway": "residential", "sidewalk": "both", "name": "Harbor Road"})
    )

    # motorway bypass: never walkable, its nodes stay out of the graph
    nodes[2201] = (47.3575, 8.5490, {})
    nodes[2202] = (47.3575, 8.5560, {})
    ways.append((8002, [2201, 2202], {"highway": "motorway", "name": "Bypass"}))

    # parks: closed rings inset 20% into their grid cell
    parks = [
        (9001, 1, 1, {"leisure": "park", "name": "Rose Garden"}),
        (9002, 4, 4, {"leisure": "park", "name": "Linden Park"}),
        (9003, 2, 4, {"landuse": "grass"}),
        (9004, 4, 1, {"natural": "wood"}),
        (9005, 5, 3, {"leisure": "garden", "name": "Botanic Garden"}),
        (9006, 0, 2, {"landuse": "meadow"}),
        (9007, 3, 5, {"landuse": "recreation_ground"}),
    ]
    ring_id = 3000
    for way_id, r, c, tags in parks:
        ring = []
        for dr, dc in ((0.2, 0.2), (0.2, 0.8), (0.8, 0.8), (0.8, 0.2)):
            nodes[ring_id] = (*coords(r + dr, c + dc), {})
            ring.append(ring_id)
            ring_id += 1
        ring.append(ring[0])
        ways.append((way_id, ring, tags))

    # street trees along row 4
    for i, (r, c) in enumerate(((4.0, 2.4), (4.0, 2.7), (4.0, 3.3))):
        nodes[3101 + i] = (*coords(r, c), {"natural": "tree"})

    # tourism POIs, each a few tens of meters off a grid corner
    pois = [
        (4001, 5, 5, 0.00018, 0.00022, {"tourism": "museum", "name": "Glass Museum", "wheelchair": "yes"}),
        (4002, 1, 1, -0.00015, 0.00020, {"tourism": "gallery", "name": "Harbor Gallery"}),
        (4003, 3, 3, 0.00012, -0.00018, {"tourism": "attraction", "name": "Clock Tower"}),
        (4004, 2, 3, -0.00010, 0.00015, {"tourism": "monument", "name": "Founders Monument"}),
        (4005, 6, 6, -0.00020, -0.00015, {"tourism": "viewpoint", "name": "Observatory Hill"}),
        (4006, 4, 2, 0.00015, 0.00010, {"tourism": "hotel", "name": "Grand Hotel", "wheelchair": "yes"}),
        (4007, 2, 5, 0.00010, 0.00020, {"tourism": "attraction", "name": "Old Mill"}),
        (4008, 0, 2, 0.00012, 0.00010, {"tourism": "attraction", "name": "Stone Bridge", "wheelchair": "yes"}),
        (4009, 2, 1, 0.00010, -0.00012, {"tourism": "monument", "name": "Market Cross"}),
        (4010, 4, 5, -0.00012, 0.00014, {"tourism": "artwork", "name": "Mosaic Fountain"}),
    ]
    for node_id, r, c, dlat, dlon, tags in pois:
        lat, lon = coords(r, c)
        nodes[node_id] = (lat + dlat, lon + dlon, tags)

    # unnamed accessibility fixes (curb ramps) near intersections
    ramps = [(0, 3), (1, 2), (2, 2), (3, 4), (4, 4), (5, 2), (6, 3), (3, 0)]
    for i, (r, c) in enumerate(ramps):
        lat, lon = coords(r, c)
        nodes[4101 + i] = (lat + 0.00008, lon + 0.00008, {"wheelchair": "yes"})

    return nodes, ways


def write_map(nodes, ways) -> None:
    lines = ['<?xml version="1.0" encoding="UTF-8"?>', '<osm version="0.6">']
    for node_id in sorted(nodes):
        lat, lon, tags = nodes[node_id]
        attrs = f'id="{node_id}" lat="{lat!r}" lon="{lon!r}"'
        if tags:
            lines.append(f"  <node {attrs}>")
            for k, v in tags.items():
                lines.append(f'    <tag k="{k}" v="{v}"/>')
            lines.append("  </node>")
        else:
            lines.append(f"  <node {attrs}/>")
    for way_id, refs, tags in ways:
        lines.append(f'  <way id="{way_id}">')
        for ref in refs:
            lines.append(f'    <nd ref="{ref}"/>')
        for k, v in tags.items():
            lines.append(f'    <tag k="{k}" v="{v}"/>')
        lines.append("  </way>")
    lines.append("</osm>")
    (CITY / "map.osm").write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_gazetteer(nodes) -> None:
    def node_coords(node_id):
        lat, lon, _ = nodes[node_id]
        return lat, lon

    rose_gate = (LAT0 + 1 * DLAT + 0.00012, LON0 + 1 * DLON + 0.00015)
    entries = [
        ("North Gate", *coords(6, 3)),
        ("South Gate", *coords(0, 3)),
        ("City Hall", *coords(3, 2)),
        ("Market Square", *coords(2, 1)),
        ("River Walk", *coords(1, 6)),
        ("Old Harbor", *node_coords(2102)),
        ("Glass Museum", *node_coords(4001)),
        ("Harbor Gallery", *node_coords(4002)),
        ("Clock Tower", *node_coords(4003)),
        ("Observatory Hill", *node_coords(4005)),
        ("Stone Bridge", *node_coords(4008)),
        ("Rose Garden", *rose_gate),
    ]
    rows = ["name,lat,lon"] + [f"{name},{lat!r},{lon!r}" for name, lat, lon in entries]
    (CITY / "gazetteer.csv").write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_air_quality() -> None:
    table = {}
    for lat in (47.35, 47.36, 47.37, 47.38):
        for lon in (8.54, 8.55, 8.56, 8.57):
            table[f"{lat:.2f},{lon:.2f}"] = 2
    (CITY / "air_quality.json").write_text(json.dumps(table, indent=2) + "\n", encoding="utf-8")


PASSAGES = [
    ("rvt-0001", "The Glass Museum in eastern Riverton displays three centuries of blown glass, from harbor lanterns to contemporary sculpture. Its mirrored atrium was added in 1998."),
    ("rvt-0002", "Riverton's North Gate is the last survivor of the four medieval town gates, rebuilt in sandstone after the fire of 1621."),
    ("rvt-0003", "The Riverton glassworks was founded in 1734 by Flemish artisans and fired its furnaces continuously for two hundred years."),
    ("rvt-0004", "The Old Harbor quarter keeps its cobbled quays and rope bollards; fishing boats still land crab here at dawn."),
    ("rvt-0005", "Market Square has hosted Riverton's weekly produce stalls since 1540, ringed by arcaded merchant houses."),
    ("rvt-0006", "Market days in Riverton are Tuesday and Saturday, when growers from the valley sell cheese, flowers, and early apples."),
    ("rvt-0007", "Riverton City Hall was designed by the architect Ansel Brecht and completed in 1893; its council chamber ceiling shows the signs of the zodiac."),
    ("rvt-0008", "From the Observatory Hill viewpoint you can see the whole grid of Riverton, the Aster estuary, and on clear days the chalk cliffs at Wendell Point."),
    ("rvt-0009", "The Riverton astronomical society has met on Observatory Hill since 1871 and still opens its brass refractor telescope to the public each solstice."),
    ("rvt-0010", "The Rose Garden grows more than two hundred rose cultivars, including the pale climber Riverton Dawn bred for the garden's centenary."),
    ("rvt-0011", "The Stone Bridge crosses the old mill race on three granite arches and has carried foot traffic since 1412."),
    ("rvt-0012", "The Aster River rises in the Korn hills and reaches the sea at Riverton, where its estuary shelters oyster beds and wading birds."),
    ("rvt-0013", "The Clock Tower mechanism, wound by hand until 1972, drives twelve carved figures that parade at noon."),
    ("rvt-0014", "The South Gate marks the old customs boundary of Riverton; carters once paid a toll of one copper per wheel beneath its arch."),
    ("rvt-0015", "Riverton's festivals culminate in the Lantern Regatta each August, when the harbor fills with candlelit boats."),
    ("rvt-0016", "Linden Park was laid out on the drained eastern marsh in 1904 and is known for its avenue of century-old linden trees."),
    ("rvt-0017", "Old lime and plane trees line the promenade along the Aster, planted to shade the towpath horses."),
    ("rvt-0018", "The Botanic Garden of Riverton keeps an alpine house, a physic border of medicinal herbs, and the city's oldest ginkgo."),
    ("rvt-0019", "The Glass Museum offers step-free entry, tactile exhibits, and wheelchair loans at the cloakroom; all galleries are reachable by lift."),
    ("rvt-0020", "The Founders Monument, a bronze group of a mason, a fisher, and a weaver, honors the three guilds that chartered Riverton."),
    ("rvt-0021", "Riverton's old town walls were leveled in the 1820s; their line survives as a ring of pocket gardens and a grass rampart walk."),
    ("rvt-0022", "The Harbor Gallery exhibits maritime painting and ship models, with a permanent room of storm seascapes by Inge Maar."),
    ("rvt-0023", "The Old Mill ground barley for the garrison until 1880; its waterwheel was restored and turns again on summer weekends."),
    ("rvt-0024", "Riverton is known for smoked eel, crab rolls from the harbor stalls, and a dark rye loaf baked over beechwood."),
    ("rvt-0025", "Air in Riverton is generally clean thanks to steady sea breezes; monitoring posts rarely record more than moderate pollution, mostly from winter wood stoves."),
    ("rvt-0026", "The Mosaic Fountain is paved with forty thousand glazed tesserae showing the Aster's course from spring to sea."),
    ("rvt-0027", "The Grand Hotel is famous for its wrought-iron winter garden and for the guest book page signed by the polar navigator Elin Voss."),
    ("rvt-0028", "The harbor lighthouse, a striped cast-iron tower of 1868, still shows a green sector light over the safe channel."),
    ("rvt-0029", "The River Walk promenade follows the Aster from the harbor locks upstream to the weir meadows, about forty minutes on foot."),
    ("rvt-0030", "The tram network of Riverton runs two lines, Blue and Coast, on a ten-minute headway; day passes are sold at kiosks."),
    ("rvt-0031", "Riverton's university began as a navigation school teaching tide tables and celestial reckoning to harbor pilots."),
    ("rvt-0032", "The city library holds the Korn hills herbarium and a chained Bible printed in 1502."),
    ("rvt-0033", "Winters in Riverton are mild and foggy; spring arrives with the apple bloom in the valley orchards."),
    ("rvt-0034", "The chandlers' guildhall keeps the oldest fire engine in the region, a hand pump of 1789 nicknamed the Red Goose."),
    ("rvt-0035", "Ferries cross the Aster estuary to the dune island of Skerm, where seals haul out on the western bar."),
    ("rvt-0036", "The covered fish market opens at six; its auction bell was cast from a salvaged ship propeller."),
    ("rvt-0037", "Riverton's carillon school trains bell players from across the coast; practice chimes sound on Thursday evenings."),
    ("rvt-0038", "The weir meadows upstream of town flood each winter and draw lapwings, godwits, and skating children in January."),
    ("rvt-0039", "A brick kiln by the south shore fired the pale yellow clinkers that give old Riverton facades their color."),
    ("rvt-0040", "The pilots' chapel near the harbor hangs with votive ship models left by crews who survived the Great Gale of 1894."),
    ("rvt-0041", "Riverton mineral water, drawn from the Korn spring, was bottled in stoneware flasks and sold as far as the capital."),
    ("rvt-0042", "The rope walk, a shed three hundred paces long, twisted hemp cables for the fleet until steam winches made it idle."),
    ("rvt-0043", "Summer concerts are held in the bandstand of Linden Park every Sunday afternoon from June to September."),
    ("rvt-0044", "The toll house by the South Gate now serves as a tiny museum of weights, seals, and smugglers' tricks."),
]


def write_corpus() -> None:
    lines = [
        json.dumps({"id": pid, "text": text, "source": "riverton-guide"})
        for pid, text in PASSAGES
    ]
    (CORPUS / "passages.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")


SPATIAL_QUERIES = [
    ("I want a route from North Gate to the Glass Museum", "North Gate", "Glass Museum"),
    ("Find me a walk from Old Harbor to Market Square", "Old Harbor", "Market Square"),
    ("Plan an itinerary from City Hall to Observatory Hill", "City Hall", "Observatory Hill"),
    ("How do I get to the Stone Bridge from the Rose Garden?", "Rose Garden", "Stone Bridge"),
    ("Route from the Clock Tower to South Gate, please", "Clock Tower", "South Gate"),
    ("Walk me from Market Square to North Gate with plenty of green areas", "Market Square", "North Gate"),
    ("I'd like a wheelchair accessible walking route from South Gate to City Hall", "South Gate", "City Hall"),
    ("Give me a walking route from the Glass Museum to Old Harbor passing museums", "Glass Museum", "Old Harbor"),
    ("Suggest an itinerary from Observatory Hill to the Clock Tower avoiding pollution", "Observatory Hill", "Clock Tower"),
    ("Can you suggest a walk from the Stone Bridge to Rose Garden?", "Stone Bridge", "Rose Garden"),
]

INFO_QUERIES = [
    ("Tell me more about the Glass Museum", "rvt-0001"),
    ("What is the North Gate?", "rvt-0002"),
    ("When was the Riverton glassworks founded?", "rvt-0003"),
    ("Tell me about the Old Harbor", "rvt-0004"),
    ("What happens at Market Square?", "rvt-0005"),
    ("Which are the market days in Riverton?", "rvt-0006"),
    ("Who designed the Riverton City Hall?", "rvt-0007"),
    ("What can I see at the Observatory Hill viewpoint?", "rvt-0008"),
    ("Tell me about the Riverton astronomical society", "rvt-0009"),
    ("Which roses grow in the Rose Garden?", "rvt-0010"),
    ("How old is the Stone Bridge?", "rvt-0011"),
    ("Tell me about the Aster River", "rvt-0012"),
    ("What is special about the Clock Tower mechanism?", "rvt-0013"),
    ("Tell me about the South Gate", "rvt-0014"),
    ("What festivals take place in Riverton?", "rvt-0015"),
    ("Tell me about Linden Park", "rvt-0016"),
    ("What trees line the promenade?", "rvt-0017"),
    ("Is there a botanic garden in Riverton?", "rvt-0018"),
    ("Is the Glass Museum wheelchair accessible?", "rvt-0019"),
    ("Tell me about the Founders Monument", "rvt-0020"),
    ("What is the history of the old town walls?", "rvt-0021"),
    ("What does the Harbor Gallery exhibit?", "rvt-0022"),
    ("Tell me about the Old Mill", "rvt-0023"),
    ("What food is Riverton known for?", "rvt-0024"),
    ("How clean is the air in Riverton?", "rvt-0025"),
    ("Tell me about the Mosaic Fountain", "rvt-0026"),
    ("What is the Grand Hotel famous for?", "rvt-0027"),
    ("Tell me about the harbor lighthouse", "rvt-0028"),
    ("Where does the River Walk promenade lead?", "rvt-0029"),
    ("What is the tram network like in Riverton?", "rvt-0030"),
]


def write_queries() -> None:
    records = []
    info_iter = iter(INFO_QUERIES)
    for query, origin, destination in SPATIAL_QUERIES:
        records.append(
            {"query": query, "kind": "spatial", "origin": origin, "destination": destination}
        )
        for _ in range(3):
            q, pid = next(info_iter)
            records.append({"query": q, "kind": "information", "expected_passage_id": pid})
    (QUERIES / "walk40.jsonl").write_text(
        "\n".join(json.dumps(r) for r in records) + "\n", encoding="utf-8"
    )


def self_check() -> None:
    sys.path.insert(0, str(ROOT / "src"))
    from walkrag.config import ServiceConfig
    from walkrag.evalharness import check_dataset_shape, load_dataset, run_eval
    from walkrag.quag.engine import build_engine

    config = ServiceConfig(
        map_path=CITY / "map.osm",
        gazetteer_path=CITY / "gazetteer.csv",
        air_quality_path=CITY / "air_quality.json",
        corpus_path=CORPUS / "passages.jsonl",
    )
    engine = build_engine(config)
    records = load_dataset(QUERIES / "walk40.jsonl")
    spatial, information = check_dataset_shape(records)
    assert (spatial, information) == (10, 30), (spatial, information)

    report = run_eval(engine, records)
    print(report.render_table())
    bad = [r for r in report.results if r.verdict != "correct"]
    if report.classification_hits != 40 or bad:
        for r in bad:
            print(f"  FAIL {r.kind}: {r.query!r} -> {r.verdict} ({r.detail})", file=sys.stderr)
        raise SystemExit("fixture self-check failed")
    print("self-check passed: 40/40 classified, all verdicts correct")


def main() -> None:
    for directory in (CITY, CORPUS, QUERIES):
        directory.mkdir(parents=True, exist_ok=True)
    nodes, ways = build_city()
    write_map(nodes, ways)
    write_gazetteer(nodes)
    write_air_quality()
    write_corpus()
    write_queries()
    print(f"wrote {CITY / 'map.osm'} ({len(nodes)} nodes, {len(ways)} ways)")
    self_check()


if __name__ == "__main__":
    main()
