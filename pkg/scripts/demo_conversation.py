#!/usr/bin/env python3
"""Scripted conversation against the bundled Riverton fixtures.

Runs one session through a spatial request, a map-style route dump, and
two follow-up information questions, printing every answer. Useful as a
smoke test and as a living example of the engine API.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from walkrag.config import ServiceConfig  # noqa: E402
from walkrag.quag.engine import build_engine  # noqa: E402


def main() -> None:
    config = ServiceConfig(
        map_path=ROOT / "fixtures/city/map.osm",
        gazetteer_path=ROOT / "fixtures/city/gazetteer.csv",
        air_quality_path=ROOT / "fixtures/city/air_quality.json",
        corpus_path=ROOT / "fixtures/corpus/passages.jsonl",
    )
    engine = build_engine(config)
    stats = engine.stats()
    print(f"engine ready: {stats['graph_nodes']} graph nodes, {stats['corpus_size']} passages\n")

    session = engine.create_session()
    for utterance in (
        "I want a route from North Gate to the Glass Museum",
        "Tell me more about the Glass Museum",
        "Is the Glass Museum wheelchair accessible?",
    ):
        print(f">>> {utterance}")
        result = engine.post_message(session.session_id, utterance)
        print(result.answer)
        print()

    view = engine.route_view(session)
    print("route geometry vertices:", len(view["geometry"]["coordinates"]))
    print("route POIs:", json.dumps([f["properties"]["name"] for f in view["pois"]["features"]]))


if __name__ == "__main__":
    main()
