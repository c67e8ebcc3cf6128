from __future__ import annotations

import io
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from walkrag.config import ServiceConfig
from walkrag.geodata import build_pedestrian_graph, extract_features, parse_map_extract
from walkrag.quag.engine import build_engine

settings.register_profile(
    "ci", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60
)
settings.load_profile("ci")

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
CITY = FIXTURES / "city"


def osm_doc(body: str) -> io.BytesIO:
    return io.BytesIO(
        (f'<?xml version="1.0" encoding="UTF-8"?>\n<osm version="0.6">\n{body}\n</osm>\n').encode()
    )


@pytest.fixture(scope="session")
def city_extract():
    with (CITY / "map.osm").open("rb") as fh:
        return parse_map_extract(fh)


@pytest.fixture(scope="session")
def city_graph(city_extract):
    return build_pedestrian_graph(city_extract)


@pytest.fixture(scope="session")
def city_features(city_extract):
    return extract_features(city_extract)


@pytest.fixture(scope="session")
def city_config():
    return ServiceConfig(
        map_path=CITY / "map.osm",
        gazetteer_path=CITY / "gazetteer.csv",
        air_quality_path=CITY / "air_quality.json",
        corpus_path=FIXTURES / "corpus" / "passages.jsonl",
    )


@pytest.fixture(scope="session")
def engine(city_config):
    return build_engine(city_config)
