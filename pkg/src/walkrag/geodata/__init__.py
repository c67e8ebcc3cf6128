from .airquality import (
    AirQualityClient,
    AirQualitySample,
    FixtureAirQuality,
    StaticAirQuality,
    fetch_air_quality,
)
from .features import FeatureKind, FeatureRecord, FeatureSet, extract_features, kinds_for_tags
from .gazetteer import Gazetteer, GazetteerEntry, geocode, load_gazetteer
from .graph import (
    PedestrianGraph,
    build_pedestrian_graph,
    is_walkable_way,
    load_graph,
    save_graph,
)
from .osm import MapExtract, MapNode, MapWay, parse_map_extract, serialize_map_extract

__all__ = [
    "AirQualityClient",
    "AirQualitySample",
    "FixtureAirQuality",
    "StaticAirQuality",
    "fetch_air_quality",
    "FeatureKind",
    "FeatureRecord",
    "FeatureSet",
    "extract_features",
    "kinds_for_tags",
    "Gazetteer",
    "GazetteerEntry",
    "geocode",
    "load_gazetteer",
    "PedestrianGraph",
    "build_pedestrian_graph",
    "is_walkable_way",
    "load_graph",
    "save_graph",
    "MapExtract",
    "MapNode",
    "MapWay",
    "parse_map_extract",
    "serialize_map_extract",
]
