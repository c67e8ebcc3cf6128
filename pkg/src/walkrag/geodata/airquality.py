"""Air-quality client contract and the fixture-backed stub.

Samples carry an integer grade 1..5 (1 = best). The stub keys its fixture
by coordinates rounded to 2 decimals (~1.1 km), matching the coarse grid
of district-level providers. Any client failure surfaces as Unavailable;
callers are expected to degrade, not crash.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

from ..errors import Unavailable
from ..routing.geo import LatLon


@dataclass(frozen=True)
class AirQualitySample:
    aqi: int
    location: LatLon
    timestamp: float

    def __post_init__(self) -> None:
        if self.aqi not in (1, 2, 3, 4, 5):
            raise ValueError(f"aqi must be 1..5, got {self.aqi}")


class AirQualityClient(Protocol):
    def sample(self, location: LatLon) -> AirQualitySample: ...


def fixture_key(location: LatLon) -> str:
    """Grid-cell key: coordinates floored to 2 decimals (~1.1 km cells)."""

    def cell(x: float) -> float:
        return math.floor(round(x * 100.0, 6)) / 100.0

    return f"{cell(location[0]):.2f},{cell(location[1]):.2f}"


class FixtureAirQuality:
    """Stub client reading a {"lat,lon": aqi} JSON mapping."""

    def __init__(self, table: dict[str, int]):
        self.table = table

    @classmethod
    def from_file(cls, path: Path) -> "FixtureAirQuality":
        return cls(json.loads(path.read_text(encoding="utf-8")))

    def sample(self, location: LatLon) -> AirQualitySample:
        key = fixture_key(location)
        if key not in self.table:
            raise Unavailable(f"no air-quality fixture for {key}")
        return AirQualitySample(aqi=int(self.table[key]), location=location, timestamp=0.0)


def fetch_air_quality(location: LatLon, client: AirQualityClient) -> AirQualitySample:
    """One sample for the location; any client failure becomes Unavailable."""
    try:
        return client.sample(location)
    except Unavailable:
        raise
    except Exception as exc:  # transport errors, bad payloads, ...
        raise Unavailable(str(exc)) from exc


class StaticAirQuality:
    """Always returns the same grade; handy for demos and tests."""

    def __init__(self, aqi: int):
        self.aqi = aqi

    def sample(self, location: LatLon) -> AirQualitySample:
        return AirQualitySample(aqi=self.aqi, location=location, timestamp=time.time())
