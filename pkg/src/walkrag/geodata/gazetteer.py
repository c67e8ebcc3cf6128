"""Place-name lookup backed by a bundled CSV (header: name,lat,lon).

Matching is case-insensitive and whitespace-trimmed; there is never a
fuzzy guess — an unknown name raises NotFound.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

from ..errors import MalformedInput, NotFound
from ..routing.geo import LatLon


@dataclass(frozen=True)
class GazetteerEntry:
    name: str
    lat: float
    lon: float


class Gazetteer:
    def __init__(self, entries: Iterable[GazetteerEntry]):
        self._entries: dict[str, GazetteerEntry] = {}
        for entry in entries:
            key = _fold(entry.name)
            if key in self._entries:
                raise MalformedInput(0, f"duplicate gazetteer name {entry.name!r}")
            self._entries[key] = entry

    def __len__(self) -> int:
        return len(self._entries)

    def entries(self) -> list[GazetteerEntry]:
        return list(self._entries.values())

    def lookup(self, name: str) -> GazetteerEntry:
        key = _fold(name)
        if key not in self._entries:
            raise NotFound(name.strip())
        return self._entries[key]


def _fold(name: str) -> str:
    return " ".join(name.split()).casefold()


def geocode(name: str, gazetteer: Gazetteer) -> LatLon:
    """Coordinates of the unique case-insensitive match; NotFound otherwise."""
    entry = gazetteer.lookup(name)
    return (entry.lat, entry.lon)


def load_gazetteer(source: Path | TextIO) -> Gazetteer:
    if isinstance(source, Path):
        with source.open(encoding="utf-8", newline="") as fh:
            return _read(fh)
    return _read(source)


def _read(fh: TextIO) -> Gazetteer:
    reader = csv.DictReader(fh)
    if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["name", "lat", "lon"]:
        raise MalformedInput(1, "gazetteer header must be name,lat,lon")
    entries = []
    for i, row in enumerate(reader, start=2):
        try:
            entries.append(GazetteerEntry(row["name"], float(row["lat"]), float(row["lon"])))
        except (TypeError, ValueError) as exc:
            raise MalformedInput(i, f"bad gazetteer row: {row}") from exc
    return Gazetteer(entries)
