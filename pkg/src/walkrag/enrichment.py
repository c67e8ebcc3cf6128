"""Spatial index over feature points, route corridors, and the POI join.

The index is a bulk-loaded R-tree (sort-tile-recursive packing) answering
bounding-box queries exactly like a linear scan would; the tests hold it
to that oracle. Corridor membership and the join use the bbox query only
as a prefilter — the decision distance is always true haversine.

Bounding boxes for a metric radius use a local equirectangular expansion:
one degree of latitude is ~111,195 m everywhere, one degree of longitude
shrinks with cos(lat). At city scale the expansion overshoots by well
under 0.1%, and overshooting a prefilter is harmless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geodata.features import FeatureKind, FeatureRecord, FeatureSet
from .routing.geo import EARTH_RADIUS_M, LatLon, point_polyline_distance_m
from .routing.segments import RouteCandidate

DEFAULT_POI_BUFFER_M = 200.0
_LEAF_CAPACITY = 16
_M_PER_DEG_LAT = math.pi * EARTH_RADIUS_M / 180.0


@dataclass(frozen=True)
class BBox:
    min_lat: float
    min_lon: float
    max_lat: float
    max_lon: float

    def contains(self, p: LatLon) -> bool:
        return self.min_lat <= p[0] <= self.max_lat and self.min_lon <= p[1] <= self.max_lon

    def intersects(self, other: "BBox") -> bool:
        return not (
            other.min_lat > self.max_lat
            or other.max_lat < self.min_lat
            or other.min_lon > self.max_lon
            or other.max_lon < self.min_lon
        )

    @classmethod
    def around(cls, points: list[LatLon], radius_m: float) -> "BBox":
        """Box covering all points expanded by radius_m (with 1% slack)."""
        lats = [p[0] for p in points]
        lons = [p[1] for p in points]
        dlat = radius_m / _M_PER_DEG_LAT * 1.01
        max_abs_lat = min(89.0, max(abs(min(lats)), abs(max(lats))) + dlat)
        dlon = radius_m / (_M_PER_DEG_LAT * math.cos(math.radians(max_abs_lat))) * 1.01
        return cls(min(lats) - dlat, min(lons) - dlon, max(lats) + dlat, max(lons) + dlon)


class _Node:
    __slots__ = ("bbox", "children", "features")

    def __init__(self, bbox: BBox, children: list["_Node"] | None, features: list[FeatureRecord] | None):
        self.bbox = bbox
        self.children = children
        self.features = features


def _bbox_of(features: list[FeatureRecord]) -> BBox:
    lats = [f.point[0] for f in features]
    lons = [f.point[1] for f in features]
    return BBox(min(lats), min(lons), max(lats), max(lons))


def _merge(boxes: list[BBox]) -> BBox:
    return BBox(
        min(b.min_lat for b in boxes),
        min(b.min_lon for b in boxes),
        max(b.max_lat for b in boxes),
        max(b.max_lon for b in boxes),
    )


class SpatialIndex:
    """STR-packed R-tree over feature points."""

    def __init__(self, features: FeatureSet):
        self._features = list(features)
        self._root = self._bulk_load(self._features)

    def __len__(self) -> int:
        return len(self._features)

    @staticmethod
    def _bulk_load(features: list[FeatureRecord]) -> _Node | None:
        if not features:
            return None
        # STR packing: sort by lon, slice into vertical runs, sort each by lat
        n = len(features)
        leaf_count = math.ceil(n / _LEAF_CAPACITY)
        slices = math.ceil(math.sqrt(leaf_count))
        per_slice = slices * _LEAF_CAPACITY
        by_lon = sorted(features, key=lambda f: (f.point[1], f.point[0], f.feature_id))
        leaves: list[_Node] = []
        for i in range(0, n, per_slice):
            run = sorted(
                by_lon[i : i + per_slice], key=lambda f: (f.point[0], f.point[1], f.feature_id)
            )
            for j in range(0, len(run), _LEAF_CAPACITY):
                chunk = run[j : j + _LEAF_CAPACITY]
                leaves.append(_Node(_bbox_of(chunk), None, chunk))
        # pack upper levels the same way until a single root remains
        level = leaves
        while len(level) > 1:
            parents: list[_Node] = []
            for i in range(0, len(level), _LEAF_CAPACITY):
                group = level[i : i + _LEAF_CAPACITY]
                parents.append(_Node(_merge([g.bbox for g in group]), group, None))
            level = parents
        return level[0]

    def query(self, bbox: BBox) -> list[FeatureRecord]:
        """Exactly the features whose point lies inside bbox."""
        out: list[FeatureRecord] = []
        if self._root is None:
            return out
        stack = [self._root]
        while stack:
            node = stack.pop()
            if not node.bbox.intersects(bbox):
                continue
            if node.features is not None:
                out.extend(f for f in node.features if bbox.contains(f.point))
            else:
                stack.extend(node.children or [])
        return out

    def near_polyline(self, polyline: list[LatLon], buffer_m: float) -> list[FeatureRecord]:
        """Features within buffer_m (haversine) of the polyline."""
        if not polyline:
            return []
        candidates = self.query(BBox.around(polyline, buffer_m))
        return [
            f for f in candidates if point_polyline_distance_m(f.point, polyline) <= buffer_m
        ]


@dataclass(frozen=True)
class PreferenceFilter:
    """POI category filter; with no categories it admits all tourism POIs."""

    categories: frozenset[str] = frozenset()

    @property
    def default_mode(self) -> bool:
        return not self.categories

    def admits(self, feature: FeatureRecord) -> bool:
        if feature.kind is not FeatureKind.POI:
            return False
        if self.default_mode:
            return True
        return (feature.category or "") in self.categories


@dataclass
class RouteCorridor:
    """Buffered route region; membership is exact haversine after a bbox prefilter."""

    route: RouteCandidate
    buffer_m: float
    _polyline: list[LatLon] = field(init=False)
    _bbox: BBox | None = field(init=False)

    def __post_init__(self) -> None:
        if self.buffer_m <= 0.0:
            raise ValueError("buffer_m must be positive")
        self._polyline = self.route.polyline()
        self._bbox = BBox.around(self._polyline, self.buffer_m) if self._polyline else None

    @property
    def bbox(self) -> BBox | None:
        return self._bbox

    def contains(self, point: LatLon) -> bool:
        if self._bbox is None or not self._bbox.contains(point):
            return False
        return point_polyline_distance_m(point, self._polyline) <= self.buffer_m

    def nearest_segment(self, point: LatLon) -> tuple[int, float]:
        """(segment index, distance); ties resolved to the earlier segment."""
        best_i = -1
        best_d = math.inf
        for i, seg in enumerate(self.route.segments):
            d = point_polyline_distance_m(point, list(seg.polyline))
            if d < best_d:
                best_d = d
                best_i = i
        return best_i, best_d


def buffer_route(route: RouteCandidate, buffer_m: float = DEFAULT_POI_BUFFER_M) -> RouteCorridor:
    return RouteCorridor(route, buffer_m)


def build_spatial_index(features: FeatureSet) -> SpatialIndex:
    return SpatialIndex(features)


def spatial_join(
    corridor: RouteCorridor,
    index: SpatialIndex,
    pref: PreferenceFilter = PreferenceFilter(),
) -> dict[int, list[FeatureRecord]]:
    """Attach every in-corridor POI passing the filter to its nearest segment.

    Each POI lands on exactly one segment; equidistant segments resolve to
    the earlier one. Returns {segment_index: [poi, ...]} with POIs in
    feature_id order for determinism.
    """
    joined: dict[int, list[FeatureRecord]] = {i: [] for i in range(len(corridor.route.segments))}
    if corridor.bbox is None:
        return joined
    candidates = [f for f in index.query(corridor.bbox) if pref.admits(f)]
    candidates.sort(key=lambda f: f.feature_id)
    for poi in candidates:
        if not corridor.contains(poi.point):
            continue
        seg_i, _ = corridor.nearest_segment(poi.point)
        if seg_i >= 0:
            joined[seg_i].append(poi)
    return joined
