from __future__ import annotations

import random

import pytest

import oracles
from walkrag.enrichment import (
    BBox,
    PreferenceFilter,
    RouteCorridor,
    SpatialIndex,
    buffer_route,
    build_spatial_index,
    spatial_join,
)
from walkrag.geodata.features import FeatureKind, FeatureRecord
from walkrag.geodata.graph import PedestrianGraph
from walkrag.routing import point_polyline_distance_m, route_from_nodes


def _features(points, kind=FeatureKind.POI, category="museum"):
    return [
        FeatureRecord(
            feature_id=f"p{i:04d}",
            kind=kind,
            point=pt,
            name=f"poi {i}",
            category=category,
        )
        for i, pt in enumerate(points)
    ]


def _route(coords):
    graph = PedestrianGraph()
    graph.nodes = {i + 1: c for i, c in enumerate(coords)}
    graph.adjacency = {i + 1: [] for i in range(len(coords))}
    for i in range(len(coords) - 1):
        graph._add_edge(i + 1, i + 2, 1.0)
    graph._finalize()
    return route_from_nodes(list(range(1, len(coords) + 1)), graph)


# --- spatial index ------------------------------------------------------------

def test_empty_index_returns_empty():
    index = build_spatial_index([])
    assert index.query(BBox(-90, -180, 90, 180)) == []


def test_single_feature_hit_and_miss():
    index = build_spatial_index(_features([(47.0, 8.0)]))
    assert len(index.query(BBox(46.9, 7.9, 47.1, 8.1))) == 1
    assert index.query(BBox(48.0, 9.0, 49.0, 10.0)) == []


def test_index_equals_linear_scan_on_random_data():
    rng = random.Random(77)
    points = [(rng.uniform(47.0, 47.1), rng.uniform(8.0, 8.1)) for _ in range(1000)]
    features = _features(points)
    index = build_spatial_index(features)
    for _ in range(100):
        lat1, lat2 = sorted((rng.uniform(47.0, 47.1), rng.uniform(47.0, 47.1)))
        lon1, lon2 = sorted((rng.uniform(8.0, 8.1), rng.uniform(8.0, 8.1)))
        bbox = BBox(lat1, lon1, lat2, lon2)
        got = sorted(f.feature_id for f in index.query(bbox))
        want = sorted(f.feature_id for f in features if bbox.contains(f.point))
        assert got == want


def test_near_polyline_equals_brute_force():
    rng = random.Random(13)
    points = [(rng.uniform(46.99, 47.03), rng.uniform(7.99, 8.03)) for _ in range(400)]
    features = _features(points, kind=FeatureKind.GREEN_AREA, category=None)
    index = build_spatial_index(features)
    polyline = [(47.0, 8.0), (47.005, 8.005), (47.01, 8.005)]
    got = sorted(f.feature_id for f in index.near_polyline(polyline, 250.0))
    want = sorted(
        f.feature_id
        for f in features
        if point_polyline_distance_m(f.point, polyline) <= 250.0
    )
    assert got == want


# --- corridor -----------------------------------------------------------------

def test_point_on_polyline_is_inside_any_buffer():
    route = _route([(47.0, 8.0), (47.001, 8.0)])
    corridor = buffer_route(route, 1.0)
    assert corridor.contains((47.0005, 8.0))


def test_point_beyond_buffer_is_outside():
    route = _route([(0.0, 0.0), (0.0, 0.001)])
    # 150 m north of the segment line
    point = (150.0 / 111_195.0, 0.0005)
    assert oracles.ref_point_polyline_distance(point, route.polyline()) > 100.0
    corridor = buffer_route(route, 100.0)
    assert not corridor.contains(point)


def test_zero_segment_route_has_empty_corridor():
    route = _route([(47.0, 8.0)])
    corridor = buffer_route(route, 100.0)
    assert not corridor.contains((47.0, 8.0))


def test_corridor_rejects_nonpositive_buffer():
    with pytest.raises(ValueError):
        RouteCorridor(_route([(47.0, 8.0), (47.001, 8.0)]), 0.0)


def test_point_to_polyline_agrees_with_ternary_search_oracle():
    rng = random.Random(3)
    for _ in range(150):
        a = (rng.uniform(47.0, 47.02), rng.uniform(8.0, 8.02))
        b = (rng.uniform(47.0, 47.02), rng.uniform(8.0, 8.02))
        p = (rng.uniform(47.0, 47.02), rng.uniform(8.0, 8.02))
        mine = point_polyline_distance_m(p, [a, b])
        ref = oracles.ref_point_polyline_distance(p, [a, b])
        assert mine == pytest.approx(ref, abs=0.5)


# --- spatial join ---------------------------------------------------------------

def test_category_filter_keeps_only_requested():
    route = _route([(47.0, 8.0), (47.001, 8.0)])
    museum = FeatureRecord("m1", FeatureKind.POI, (47.0005, 8.0001), name="M", category="museum")
    cafe = FeatureRecord("c1", FeatureKind.POI, (47.0005, 8.0002), name="C", category="cafe")
    index = build_spatial_index([museum, cafe])
    joined = spatial_join(buffer_route(route, 200.0), index, PreferenceFilter(frozenset({"museum"})))
    attached = [p.feature_id for pois in joined.values() for p in pois]
    assert attached == ["m1"]


def test_default_mode_attaches_all_tourism():
    route = _route([(47.0, 8.0), (47.001, 8.0)])
    museum = FeatureRecord("m1", FeatureKind.POI, (47.0005, 8.0001), name="M", category="museum")
    cafe = FeatureRecord("c1", FeatureKind.POI, (47.0005, 8.0002), name="C", category="cafe")
    green = FeatureRecord("g1", FeatureKind.GREEN_AREA, (47.0005, 8.0001))
    index = build_spatial_index([museum, cafe, green])
    pref = PreferenceFilter()
    assert pref.default_mode
    joined = spatial_join(buffer_route(route, 200.0), index, pref)
    attached = sorted(p.feature_id for pois in joined.values() for p in pois)
    assert attached == ["c1", "m1"]  # never the green area


def test_equidistant_poi_goes_to_earlier_segment():
    # three collinear nodes; POI exactly at the shared joint of segments 0 and 1
    route = _route([(47.0, 8.0), (47.001, 8.0), (47.002, 8.0)])
    poi = FeatureRecord("p1", FeatureKind.POI, (47.001, 8.0), name="P", category="museum")
    joined = spatial_join(buffer_route(route, 100.0), build_spatial_index([poi]), PreferenceFilter())
    assert [p.feature_id for p in joined[0]] == ["p1"]
    assert joined[1] == []


def test_join_soundness_and_uniqueness_random(city_graph):
    rng = random.Random(99)
    points = [(rng.uniform(47.3595, 47.369), rng.uniform(8.549, 8.563)) for _ in range(300)]
    features = _features(points)
    index = build_spatial_index(features)
    nodes = sorted(city_graph.nodes)
    for _ in range(10):
        src, dst = rng.sample(nodes, 2)
        from walkrag.routing import shortest_path

        route = shortest_path(city_graph, src, dst)
        corridor = buffer_route(route, 200.0)
        joined = spatial_join(corridor, index, PreferenceFilter())
        seen: set[str] = set()
        for seg_index, pois in joined.items():
            seg_poly = list(route.segments[seg_index].polyline)
            for poi in pois:
                assert poi.feature_id not in seen, "POI attached twice"
                seen.add(poi.feature_id)
                assert point_polyline_distance_m(poi.point, route.polyline()) <= 200.0
                # nearest-segment attachment
                d_here = point_polyline_distance_m(poi.point, seg_poly)
                for other in route.segments:
                    d_other = point_polyline_distance_m(poi.point, list(other.polyline))
                    assert d_here <= d_other + 1e-9


def test_join_matches_brute_force_all_pairs(city_graph):
    rng = random.Random(42)
    points = [(rng.uniform(47.3595, 47.369), rng.uniform(8.549, 8.563)) for _ in range(200)]
    features = _features(points)
    index = build_spatial_index(features)
    from walkrag.routing import shortest_path

    route = shortest_path(city_graph, 1000, 1126)
    corridor = buffer_route(route, 200.0)
    joined = spatial_join(corridor, index, PreferenceFilter())

    # brute force: no index, no corridor prefilter — all pairs
    expected: dict[str, int] = {}
    for f in features:
        best_i, best_d = -1, float("inf")
        for i, seg in enumerate(route.segments):
            d = point_polyline_distance_m(f.point, list(seg.polyline))
            if d < best_d:
                best_i, best_d = i, d
        if best_d <= 200.0:
            expected[f.feature_id] = best_i

    got = {p.feature_id: i for i, pois in joined.items() for p in pois}
    assert got == expected


def test_filter_monotonicity():
    route = _route([(47.0, 8.0), (47.001, 8.0)])
    features = [
        FeatureRecord("m1", FeatureKind.POI, (47.0004, 8.0001), name="M", category="museum"),
        FeatureRecord("c1", FeatureKind.POI, (47.0005, 8.0002), name="C", category="cafe"),
        FeatureRecord("h1", FeatureKind.POI, (47.0006, 8.0001), name="H", category="hotel"),
    ]
    index = build_spatial_index(features)
    corridor = buffer_route(route, 200.0)

    small = spatial_join(corridor, index, PreferenceFilter(frozenset({"museum"})))
    large = spatial_join(corridor, index, PreferenceFilter(frozenset({"museum", "cafe"})))
    small_ids = {p.feature_id for pois in small.values() for p in pois}
    large_ids = {p.feature_id for pois in large.values() for p in pois}
    assert small_ids <= large_ids
