"""Geodesic helpers: haversine distance, bearings, point-to-polyline distance.

All coordinates are (lat, lon) in decimal degrees, WGS84-ish sphere with
mean radius 6,371,000 m. Point-to-segment projection uses a local
equirectangular frame; the returned distance is always a true haversine,
so the projection only decides *where* on the segment the nearest point
lies (error is negligible at city scale).
"""

from __future__ import annotations

import math

EARTH_RADIUS_M = 6_371_000.0

LatLon = tuple[float, float]


def haversine(a: LatLon, b: LatLon) -> float:
    """Great-circle distance between two (lat, lon) points in meters."""
    lat1, lon1 = a
    lat2, lon2 = b
    phi1 = math.radians(lat1)
    phi2 = math.radians(lat2)
    dphi = math.radians(lat2 - lat1)
    dlam = math.radians(lon2 - lon1)
    h = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_M * math.asin(min(1.0, math.sqrt(h)))


def initial_bearing(a: LatLon, b: LatLon) -> float:
    """Initial compass bearing from a to b in degrees, 0 = north, clockwise."""
    phi1 = math.radians(a[0])
    phi2 = math.radians(b[0])
    dlam = math.radians(b[1] - a[1])
    x = math.sin(dlam) * math.cos(phi2)
    y = math.cos(phi1) * math.sin(phi2) - math.sin(phi1) * math.cos(phi2) * math.cos(dlam)
    return (math.degrees(math.atan2(x, y)) + 360.0) % 360.0


def bearing_change(b_in: float, b_out: float) -> float:
    """Signed heading change in (-180, 180]; negative turns left."""
    d = (b_out - b_in + 180.0) % 360.0 - 180.0
    if d == -180.0:
        return 180.0
    return d


_COMPASS = ("north", "northeast", "east", "southeast", "south", "southwest", "west", "northwest")


def compass_point(bearing: float) -> str:
    """Eight-wind compass name for a bearing in degrees."""
    return _COMPASS[int(((bearing % 360.0) + 22.5) // 45.0) % 8]


def point_segment_distance_m(p: LatLon, a: LatLon, b: LatLon) -> float:
    """Minimum haversine distance from point p to the segment a-b.

    The foot of the perpendicular is found in a local equirectangular
    projection centered on the segment; degenerate (zero-length) segments
    fall back to plain point distance.
    """
    if a == b:
        return haversine(p, a)
    lat0 = math.radians((a[0] + b[0]) / 2.0)
    k = math.cos(lat0)
    ax, ay = a[1] * k, a[0]
    bx, by = b[1] * k, b[0]
    px, py = p[1] * k, p[0]
    dx, dy = bx - ax, by - ay
    denom = dx * dx + dy * dy
    if denom == 0.0:
        return haversine(p, a)
    t = ((px - ax) * dx + (py - ay) * dy) / denom
    t = min(1.0, max(0.0, t))
    foot = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
    return haversine(p, foot)


def point_polyline_distance_m(p: LatLon, polyline: list[LatLon]) -> float:
    """Minimum haversine distance from p to a polyline (inf when empty)."""
    if not polyline:
        return math.inf
    if len(polyline) == 1:
        return haversine(p, polyline[0])
    best = math.inf
    for a, b in zip(polyline, polyline[1:]):
        d = point_segment_distance_m(p, a, b)
        if d < best:
            best = d
    return best
