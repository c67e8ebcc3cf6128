"""Capped-count walkability scoring and best-route selection.

Scoring runs in four steps per candidate route: count indicator
occurrences near each segment, cap each per-segment count at tau, average
the capped counts per indicator across segments (c_i), then combine as
ws = sum_i(w_i * c_i) / tau with weights that sum to 1. Since every c_i
lies in [0, tau], ws lands in [0, 1]: 0 is completely unwalkable, 1 is
fully walkable.

Pollution is a graded level rather than an occurrence count, so it enters
the same formula as a pseudo-count: a linear inversion of the 1..5 grade
(1 = cleanest air = tau, 5 = worst = 0), sampled once at the route
midpoint and applied to every segment. When the air-quality feed is down
the route is still scored, using tau/2 and a `pollution_estimated` flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import EmptyRoute, InvalidWeights, NoCandidates, Unavailable
from .geodata.airquality import AirQualityClient, AirQualitySample, fetch_air_quality
from .geodata.features import FeatureKind
from .routing.geo import LatLon, point_polyline_distance_m
from .routing.segments import RouteCandidate, Segment

DEFAULT_TAU = 5.0
DEFAULT_INDICATOR_BUFFER_M = 100.0
PREFERRED_WEIGHT_UNITS = 2  # preferred indicators weigh double before normalization


class IndicatorKind(str, Enum):
    SIDEWALK = "Sidewalk"
    POLLUTION = "Pollution"
    GREEN_AREA = "GreenArea"
    ACCESSIBILITY = "Accessibility"


INDICATOR_ORDER = (
    IndicatorKind.SIDEWALK,
    IndicatorKind.POLLUTION,
    IndicatorKind.GREEN_AREA,
    IndicatorKind.ACCESSIBILITY,
)

# indicator counting consumes these feature kinds; POI features are enrichment only
_COUNTED_FEATURE_KINDS = {
    FeatureKind.SIDEWALK: IndicatorKind.SIDEWALK,
    FeatureKind.GREEN_AREA: IndicatorKind.GREEN_AREA,
    FeatureKind.ACCESSIBILITY: IndicatorKind.ACCESSIBILITY,
}

WEIGHT_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class IndicatorWeights:
    w: dict[IndicatorKind, float]

    def __post_init__(self) -> None:
        missing = [k for k in INDICATOR_ORDER if k not in self.w]
        if missing:
            raise InvalidWeights(f"missing weights for {missing}")
        if any(v < 0.0 for v in self.w.values()):
            raise InvalidWeights("weights must be non-negative")
        total = sum(self.w[k] for k in INDICATOR_ORDER)
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise InvalidWeights(f"weights sum to {total!r}, expected 1")

    @classmethod
    def uniform(cls) -> "IndicatorWeights":
        return cls({k: 0.25 for k in INDICATOR_ORDER})

    @classmethod
    def with_preferences(cls, preferred: set[IndicatorKind]) -> "IndicatorWeights":
        """Preferred indicators get 0.4 and the rest share 0.2 each, renormalized.

        With a single preference this is exactly (0.4, 0.2, 0.2, 0.2); with
        several, the same 2:1 ratio is kept and the vector renormalized.
        """
        units = {
            k: PREFERRED_WEIGHT_UNITS if k in preferred else 1 for k in INDICATOR_ORDER
        }
        total = sum(units.values())
        return cls({k: units[k] / total for k in INDICATOR_ORDER})


SegmentCounts = dict[IndicatorKind, float]


def count_indicators(
    segment: Segment,
    features,
    buffer_m: float = DEFAULT_INDICATOR_BUFFER_M,
) -> SegmentCounts:
    """Raw counts of Sidewalk/GreenArea/Accessibility features within buffer_m.

    `features` is anything with `near_polyline(polyline, buffer_m)`
    (the enrichment spatial index) or a plain iterable of FeatureRecord.
    Pollution is not counted here; see pollution_count.
    """
    counts: SegmentCounts = {k: 0.0 for k in INDICATOR_ORDER}
    polyline = list(segment.polyline)
    if hasattr(features, "near_polyline"):
        candidates = features.near_polyline(polyline, buffer_m)
    else:
        candidates = [
            f
            for f in features
            if point_polyline_distance_m(f.point, polyline) <= buffer_m
        ]
    for feature in candidates:
        kind = _COUNTED_FEATURE_KINDS.get(feature.kind)
        if kind is not None:
            counts[kind] += 1.0
    return counts


def pollution_count(sample: AirQualitySample, tau: float = DEFAULT_TAU) -> float:
    """Linear inversion of the 1..5 grade into a pseudo-count in [0, tau]."""
    return tau * (5 - sample.aqi) / 4.0


def average_capped_counts(
    route_counts: list[SegmentCounts], tau: float = DEFAULT_TAU
) -> dict[IndicatorKind, float]:
    """Per-indicator mean of per-segment counts, each capped at tau."""
    if not route_counts:
        raise EmptyRoute("cannot average over zero segments")
    n = len(route_counts)
    return {
        kind: sum(min(counts.get(kind, 0.0), tau) for counts in route_counts) / n
        for kind in INDICATOR_ORDER
    }


@dataclass(frozen=True)
class WalkabilityScore:
    c: dict[IndicatorKind, float]
    weights: IndicatorWeights
    tau: float
    ws: float

    @classmethod
    def zero(cls, weights: IndicatorWeights, tau: float = DEFAULT_TAU) -> "WalkabilityScore":
        return cls({k: 0.0 for k in INDICATOR_ORDER}, weights, tau, 0.0)


def walkability_score(
    c: dict[IndicatorKind, float],
    weights: IndicatorWeights,
    tau: float = DEFAULT_TAU,
) -> WalkabilityScore:
    """ws = sum_i(w_i * c_i) / tau, guaranteed inside [0, 1]."""
    if tau <= 0.0:
        raise ValueError("tau must be positive")
    for kind in INDICATOR_ORDER:
        value = c.get(kind, 0.0)
        if value < 0.0 or value > tau:
            raise ValueError(f"c[{kind.value}] = {value} outside [0, tau]")
    ws = sum(weights.w[k] * c.get(k, 0.0) for k in INDICATOR_ORDER) / tau
    ws = min(1.0, max(0.0, ws))  # shave float dust only; the math already bounds it
    return WalkabilityScore(dict(c), weights, tau, ws)


@dataclass(frozen=True)
class ScoredRoute:
    route: RouteCandidate
    score: WalkabilityScore
    flags: tuple[str, ...] = field(default_factory=tuple)


def route_midpoint(route: RouteCandidate) -> LatLon:
    """First polyline vertex at or past half the total length."""
    points = route.polyline()
    if not points:
        raise EmptyRoute("route has no geometry")
    half = route.total_length_m / 2.0
    walked = 0.0
    for seg in route.segments:
        walked += seg.length_m
        if walked >= half:
            return seg.polyline[-1]
    return points[-1]


def score_route(
    route: RouteCandidate,
    features,
    air_client: AirQualityClient | None,
    weights: IndicatorWeights,
    tau: float = DEFAULT_TAU,
    buffer_m: float = DEFAULT_INDICATOR_BUFFER_M,
) -> ScoredRoute:
    """Full scoring pipeline for one candidate; never fails on a dead AQI feed."""
    if not route.segments:
        return ScoredRoute(route, WalkabilityScore.zero(weights, tau), ("empty_route",))

    flags: list[str] = []
    if air_client is None:
        pollution = tau / 2.0
        flags.append("pollution_estimated")
    else:
        try:
            sample = fetch_air_quality(route_midpoint(route), air_client)
            pollution = pollution_count(sample, tau)
        except Unavailable:
            pollution = tau / 2.0
            flags.append("pollution_estimated")

    per_segment: list[SegmentCounts] = []
    for segment in route.segments:
        counts = count_indicators(segment, features, buffer_m)
        counts[IndicatorKind.POLLUTION] = pollution
        per_segment.append(counts)

    c = average_capped_counts(per_segment, tau)
    return ScoredRoute(route, walkability_score(c, weights, tau), tuple(flags))


def select_best_route(scored: list[ScoredRoute]) -> ScoredRoute:
    """Max-ws candidate; ties go to the shorter route, then the earlier one."""
    if not scored:
        raise NoCandidates("no scored candidates")
    best = scored[0]
    for candidate in scored[1:]:
        if candidate.score.ws > best.score.ws or (
            candidate.score.ws == best.score.ws
            and candidate.route.total_length_m < best.route.total_length_m
        ):
            best = candidate
    return best
