"""Utterance intent classification and slot extraction.

The rule-based classifier marks an utterance Spatial when it carries a
route-request pattern ("route/walk/itinerary ... from X to Y", or
"get to Y from X") whose two place slots both geocode; everything else is
Information. A classifier built on a language model can be plugged in
behind the same contract, but the rule-based path is the deterministic
one the tests rely on.

Preference phrases ("with plenty of green areas", "passing museums") map
through a fixed keyword table onto either a walkability indicator or a
POI category filter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Protocol

from ..errors import EmptyUtterance, NotFound
from ..geodata.gazetteer import Gazetteer
from ..walkability import IndicatorKind


@dataclass(frozen=True)
class Intent:
    kind: str  # "spatial" | "information"
    origin: str = ""
    destination: str = ""
    preferences: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "spatial" and (not self.origin or not self.destination):
            raise ValueError("spatial intents need both origin and destination")


SPATIAL = "spatial"
INFORMATION = "information"

_ROUTE_WORDS = re.compile(
    r"\b(route|walk|walking|itinerary|itineraries|stroll|directions|path)\b", re.IGNORECASE
)
_FROM_TO = re.compile(r"\bfrom\s+(?P<src>.+?)\s+to\s+(?P<dst>.+)", re.IGNORECASE)
_GET_TO = re.compile(r"\bget\s+to\s+(?P<dst>.+?)\s+from\s+(?P<src>.+)", re.IGNORECASE)

# trailing clauses that qualify rather than name the place
_SLOT_CUTTERS = re.compile(
    r"\s+(?:with|passing|avoiding|via|that|which|prefer\w*|because|so\s+that|please)\b.*$",
    re.IGNORECASE,
)
_ARTICLE = re.compile(r"^(?:the|a|an)\s+", re.IGNORECASE)


def clean_slot(raw: str) -> str:
    """Trim punctuation, qualifier clauses, and a leading article."""
    slot = raw.strip()
    slot = re.split(r"[,.!?;]", slot, maxsplit=1)[0]
    slot = _SLOT_CUTTERS.sub("", slot)
    slot = _ARTICLE.sub("", slot.strip())
    return slot.strip()


# keyword -> indicator kind (weight bump) or POI category (join filter)
INDICATOR_KEYWORDS: dict[str, IndicatorKind] = {
    "green": IndicatorKind.GREEN_AREA,
    "greenery": IndicatorKind.GREEN_AREA,
    "park": IndicatorKind.GREEN_AREA,
    "parks": IndicatorKind.GREEN_AREA,
    "nature": IndicatorKind.GREEN_AREA,
    "trees": IndicatorKind.GREEN_AREA,
    "wheelchair": IndicatorKind.ACCESSIBILITY,
    "accessible": IndicatorKind.ACCESSIBILITY,
    "accessibility": IndicatorKind.ACCESSIBILITY,
    "pollution": IndicatorKind.POLLUTION,
    "smog": IndicatorKind.POLLUTION,
    "air": IndicatorKind.POLLUTION,
    "sidewalk": IndicatorKind.SIDEWALK,
    "sidewalks": IndicatorKind.SIDEWALK,
    "footway": IndicatorKind.SIDEWALK,
    "footways": IndicatorKind.SIDEWALK,
    "pavement": IndicatorKind.SIDEWALK,
}

POI_CATEGORY_KEYWORDS: dict[str, str] = {
    "museum": "museum",
    "museums": "museum",
    "gallery": "gallery",
    "galleries": "gallery",
    "viewpoint": "viewpoint",
    "viewpoints": "viewpoint",
    "hotel": "hotel",
    "hotels": "hotel",
    "attraction": "attraction",
    "attractions": "attraction",
    "artwork": "artwork",
    "artworks": "artwork",
    "monument": "monument",
    "monuments": "monument",
}


def parse_preference_token(token: str) -> tuple[str, str] | None:
    """("indicator", kind value) or ("category", category) for one keyword."""
    word = token.strip().lower()
    if word in INDICATOR_KEYWORDS:
        return ("indicator", INDICATOR_KEYWORDS[word].value)
    if word in POI_CATEGORY_KEYWORDS:
        return ("category", POI_CATEGORY_KEYWORDS[word])
    return None


def extract_preferences(utterance: str) -> tuple[str, ...]:
    """Canonical preference tokens found in the utterance, in table order.

    Indicator preferences are encoded as "indicator:<Kind>" and POI
    category preferences as "category:<name>", deduplicated.
    """
    words = re.findall(r"[a-z]+", utterance.lower())
    found: list[str] = []
    for word in words:
        parsed = parse_preference_token(word)
        if parsed is None:
            continue
        token = f"{parsed[0]}:{parsed[1]}"
        if token not in found:
            found.append(token)
    return tuple(found)


class IntentClassifier(Protocol):
    def classify(self, utterance: str, state=None) -> Intent: ...


@dataclass
class RuleBasedClassifier:
    """Deterministic classifier; with a gazetteer, slots must geocode."""

    gazetteer: Gazetteer | None = None

    def classify(self, utterance: str, state=None) -> Intent:
        if not utterance or not utterance.strip():
            raise EmptyUtterance("utterance is empty")

        slots = self._route_slots(utterance)
        if slots is not None:
            origin, destination = slots
            if self._resolvable(origin) and self._resolvable(destination):
                return Intent(
                    kind=SPATIAL,
                    origin=origin,
                    destination=destination,
                    preferences=extract_preferences(utterance),
                )
        return Intent(kind=INFORMATION)

    def _route_slots(self, utterance: str) -> tuple[str, str] | None:
        m = _GET_TO.search(utterance)
        if m:
            origin = clean_slot(m.group("src"))
            destination = clean_slot(m.group("dst"))
            if origin and destination:
                return origin, destination
        if _ROUTE_WORDS.search(utterance):
            m = _FROM_TO.search(utterance)
            if m:
                origin = clean_slot(m.group("src"))
                destination = clean_slot(m.group("dst"))
                if origin and destination:
                    return origin, destination
        return None

    def _resolvable(self, name: str) -> bool:
        if self.gazetteer is None:
            return True
        try:
            self.gazetteer.lookup(name)
            return True
        except NotFound:
            return False


def classify_intent(utterance: str, state=None, classifier: IntentClassifier | None = None) -> Intent:
    """Classify one utterance; defaults to the gazetteer-less rule classifier."""
    return (classifier or RuleBasedClassifier()).classify(utterance, state)
