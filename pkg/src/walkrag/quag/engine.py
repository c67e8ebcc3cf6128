"""Conversation engine: classify, dispatch, ground, generate.

One Engine owns the loaded city (graph, features, gazetteer), the vector
index, and the pluggable encoder/LLM clients. Spatial intents run the
full route pipeline — geocode, snap, alternatives, score, select, enrich
— and produce a RoutePayload; information intents retrieve top-k passages.
Either way the answer is generated from a grounded prompt, and geocoding
or routing failures turn into apologetic clarifications, never into an
invented route.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..config import ServiceConfig
from ..enrichment import PreferenceFilter, SpatialIndex, buffer_route, spatial_join
from ..errors import ClientFailure, EmptyUtterance, NoRoute, NotFound, TooFar
from ..geodata import (
    FixtureAirQuality,
    Gazetteer,
    PedestrianGraph,
    build_pedestrian_graph,
    extract_features,
    geocode,
    load_gazetteer,
    parse_map_extract,
)
from ..geodata.airquality import AirQualityClient
from ..geodata.features import FeatureSet
from ..retrieval import (
    HashingEncoder,
    HttpEncoder,
    Passage,
    PassageStore,
    VectorIndex,
    build_index,
    embed_corpus,
    ingest_corpus,
    load_index,
    search,
)
from ..routing import alternative_routes, route_to_geojson, snap_to_graph
from ..walkability import (
    IndicatorKind,
    IndicatorWeights,
    ScoredRoute,
    score_route,
    select_best_route,
)
from .intent import INFORMATION, SPATIAL, Intent, IntentClassifier, RuleBasedClassifier
from .llm import HttpLLMClient, LLMClient, MockLLMClient, generate_answer
from .payload import RoutePayload, build_route_payload
from .prompt import assemble_information_prompt, assemble_spatial_prompt
from .state import ConversationState, ConversationTurn, SessionStore


@dataclass
class TurnResult:
    answer: str
    intent_kind: str
    payload: RoutePayload | None = None
    passages: list[Passage] | None = None
    grounded: bool = True
    error: str | None = None


class Engine:
    def __init__(
        self,
        config: ServiceConfig,
        graph: PedestrianGraph,
        features: FeatureSet,
        gazetteer: Gazetteer,
        air_client: AirQualityClient | None,
        store: PassageStore,
        index: VectorIndex,
        encoder,
        llm: LLMClient,
        classifier: IntentClassifier | None = None,
    ):
        self.config = config
        self.graph = graph
        self.features = features
        self.feature_index = SpatialIndex(features)
        self.gazetteer = gazetteer
        self.air_client = air_client
        self.store = store
        self.index = index
        self.encoder = encoder
        self.llm = llm
        self.classifier = classifier or RuleBasedClassifier(gazetteer)
        self.sessions = SessionStore(log_dir=config.session_log_dir)

    # --- spatial pipeline ----------------------------------------------

    def _weights_for(self, preferences: tuple[str, ...]) -> IndicatorWeights:
        preferred = {
            IndicatorKind(token.split(":", 1)[1])
            for token in preferences
            if token.startswith("indicator:")
        }
        if not preferred:
            return IndicatorWeights({IndicatorKind(k): v for k, v in self.config.weights.items()})
        return IndicatorWeights.with_preferences(preferred)

    def _poi_filter(self, preferences: tuple[str, ...]) -> PreferenceFilter:
        categories = frozenset(
            token.split(":", 1)[1] for token in preferences if token.startswith("category:")
        )
        return PreferenceFilter(categories)

    def handle_spatial(self, intent: Intent) -> tuple[RoutePayload, ScoredRoute, dict]:
        """Geocode -> snap -> alternatives -> score -> select -> enrich -> payload."""
        cfg = self.config
        origin_pt = geocode(intent.origin, self.gazetteer)
        dest_pt = geocode(intent.destination, self.gazetteer)
        src = snap_to_graph(origin_pt, self.graph, cfg.max_snap_m)
        dst = snap_to_graph(dest_pt, self.graph, cfg.max_snap_m)

        candidates = alternative_routes(
            self.graph, src, dst, k=cfg.k_routes, penalty_factor=cfg.penalty_factor
        )
        weights = self._weights_for(intent.preferences)
        scored = [
            score_route(
                route,
                self.feature_index,
                self.air_client,
                weights,
                tau=cfg.tau,
                buffer_m=cfg.indicator_buffer_m,
            )
            for route in candidates
        ]
        best = select_best_route(scored)

        corridor = buffer_route(best.route, cfg.poi_buffer_m)
        joined = spatial_join(corridor, self.feature_index, self._poi_filter(intent.preferences))
        payload = build_route_payload(intent.origin, intent.destination, best, joined)
        return payload, best, joined

    # --- information pipeline --------------------------------------------

    def handle_information(self, utterance: str, k: int | None = None) -> tuple[list[Passage], bool]:
        """Top-k passages for the utterance; grounded=False when none come back."""
        results = search(utterance, k or self.config.k_passages, self.index, self.encoder)
        passages = [self.store.get(r.passage_id) for r in results]
        return passages, bool(passages)

    # --- conversation ------------------------------------------------------

    def create_session(self) -> ConversationState:
        return self.sessions.create()

    def post_message(self, session_id: str, utterance: str) -> TurnResult:
        state = self.sessions.get(session_id)
        with state.lock:
            return self._run_turn(state, utterance)

    def _run_turn(self, state: ConversationState, utterance: str) -> TurnResult:
        if not utterance or not utterance.strip():
            raise EmptyUtterance("utterance is empty")
        intent = self.classifier.classify(utterance, state)

        try:
            if intent.kind == SPATIAL:
                result = self._spatial_turn(intent, utterance, state)
            else:
                result = self._information_turn(utterance)
        except ClientFailure:
            state.record(
                ConversationTurn(utterance, intent.kind, "", error="client_failure"),
                self.sessions.log_dir,
            )
            raise

        state.record(
            ConversationTurn(utterance, result.intent_kind, result.answer, result.error),
            self.sessions.log_dir,
        )
        return result

    def _spatial_turn(self, intent: Intent, utterance: str, state: ConversationState) -> TurnResult:
        try:
            payload, best, joined = self.handle_spatial(intent)
        except NotFound as exc:
            answer = (
                f"I could not find a place called \"{exc.name}\". Could you check the "
                "name or try a nearby landmark?"
            )
            return TurnResult(answer, SPATIAL, error="not_found")
        except TooFar:
            answer = (
                "That location is too far from the walkable street network I know "
                "about, so I cannot route you there on foot."
            )
            return TurnResult(answer, SPATIAL, error="too_far")
        except NoRoute:
            answer = (
                "I'm sorry, I could not find a continuous walking route between "
                "those two places."
            )
            return TurnResult(answer, SPATIAL, error="no_route")

        prompt = assemble_spatial_prompt(payload, utterance)
        answer = generate_answer(prompt, self.llm)
        state.set_route(payload, best, joined)
        return TurnResult(answer, SPATIAL, payload=payload)

    def _information_turn(self, utterance: str) -> TurnResult:
        passages, grounded = self.handle_information(utterance)
        prompt = assemble_information_prompt(passages, utterance)
        answer = generate_answer(prompt, self.llm)
        return TurnResult(answer, INFORMATION, passages=passages, grounded=grounded)

    # --- route view ---------------------------------------------------------

    def route_view(self, state: ConversationState) -> dict:
        """Last payload plus GeoJSON geometry and POI points for map rendering."""
        assert state.last_payload is not None and state.last_scored_route is not None
        route = state.last_scored_route.route
        poi_points = []
        for seg_index in sorted(state.last_joined):
            for feature in state.last_joined[seg_index]:
                poi_points.append(
                    {
                        "type": "Feature",
                        "geometry": {
                            "type": "Point",
                            "coordinates": [feature.point[1], feature.point[0]],
                        },
                        "properties": {
                            "name": feature.name or feature.feature_id,
                            "category": feature.category or "",
                            "segment": seg_index,
                        },
                    }
                )
        return {
            "payload": state.last_payload.to_dict(),
            "geometry": route_to_geojson(route),
            "pois": {"type": "FeatureCollection", "features": poi_points},
        }

    # --- stats ----------------------------------------------------------------

    def stats(self) -> dict:
        return {
            "graph_nodes": len(self.graph.nodes),
            "graph_edges": self.graph.edge_count(),
            "features": len(self.features),
            "corpus_size": len(self.store),
            "gazetteer_entries": len(self.gazetteer),
        }


def build_engine(config: ServiceConfig) -> Engine:
    """Load every artifact named by the config and assemble a ready engine."""
    with open(config.map_path, "rb") as fh:
        extract = parse_map_extract(fh)
    graph = build_pedestrian_graph(extract)
    features = extract_features(extract)
    gazetteer = load_gazetteer(Path(config.gazetteer_path))

    air_client = None
    if config.air_quality_path is not None and Path(config.air_quality_path).exists():
        air_client = FixtureAirQuality.from_file(Path(config.air_quality_path))

    store = PassageStore()
    with open(config.corpus_path, "r", encoding="utf-8") as fh:
        ingest_corpus(fh, store)

    if config.encoder_mode == "external":
        encoder = HttpEncoder(config.encoder_url, config.encoder_dimension)
    else:
        encoder = HashingEncoder(config.encoder_dimension)

    if config.index_path is not None and Path(config.index_path).exists():
        index = load_index(Path(config.index_path))
    else:
        index = build_index(embed_corpus(store.all(), encoder), mode=config.index_mode)

    llm: LLMClient = (
        HttpLLMClient(config.llm_url) if config.llm_mode == "external" else MockLLMClient()
    )
    return Engine(
        config=config,
        graph=graph,
        features=features,
        gazetteer=gazetteer,
        air_client=air_client,
        store=store,
        index=index,
        encoder=encoder,
        llm=llm,
    )
