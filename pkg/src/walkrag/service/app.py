"""HTTP surface: four JSON endpoints over one shared engine.

  POST /api/sessions                  -> {"session_id"}
  POST /api/sessions/{id}/messages    -> {answer, intent_kind, payload?, passages?}
  GET  /api/sessions/{id}/route       -> {payload, geometry, pois}
  GET  /api/health                    -> {status, corpus_size, graph_nodes}

Engine state (graph, indexes) is read-only after startup; per-session turn
serialization happens inside the engine. Route reads never mutate state
and repeated calls return byte-identical bodies (the rendered body is
cached on the session until the next route replaces it). All errors carry
a machine-readable {error_code, message} body.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from ..errors import ClientFailure, EmptyUtterance, NoActiveRoute, UnknownSession
from ..quag.engine import Engine

_ERROR_STATUS = {
    "unknown_session": 404,
    "no_active_route": 404,
    "empty_utterance": 400,
    "client_failure": 502,
}


def _error(code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=_ERROR_STATUS[code],
        content={"error_code": code, "message": message},
    )


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="walkrag", docs_url=None, redoc_url=None)

    @app.exception_handler(UnknownSession)
    async def _unknown_session(request: Request, exc: UnknownSession):
        return _error("unknown_session", str(exc))

    @app.exception_handler(EmptyUtterance)
    async def _empty_utterance(request: Request, exc: EmptyUtterance):
        return _error("empty_utterance", "utterance must be non-empty")

    @app.exception_handler(ClientFailure)
    async def _client_failure(request: Request, exc: ClientFailure):
        return _error(
            "client_failure",
            "The answer generator is temporarily unavailable; please retry.",
        )

    @app.exception_handler(NoActiveRoute)
    async def _no_active_route(request: Request, exc: NoActiveRoute):
        return _error("no_active_route", "this session has no route yet")

    @app.get("/api/health")
    def health() -> dict:
        stats = engine.stats()
        return {
            "status": "ok",
            "corpus_size": stats["corpus_size"],
            "graph_nodes": stats["graph_nodes"],
        }

    @app.post("/api/sessions", status_code=201)
    def create_session() -> dict:
        state = engine.create_session()
        return {"session_id": state.session_id}

    @app.post("/api/sessions/{session_id}/messages")
    async def post_message(session_id: str, request: Request) -> dict:
        try:
            body = await request.json()
        except json.JSONDecodeError:
            body = {}
        utterance = body.get("utterance", "") if isinstance(body, dict) else ""
        if not isinstance(utterance, str) or not utterance.strip():
            engine.sessions.get(session_id)  # 404 beats 400 for a dead session
            raise EmptyUtterance("utterance is empty")
        result = engine.post_message(session_id, utterance)
        response = {"answer": result.answer, "intent_kind": result.intent_kind}
        if result.payload is not None:
            response["payload"] = result.payload.to_dict()
        if result.passages is not None:
            response["passages"] = [
                {"id": p.passage_id, "text": p.text} for p in result.passages
            ]
            response["grounded"] = result.grounded
        if result.error is not None:
            response["error_flag"] = result.error
        return response

    @app.get("/api/sessions/{session_id}/route")
    def get_route(session_id: str) -> Response:
        state = engine.sessions.get(session_id)
        if state.last_payload is None:
            raise NoActiveRoute()
        if state.route_body_cache is None:
            state.route_body_cache = json.dumps(
                engine.route_view(state), indent=2, ensure_ascii=True
            )
        return Response(content=state.route_body_cache, media_type="application/json")

    return app
