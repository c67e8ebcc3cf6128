from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from walkrag.service.app import create_app


@pytest.fixture(scope="module")
def client(engine):
    return TestClient(create_app(engine), raise_server_exceptions=False)


def _session(client) -> str:
    resp = client.post("/api/sessions")
    assert resp.status_code == 201
    return resp.json()["session_id"]


def test_health(client, engine):
    resp = client.get("/api/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["corpus_size"] == len(engine.store)
    assert body["graph_nodes"] == len(engine.graph.nodes)


def test_two_sessions_distinct(client):
    assert _session(client) != _session(client)


def test_spatial_message_returns_payload(client):
    sid = _session(client)
    resp = client.post(
        f"/api/sessions/{sid}/messages",
        json={"utterance": "I want a route from North Gate to the Glass Museum"},
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["intent_kind"] == "spatial"
    assert body["payload"]["payload_version"] == 1
    assert body["payload"]["origin"] == "North Gate"
    assert body["answer"]


def test_information_message_returns_passages(client):
    sid = _session(client)
    resp = client.post(
        f"/api/sessions/{sid}/messages",
        json={"utterance": "Tell me about the Aster River"},
    )
    body = resp.json()
    assert body["intent_kind"] == "information"
    assert len(body["passages"]) == 3
    assert body["grounded"] is True
    assert "payload" not in body


def test_unknown_session_404(client):
    resp = client.post("/api/sessions/zzz/messages", json={"utterance": "hi"})
    assert resp.status_code == 404
    assert resp.json()["error_code"] == "unknown_session"


def test_empty_utterance_400(client):
    sid = _session(client)
    for body in ({"utterance": ""}, {"utterance": "   "}, {}, None):
        resp = client.post(f"/api/sessions/{sid}/messages", json=body)
        assert resp.status_code == 400
        assert resp.json()["error_code"] == "empty_utterance"


def test_route_before_any_spatial_turn_404(client):
    sid = _session(client)
    resp = client.get(f"/api/sessions/{sid}/route")
    assert resp.status_code == 404
    assert resp.json()["error_code"] == "no_active_route"


def test_route_view_after_spatial_turn(client):
    sid = _session(client)
    client.post(
        f"/api/sessions/{sid}/messages",
        json={"utterance": "Plan an itinerary from City Hall to Observatory Hill"},
    )
    resp = client.get(f"/api/sessions/{sid}/route")
    assert resp.status_code == 200
    body = resp.json()
    payload = body["payload"]
    assert body["geometry"]["type"] == "LineString"
    assert len(body["geometry"]["coordinates"]) == len(payload["segments"]) + 1
    assert body["pois"]["type"] == "FeatureCollection"


def test_route_reads_are_stateless_and_byte_identical(client):
    sid = _session(client)
    client.post(
        f"/api/sessions/{sid}/messages",
        json={"utterance": "Route from the Clock Tower to South Gate, please"},
    )
    first = client.get(f"/api/sessions/{sid}/route")
    second = client.get(f"/api/sessions/{sid}/route")
    assert first.content == second.content


def test_client_failure_maps_to_502(engine):
    class Boom:
        def generate(self, prompt):
            raise TimeoutError("model gone")

    from walkrag.quag.engine import Engine

    broken = Engine(
        config=engine.config,
        graph=engine.graph,
        features=engine.features,
        gazetteer=engine.gazetteer,
        air_client=engine.air_client,
        store=engine.store,
        index=engine.index,
        encoder=engine.encoder,
        llm=Boom(),
    )
    client = TestClient(create_app(broken), raise_server_exceptions=False)
    sid = client.post("/api/sessions").json()["session_id"]
    resp = client.post(
        f"/api/sessions/{sid}/messages",
        json={"utterance": "Tell me about the Old Mill"},
    )
    assert resp.status_code == 502
    body = resp.json()
    assert body["error_code"] == "client_failure"
    assert "retry" in body["message"].lower()
    # the failed turn is recorded with its error flag
    state = broken.sessions.get(sid)
    assert state.turns[-1].error == "client_failure"


def test_error_bodies_are_machine_readable(client):
    resp = client.get("/api/sessions/ghost/route")
    body = resp.json()
    assert set(body) == {"error_code", "message"}
    assert json.dumps(body)  # serializable


def test_concurrent_sessions_do_not_interleave_turns(engine):
    import threading

    def converse(sid: str, utterances: list[str], failures: list[str]):
        for utterance in utterances:
            result = engine.post_message(sid, utterance)
            if not result.answer:
                failures.append(sid)

    utterances = [
        "Tell me about the Aster River",
        "I want a route from North Gate to the Glass Museum",
        "What happens at Market Square?",
    ]
    sessions = [engine.create_session() for _ in range(6)]
    failures: list[str] = []
    threads = [
        threading.Thread(target=converse, args=(s.session_id, utterances, failures))
        for s in sessions
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not failures
    for s in sessions:
        assert [t.utterance for t in s.turns] == utterances  # strict per-session order
