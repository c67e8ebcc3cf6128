"""Conversation sessions: ordered turn history plus the active route.

Sessions are independent; turns inside one session are serialized by its
lock. With a log directory configured, every turn is appended to a
per-session JSONL file so a demo survives restarts.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import UnknownSession
from ..walkability import ScoredRoute
from .payload import RoutePayload


@dataclass(frozen=True)
class ConversationTurn:
    utterance: str
    intent_kind: str
    answer: str
    error: str | None = None


@dataclass
class ConversationState:
    session_id: str
    turns: list[ConversationTurn] = field(default_factory=list)
    last_payload: RoutePayload | None = None
    last_scored_route: ScoredRoute | None = None
    last_joined: dict = field(default_factory=dict)
    route_body_cache: str | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def record(self, turn: ConversationTurn, log_dir: Path | None = None) -> None:
        self.turns.append(turn)
        if log_dir is not None:
            log_dir.mkdir(parents=True, exist_ok=True)
            entry = {
                "t": time.time(),
                "utterance": turn.utterance,
                "intent_kind": turn.intent_kind,
                "answer": turn.answer,
                "error": turn.error,
            }
            with (log_dir / f"{self.session_id}.jsonl").open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(entry, ensure_ascii=True) + "\n")

    def set_route(self, payload: RoutePayload, scored: ScoredRoute, joined: dict) -> None:
        # at most one active route per session: the newest wins
        self.last_payload = payload
        self.last_scored_route = scored
        self.last_joined = joined
        self.route_body_cache = None


class SessionStore:
    def __init__(self, log_dir: Path | None = None):
        self._sessions: dict[str, ConversationState] = {}
        self._lock = threading.Lock()
        self.log_dir = log_dir

    def create(self) -> ConversationState:
        session_id = secrets.token_urlsafe(16)  # 22 chars, opaque
        state = ConversationState(session_id=session_id)
        with self._lock:
            self._sessions[session_id] = state
        return state

    def get(self, session_id: str) -> ConversationState:
        with self._lock:
            if session_id not in self._sessions:
                raise UnknownSession(session_id)
            return self._sessions[session_id]

    def __len__(self) -> int:
        return len(self._sessions)
