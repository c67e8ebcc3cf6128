"""Exception hierarchy shared across the engine.

Every error that a caller is expected to handle (CLI exit codes, HTTP
status mapping, graceful degradation) lives here so the mapping stays in
one place.
"""

from __future__ import annotations


class WalkragError(Exception):
    """Base class for all engine errors."""


# --- map ingestion ---------------------------------------------------------

class MalformedInput(WalkragError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"malformed input at line {line}: {reason}")


class DanglingReference(WalkragError):
    def __init__(self, way_id: int, node_id: int):
        self.way_id = way_id
        self.node_id = node_id
        super().__init__(f"way {way_id} references missing node {node_id}")


class EmptyGraph(WalkragError):
    """No walkable way exists in the extract."""


# --- geocoding / routing ---------------------------------------------------

class NotFound(WalkragError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no gazetteer entry for {name!r}")


class TooFar(WalkragError):
    def __init__(self, distance_m: float, max_snap_m: float):
        self.distance_m = distance_m
        self.max_snap_m = max_snap_m
        super().__init__(
            f"nearest graph node is {distance_m:.0f} m away (limit {max_snap_m:.0f} m)"
        )


class NoRoute(WalkragError):
    def __init__(self, src: int, dst: int):
        self.src = src
        self.dst = dst
        super().__init__(f"no route from node {src} to node {dst}")


# --- walkability -----------------------------------------------------------

class InvalidWeights(WalkragError):
    """Indicator weights do not sum to 1."""


class EmptyRoute(WalkragError):
    """Zero-segment route where at least one segment is required."""


class NoCandidates(WalkragError):
    """Route selection called with an empty candidate list."""


# --- air quality -----------------------------------------------------------

class Unavailable(WalkragError):
    """Air-quality client failed; callers must degrade gracefully."""


# --- retrieval -------------------------------------------------------------

class MalformedLine(WalkragError):
    def __init__(self, line_no: int, reason: str = "not a valid JSON object"):
        self.line_no = line_no
        super().__init__(f"corpus line {line_no}: {reason}")


class DuplicateId(WalkragError):
    def __init__(self, passage_id: str):
        self.passage_id = passage_id
        super().__init__(f"duplicate passage id {passage_id!r}")


class DimensionMismatch(WalkragError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected dimension {expected}, got {got}")


class EncoderFailure(WalkragError):
    """Embedding backend failed or returned an unusable vector."""


# --- conversation ----------------------------------------------------------

class EmptyUtterance(WalkragError):
    """Blank user message."""


class ClientFailure(WalkragError):
    """LLM client failed to produce an answer."""


class UnknownSession(WalkragError):
    def __init__(self, session_id: str):
        self.session_id = session_id
        super().__init__(f"unknown session {session_id!r}")


class NoActiveRoute(WalkragError):
    """Session has no route to report yet."""
