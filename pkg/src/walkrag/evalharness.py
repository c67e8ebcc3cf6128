"""Offline evaluation harness over a JSONL query dataset.

Each record is one user query labeled spatial or information. Spatial
records carry the expected origin/destination names; information records
may carry the passage id that should surface in the top-k. The bundled
dataset interleaves 10 spatial queries with 3 follow-up information
queries each, 40 in total.

Verdicts are automated proxies for a human label:

  spatial      correct            continuous route, both endpoints within
                                  100 m of their geocoded places, every
                                  suggested POI within the join buffer
               partially_correct  continuous, but the generated answer
                                  collapsed steps that duplicate earlier
                                  instructions (one operationalization of
                                  "minor omissions"; flagged in details)
               incorrect          no route, discontinuity, endpoint miss,
                                  or a POI outside the buffer
  information  correct            expected passage in the top-k (or, with
                                  no expectation, any grounded answer)
               partially_correct  grounded but the expected passage missed
               incorrect          nothing retrieved
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass, field
from pathlib import Path

from .geodata.gazetteer import geocode
from .quag.engine import Engine
from .quag.intent import INFORMATION, SPATIAL
from .routing.geo import haversine, point_polyline_distance_m

ENDPOINT_TOLERANCE_M = 100.0

VERDICTS = ("correct", "partially_correct", "incorrect")


@dataclass(frozen=True)
class EvalRecord:
    query: str
    kind: str  # "spatial" | "information"
    origin: str = ""
    destination: str = ""
    expected_pois: tuple[str, ...] = ()
    expected_passage_id: str = ""

    @classmethod
    def from_dict(cls, obj: dict) -> "EvalRecord":
        kind = obj.get("kind", "")
        if kind not in (SPATIAL, INFORMATION):
            raise ValueError(f"record kind must be spatial|information, got {kind!r}")
        if not obj.get("query"):
            raise ValueError("record needs a query")
        if kind == SPATIAL and (not obj.get("origin") or not obj.get("destination")):
            raise ValueError("spatial records need origin and destination")
        return cls(
            query=obj["query"],
            kind=kind,
            origin=obj.get("origin", ""),
            destination=obj.get("destination", ""),
            expected_pois=tuple(obj.get("expected_pois", [])),
            expected_passage_id=obj.get("expected_passage_id", ""),
        )


@dataclass
class QueryResult:
    query: str
    kind: str
    verdict: str
    detail: str = ""


@dataclass
class EvalReport:
    results: list[QueryResult] = field(default_factory=list)
    classification_hits: int = 0
    elapsed_s: float = 0.0

    def counts(self, kind: str) -> dict[str, int]:
        table = {v: 0 for v in VERDICTS}
        for r in self.results:
            if r.kind == kind:
                table[r.verdict] += 1
        return table

    def total(self, kind: str) -> int:
        return sum(1 for r in self.results if r.kind == kind)

    def to_dict(self) -> dict:
        return {
            "classification_accuracy": f"{self.classification_hits}/{len(self.results)}",
            "spatial": self.counts(SPATIAL),
            "information": self.counts(INFORMATION),
            "elapsed_s": round(self.elapsed_s, 2),
            "queries": [
                {"query": r.query, "kind": r.kind, "verdict": r.verdict, "detail": r.detail}
                for r in self.results
            ],
        }

    def render_table(self) -> str:
        lines = [
            f"{'type':<12} {'correct':>8} {'partially':>10} {'incorrect':>10} {'total':>6}",
        ]
        for kind in (SPATIAL, INFORMATION):
            c = self.counts(kind)
            lines.append(
                f"{kind:<12} {c['correct']:>8} {c['partially_correct']:>10} "
                f"{c['incorrect']:>10} {self.total(kind):>6}"
            )
        lines.append(
            f"classification: {self.classification_hits}/{len(self.results)} routed correctly"
        )
        return "\n".join(lines)


def load_dataset(path: Path) -> list[EvalRecord]:
    records = []
    with path.open(encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                records.append(EvalRecord.from_dict(json.loads(line)))
            except (json.JSONDecodeError, ValueError) as exc:
                raise ValueError(f"{path}:{line_no}: {exc}") from exc
    return records


_STEP_RE = re.compile(r"^(\d+)\.\s+(.*)$")


def answer_steps(answer: str) -> list[str]:
    """Numbered step lines restated by the generator, in order."""
    steps = []
    for line in answer.splitlines():
        m = _STEP_RE.match(line.strip())
        if m:
            steps.append(m.group(2).strip())
    return steps


def detect_duplicate_collapse(payload_instructions: list[str], answer: str) -> tuple[bool, bool]:
    """(all steps present in order, omissions are all duplicates of earlier steps)."""
    steps = answer_steps(answer)
    missing: list[int] = []
    pos = 0
    for i, expected in enumerate(payload_instructions):
        hit = next((j for j in range(pos, len(steps)) if steps[j] == expected), None)
        if hit is None:
            missing.append(i)
        else:
            pos = hit + 1
    if not missing:
        return True, True
    duplicates_only = all(
        payload_instructions[i] in payload_instructions[:i] for i in missing
    )
    return False, duplicates_only


def judge_spatial(engine: Engine, record: EvalRecord, result, state) -> QueryResult:
    if result.payload is None or result.error is not None:
        return QueryResult(record.query, SPATIAL, "incorrect", result.error or "no payload")

    payload = result.payload
    route = state.last_scored_route.route

    if not route.is_continuous():
        return QueryResult(record.query, SPATIAL, "incorrect", "discontinuous route")

    polyline = route.polyline()
    if polyline:
        origin_pt = geocode(record.origin, engine.gazetteer)
        dest_pt = geocode(record.destination, engine.gazetteer)
        if haversine(polyline[0], origin_pt) > ENDPOINT_TOLERANCE_M:
            return QueryResult(record.query, SPATIAL, "incorrect", "origin endpoint miss")
        if haversine(polyline[-1], dest_pt) > ENDPOINT_TOLERANCE_M:
            return QueryResult(record.query, SPATIAL, "incorrect", "destination endpoint miss")

    # every suggested POI must lie within the join buffer of the route
    for pois in state.last_joined.values():
        for poi in pois:
            d = point_polyline_distance_m(poi.point, polyline)
            if d > engine.config.poi_buffer_m:
                return QueryResult(
                    record.query,
                    SPATIAL,
                    "incorrect",
                    f"POI {poi.name or poi.feature_id} is {d:.0f} m from the route",
                )

    instruction_texts = [i.text for i in payload.instructions]
    complete, duplicates_only = detect_duplicate_collapse(instruction_texts, result.answer)
    if complete:
        return QueryResult(record.query, SPATIAL, "correct")
    detail = "answer omits duplicate steps" if duplicates_only else "answer omits steps"
    return QueryResult(record.query, SPATIAL, "partially_correct", detail)


def judge_information(record: EvalRecord, result) -> QueryResult:
    passages = result.passages or []
    if not passages:
        return QueryResult(record.query, INFORMATION, "incorrect", "nothing retrieved")
    if record.expected_passage_id:
        ids = [p.passage_id for p in passages]
        if record.expected_passage_id in ids:
            return QueryResult(record.query, INFORMATION, "correct")
        return QueryResult(
            record.query,
            INFORMATION,
            "partially_correct",
            f"expected {record.expected_passage_id}, got {ids}",
        )
    return QueryResult(record.query, INFORMATION, "correct", "grounded (no expectation)")


def run_eval(engine: Engine, records: list[EvalRecord]) -> EvalReport:
    """Run every query through a fresh session and judge the outcomes."""
    report = EvalReport()
    started = time.monotonic()
    session = engine.create_session()
    for record in records:
        result = engine.post_message(session.session_id, record.query)
        if result.intent_kind == record.kind:
            report.classification_hits += 1
            if record.kind == SPATIAL:
                report.results.append(judge_spatial(engine, record, result, session))
            else:
                report.results.append(judge_information(record, result))
        else:
            report.results.append(
                QueryResult(
                    record.query,
                    record.kind,
                    "incorrect",
                    f"misrouted to {result.intent_kind}",
                )
            )
    report.elapsed_s = time.monotonic() - started
    return report


def check_dataset_shape(records: list[EvalRecord]) -> tuple[int, int]:
    """(spatial count, information count); enforces the 1 spatial + 3 info blocks."""
    spatial = sum(1 for r in records if r.kind == SPATIAL)
    information = sum(1 for r in records if r.kind == INFORMATION)
    for i in range(0, len(records) - len(records) % 4, 4):
        block = records[i : i + 4]
        if len(block) == 4:
            expected = [SPATIAL, INFORMATION, INFORMATION, INFORMATION]
            if [r.kind for r in block] != expected:
                raise ValueError(f"dataset block at record {i + 1} is not spatial+3xinformation")
    return spatial, information
