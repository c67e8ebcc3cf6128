"""Passage corpus: JSONL ingestion into an in-memory store.

One JSON object per line with `id` and `text` (optional `source`); blank
lines are ignored, anything else is a MalformedLine, and a repeated id is
a DuplicateId. Insertion order is preserved so downstream artifacts are
byte-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO, Iterable

from ..errors import DuplicateId, MalformedLine


@dataclass(frozen=True)
class Passage:
    passage_id: str
    text: str
    source: str | None = None


class PassageStore:
    def __init__(self) -> None:
        self._passages: dict[str, Passage] = {}

    def __len__(self) -> int:
        return len(self._passages)

    def __contains__(self, passage_id: str) -> bool:
        return passage_id in self._passages

    def add(self, passage: Passage) -> None:
        if passage.passage_id in self._passages:
            raise DuplicateId(passage.passage_id)
        self._passages[passage.passage_id] = passage

    def get(self, passage_id: str) -> Passage:
        return self._passages[passage_id]

    def all(self) -> list[Passage]:
        return list(self._passages.values())


def ingest_corpus(stream: IO, store: PassageStore) -> int:
    """Read JSONL lines into the store; returns the number ingested."""
    count = 0
    for line_no, raw in enumerate(_text_lines(stream), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedLine(line_no, str(exc)) from exc
        if not isinstance(obj, dict) or "id" not in obj or "text" not in obj:
            raise MalformedLine(line_no, "object must carry `id` and `text`")
        passage_id = str(obj["id"])
        text = str(obj["text"])
        if not text:
            raise MalformedLine(line_no, "empty text")
        store.add(Passage(passage_id, text, obj.get("source")))
        count += 1
    return count


def _text_lines(stream: IO) -> Iterable[str]:
    for raw in stream:
        yield raw.decode("utf-8") if isinstance(raw, bytes) else raw
