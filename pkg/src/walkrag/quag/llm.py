"""LLM client contract, the deterministic mock, and an HTTP-backed client.

The mock is a pure function of the prompt: it finds the [CONTEXT] block
the prompt module produced and restates it — every route instruction in
order, or passage snippets with their numbers. That makes grounded-by-
construction answers testable without any model in the loop.
"""

from __future__ import annotations

import json
import re
from typing import Protocol

from ..errors import ClientFailure
from .payload import RoutePayload
from .prompt import NO_CONTEXT_NOTICE

_CONTEXT_RE = re.compile(r"\[CONTEXT\]\n(.*)\n\[/CONTEXT\]", re.DOTALL)
_PASSAGE_LINE_RE = re.compile(r"^(\d+)\. \[([^\]]+)\] (.*)$")


class LLMClient(Protocol):
    def generate(self, prompt: str) -> str: ...


class MockLLMClient:
    """Template-fills the structured block out of the prompt, deterministically."""

    def generate(self, prompt: str) -> str:
        m = _CONTEXT_RE.search(prompt)
        if not m:
            raise ClientFailure("prompt carries no context block")
        block = m.group(1).strip()
        if block.startswith("{"):
            return self._spatial_answer(block)
        if NO_CONTEXT_NOTICE in block:
            return (
                "I could not find anything relevant in the knowledge base for that "
                "question, so I cannot give a grounded answer."
            )
        return self._information_answer(block)

    @staticmethod
    def _spatial_answer(block: str) -> str:
        try:
            payload = RoutePayload.from_json(block)
        except (json.JSONDecodeError, KeyError) as exc:
            raise ClientFailure(f"unparseable payload block: {exc}") from exc

        if not payload.instructions:
            return (
                f"Origin and destination are the same place ({payload.origin}), so "
                f"there is nothing to walk; walkability score {payload.ws:.2f}."
            )

        lines = [
            f"Here is your walking route from {payload.origin} to {payload.destination}.",
            f"Walkability score: {payload.ws:.2f} (tau {payload.tau:g}; "
            + ", ".join(f"{i.kind} {i.c:g} at weight {i.w:g}" for i in payload.indicators)
            + ").",
        ]
        if payload.flags:
            lines.append("Notes: " + ", ".join(payload.flags) + ".")
        lines.append("Steps:")
        for n, ins in enumerate(payload.instructions, start=1):
            lines.append(f"{n}. {ins.text}")
        pois = [
            f"{p.name} ({p.category}) near step {s.index + 1}"
            for s in payload.segments
            for p in s.pois
        ]
        if pois:
            lines.append("Along the way: " + "; ".join(pois) + ".")
        else:
            lines.append("No points of interest were found along this route.")
        return "\n".join(lines)

    @staticmethod
    def _information_answer(block: str) -> str:
        cited: list[str] = []
        for line in block.splitlines():
            m = _PASSAGE_LINE_RE.match(line.strip())
            if m:
                number, _, text = m.groups()
                snippet = text.split(". ")[0].rstrip(".") + "."
                cited.append(f"[{number}] {snippet}")
        if not cited:
            raise ClientFailure("information block carries no passages")
        return "Based on the retrieved passages: " + " ".join(cited)


class HttpLLMClient:
    """POSTs {"prompt": ...} to a completion endpoint, expects {"text": ...}."""

    def __init__(self, url: str, timeout_s: float = 60.0):
        self.url = url
        self.timeout_s = timeout_s

    def generate(self, prompt: str) -> str:
        import requests

        try:
            resp = requests.post(self.url, json={"prompt": prompt}, timeout=self.timeout_s)
            resp.raise_for_status()
            return str(resp.json()["text"])
        except Exception as exc:
            raise ClientFailure(f"completion endpoint failed: {exc}") from exc


def generate_answer(prompt: str, client: LLMClient) -> str:
    """Run the client; anything it throws surfaces as ClientFailure."""
    try:
        return client.generate(prompt)
    except ClientFailure:
        raise
    except Exception as exc:
        raise ClientFailure(str(exc)) from exc
