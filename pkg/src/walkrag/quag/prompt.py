"""Grounded prompt assembly from the schematic template.

The template is deliberately rigid: a fixed preamble, one fenced context
block (route payload JSON or numbered passages), the user utterance, and
explicit output instructions. Schematic beats fluent here — generation
must restate the context, not embellish it — and the payload is embedded
verbatim so no instruction can be altered, reordered, or dropped at the
prompt level.
"""

from __future__ import annotations

from importlib import resources

from ..retrieval.corpus import Passage
from .payload import RoutePayload

NO_CONTEXT_NOTICE = "NO RETRIEVED CONTEXT: nothing relevant was found in the knowledge base."

_SPATIAL_OUTPUT = (
    "Present the route from the JSON payload: restate every instruction in order "
    "and unchanged, report the walkability score and its four indicators, and list "
    "each point of interest with its category. Mention only places present in the payload."
)
_INFO_OUTPUT = (
    "Answer the question using only the numbered passages, citing passage numbers. "
    "If the context notice says nothing was retrieved, say that you cannot answer."
)


def _template() -> str:
    return (
        resources.files("walkrag.quag").joinpath("templates/schematic.txt").read_text("utf-8")
    )


def render_passages(passages: list[Passage]) -> str:
    return "\n".join(
        f"{i}. [{p.passage_id}] {p.text}" for i, p in enumerate(passages, start=1)
    )


def assemble_spatial_prompt(payload: RoutePayload, utterance: str) -> str:
    return _template().format(
        context_block=payload.to_json().rstrip("\n"),
        utterance=utterance,
        output_instructions=_SPATIAL_OUTPUT,
    )


def assemble_information_prompt(passages: list[Passage], utterance: str) -> str:
    block = render_passages(passages) if passages else NO_CONTEXT_NOTICE
    return _template().format(
        context_block=block,
        utterance=utterance,
        output_instructions=_INFO_OUTPUT,
    )
