"""Walkable-itinerary recommendation engine with a conversational interface.

Pipelines: a map extract becomes a pedestrian graph and a walkability
feature set; routes between geocoded places are generated, scored with
capped per-segment indicator counts, and enriched with nearby points of
interest; follow-up questions are answered from passages retrieved out of
a vector index. A pluggable LLM client turns either grounding into prose.
"""

__version__ = "0.1.0"
