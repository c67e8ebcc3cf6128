from .engine import Engine, TurnResult, build_engine
from .intent import (
    INFORMATION,
    SPATIAL,
    Intent,
    IntentClassifier,
    RuleBasedClassifier,
    classify_intent,
    extract_preferences,
    parse_preference_token,
)
from .llm import HttpLLMClient, LLMClient, MockLLMClient, generate_answer
from .payload import (
    PAYLOAD_VERSION,
    PayloadIndicator,
    PayloadInstruction,
    PayloadPoi,
    PayloadSegment,
    RoutePayload,
    build_route_payload,
)
from .prompt import (
    NO_CONTEXT_NOTICE,
    assemble_information_prompt,
    assemble_spatial_prompt,
    render_passages,
)
from .state import ConversationState, ConversationTurn, SessionStore

__all__ = [
    "Engine",
    "TurnResult",
    "build_engine",
    "INFORMATION",
    "SPATIAL",
    "Intent",
    "IntentClassifier",
    "RuleBasedClassifier",
    "classify_intent",
    "extract_preferences",
    "parse_preference_token",
    "HttpLLMClient",
    "LLMClient",
    "MockLLMClient",
    "generate_answer",
    "PAYLOAD_VERSION",
    "PayloadIndicator",
    "PayloadInstruction",
    "PayloadPoi",
    "PayloadSegment",
    "RoutePayload",
    "build_route_payload",
    "NO_CONTEXT_NOTICE",
    "assemble_information_prompt",
    "assemble_spatial_prompt",
    "render_passages",
    "ConversationState",
    "ConversationTurn",
    "SessionStore",
]
