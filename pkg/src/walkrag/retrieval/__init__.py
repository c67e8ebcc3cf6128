from .corpus import Passage, PassageStore, ingest_corpus
from .encoder import (
    DEFAULT_PRODUCTION_DIMENSION,
    DEFAULT_TEST_DIMENSION,
    Embedder,
    HashingEncoder,
    HttpEncoder,
)
from .index import (
    DEFAULT_K,
    IvfParams,
    SearchResult,
    VectorIndex,
    build_index,
    default_ivf_params,
    embed_corpus,
    load_index,
    save_index,
    search,
)

__all__ = [
    "Passage",
    "PassageStore",
    "ingest_corpus",
    "DEFAULT_PRODUCTION_DIMENSION",
    "DEFAULT_TEST_DIMENSION",
    "Embedder",
    "HashingEncoder",
    "HttpEncoder",
    "DEFAULT_K",
    "IvfParams",
    "SearchResult",
    "VectorIndex",
    "build_index",
    "default_ivf_params",
    "embed_corpus",
    "load_index",
    "save_index",
    "search",
]
