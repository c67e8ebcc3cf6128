"""Embedder contract plus the two shipped implementations.

HashingEncoder is the offline workhorse: tokens are hashed into a
fixed number of signed buckets (SHA-1, so results are identical across
platforms and processes) and the bucket vector is L2-normalized. It is
deterministic by construction, which is exactly what the tests need.

HttpEncoder talks to an external embedding endpoint and is config-gated;
nothing in the test suite touches the network.
"""

from __future__ import annotations

import hashlib
import re
from typing import Protocol

import numpy as np

from ..errors import EncoderFailure

DEFAULT_TEST_DIMENSION = 256
DEFAULT_PRODUCTION_DIMENSION = 1024

_TOKEN_RE = re.compile(r"[a-z0-9]+")

# query/passage boilerplate that would otherwise dominate short texts
STOPWORDS = frozenset(
    """a an the is are was were be been being am of in on at to from by with for
    and or but as it its this that these those there here i me my mine you your
    yours we us our they them their he him his she her do does did done have has
    had what which who whom whose when where why how can could will would shall
    should may might must not no nor so if then than too very s t d ll m re ve
    tell told say said about more most like just please also over under into onto
    out up down off again once only own same such""".split()
)


class Embedder(Protocol):
    @property
    def dimension(self) -> int: ...

    def encode(self, text: str) -> np.ndarray: ...


def _normalize(vec: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        raise EncoderFailure("zero vector cannot be normalized")
    return (vec / norm).astype(np.float64)


class HashingEncoder:
    """Deterministic token-hashing projection onto d signed buckets."""

    def __init__(self, dimension: int = DEFAULT_TEST_DIMENSION):
        if dimension < 2:
            raise ValueError("dimension must be >= 2")
        self._dimension = dimension

    @property
    def dimension(self) -> int:
        return self._dimension

    def encode(self, text: str) -> np.ndarray:
        if not text:
            raise EncoderFailure("cannot encode empty text")
        all_tokens = _TOKEN_RE.findall(text.lower())
        tokens = [t for t in all_tokens if t not in STOPWORDS]
        if not tokens:
            tokens = all_tokens  # all-stopword text still embeds deterministically
        if not tokens:
            tokens = [text]  # symbols-only input likewise
        vec = np.zeros(self._dimension, dtype=np.float64)
        for token in tokens:
            digest = hashlib.sha1(token.encode("utf-8")).digest()
            bucket = int.from_bytes(digest[:4], "little") % self._dimension
            sign = 1.0 if digest[4] & 1 else -1.0
            vec[bucket] += sign
        return _normalize(vec)


class HttpEncoder:
    """Client for an external embedding endpoint (POST {text} -> {embedding})."""

    def __init__(self, url: str, dimension: int = DEFAULT_PRODUCTION_DIMENSION, timeout_s: float = 30.0):
        self.url = url
        self._dimension = dimension
        self.timeout_s = timeout_s

    @property
    def dimension(self) -> int:
        return self._dimension

    def encode(self, text: str) -> np.ndarray:
        if not text:
            raise EncoderFailure("cannot encode empty text")
        import requests

        try:
            resp = requests.post(self.url, json={"text": text}, timeout=self.timeout_s)
            resp.raise_for_status()
            values = resp.json()["embedding"]
        except Exception as exc:
            raise EncoderFailure(f"embedding endpoint failed: {exc}") from exc
        vec = np.asarray(values, dtype=np.float64)
        if vec.shape != (self._dimension,):
            raise EncoderFailure(
                f"endpoint returned shape {vec.shape}, expected ({self._dimension},)"
            )
        return _normalize(vec)
