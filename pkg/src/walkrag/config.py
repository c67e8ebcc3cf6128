"""Engine and service configuration.

Precedence is defaults < config file (TOML, flat keys) < environment
(WALKRAG_<FIELD>). Numeric invariants are validated once at load time so
a bad deployment fails at startup, not mid-request.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from pathlib import Path

import tomli

ENV_PREFIX = "WALKRAG_"


@dataclass
class ServiceConfig:
    # data paths
    map_path: Path = Path("fixtures/city/map.osm")
    gazetteer_path: Path = Path("fixtures/city/gazetteer.csv")
    air_quality_path: Path | None = Path("fixtures/city/air_quality.json")
    corpus_path: Path = Path("fixtures/corpus/passages.jsonl")
    index_path: Path | None = None  # None: embed the corpus at startup
    artifacts_dir: Path = Path("artifacts")
    session_log_dir: Path | None = None

    # service
    host: str = "127.0.0.1"
    port: int = 8000

    # engine parameters
    k_routes: int = 3
    k_passages: int = 3
    tau: float = 5.0
    indicator_buffer_m: float = 100.0
    poi_buffer_m: float = 200.0
    max_snap_m: float = 500.0
    penalty_factor: float = 1.4
    weights: dict[str, float] = field(
        default_factory=lambda: {
            "Sidewalk": 0.25,
            "Pollution": 0.25,
            "GreenArea": 0.25,
            "Accessibility": 0.25,
        }
    )

    # pluggable backends
    encoder_mode: str = "hashing"  # hashing | external
    encoder_dimension: int = 256
    encoder_url: str = ""
    llm_mode: str = "mock"  # mock | external
    llm_url: str = ""
    index_mode: str = "exact"  # exact | approximate

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.k_routes < 1 or self.k_passages < 1:
            raise ValueError("k values must be >= 1")
        if self.indicator_buffer_m <= 0 or self.poi_buffer_m <= 0 or self.max_snap_m <= 0:
            raise ValueError("buffers and snap limit must be positive")
        if self.penalty_factor <= 1.0:
            raise ValueError("penalty_factor must exceed 1")
        total = sum(self.weights.values())
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {total!r}")
        if self.encoder_mode not in ("hashing", "external"):
            raise ValueError(f"unknown encoder_mode {self.encoder_mode!r}")
        if self.llm_mode not in ("mock", "external"):
            raise ValueError(f"unknown llm_mode {self.llm_mode!r}")
        if self.index_mode not in ("exact", "approximate"):
            raise ValueError(f"unknown index_mode {self.index_mode!r}")


_PATH_FIELDS = {
    "map_path",
    "gazetteer_path",
    "air_quality_path",
    "corpus_path",
    "index_path",
    "artifacts_dir",
    "session_log_dir",
}


def _coerce(name: str, kind: type, raw) -> object:
    if name in _PATH_FIELDS:
        return None if raw in (None, "", "none") else Path(raw)
    if kind is int:
        return int(raw)
    if kind is float:
        return float(raw)
    if isinstance(raw, dict):
        return {k: float(v) for k, v in raw.items()}
    return raw


def load_config(path: Path | None = None, env: dict[str, str] | None = None) -> ServiceConfig:
    """Build a config from defaults, an optional TOML file, and env overrides."""
    values: dict[str, object] = {}
    declared = [f.name for f in fields(ServiceConfig)]

    if path is not None:
        with path.open("rb") as fh:
            doc = tomli.load(fh)
        for key, raw in doc.items():
            if key not in declared:
                raise ValueError(f"unknown config key {key!r} in {path}")
            values[key] = _coerce(key, _runtime_type(key), raw)

    environ = os.environ if env is None else env
    for key in declared:
        if key == "weights":
            continue  # structured value, file-only
        env_key = ENV_PREFIX + key.upper()
        if env_key in environ:
            values[key] = _coerce(key, _runtime_type(key), environ[env_key])

    return ServiceConfig(**values)  # type: ignore[arg-type]


_RUNTIME_TYPES = {
    "port": int,
    "k_routes": int,
    "k_passages": int,
    "encoder_dimension": int,
    "tau": float,
    "indicator_buffer_m": float,
    "poi_buffer_m": float,
    "max_snap_m": float,
    "penalty_factor": float,
}


def _runtime_type(name: str) -> type:
    return _RUNTIME_TYPES.get(name, str)
