"""Command-line entry point.

    walkrag ingest  --map M --gazetteer G --out DIR     parse + materialize artifacts
    walkrag index   --corpus C --out FILE [--mode ...]  embed + persist the vector index
    walkrag route   --from A --to B [--prefer KIND]...  print the route payload JSON
    walkrag ask     "question"                          one turn through the engine
    walkrag serve                                       run the HTTP service
    walkrag eval    --dataset D [--json]                run the evaluation harness

Global flags: --config FILE, --verbose. Exit codes: 1 parse/data error,
2 missing file, 3 place not found, 4 no route.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import evalharness
from .config import ServiceConfig, load_config
from .errors import (
    DuplicateId,
    MalformedInput,
    MalformedLine,
    NoRoute,
    NotFound,
    TooFar,
    WalkragError,
)
from .geodata import (
    build_pedestrian_graph,
    extract_features,
    load_gazetteer,
    parse_map_extract,
    save_graph,
)
from .quag.engine import build_engine
from .quag.intent import Intent, parse_preference_token
from .retrieval import (
    HashingEncoder,
    PassageStore,
    build_index,
    embed_corpus,
    ingest_corpus,
    save_index,
)

EXIT_DATA_ERROR = 1
EXIT_MISSING_FILE = 2
EXIT_NOT_FOUND = 3
EXIT_NO_ROUTE = 4

log = logging.getLogger("walkrag")


def _require(path: Path, what: str) -> Path:
    if not path.exists():
        print(f"error: {what} not found: {path}", file=sys.stderr)
        raise SystemExit(EXIT_MISSING_FILE)
    return path


def cmd_ingest(args: argparse.Namespace, config: ServiceConfig) -> int:
    map_path = _require(Path(args.map or config.map_path), "map extract")
    gaz_path = _require(Path(args.gazetteer or config.gazetteer_path), "gazetteer")
    out_dir = Path(args.out or config.artifacts_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    try:
        with map_path.open("rb") as fh:
            extract = parse_map_extract(fh)
        graph = build_pedestrian_graph(extract)
        features = extract_features(extract)
        gazetteer = load_gazetteer(gaz_path)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    except WalkragError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR

    save_graph(graph, out_dir / "graph.json")
    feature_rows = [
        {
            "feature_id": f.feature_id,
            "kind": f.kind.value,
            "lat": f.point[0],
            "lon": f.point[1],
            "name": f.name,
            "category": f.category,
        }
        for f in sorted(features, key=lambda f: f.feature_id)
    ]
    (out_dir / "features.json").write_text(json.dumps(feature_rows, indent=2) + "\n", "utf-8")

    kind_counts: dict[str, int] = {}
    for f in features:
        kind_counts[f.kind.value] = kind_counts.get(f.kind.value, 0) + 1
    print(f"nodes: {len(extract.nodes)}")
    print(f"ways: {len(extract.ways)}")
    print(f"graph_nodes: {len(graph.nodes)}")
    print(f"graph_edges: {graph.edge_count()}")
    print(f"features: {len(features)}")
    for kind in sorted(kind_counts):
        print(f"features.{kind}: {kind_counts[kind]}")
    print(f"gazetteer_entries: {len(gazetteer)}")
    print(f"artifacts: {out_dir}")
    return 0


def cmd_index(args: argparse.Namespace, config: ServiceConfig) -> int:
    corpus_path = _require(Path(args.corpus or config.corpus_path), "corpus")
    out_path = Path(args.out)
    store = PassageStore()
    try:
        with corpus_path.open(encoding="utf-8") as fh:
            count = ingest_corpus(fh, store)
    except (MalformedLine, DuplicateId) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    encoder = HashingEncoder(config.encoder_dimension)
    index = build_index(embed_corpus(store.all(), encoder), mode=args.mode)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    save_index(index, out_path)
    print(f"passages: {count}")
    print(f"dimension: {index.dimension}")
    print(f"mode: {index.mode}")
    print(f"index: {out_path}")
    return 0


def _engine_from(config: ServiceConfig):
    _require(Path(config.map_path), "map extract")
    _require(Path(config.gazetteer_path), "gazetteer")
    _require(Path(config.corpus_path), "corpus")
    return build_engine(config)


def cmd_route(args: argparse.Namespace, config: ServiceConfig) -> int:
    engine = _engine_from(config)
    preferences: list[str] = []
    for token in args.prefer or []:
        parsed = parse_preference_token(token)
        if parsed is None:
            print(f"error: unknown preference {token!r}", file=sys.stderr)
            return EXIT_DATA_ERROR
        preferences.append(f"{parsed[0]}:{parsed[1]}")
    intent = Intent(
        kind="spatial",
        origin=args.origin,
        destination=args.destination,
        preferences=tuple(preferences),
    )
    try:
        payload, _, _ = engine.handle_spatial(intent)
    except NotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except TooFar as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except NoRoute as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ROUTE
    sys.stdout.write(payload.to_json())
    return 0


def cmd_ask(args: argparse.Namespace, config: ServiceConfig) -> int:
    engine = _engine_from(config)
    session = engine.create_session()
    result = engine.post_message(session.session_id, args.question)
    print(result.answer)
    return 0


def cmd_serve(args: argparse.Namespace, config: ServiceConfig) -> int:
    import uvicorn

    from .service.app import create_app

    engine = _engine_from(config)
    app = create_app(engine)
    host = args.host or config.host
    port = args.port or config.port
    log.info("serving on %s:%s", host, port)
    uvicorn.run(app, host=host, port=int(port), log_level="warning")
    return 0


def cmd_eval(args: argparse.Namespace, config: ServiceConfig) -> int:
    dataset_path = _require(Path(args.dataset), "dataset")
    try:
        records = evalharness.load_dataset(dataset_path)
        evalharness.check_dataset_shape(records)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    engine = _engine_from(config)
    report = evalharness.run_eval(engine, records)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render_table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="walkrag", description=__doc__)
    parser.add_argument("--config", type=Path, help="TOML config file")
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse the map and write graph/feature artifacts")
    p.add_argument("--map", help="OSM-XML extract path")
    p.add_argument("--gazetteer", help="gazetteer CSV path")
    p.add_argument("--out", help="artifacts output directory")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("index", help="embed a JSONL corpus into a vector index")
    p.add_argument("--corpus", help="corpus JSONL path")
    p.add_argument("--out", required=True, help="index output file")
    p.add_argument("--mode", choices=["exact", "approximate"], default="exact")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("route", help="compute the best walkable route")
    p.add_argument("--from", dest="origin", required=True)
    p.add_argument("--to", dest="destination", required=True)
    p.add_argument("--prefer", action="append", help="indicator or POI-category keyword")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("ask", help="one conversational turn")
    p.add_argument("question")
    p.set_defaults(func=cmd_ask)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("eval", help="run the evaluation harness on a query dataset")
    p.add_argument("--dataset", required=True)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = load_config(args.config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA_ERROR
    return args.func(args, config)


if __name__ == "__main__":
    raise SystemExit(main())
