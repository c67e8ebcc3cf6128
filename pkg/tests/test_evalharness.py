from __future__ import annotations

import json

import pytest

from walkrag.config import ServiceConfig
from walkrag.evalharness import (
    EvalRecord,
    check_dataset_shape,
    detect_duplicate_collapse,
    judge_information,
    load_dataset,
    run_eval,
)
from walkrag.retrieval import Passage


# --- duplicate-collapse detector ------------------------------------------------

STEPS = ["Depart heading east for 100 m", "Continue for 50 m", "Continue for 50 m", "Arrive"]


def _answer(steps):
    return "route:\n" + "\n".join(f"{i}. {s}" for i, s in enumerate(steps, 1))


def test_collapse_detector_complete():
    assert detect_duplicate_collapse(STEPS, _answer(STEPS)) == (True, True)


def test_collapse_detector_duplicate_omission():
    collapsed = [STEPS[0], STEPS[1], STEPS[3]]  # second "Continue for 50 m" dropped
    complete, duplicates_only = detect_duplicate_collapse(STEPS, _answer(collapsed))
    assert not complete
    assert duplicates_only


def test_collapse_detector_non_duplicate_omission():
    broken = [STEPS[0], STEPS[3]]  # dropped a step that appears once
    complete, duplicates_only = detect_duplicate_collapse(STEPS, _answer(broken))
    assert not complete
    assert not duplicates_only


# --- information verdicts -----------------------------------------------------------

class _Result:
    def __init__(self, passages):
        self.passages = passages


def test_information_hit_is_correct():
    record = EvalRecord(query="q", kind="information", expected_passage_id="b")
    result = _Result([Passage("a", "x"), Passage("b", "y")])
    assert judge_information(record, result).verdict == "correct"


def test_information_miss_is_partially_correct():
    record = EvalRecord(query="q", kind="information", expected_passage_id="z")
    result = _Result([Passage("a", "x")])
    assert judge_information(record, result).verdict == "partially_correct"


def test_information_empty_retrieval_is_incorrect():
    record = EvalRecord(query="q", kind="information", expected_passage_id="z")
    assert judge_information(record, _Result([])).verdict == "incorrect"


def test_information_without_expectation_grounded_is_correct():
    record = EvalRecord(query="q", kind="information")
    assert judge_information(record, _Result([Passage("a", "x")])).verdict == "correct"


# --- dataset loading ----------------------------------------------------------------

def test_load_dataset_rejects_unknown_kind(tmp_path):
    path = tmp_path / "d.jsonl"
    path.write_text('{"query": "x", "kind": "other"}\n')
    with pytest.raises(ValueError):
        load_dataset(path)


def test_shape_check_rejects_misordered_blocks():
    records = [
        EvalRecord(query="a", kind="information"),
        EvalRecord(query="b", kind="spatial", origin="X", destination="Y"),
        EvalRecord(query="c", kind="information"),
        EvalRecord(query="d", kind="information"),
    ]
    with pytest.raises(ValueError):
        check_dataset_shape(records)


# --- disconnected destination -> incorrect verdict -----------------------------------

@pytest.fixture(scope="module")
def split_city(tmp_path_factory):
    """Two walkable islands with no edge between them."""
    tmp = tmp_path_factory.mktemp("split")
    (tmp / "map.osm").write_text(
        '<?xml version="1.0" encoding="UTF-8"?>\n<osm version="0.6">\n'
        '  <node id="1" lat="47.0" lon="8.0"/>\n'
        '  <node id="2" lat="47.001" lon="8.0"/>\n'
        '  <node id="3" lat="47.1" lon="8.1"/>\n'
        '  <node id="4" lat="47.101" lon="8.1"/>\n'
        '  <way id="10"><nd ref="1"/><nd ref="2"/><tag k="highway" v="footway"/></way>\n'
        '  <way id="11"><nd ref="3"/><nd ref="4"/><tag k="highway" v="footway"/></way>\n'
        "</osm>\n"
    )
    (tmp / "gazetteer.csv").write_text(
        "name,lat,lon\nWest End,47.0,8.0\nEast End,47.1,8.1\n"
    )
    (tmp / "passages.jsonl").write_text('{"id": "a", "text": "west end history"}\n')
    return tmp


def test_disconnected_destination_is_incorrect(split_city):
    from walkrag.quag.engine import build_engine

    config = ServiceConfig(
        map_path=split_city / "map.osm",
        gazetteer_path=split_city / "gazetteer.csv",
        air_quality_path=None,
        corpus_path=split_city / "passages.jsonl",
    )
    engine = build_engine(config)
    records = [
        EvalRecord(
            query="route from West End to East End",
            kind="spatial",
            origin="West End",
            destination="East End",
        )
    ]
    report = run_eval(engine, records)
    assert report.results[0].verdict == "incorrect"
    assert "no_route" in report.results[0].detail


def test_report_json_counts_sum(engine):
    from conftest import FIXTURES

    records = load_dataset(FIXTURES / "queries" / "walk40.jsonl")
    report = run_eval(engine, records)
    data = report.to_dict()
    assert sum(data["spatial"].values()) == 10
    assert sum(data["information"].values()) == 30
    json.dumps(data)  # serializable


def test_eval_is_reproducible(engine):
    from conftest import FIXTURES

    records = load_dataset(FIXTURES / "queries" / "walk40.jsonl")[:8]
    first = [r.verdict for r in run_eval(engine, records).results]
    second = [r.verdict for r in run_eval(engine, records).results]
    assert first == second
