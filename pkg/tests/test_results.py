"""Whitelist schema for the five aggregate result shapes."""

from __future__ import annotations

import pytest

from cliox.analytics.results import (
    RESULT_KINDS,
    AggregateResult,
    SchemaError,
    validate_result,
)


def _result(kind: str, payload: dict, **overrides) -> AggregateResult:
    fields = {
        "kind": kind,
        "algorithm": kind,
        "params": {},
        "seed": 42,
        "payload": payload,
        "suppressed_buckets": 0,
    }
    fields.update(overrides)
    return AggregateResult(**fields)


GOOD = {
    "eda": {
        "total_docs": 12,
        "date_histogram": {"2001-01": 6, "2001-02": 4},
        "top_terms": [["budget", 9], ["desk", 5]],
    },
    "clustering": {
        "k": 2,
        "inertia": 3.25,
        "clusters": [
            {"size": 7, "top_terms": [["gas", 0.5]]},
            {"size": 5, "top_terms": [["audit", 0.4]]},
        ],
    },
    "topics": {
        "n_topics": 2,
        "topics": [
            {"prevalence": 0.6, "terms": [["gas", 0.1]]},
            {"prevalence": 0.4, "terms": [["filing", 0.2]]},
        ],
    },
    "sentiment": {
        "overall_mean": 0.125,
        "monthly": {"2001-01": {"mean": 0.5, "docs": 6}},
    },
    "comm_graph": {
        "nodes": ["P1", "P2"],
        "edges": [{"source": "P1", "target": "P2", "count": 4}],
    },
}


@pytest.mark.parametrize("kind", RESULT_KINDS)
def test_good_payloads_validate(kind):
    validate_result(_result(kind, GOOD[kind]))


@pytest.mark.parametrize("kind", RESULT_KINDS)
def test_extra_keys_are_rejected(kind):
    payload = dict(GOOD[kind])
    payload["debug_dump"] = "raw text here"
    with pytest.raises(SchemaError):
        validate_result(_result(kind, payload))


@pytest.mark.parametrize("kind", RESULT_KINDS)
def test_missing_keys_are_rejected(kind):
    payload = dict(GOOD[kind])
    payload.pop(sorted(payload)[0])
    with pytest.raises(SchemaError):
        validate_result(_result(kind, payload))


def test_unknown_kind_is_rejected():
    with pytest.raises(SchemaError):
        validate_result(_result("wordcloud", {"total_docs": 1}))


def test_kind_and_algorithm_must_agree():
    with pytest.raises(SchemaError):
        validate_result(_result("eda", GOOD["eda"], algorithm="clustering"))


def test_params_must_be_scalar():
    with pytest.raises(SchemaError):
        validate_result(_result("eda", GOOD["eda"], params={"rows": [1, 2]}))
    with pytest.raises(SchemaError):
        validate_result(_result("eda", GOOD["eda"], params={"nested": {"a": 1}}))
    validate_result(_result("eda", GOOD["eda"], params={"k": 3, "note": "x", "f": 0.5}))


def test_seed_must_be_a_real_int():
    with pytest.raises(SchemaError):
        validate_result(_result("eda", GOOD["eda"], seed="42"))
    with pytest.raises(SchemaError):
        validate_result(_result("eda", GOOD["eda"], seed=True))


def test_suppressed_buckets_must_be_non_negative_int():
    with pytest.raises(SchemaError):
        validate_result(_result("eda", GOOD["eda"], suppressed_buckets=-1))
    validate_result(_result("eda", GOOD["eda"], suppressed_buckets=3))


def test_term_lists_accept_only_single_tokens():
    for bad_term in ("two words", "Upper", "has-dash", "evil@example.com", ""):
        payload = dict(GOOD["eda"])
        payload["top_terms"] = [[bad_term, 2]]
        with pytest.raises(SchemaError):
            validate_result(_result("eda", payload))


def test_eda_histogram_keys_must_be_months():
    payload = dict(GOOD["eda"])
    payload["date_histogram"] = {"January 2001": 3}
    with pytest.raises(SchemaError):
        validate_result(_result("eda", payload))


def test_eda_histogram_counts_start_at_one():
    payload = dict(GOOD["eda"])
    payload["date_histogram"] = {"2001-01": 0}
    with pytest.raises(SchemaError):
        validate_result(_result("eda", payload))


def test_eda_term_weights_are_positive_ints():
    payload = dict(GOOD["eda"])
    payload["top_terms"] = [["budget", 2.5]]
    with pytest.raises(SchemaError):
        validate_result(_result("eda", payload))


def test_clustering_cluster_shape():
    payload = {
        "k": 1,
        "inertia": 0.0,
        "clusters": [{"size": 3, "top_terms": [], "members": ["doc1"]}],
    }
    with pytest.raises(SchemaError):
        validate_result(_result("clustering", payload))


def test_clustering_float_weights_allowed():
    validate_result(_result("clustering", GOOD["clustering"]))


def test_sentiment_monthly_docs_start_at_one():
    payload = {"overall_mean": 0.0, "monthly": {"2001-01": {"mean": 0.0, "docs": 0}}}
    with pytest.raises(SchemaError):
        validate_result(_result("sentiment", payload))


def test_comm_graph_rejects_non_pseudonym_nodes():
    for bad in ("alice@x.example", "p1", "P", "P-1", "Q1"):
        payload = {"nodes": [bad], "edges": []}
        with pytest.raises(SchemaError):
            validate_result(_result("comm_graph", payload))


def test_comm_graph_edge_counts_start_at_one():
    payload = {
        "nodes": ["P1", "P2"],
        "edges": [{"source": "P1", "target": "P2", "count": 0}],
    }
    with pytest.raises(SchemaError):
        validate_result(_result("comm_graph", payload))


def test_doc_round_trip_and_digest_stability():
    result = _result("eda", GOOD["eda"], params={"k": 2})
    doc = result.to_doc()
    again = AggregateResult.from_doc(doc)
    assert again == result
    assert again.digest() == result.digest()
    # a payload change must move the digest
    other = _result("eda", dict(GOOD["eda"], total_docs=13), params={"k": 2})
    assert other.digest() != result.digest()
