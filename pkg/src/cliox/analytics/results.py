"""Aggregate result envelope and its whitelist schema.

Everything a consumer ever receives is one of five payload shapes.  The
validator enforces exact key sets and token-shaped strings so raw document
text cannot ride out inside a result, whatever the algorithm did.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .. import crypto

RESULT_KINDS = ("eda", "clustering", "topics", "sentiment", "comm_graph")

TERM_RE = re.compile(r"^[a-z0-9]+$")
MONTH_RE = re.compile(r"^\d{4}-\d{2}$")
PSEUDONYM_RE = re.compile(r"^P\d+$")


@dataclass
class AggregateResult:
    kind: str
    algorithm: str
    params: dict
    seed: int
    payload: dict
    suppressed_buckets: int = 0

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "algorithm": self.algorithm,
            "params": self.params,
            "seed": self.seed,
            "payload": self.payload,
            "suppressed_buckets": self.suppressed_buckets,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "AggregateResult":
        return cls(
            kind=doc["kind"],
            algorithm=doc["algorithm"],
            params=doc["params"],
            seed=doc["seed"],
            payload=doc["payload"],
            suppressed_buckets=doc["suppressed_buckets"],
        )

    def digest(self) -> str:
        return crypto.digest_document(self.to_doc())


class SchemaError(ValueError):
    pass


def _require_keys(obj: dict, keys: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected object")
    if set(obj.keys()) != keys:
        raise SchemaError(f"{where}: keys {sorted(obj.keys())} != {sorted(keys)}")


def _check_int(value, where: str, minimum: int = 0) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise SchemaError(f"{where}: expected int >= {minimum}")


def _check_number(value, where: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{where}: expected number")


def _check_term_list(items, where: str, weight_kind: str) -> None:
    if not isinstance(items, list):
        raise SchemaError(f"{where}: expected list")
    for i, pair in enumerate(items):
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError(f"{where}[{i}]: expected [term, weight] pair")
        term, weight = pair
        if not isinstance(term, str) or not TERM_RE.match(term):
            raise SchemaError(f"{where}[{i}]: term {term!r} is not a single token")
        if weight_kind == "int":
            _check_int(weight, f"{where}[{i}].weight", minimum=1)
        else:
            _check_number(weight, f"{where}[{i}].weight")


def _validate_eda(payload: dict) -> None:
    _require_keys(payload, {"total_docs", "date_histogram", "top_terms"}, "eda")
    _check_int(payload["total_docs"], "eda.total_docs")
    if not isinstance(payload["date_histogram"], dict):
        raise SchemaError("eda.date_histogram: expected object")
    for month, count in payload["date_histogram"].items():
        if not MONTH_RE.match(month):
            raise SchemaError(f"eda.date_histogram: bad month key {month!r}")
        _check_int(count, f"eda.date_histogram[{month}]", minimum=1)
    _check_term_list(payload["top_terms"], "eda.top_terms", "int")


def _validate_clustering(payload: dict) -> None:
    _require_keys(payload, {"k", "inertia", "clusters"}, "clustering")
    _check_int(payload["k"], "clustering.k", minimum=1)
    _check_number(payload["inertia"], "clustering.inertia")
    if not isinstance(payload["clusters"], list):
        raise SchemaError("clustering.clusters: expected list")
    for i, cluster in enumerate(payload["clusters"]):
        _require_keys(cluster, {"size", "top_terms"}, f"clustering.clusters[{i}]")
        _check_int(cluster["size"], f"clustering.clusters[{i}].size")
        _check_term_list(cluster["top_terms"], f"clustering.clusters[{i}].top_terms", "float")


def _validate_topics(payload: dict) -> None:
    _require_keys(payload, {"n_topics", "topics"}, "topics")
    _check_int(payload["n_topics"], "topics.n_topics", minimum=1)
    if not isinstance(payload["topics"], list):
        raise SchemaError("topics.topics: expected list")
    for i, topic in enumerate(payload["topics"]):
        _require_keys(topic, {"prevalence", "terms"}, f"topics[{i}]")
        _check_number(topic["prevalence"], f"topics[{i}].prevalence")
        _check_term_list(topic["terms"], f"topics[{i}].terms", "float")


def _validate_sentiment(payload: dict) -> None:
    _require_keys(payload, {"overall_mean", "monthly"}, "sentiment")
    _check_number(payload["overall_mean"], "sentiment.overall_mean")
    if not isinstance(payload["monthly"], dict):
        raise SchemaError("sentiment.monthly: expected object")
    for month, bucket in payload["monthly"].items():
        if not MONTH_RE.match(month):
            raise SchemaError(f"sentiment.monthly: bad month key {month!r}")
        _require_keys(bucket, {"mean", "docs"}, f"sentiment.monthly[{month}]")
        _check_number(bucket["mean"], f"sentiment.monthly[{month}].mean")
        _check_int(bucket["docs"], f"sentiment.monthly[{month}].docs", minimum=1)


def _validate_comm_graph(payload: dict) -> None:
    _require_keys(payload, {"nodes", "edges"}, "comm_graph")
    if not isinstance(payload["nodes"], list):
        raise SchemaError("comm_graph.nodes: expected list")
    for node in payload["nodes"]:
        if not isinstance(node, str) or not PSEUDONYM_RE.match(node):
            raise SchemaError(f"comm_graph.nodes: bad pseudonym {node!r}")
    if not isinstance(payload["edges"], list):
        raise SchemaError("comm_graph.edges: expected list")
    for i, edge in enumerate(payload["edges"]):
        _require_keys(edge, {"source", "target", "count"}, f"comm_graph.edges[{i}]")
        for end in ("source", "target"):
            if not isinstance(edge[end], str) or not PSEUDONYM_RE.match(edge[end]):
                raise SchemaError(f"comm_graph.edges[{i}].{end}: bad pseudonym")
        _check_int(edge["count"], f"comm_graph.edges[{i}].count", minimum=1)


_VALIDATORS = {
    "eda": _validate_eda,
    "clustering": _validate_clustering,
    "topics": _validate_topics,
    "sentiment": _validate_sentiment,
    "comm_graph": _validate_comm_graph,
}


def validate_result(result: AggregateResult) -> None:
    """Raise SchemaError unless the result matches its kind's whitelist."""
    if result.kind not in RESULT_KINDS:
        raise SchemaError(f"unknown result kind {result.kind!r}")
    if result.kind != result.algorithm:
        raise SchemaError("kind and algorithm name must agree")
    if not isinstance(result.params, dict):
        raise SchemaError("params must be an object")
    for key, value in result.params.items():
        if not isinstance(key, str) or isinstance(value, (dict, list)):
            raise SchemaError(f"params[{key!r}] must be scalar")
    if not isinstance(result.seed, int) or isinstance(result.seed, bool):
        raise SchemaError("seed must be an integer")
    _check_int(result.suppressed_buckets, "suppressed_buckets")
    _VALIDATORS[result.kind](result.payload)
