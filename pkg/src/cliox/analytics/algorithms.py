"""Built-in distant-reading algorithms dispatched by the runtime.

Each builder takes masked documents plus validated parameters and returns an
AggregateResult.  Row order fed to k-means is sorted by doc_id so results do
not depend on corpus iteration order.
"""

from __future__ import annotations

from ..errors import BadK, BadTopicCount, EmptyCorpus
from .cluster import kmeans
from .graph import graph_payload
from .masking import MaskedDocument
from .results import AggregateResult
from .sentiment import sentiment_payload
from .text import doc_tokens, term_counts, tfidf
from .text import top_terms as text_top_terms
from .topics import LdaGibbs

CLUSTER_TERMS = 20
TOPIC_TERMS = 15


def _require_docs(docs: list[MaskedDocument]) -> None:
    if not docs:
        raise EmptyCorpus("corpus is empty")


def _int_param(params: dict, name: str, default: int | None = None) -> int:
    if name not in params:
        if default is None:
            raise ValueError(f"missing required param {name!r}")
        return default
    value = params[name]
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            value = int(str(value), 10)
        except ValueError:
            raise ValueError(f"param {name!r} must be an integer") from None
    return value


def run_eda(docs: list[MaskedDocument], params: dict, seed: int) -> AggregateResult:
    _require_docs(docs)
    histogram: dict[str, int] = {}
    for doc in docs:
        if doc.month is not None:
            histogram[doc.month] = histogram.get(doc.month, 0) + 1
    payload = {
        "total_docs": len(docs),
        "date_histogram": dict(sorted(histogram.items())),
        "top_terms": text_top_terms(term_counts(docs)),
    }
    return AggregateResult("eda", "eda", {}, seed, payload)


def run_clustering(docs: list[MaskedDocument], params: dict, seed: int) -> AggregateResult:
    _require_docs(docs)
    k = _int_param(params, "k")
    max_iter = _int_param(params, "max_iter", 100)
    tol = float(params.get("tol", 1e-6))
    ordered = sorted(docs, key=lambda d: d.doc_id)
    matrix, vocab, _ = tfidf(ordered)
    if not 1 <= k <= len(ordered):
        raise BadK(f"k must satisfy 1 <= k <= {len(ordered)}, got {k}")
    fit = kmeans(matrix, k, seed, max_iter=max_iter, tol=tol)
    clusters = []
    for j in range(k):
        size = int((fit.assignments == j).sum())
        weights = fit.centroids[j]
        order = sorted(
            (i for i in range(len(vocab)) if weights[i] > 0),
            key=lambda i: (-weights[i], vocab[i]),
        )
        clusters.append(
            {
                "size": size,
                "top_terms": [[vocab[i], float(weights[i])] for i in order[:CLUSTER_TERMS]],
            }
        )
    payload = {"k": k, "inertia": fit.inertia, "clusters": clusters}
    return AggregateResult(
        "clustering",
        "clustering",
        {"k": k, "max_iter": max_iter, "tol": tol},
        seed,
        payload,
    )


def run_topics(docs: list[MaskedDocument], params: dict, seed: int) -> AggregateResult:
    _require_docs(docs)
    n_topics = _int_param(params, "n_topics")
    iters = _int_param(params, "iters", 200)
    if n_topics < 1:
        raise BadTopicCount(f"n_topics must be >= 1, got {n_topics}")
    ordered = sorted(docs, key=lambda d: d.doc_id)
    model = LdaGibbs([doc_tokens(d) for d in ordered], n_topics, seed)
    model.run(iters)
    prevalence = model.prevalence()
    topics = [
        {"prevalence": prevalence[k], "terms": model.top_terms(k, TOPIC_TERMS)}
        for k in range(n_topics)
    ]
    payload = {"n_topics": n_topics, "topics": topics}
    return AggregateResult(
        "topics",
        "topics",
        {"n_topics": n_topics, "iters": iters},
        seed,
        payload,
    )


def run_sentiment(docs: list[MaskedDocument], params: dict, seed: int) -> AggregateResult:
    _require_docs(docs)
    return AggregateResult("sentiment", "sentiment", {}, seed, sentiment_payload(docs))


def run_comm_graph(docs: list[MaskedDocument], params: dict, seed: int) -> AggregateResult:
    _require_docs(docs)
    return AggregateResult("comm_graph", "comm_graph", {}, seed, graph_payload(docs))


BUILTIN_ALGORITHMS = {
    "eda": run_eda,
    "clustering": run_clustering,
    "topics": run_topics,
    "sentiment": run_sentiment,
    "comm_graph": run_comm_graph,
}
