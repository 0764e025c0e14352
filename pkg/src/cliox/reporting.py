"""Render a stored job result into figures and delimited files.

Each result kind maps to one or two PNG charts plus CSV files with the same
numbers, written side by side into the output directory.  Only aggregate
payloads are touched here, so reports inherit the output policy's
guarantees.
"""

from __future__ import annotations

import csv
import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_result(result_doc: dict, outdir: str) -> list[str]:
    """Write charts and CSVs for one result document; returns written paths."""
    os.makedirs(outdir, exist_ok=True)
    result = result_doc["result"] if "result" in result_doc else result_doc
    kind = result["kind"]
    renderer = _RENDERERS.get(kind)
    if renderer is None:
        raise ValueError(f"no renderer for result kind {kind!r}")
    written = renderer(result["payload"], outdir)
    return sorted(written)


def _write_csv(path: str, header: list[str], rows: list[list]) -> str:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def _bar_chart(path: str, labels: list[str], values: list, title: str, rotate: bool = False) -> str:
    fig, ax = plt.subplots(figsize=(max(6, len(labels) * 0.45), 4))
    ax.bar(range(len(labels)), values, color="#4878a8")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=60 if rotate else 0, ha="right" if rotate else "center")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path


def _render_eda(payload: dict, outdir: str) -> list[str]:
    written = []
    terms = payload["top_terms"][:30]
    written.append(
        _write_csv(
            os.path.join(outdir, "top_terms.csv"),
            ["term", "count"],
            payload["top_terms"],
        )
    )
    written.append(
        _bar_chart(
            os.path.join(outdir, "top_terms.png"),
            [t for t, _ in terms],
            [c for _, c in terms],
            "Most frequent terms",
            rotate=True,
        )
    )
    histogram = payload["date_histogram"]
    months = sorted(histogram)
    written.append(
        _write_csv(
            os.path.join(outdir, "date_histogram.csv"),
            ["month", "docs"],
            [[m, histogram[m]] for m in months],
        )
    )
    written.append(
        _bar_chart(
            os.path.join(outdir, "date_histogram.png"),
            months,
            [histogram[m] for m in months],
            f"Documents per month (total {payload['total_docs']})",
            rotate=True,
        )
    )
    return written


def _render_clustering(payload: dict, outdir: str) -> list[str]:
    written = []
    rows = []
    for i, cluster in enumerate(payload["clusters"]):
        top = ", ".join(t for t, _ in cluster["top_terms"][:8])
        rows.append([i, cluster["size"], top])
    written.append(
        _write_csv(
            os.path.join(outdir, "clusters.csv"), ["cluster", "size", "top_terms"], rows
        )
    )
    written.append(
        _bar_chart(
            os.path.join(outdir, "cluster_sizes.png"),
            [f"c{i}" for i in range(len(payload["clusters"]))],
            [c["size"] for c in payload["clusters"]],
            f"Cluster sizes (k={payload['k']}, inertia={payload['inertia']:.3f})",
        )
    )
    return written


def _render_topics(payload: dict, outdir: str) -> list[str]:
    written = []
    rows = []
    for i, topic in enumerate(payload["topics"]):
        top = ", ".join(t for t, _ in topic["terms"][:8])
        rows.append([i, f"{topic['prevalence']:.6f}", top])
    written.append(
        _write_csv(
            os.path.join(outdir, "topics.csv"), ["topic", "prevalence", "top_terms"], rows
        )
    )
    written.append(
        _bar_chart(
            os.path.join(outdir, "topic_prevalence.png"),
            [f"t{i}" for i in range(len(payload["topics"]))],
            [t["prevalence"] for t in payload["topics"]],
            "Topic prevalence",
        )
    )
    return written


def _render_sentiment(payload: dict, outdir: str) -> list[str]:
    written = []
    monthly = payload["monthly"]
    months = sorted(monthly)
    written.append(
        _write_csv(
            os.path.join(outdir, "sentiment_monthly.csv"),
            ["month", "mean", "docs"],
            [[m, monthly[m]["mean"], monthly[m]["docs"]] for m in months],
        )
    )
    fig, ax = plt.subplots(figsize=(max(6, len(months) * 0.6), 4))
    ax.plot(range(len(months)), [monthly[m]["mean"] for m in months], marker="o", color="#4878a8")
    ax.axhline(payload["overall_mean"], linestyle="--", color="#a85548", label="overall mean")
    ax.set_xticks(range(len(months)))
    ax.set_xticklabels(months, rotation=60, ha="right")
    ax.set_ylim(-1.05, 1.05)
    ax.set_title("Sentiment by month")
    ax.legend()
    fig.tight_layout()
    path = os.path.join(outdir, "sentiment_timeline.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    written.append(path)
    return written


def _render_comm_graph(payload: dict, outdir: str) -> list[str]:
    written = []
    written.append(
        _write_csv(
            os.path.join(outdir, "edges.csv"),
            ["source", "target", "count"],
            [[e["source"], e["target"], e["count"]] for e in payload["edges"]],
        )
    )
    nodes = payload["nodes"]
    n = max(len(nodes), 1)
    positions = {
        node: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i, node in enumerate(nodes)
    }
    max_count = max((e["count"] for e in payload["edges"]), default=1)
    fig, ax = plt.subplots(figsize=(6, 6))
    for edge in payload["edges"]:
        x0, y0 = positions[edge["source"]]
        x1, y1 = positions[edge["target"]]
        ax.plot(
            [x0, x1],
            [y0, y1],
            color="#4878a8",
            alpha=0.35,
            linewidth=0.5 + 3.0 * edge["count"] / max_count,
            zorder=1,
        )
    xs = [positions[v][0] for v in nodes]
    ys = [positions[v][1] for v in nodes]
    ax.scatter(xs, ys, s=220, color="#e8c468", zorder=2, edgecolors="#555555")
    for node in nodes:
        x, y = positions[node]
        ax.annotate(node, (x, y), ha="center", va="center", fontsize=8, zorder=3)
    ax.set_title("Communication network (pseudonymized)")
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    path = os.path.join(outdir, "comm_graph.png")
    fig.savefig(path, dpi=110)
    plt.close(fig)
    written.append(path)
    return written


_RENDERERS = {
    "eda": _render_eda,
    "clustering": _render_clustering,
    "topics": _render_topics,
    "sentiment": _render_sentiment,
    "comm_graph": _render_comm_graph,
}
