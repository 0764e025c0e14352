"""Pseudonymized communication network."""

from __future__ import annotations

from .masking import MaskedDocument


def _pseudonym_number(p: str) -> int:
    return int(p[1:])


def graph_payload(docs: list[MaskedDocument]) -> dict:
    """Sender -> recipient edge counts over pseudonyms.

    Nodes are every pseudonym seen in a header; edges are listed in
    (source number, target number) order so the payload is deterministic.
    """
    nodes: set[str] = set()
    edges: dict[tuple[str, str], int] = {}
    for doc in docs:
        if doc.sender_pseudonym:
            nodes.add(doc.sender_pseudonym)
        for recipient in doc.recipient_pseudonyms:
            nodes.add(recipient)
            if doc.sender_pseudonym:
                key = (doc.sender_pseudonym, recipient)
                edges[key] = edges.get(key, 0) + 1
    ordered = sorted(
        edges.items(),
        key=lambda kv: (_pseudonym_number(kv[0][0]), _pseudonym_number(kv[0][1])),
    )
    return {
        "nodes": sorted(nodes, key=_pseudonym_number),
        "edges": [
            {"source": src, "target": dst, "count": count}
            for (src, dst), count in ordered
        ],
    }
