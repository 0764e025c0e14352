"""Lexicon-based sentiment scoring.

Per-document score is (positive - negative) / (positive + negative) over
lexicon hits; documents with no hits score 0.  Tokens come from the base
tokenizer without stopword removal so lexicon entries are never filtered
away.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from ..errors import EmptyCorpus
from .masking import MaskedDocument
from .text import base_tokens


@dataclass(frozen=True)
class Lexicon:
    positive: frozenset[str]
    negative: frozenset[str]

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(f"lexicon lists overlap: {sorted(overlap)[:5]}")


def _load_words(filename: str) -> frozenset[str]:
    text = resources.files("cliox.data").joinpath(filename).read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


def default_lexicon() -> Lexicon:
    return Lexicon(
        positive=_load_words("sentiment_positive.txt"),
        negative=_load_words("sentiment_negative.txt"),
    )


def score_tokens(tokens: list[str], lexicon: Lexicon) -> float:
    pos = sum(1 for t in tokens if t in lexicon.positive)
    neg = sum(1 for t in tokens if t in lexicon.negative)
    if pos + neg == 0:
        return 0.0
    return (pos - neg) / (pos + neg)


def score_document(doc: MaskedDocument, lexicon: Lexicon) -> float:
    return score_tokens(base_tokens(doc.subject + "\n" + doc.body), lexicon)


def sentiment_payload(docs: list[MaskedDocument], lexicon: Lexicon | None = None) -> dict:
    """Monthly means with doc counts plus the overall mean.

    Undated documents contribute to the overall mean only.
    """
    if not docs:
        raise EmptyCorpus("sentiment requires at least one document")
    if lexicon is None:
        lexicon = default_lexicon()
    scores = [score_document(d, lexicon) for d in docs]
    by_month: dict[str, list[float]] = {}
    for doc, score in zip(docs, scores):
        if doc.month is not None:
            by_month.setdefault(doc.month, []).append(score)
    monthly = {
        month: {"mean": sum(vals) / len(vals), "docs": len(vals)}
        for month, vals in sorted(by_month.items())
    }
    return {
        "overall_mean": sum(scores) / len(scores),
        "monthly": monthly,
    }
