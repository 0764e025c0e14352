"""Tokenization and TF-IDF.

The tokenizer is pinned: masking placeholders are stripped first, text is
lowercased, split on runs of non-alphanumeric ASCII, and tokens shorter than
two characters are dropped.  The stopword list holds exactly 127 entries and
is part of the public contract (aggregate term lists depend on it).
"""

from __future__ import annotations

import math
import re

import numpy as np

from ..errors import EmptyCorpus
from .masking import MaskedDocument

PLACEHOLDER_RE = re.compile(r"⟨[A-Z]+⟩")
TOKEN_RE = re.compile(r"[a-z0-9]+")

STOPWORDS: frozenset[str] = frozenset(
    (
        "a", "about", "above", "after", "again", "against", "all", "am", "an", "and",
        "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
        "between", "both", "but", "by", "can", "cannot", "could", "did", "do", "does",
        "doing", "down", "during", "each", "few", "for", "from", "further", "had", "has",
        "have", "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
        "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
        "me", "more", "most", "my", "myself", "no", "nor", "not", "now", "of",
        "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out",
        "over", "own", "same", "she", "should", "so", "some", "such", "than", "that",
        "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
        "those", "through", "to", "too", "under", "until", "up", "very", "was", "we",
        "were", "what", "when", "where", "which", "while", "who", "whom", "why", "will",
        "with", "would", "you", "your", "yours", "yourself", "yourselves",
    )
)


def base_tokens(text: str) -> list[str]:
    """Lowercased alphanumeric tokens of length >= 2, placeholders removed."""
    cleaned = PLACEHOLDER_RE.sub(" ", text)
    return [t for t in TOKEN_RE.findall(cleaned.lower()) if len(t) >= 2]


def tokenize(text: str) -> list[str]:
    """base_tokens minus stopwords; this is the vocabulary-bearing tokenizer."""
    return [t for t in base_tokens(text) if t not in STOPWORDS]


def doc_tokens(doc: MaskedDocument) -> list[str]:
    """Tokens of a masked document: subject then body."""
    return tokenize(doc.subject + "\n" + doc.body)


def tfidf(
    docs: list[MaskedDocument],
) -> tuple[np.ndarray, list[str], list[str]]:
    """Document-term matrix with tf = raw count, idf = ln(N/df), L2 rows.

    Returns (matrix, vocabulary, doc_ids); vocabulary is sorted, rows follow
    the input document order.  All-zero rows (documents with no vocabulary
    terms) are left as zero vectors.
    """
    if not docs:
        raise EmptyCorpus("tfidf requires at least one document")
    token_lists = [doc_tokens(d) for d in docs]
    vocab = sorted({t for tokens in token_lists for t in tokens})
    index = {t: i for i, t in enumerate(vocab)}
    n_docs = len(docs)
    matrix = np.zeros((n_docs, len(vocab)), dtype=np.float64)
    df = np.zeros(len(vocab), dtype=np.float64)
    for row, tokens in enumerate(token_lists):
        for t in tokens:
            matrix[row, index[t]] += 1.0
        for t in set(tokens):
            df[index[t]] += 1.0
    if len(vocab):
        idf = np.log(n_docs / df)
        matrix *= idf
        norms = np.linalg.norm(matrix, axis=1)
        nonzero = norms > 0
        matrix[nonzero] /= norms[nonzero, None]
    return matrix, vocab, [d.doc_id for d in docs]


def term_counts(docs: list[MaskedDocument]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for doc in docs:
        for t in doc_tokens(doc):
            counts[t] = counts.get(t, 0) + 1
    return counts


def top_terms(counts: dict[str, int]) -> list[list]:
    """All terms ordered by count desc, term asc; truncation is policy's job."""
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [[term, count] for term, count in ordered]


def brute_force_tfidf(docs: list[MaskedDocument]) -> tuple[np.ndarray, list[str]]:
    """Independent slow-path oracle: per-cell formula evaluation.

    Kept in the library so tests can diff it against tfidf without sharing
    intermediate code paths.
    """
    token_lists = [doc_tokens(d) for d in docs]
    vocab = sorted({t for tokens in token_lists for t in tokens})
    n = len(docs)
    rows = []
    for tokens in token_lists:
        row = []
        for term in vocab:
            tf = sum(1 for t in tokens if t == term)
            df = sum(1 for other in token_lists if term in other)
            row.append(tf * math.log(n / df) if tf else 0.0)
        norm = math.sqrt(sum(v * v for v in row))
        rows.append([v / norm for v in row] if norm else row)
    return np.array(rows, dtype=np.float64), vocab
