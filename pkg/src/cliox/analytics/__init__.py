"""Distant-reading toolbox that runs inside the trusted runtime.

Raw documents enter, only aggregate structures leave.  Submodules:
corpus (parsing/loading), masking (PII removal), text (tokens and TF-IDF),
cluster (seeded k-means), topics (Gibbs-sampled LDA), sentiment, graph
(pseudonymized communication network), and results (the whitelisted
aggregate schema).
"""

from __future__ import annotations

from .corpus import EmailDocument, load_corpus, parse_email
from .masking import MaskedDocument, Pseudonymizer, default_name_dictionary, mask_corpus, mask_text
from .results import AggregateResult, validate_result

__all__ = [
    "AggregateResult",
    "EmailDocument",
    "MaskedDocument",
    "Pseudonymizer",
    "default_name_dictionary",
    "load_corpus",
    "mask_corpus",
    "mask_text",
    "parse_email",
    "validate_result",
]
