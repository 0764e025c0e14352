"""Sentiment scoring against hand-computed fixture values.

Fixture lexicon hits, audited by hand: alice/002 "great"; alice/005
"welcome"; bob/003 "great excellent praise"; bob/004 "terrible problem";
carol/001 "good bad bad"; everything else scores zero.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from cliox.analytics.corpus import load_corpus
from cliox.analytics.masking import MaskedDocument, mask_corpus
from cliox.analytics.sentiment import (
    Lexicon,
    default_lexicon,
    score_document,
    score_tokens,
    sentiment_payload,
)
from cliox.errors import EmptyCorpus

SMALL_CORPUS = Path(__file__).parent / "fixtures" / "corpus_small"

TINY = Lexicon(positive=frozenset({"good", "great"}), negative=frozenset({"bad"}))


def _doc(body: str, month: str | None = "2001-01", subject: str = "") -> MaskedDocument:
    return MaskedDocument(
        doc_id="d",
        sender_pseudonym="P1",
        recipient_pseudonyms=[],
        month=month,
        subject=subject,
        body=body,
        mask_counts={},
    )


def test_score_tokens_ratio():
    assert score_tokens(["good", "good", "bad"], TINY) == pytest.approx(1 / 3)
    assert score_tokens(["bad", "bad"], TINY) == -1.0
    assert score_tokens(["good"], TINY) == 1.0
    assert score_tokens(["desk", "curve"], TINY) == 0.0
    assert score_tokens([], TINY) == 0.0


def test_score_counts_repeats():
    assert score_tokens(["good"] * 3 + ["bad"], TINY) == pytest.approx(0.5)


def test_score_document_uses_base_tokens_not_stopword_filtered():
    # "very" is a stopword; were the stopword filter applied, a lexicon
    # containing it would never fire
    lex = Lexicon(positive=frozenset({"very"}), negative=frozenset())
    assert score_document(_doc("very well then"), lex) == 1.0


def test_score_document_includes_subject():
    assert score_document(_doc("neutral text", subject="great news"), TINY) == 1.0


def test_placeholders_never_score():
    lex = Lexicon(positive=frozenset({"name"}), negative=frozenset())
    assert score_document(_doc("met ⟨NAME⟩ today"), lex) == 0.0


def test_lexicon_rejects_overlap():
    with pytest.raises(ValueError):
        Lexicon(positive=frozenset({"fine"}), negative=frozenset({"fine", "bad"}))


def test_default_lexicon_is_disjoint_and_nonempty():
    lex = default_lexicon()
    assert len(lex.positive) >= 100
    assert len(lex.negative) >= 100
    assert not (lex.positive & lex.negative)
    assert "good" in lex.positive and "bad" in lex.negative


def test_payload_requires_documents():
    with pytest.raises(EmptyCorpus):
        sentiment_payload([])


def test_payload_monthly_buckets_are_sorted_and_undated_excluded():
    docs = [
        _doc("good", month="2001-02"),
        _doc("bad", month="2001-01"),
        _doc("good", month=None),
    ]
    payload = sentiment_payload(docs, TINY)
    assert list(payload["monthly"]) == ["2001-01", "2001-02"]
    assert payload["monthly"]["2001-01"] == {"mean": -1.0, "docs": 1}
    assert payload["monthly"]["2001-02"] == {"mean": 1.0, "docs": 1}
    # the undated document still moves the overall mean
    assert payload["overall_mean"] == pytest.approx(1 / 3)


def test_fixture_corpus_matches_hand_computation():
    masked, _ = mask_corpus(load_corpus(SMALL_CORPUS))
    payload = sentiment_payload(masked)
    assert payload["overall_mean"] == pytest.approx(5 / 36, abs=1e-9)
    monthly = payload["monthly"]
    assert list(monthly) == ["2001-01", "2001-02", "2001-03"]
    assert monthly["2001-01"]["docs"] == 6
    assert monthly["2001-01"]["mean"] == pytest.approx(1 / 3, abs=1e-9)
    assert monthly["2001-02"]["docs"] == 4
    assert monthly["2001-02"]["mean"] == pytest.approx(-1 / 12, abs=1e-9)
    assert monthly["2001-03"]["docs"] == 1
    assert monthly["2001-03"]["mean"] == pytest.approx(0.0, abs=1e-9)


def test_fixture_per_document_scores():
    masked, _ = mask_corpus(load_corpus(SMALL_CORPUS))
    lex = default_lexicon()
    scores = {d.doc_id: score_document(d, lex) for d in masked}
    assert scores["alice/002.txt"] == 1.0
    assert scores["bob/003.txt"] == 1.0
    assert scores["bob/004.txt"] == -1.0
    assert scores["carol/001.txt"] == pytest.approx(-1 / 3)
    assert scores["alice/001.txt"] == 0.0
