"""Masking passes: per-category regexes, dictionary rule, idempotence.

Aggregate expectations come from the hand-audited fixture corpus: exactly
one SSN, one email, one phone number, one address, and two maskable names
(one via salutation, one via the dictionary) are planted across 12 messages.
"""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliox.analytics.corpus import load_corpus
from cliox.analytics.masking import (
    MASK_CATEGORIES,
    Pseudonymizer,
    default_name_dictionary,
    mask_corpus,
    mask_text,
)

SMALL_CORPUS = Path(__file__).parent / "fixtures" / "corpus_small"

DICT = default_name_dictionary()


def _mask(text: str) -> str:
    return mask_text(text, DICT)[0]


# -- per-category patterns --------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "ssn 123-45-6789 on file",
        "123-45-6789",
        "(123-45-6789)",
    ],
)
def test_ssn_is_masked(text):
    masked, counts = mask_text(text, DICT)
    assert "123-45-6789" not in masked
    assert "⟨SSN⟩" in masked
    assert counts["ssn"] == 1


@pytest.mark.parametrize(
    "text",
    [
        "order 1123-45-6789",  # leading digit makes it part of a longer run
        "123-45-67890",
        "123-45-6789-1",
        "123-456-789",
    ],
)
def test_ssn_guards_hold(text):
    _, counts = mask_text(text, DICT)
    assert counts["ssn"] == 0


@pytest.mark.parametrize(
    "address",
    [
        "jeff.corman@demo-firm.example",
        "press.contact@example.com",
        "a+tag@sub.domain.co.uk",
        "UPPER.case@Example.ORG",
    ],
)
def test_email_is_masked(address):
    masked, counts = mask_text(f"write to {address} today", DICT)
    assert address not in masked
    assert counts["email"] == 1


@pytest.mark.parametrize(
    "number",
    [
        "713-555-0101",
        "(713) 555-0101",
        "713.555.0101",
        "+1 713-555-0101",
        "1-713-555-0101",
    ],
)
def test_phone_is_masked(number):
    masked, counts = mask_text(f"call {number} now", DICT)
    assert number not in masked
    assert counts["phone"] == 1


@pytest.mark.parametrize("text", ["extension 0101", "call 555-0101", "id 12345678901"])
def test_phone_guards_hold(text):
    _, counts = mask_text(text, DICT)
    assert counts["phone"] == 0


def test_salutation_masks_any_capitalized_name():
    # the salutation rule needs no dictionary entry, surnames included
    masked, counts = mask_text("Dear Zebulon Quirk, see attached.", DICT)
    assert masked == "Dear ⟨NAME⟩, see attached."
    assert counts["name"] == 1
    masked, _ = mask_text("Mr. Hastings signed off.", DICT)
    assert masked.startswith("Mr. ⟨NAME⟩")


def test_dictionary_masks_full_capitalized_run():
    masked, counts = mask_text("Please welcome Samantha Greer to the desk.", DICT)
    assert masked == "Please welcome ⟨NAME⟩ to the desk."
    assert counts["name"] == 1


def test_unknown_capitalized_run_is_left_alone():
    text = "The Zebulon Quirk account stays open."
    masked, counts = mask_text(text, DICT)
    assert masked == text
    assert counts["name"] == 0


@pytest.mark.parametrize(
    "text",
    [
        "Will the report be ready?",
        "Mark the calendar for Friday.",
        "Bill the client after close.",
        "Grant access to the auditors.",
        "May the schedule hold.",
        "Sue the vendor if needed.",
    ],
)
def test_homograph_sentence_openers_are_not_names(text):
    masked, counts = mask_text(text, DICT)
    assert masked == text
    assert counts["name"] == 0


@pytest.mark.parametrize(
    "street",
    [
        "12 Harbor Lane",
        "8821 Brookhollow Ave",
        "417 Calder Lane",
        "605 Quarry Ridge Blvd",
        "2208 Fendale Street",
        "9934 Westline Road",
    ],
)
def test_street_address_is_masked(street):
    masked, counts = mask_text(f"send it to {street} by noon", DICT)
    assert street not in masked
    assert "⟨ADDRESS⟩" in masked
    assert counts["address"] == 1


@pytest.mark.parametrize(
    "text", ["version 12 of the draft", "12 lane changes", "page 44 St"]
)
def test_address_guards_hold(text):
    _, counts = mask_text(text, DICT)
    assert counts["address"] == 0


# -- idempotence ------------------------------------------------------------


def test_masking_is_idempotent_on_mixed_pii():
    text = (
        "Dear Veronica Ashford, the SSN 523-84-1956 and phone (713) 555-0142 "
        "plus veronica.ashford@private-leak.example and 8821 Brookhollow Ave "
        "all appear here."
    )
    once = _mask(text)
    assert _mask(once) == once
    for fragment in ("523-84-1956", "555-0142", "private-leak", "Brookhollow", "Veronica"):
        assert fragment not in once


@settings(max_examples=150, deadline=None)
@given(
    st.text(
        alphabet="abcdefgh ABCDEFGH 0123456789.-()@+\n,ossamantha",
        max_size=120,
    )
)
def test_masking_is_idempotent_on_arbitrary_text(text):
    once = _mask(text)
    assert _mask(once) == once


def test_placeholders_do_not_retrigger_counts():
    once, counts_once = mask_text("Dear Samantha, call 713-555-0101.", DICT)
    twice, counts_twice = mask_text(once, DICT)
    assert twice == once
    assert all(counts_twice[c] == 0 for c in MASK_CATEGORIES)
    assert counts_once["name"] == 1 and counts_once["phone"] == 1


# -- pseudonyms -------------------------------------------------------------


def test_pseudonyms_number_by_first_appearance():
    p = Pseudonymizer()
    assert p.assign("carol@x.example") == "P1"
    assert p.assign("alice@x.example") == "P2"
    assert p.assign("carol@x.example") == "P1"
    assert p.assign(" CAROL@X.EXAMPLE ") == "P1"
    assert p.assign("") == ""
    assert p.assign("   ") == ""
    assert p.mapping_size() == 2


# -- fixture corpus ---------------------------------------------------------


@pytest.fixture(scope="module")
def masked_small():
    docs = load_corpus(SMALL_CORPUS)
    return mask_corpus(docs)


def test_fixture_mask_counts_are_exact(masked_small):
    masked, _ = masked_small
    totals = {c: 0 for c in MASK_CATEGORIES}
    for doc in masked:
        for c in MASK_CATEGORIES:
            totals[c] += doc.mask_counts[c]
    assert totals == {"ssn": 1, "email": 1, "phone": 1, "name": 2, "address": 1}


def test_fixture_pseudonyms_follow_load_order(masked_small):
    masked, pseudonymizer = masked_small
    assert pseudonymizer.mapping_size() == 3
    by_id = {d.doc_id: d for d in masked}
    assert by_id["alice/001.txt"].sender_pseudonym == "P1"
    assert by_id["alice/001.txt"].recipient_pseudonyms == ["P2"]
    assert by_id["alice/003.txt"].recipient_pseudonyms == ["P2", "P3"]
    assert by_id["carol/001.txt"].sender_pseudonym == "P3"
    assert by_id["carol/003.txt"].recipient_pseudonyms == []


def test_fixture_documents_are_scrubbed(masked_small):
    masked, _ = masked_small
    by_id = {d.doc_id: d for d in masked}
    assert "⟨PHONE⟩" in by_id["alice/001.txt"].body
    assert "713-555-0101" not in by_id["alice/001.txt"].body
    assert "Dear ⟨NAME⟩" in by_id["alice/002.txt"].body
    assert "⟨SSN⟩" in by_id["alice/003.txt"].body
    assert "532-11-9012" not in by_id["alice/003.txt"].body
    assert "⟨EMAIL⟩" in by_id["alice/004.txt"].body
    assert "⟨NAME⟩" in by_id["alice/005.txt"].body
    assert "Samantha" not in by_id["alice/005.txt"].body
    assert "⟨ADDRESS⟩" in by_id["bob/001.txt"].body
    assert "Harbor Lane" not in by_id["bob/001.txt"].body


def test_fixture_months_survive_masking(masked_small):
    masked, _ = masked_small
    months = [d.month for d in masked]
    assert months.count("2001-01") == 6
    assert months.count("2001-02") == 4
    assert months.count("2001-03") == 1
    assert months.count(None) == 1


def test_fixture_masking_is_idempotent_byte_for_byte(masked_small):
    masked, _ = masked_small
    for doc in masked:
        again, counts = mask_text(doc.body, DICT)
        assert again == doc.body
        assert sum(counts.values()) == 0


# -- dictionary -------------------------------------------------------------


def test_name_dictionary_shape():
    assert len(DICT) > 500
    assert all(name == name.lower() for name in DICT)
    for present in ("samantha", "veronica", "marcus", "alice", "theodore"):
        assert present in DICT
    for homograph in ("will", "may", "mark", "bill", "grant", "sue", "pat"):
        assert homograph not in DICT
