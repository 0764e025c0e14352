"""PII masking: ordered regex and dictionary passes over document text.

Pass order is fixed: SSN, email, phone, personal name, street address.
Placeholders use angle quotes so no pass can re-trigger on its own output,
which makes masking idempotent.  Header addresses are replaced by stable
pseudonyms (P1, P2, ...) assigned in order of first appearance so network
structure survives without identities.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .corpus import EmailDocument

PLACEHOLDER_SSN = "⟨SSN⟩"
PLACEHOLDER_EMAIL = "⟨EMAIL⟩"
PLACEHOLDER_PHONE = "⟨PHONE⟩"
PLACEHOLDER_NAME = "⟨NAME⟩"
PLACEHOLDER_ADDRESS = "⟨ADDRESS⟩"

# Guards keep the fixed-width patterns from firing inside longer digit runs.
SSN_RE = re.compile(r"(?<![\d-])\d{3}-\d{2}-\d{4}(?![\d-])")
EMAIL_RE = re.compile(r"[A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,}")
PHONE_RE = re.compile(r"(?<!\d)(?:\+?1[-. ])?\(?\d{3}\)?[-. ]\d{3}[-. ]\d{4}(?!\d)")

CAP_RUN = r"[A-Z][a-z]+(?: [A-Z][a-z]+)*"
SALUTATIONS = ("Dear", "Mr\\.", "Mrs\\.", "Ms\\.", "Dr\\.")
SALUTATION_RE = re.compile(
    r"(\b(?:" + "|".join(SALUTATIONS) + r") )(" + CAP_RUN + r")"
)
CAP_RUN_RE = re.compile(r"\b" + CAP_RUN + r"\b")

ADDRESS_SUFFIXES = (
    "Street",
    "St\\.",
    "St",
    "Avenue",
    "Ave",
    "Road",
    "Rd",
    "Blvd",
    "Drive",
    "Dr\\.",
    "Lane",
)
ADDRESS_RE = re.compile(
    r"\b\d+(?: [A-Z][a-z]+)+ (?:" + "|".join(ADDRESS_SUFFIXES) + r")(?!\w)"
)

MASK_CATEGORIES = ("ssn", "email", "phone", "name", "address")


def default_name_dictionary() -> frozenset[str]:
    """Lowercase given names shipped with the package."""
    text = resources.files("cliox.data").joinpath("given_names.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower()
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


@dataclass
class MaskedDocument:
    doc_id: str
    sender_pseudonym: str
    recipient_pseudonyms: list[str]
    month: str | None
    subject: str
    body: str
    mask_counts: dict[str, int]


class Pseudonymizer:
    """Stable address -> P<n> mapping, numbered by first appearance."""

    def __init__(self):
        self._map: dict[str, str] = {}

    def assign(self, address: str) -> str:
        key = address.strip().lower()
        if not key:
            return ""
        if key not in self._map:
            self._map[key] = f"P{len(self._map) + 1}"
        return self._map[key]

    def mapping_size(self) -> int:
        return len(self._map)


def mask_text(text: str, name_dictionary: frozenset[str]) -> tuple[str, dict[str, int]]:
    """Apply the five masking passes; returns masked text and per-category counts."""
    counts = {c: 0 for c in MASK_CATEGORIES}

    text, counts["ssn"] = SSN_RE.subn(PLACEHOLDER_SSN, text)
    text, counts["email"] = EMAIL_RE.subn(PLACEHOLDER_EMAIL, text)
    text, counts["phone"] = PHONE_RE.subn(PLACEHOLDER_PHONE, text)

    def after_salutation(match: re.Match) -> str:
        counts["name"] += 1
        return match.group(1) + PLACEHOLDER_NAME

    text = SALUTATION_RE.sub(after_salutation, text)

    def dictionary_run(match: re.Match) -> str:
        first = match.group(0).split(" ", 1)[0]
        if first.lower() in name_dictionary:
            counts["name"] += 1
            return PLACEHOLDER_NAME
        return match.group(0)

    text = CAP_RUN_RE.sub(dictionary_run, text)

    text, counts["address"] = ADDRESS_RE.subn(PLACEHOLDER_ADDRESS, text)
    return text, counts


def mask_document(
    doc: EmailDocument,
    name_dictionary: frozenset[str],
    pseudonymizer: Pseudonymizer,
) -> MaskedDocument:
    masked_subject, subject_counts = mask_text(doc.subject, name_dictionary)
    masked_body, body_counts = mask_text(doc.body, name_dictionary)
    counts = {c: subject_counts[c] + body_counts[c] for c in MASK_CATEGORIES}
    return MaskedDocument(
        doc_id=doc.doc_id,
        sender_pseudonym=pseudonymizer.assign(doc.sender),
        recipient_pseudonyms=[p for p in (pseudonymizer.assign(r) for r in doc.recipients) if p],
        month=doc.month_key(),
        subject=masked_subject,
        body=masked_body,
        mask_counts=counts,
    )


def mask_corpus(
    docs: list[EmailDocument],
    name_dictionary: frozenset[str] | None = None,
) -> tuple[list[MaskedDocument], Pseudonymizer]:
    """Mask every document in the given order with one shared pseudonym table."""
    if name_dictionary is None:
        name_dictionary = default_name_dictionary()
    pseudonymizer = Pseudonymizer()
    masked = [mask_document(d, name_dictionary, pseudonymizer) for d in docs]
    return masked, pseudonymizer
