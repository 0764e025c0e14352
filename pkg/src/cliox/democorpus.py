"""Synthetic email corpus generator.

Produces a deterministic corporate-mail corpus for demos and verification:
fixed sender pool, dated 2001 messages with monthly spread, themed bodies
(trading desk, regulatory, office floor), and optionally 25 sentinel PII
strings (five per category) whose absence from any published aggregate can
be checked mechanically.  Same (root, n_docs, seed) always yields the same
bytes.
"""

from __future__ import annotations

import os

from .rng import Xoshiro256

PEOPLE = (
    ("jeff.corman", "Jeff Corman"),
    ("louise.tran", "Louise Tran"),
    ("ken.rice", "Ken Rice"),
    ("sally.beck", "Sally Beck"),
    ("greg.whitley", "Greg Whitley"),
    ("tana.jones", "Tana Jones"),
    ("mark.haedicke", "Mark Haedicke"),
    ("vince.kamin", "Vince Kamin"),
    ("carol.stone", "Carol Stone"),
    ("drew.fossum", "Drew Fossum"),
    ("elena.diaz", "Elena Diaz"),
    ("rod.hayslett", "Rod Hayslett"),
)

DOMAIN = "demo-firm.example"

MONTHS = (
    ("Jan", "2001-01", 31),
    ("Feb", "2001-02", 28),
    ("Mar", "2001-03", 31),
    ("Apr", "2001-04", 30),
    ("May", "2001-05", 31),
    ("Jun", "2001-06", 30),
    ("Jul", "2001-07", 31),
    ("Aug", "2001-08", 31),
)

TRADING_SENTENCES = (
    "The desk closed the gas position before the afternoon settlement window.",
    "Forward curves moved sharply after the capacity auction results posted.",
    "Please confirm the hedge volumes for the western power book today.",
    "Settlement flagged a mismatch in the pipeline nomination schedule.",
    "The trading floor expects volatile pricing through the next quarter.",
    "Counterparty limits were raised for the storage contract renewal.",
    "The curve shift pushed margin requirements above the weekly threshold.",
)

LEGAL_SENTENCES = (
    "The regulatory filing needs outside counsel review before Friday.",
    "Compliance requested revised language for the master agreement draft.",
    "The audit committee meets to discuss the disclosure schedule next week.",
    "Counsel advised holding the contract amendments until the review ends.",
    "The commission docket lists our tariff question for the open meeting.",
    "Legal wants every trader to recertify the conduct policy this month.",
    "The settlement agreement language still needs a final signature page.",
)

OFFICE_SENTENCES = (
    "The team lunch moved to the corner grill near the parking garage.",
    "Facilities will repaint the seventh floor conference room this weekend.",
    "The softball game against the pipeline group starts at six tonight.",
    "Someone left a birthday cake in the break room for the analysts.",
    "The new badge readers go live at the garage entrance on Monday.",
    "Holiday schedules are posted outside the human resources office.",
    "The charity drive collected more boxes than any previous year.",
)

POSITIVE_WORDS = ("great", "excellent", "pleased", "good", "success", "wonderful")
NEGATIVE_WORDS = ("terrible", "problem", "worried", "bad", "failure", "awful")

SUBJECT_HEADS = (
    "Re: schedule update",
    "Position summary",
    "Contract review",
    "Weekly planning",
    "Quarter outlook",
    "Meeting notes",
    "Action items",
)

SENTINEL_SSNS = (
    "523-84-1956",
    "671-29-4830",
    "412-67-3091",
    "338-51-7264",
    "590-13-6478",
)

SENTINEL_EMAILS = (
    "whistle.keeper1@private-leak.example",
    "insider.memo2@private-leak.example",
    "quiet.source3@private-leak.example",
    "back.channel4@private-leak.example",
    "night.audit5@private-leak.example",
)

SENTINEL_PHONES = (
    "(713) 555-0142",
    "(281) 555-0197",
    "713-555-0128",
    "832-555-0164",
    "(409) 555-0175",
)

SENTINEL_NAMES = (
    "Veronica Ashford",
    "Marcus Deluca",
    "Priscilla Vann",
    "Theodore Bricker",
    "Rosalie Dunmore",
)

SENTINEL_ADDRESSES = (
    "8821 Brookhollow Ave",
    "417 Calder Lane",
    "9934 Westline Road",
    "605 Quarry Ridge Blvd",
    "2208 Fendale Street",
)

SENTINEL_TEMPLATES = {
    "ssn": "For the benefits file her social security number is {} per payroll.",
    "email": "Forward the side letter to {} before anyone else sees it.",
    "phone": "Call {} after hours to reach the contact directly.",
    "name": "Please loop in {} about the confidential review.",
    "address": "The documents were couriered to {} yesterday evening.",
}


def sentinel_catalog() -> dict[str, list[str]]:
    return {
        "ssn": list(SENTINEL_SSNS),
        "email": list(SENTINEL_EMAILS),
        "phone": list(SENTINEL_PHONES),
        "name": list(SENTINEL_NAMES),
        "address": list(SENTINEL_ADDRESSES),
    }


def generate_corpus(
    root: str,
    n_docs: int = 200,
    seed: int = 20010401,
    with_sentinels: bool = True,
) -> dict[str, list[str]]:
    """Write the corpus under root; returns the planted sentinel strings."""
    rng = Xoshiro256(seed)
    os.makedirs(root, exist_ok=True)

    sentinel_lines: list[str] = []
    if with_sentinels:
        for category, values in sentinel_catalog().items():
            template = SENTINEL_TEMPLATES[category]
            for value in values:
                sentinel_lines.append(template.format(value))

    for i in range(n_docs):
        sender_user, _ = PEOPLE[rng.randrange(len(PEOPLE))]
        n_recipients = 1 + rng.randrange(3)
        recipients = []
        while len(recipients) < n_recipients:
            user, _ = PEOPLE[rng.randrange(len(PEOPLE))]
            address = f"{user}@{DOMAIN}"
            if user != sender_user and address not in recipients:
                recipients.append(address)
        month_name, _, days = MONTHS[i % len(MONTHS)]
        day = 1 + rng.randrange(days)
        hour = 7 + rng.randrange(11)
        minute = rng.randrange(60)

        pool = (TRADING_SENTENCES, LEGAL_SENTENCES, OFFICE_SENTENCES)[i % 3]
        n_sentences = 4 + rng.randrange(4)
        sentences = [pool[rng.randrange(len(pool))] for _ in range(n_sentences)]
        mood = rng.randrange(3)
        if mood == 0:
            word = POSITIVE_WORDS[rng.randrange(len(POSITIVE_WORDS))]
            sentences.append(f"Overall the outcome looks {word} for the group.")
        elif mood == 1:
            word = NEGATIVE_WORDS[rng.randrange(len(NEGATIVE_WORDS))]
            sentences.append(f"Frankly the situation remains {word} for everyone involved.")
        if sentinel_lines and i % 8 == 3:
            sentences.insert(1 + rng.randrange(len(sentences) - 1), sentinel_lines.pop(0))

        subject = SUBJECT_HEADS[rng.randrange(len(SUBJECT_HEADS))]
        body = "\n".join(sentences)
        raw = (
            f"From: {sender_user}@{DOMAIN}\n"
            f"To: {', '.join(recipients)}\n"
            f"Date: {day:02d} {month_name} 2001 {hour:02d}:{minute:02d}:00 +0000\n"
            f"Subject: {subject}\n"
            "\n"
            f"{body}\n"
        )
        user_dir = os.path.join(root, sender_user)
        os.makedirs(user_dir, exist_ok=True)
        with open(os.path.join(user_dir, f"{i:04d}.txt"), "w", encoding="utf-8") as fh:
            fh.write(raw)

    if with_sentinels and sentinel_lines:
        raise RuntimeError(
            f"{len(sentinel_lines)} sentinels were not placed; raise n_docs"
        )
    return sentinel_catalog() if with_sentinels else {}
