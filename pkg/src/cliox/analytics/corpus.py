"""Plaintext email parsing and on-disk corpus loading."""

from __future__ import annotations

import email.utils
import os
from dataclasses import dataclass
from datetime import datetime, timezone

from ..crypto import sha256_hex
from ..errors import CorpusLoadError


@dataclass
class EmailDocument:
    doc_id: str
    sender: str
    recipients: list[str]
    date: datetime | None
    subject: str
    body: str

    def month_key(self) -> str | None:
        """Bucket key `YYYY-MM` in UTC, or None for undated documents."""
        if self.date is None:
            return None
        utc = self.date.astimezone(timezone.utc)
        return f"{utc.year:04d}-{utc.month:02d}"


def parse_email(raw_text: str, doc_id: str | None = None) -> EmailDocument:
    """Split headers from body at the first blank line.

    Recognized headers: From:, To: (comma separated), Date: (RFC 2822;
    unparseable dates leave the document undated), Subject:.  Anything else
    is ignored.
    """
    if doc_id is None:
        doc_id = sha256_hex(raw_text.encode("utf-8"))[:16]
    lines = raw_text.split("\n")
    sender = ""
    recipients: list[str] = []
    date: datetime | None = None
    subject = ""
    body_start = len(lines)
    for i, line in enumerate(lines):
        if line.strip() == "":
            body_start = i + 1
            break
        lowered = line.lower()
        if lowered.startswith("from:"):
            sender = line[5:].strip()
        elif lowered.startswith("to:"):
            recipients = [r.strip() for r in line[3:].split(",") if r.strip()]
        elif lowered.startswith("date:"):
            try:
                parsed = email.utils.parsedate_to_datetime(line[5:].strip())
            except (ValueError, TypeError):
                parsed = None
            if parsed is not None and parsed.tzinfo is None:
                parsed = parsed.replace(tzinfo=timezone.utc)
            date = parsed
        elif lowered.startswith("subject:"):
            subject = line[8:].strip()
    body = "\n".join(lines[body_start:])
    return EmailDocument(
        doc_id=doc_id,
        sender=sender,
        recipients=recipients,
        date=date,
        subject=subject,
        body=body,
    )


def load_corpus(root: str) -> list[EmailDocument]:
    """Walk `root` recursively and parse every regular file.

    Files are visited in lexicographic path order; each document's doc_id is
    its POSIX-style path relative to the root, which keeps downstream output
    independent of filesystem iteration order.
    """
    if not os.path.isdir(root):
        raise CorpusLoadError(f"corpus root {root!r} is not a readable directory")
    paths: list[str] = []
    try:
        for dirpath, dirnames, filenames in os.walk(root):
            dirnames.sort()
            for fname in filenames:
                paths.append(os.path.join(dirpath, fname))
    except OSError as exc:
        raise CorpusLoadError(str(exc)) from exc
    paths.sort(key=lambda p: os.path.relpath(p, root).replace(os.sep, "/"))
    docs: list[EmailDocument] = []
    for path in paths:
        rel = os.path.relpath(path, root).replace(os.sep, "/")
        try:
            with open(path, "r", encoding="utf-8", errors="replace") as fh:
                raw = fh.read()
        except OSError as exc:
            raise CorpusLoadError(f"cannot read {rel}: {exc}") from exc
        docs.append(parse_email(raw, doc_id=rel))
    return docs
