"""Asset-metadata registry and discovery surface.

Stores signed DDOs keyed by DID, appends a keeper entry to the ledger on
registration, and answers keyword queries.  A DDO never carries a plaintext
data location; datasets point at a sealed locator held by the provider.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import crypto
from .errors import BadSignature, DuplicateDid, MissingLocator, NotFound, NotOwner
from .ledger import Ledger

ASSET_TYPES = ("dataset", "algorithm", "visualization_tool")

SNIPPET_LEN = 160


@dataclass
class DDO:
    did: str
    asset_type: str
    name: str
    description: str
    author: str
    license_text: str
    license_digest: str
    requires_consent_ack: bool
    price_per_access: int
    tags: list[str]
    created_at: int
    sealed_locator_id: str | None
    signature: str
    retired: bool = False

    def to_doc(self) -> dict:
        return {
            "did": self.did,
            "asset_type": self.asset_type,
            "name": self.name,
            "description": self.description,
            "author": self.author,
            "license_text": self.license_text,
            "license_digest": self.license_digest,
            "requires_consent_ack": self.requires_consent_ack,
            "price_per_access": self.price_per_access,
            "tags": list(self.tags),
            "created_at": self.created_at,
            "sealed_locator_id": self.sealed_locator_id,
            "signature": self.signature,
            "retired": self.retired,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "DDO":
        return cls(**{f: doc[f] for f in doc_fields()})

    def signing_payload(self) -> bytes:
        doc = self.to_doc()
        del doc["signature"]
        return crypto.canonical_bytes(doc)


def doc_fields() -> tuple[str, ...]:
    return (
        "did",
        "asset_type",
        "name",
        "description",
        "author",
        "license_text",
        "license_digest",
        "requires_consent_ack",
        "price_per_access",
        "tags",
        "created_at",
        "sealed_locator_id",
        "signature",
        "retired",
    )


def build_ddo(
    author_did: str,
    author_secret: bytes,
    asset_type: str,
    name: str,
    description: str,
    license_text: str,
    price_per_access: int,
    created_at: int,
    tags: list[str] | None = None,
    requires_consent_ack: bool = False,
    sealed_locator_id: str | None = None,
) -> DDO:
    """Assemble and sign a DDO; the DID is derived from author, name, and time."""
    if asset_type not in ASSET_TYPES:
        raise ValueError(f"asset_type must be one of {ASSET_TYPES}")
    ddo = DDO(
        did=crypto.did_for_asset(author_did, name, created_at),
        asset_type=asset_type,
        name=name,
        description=description,
        author=author_did,
        license_text=license_text,
        license_digest=crypto.sha256_hex(license_text.encode("utf-8")),
        requires_consent_ack=requires_consent_ack,
        price_per_access=price_per_access,
        tags=list(tags or []),
        created_at=created_at,
        sealed_locator_id=sealed_locator_id,
        signature="",
        retired=False,
    )
    ddo.signature = crypto.sign(author_secret, ddo.signing_payload()).hex()
    return ddo


def verify_ddo(ddo: DDO, public_key: bytes) -> bool:
    try:
        signature = bytes.fromhex(ddo.signature)
    except ValueError:
        return False
    return crypto.verify(public_key, signature, ddo.signing_payload())


@dataclass
class SearchHit:
    did: str
    name: str
    asset_type: str
    price_per_access: int
    snippet: str
    score: int

    def to_doc(self) -> dict:
        return {
            "did": self.did,
            "name": self.name,
            "asset_type": self.asset_type,
            "price_per_access": self.price_per_access,
            "snippet": self.snippet,
            "score": self.score,
        }


class Catalog:
    """Aquarius analog: DDO store plus keyword search."""

    def __init__(self, ledger: Ledger):
        self.ledger = ledger
        self._ddos: dict[str, DDO] = {}
        self._registered_digest: dict[str, str] = {}
        self._registered_at: dict[str, int] = {}

    def register_asset(self, ddo: DDO) -> str:
        if ddo.retired:
            raise ValueError("cannot register a retired DDO")
        if ddo.did in self._ddos:
            raise DuplicateDid(ddo.did)
        public_key = self.ledger.public_key_of(ddo.author)
        if not verify_ddo(ddo, public_key):
            raise BadSignature(f"DDO signature invalid for {ddo.did}")
        if ddo.asset_type == "dataset" and not ddo.sealed_locator_id:
            raise MissingLocator(ddo.did)
        stored = replace(ddo, tags=list(ddo.tags))
        self._ddos[ddo.did] = stored
        self._registered_digest[ddo.did] = crypto.digest_document(stored.to_doc())
        entry = self.ledger.append_audit("asset.register", crypto.canonical_bytes(stored.to_doc()))
        self._registered_at[ddo.did] = entry.index
        return ddo.did

    def resolve(self, did: str) -> DDO:
        ddo = self._ddos.get(did)
        if ddo is None:
            raise NotFound(did)
        return replace(ddo, tags=list(ddo.tags))

    def registered_digest(self, did: str) -> str:
        if did not in self._registered_digest:
            raise NotFound(did)
        return self._registered_digest[did]

    def registered_at(self, did: str) -> int:
        if did not in self._registered_at:
            raise NotFound(did)
        return self._registered_at[did]

    def search(
        self,
        query: str,
        asset_type: str | None = None,
        max_price: int | None = None,
        tag: str | None = None,
    ) -> list[SearchHit]:
        terms = [t for t in query.lower().split() if t]
        hits: list[tuple[SearchHit, int]] = []
        for ddo in self._ddos.values():
            if ddo.retired:
                continue
            if asset_type is not None and ddo.asset_type != asset_type:
                continue
            if max_price is not None and ddo.price_per_access > max_price:
                continue
            if tag is not None and tag.lower() not in [t.lower() for t in ddo.tags]:
                continue
            score = _score(ddo, terms)
            if terms and score == 0:
                continue
            hits.append(
                (
                    SearchHit(
                        did=ddo.did,
                        name=ddo.name,
                        asset_type=ddo.asset_type,
                        price_per_access=ddo.price_per_access,
                        snippet=ddo.description[:SNIPPET_LEN],
                        score=score,
                    ),
                    ddo.created_at,
                )
            )
        hits.sort(key=lambda pair: (-pair[0].score, -pair[1], pair[0].did))
        return [hit for hit, _ in hits]

    def retire_asset(self, did: str, caller: str, signature: bytes) -> DDO:
        ddo = self._ddos.get(did)
        if ddo is None:
            raise NotFound(did)
        nft = self.ledger.nft_for_asset(did)
        message = crypto.signing_bytes("retire_asset", did=did, caller=caller)
        if caller != nft.owner or not crypto.verify(
            self.ledger.public_key_of(nft.owner), signature, message
        ):
            raise NotOwner(f"{caller} is not the NFT owner of {did}")
        ddo.retired = True
        self.ledger.append_audit(
            "asset.retire", crypto.canonical_bytes({"did": did, "by": caller})
        )
        return replace(ddo, tags=list(ddo.tags))

    def all_assets(self) -> list[DDO]:
        return [replace(d, tags=list(d.tags)) for d in self._ddos.values()]


def _score(ddo: DDO, terms: list[str]) -> int:
    """Count matched query terms; a term found in the name weighs double."""
    name = ddo.name.lower()
    description = ddo.description.lower()
    tags = [t.lower() for t in ddo.tags]
    score = 0
    for term in terms:
        if term in name:
            score += 2
        elif term in description or any(term in t for t in tags):
            score += 1
    return score
