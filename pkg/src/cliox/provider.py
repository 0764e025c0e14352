"""Gatekeeper between the public surface and the raw data.

Seals plaintext data locations under an AEAD key that never leaves this
module, records consent receipts, and decides job authorizations.  Only the
co-located runtime, presenting the trust token handed over at wiring time,
can unseal a locator; tampered ciphertexts fail closed.
"""

from __future__ import annotations

import os
import secrets
from dataclasses import dataclass

from cryptography.exceptions import InvalidTag
from cryptography.hazmat.primitives.ciphers.aead import AESGCM

from . import crypto
from .catalog import Catalog
from .clock import Clock, SystemClock
from .errors import (
    BadRuntimeToken,
    BadSignature,
    DigestMismatch,
    NotFound,
    SealTampered,
    UnknownLocator,
)
from .ledger import Ledger

NONCE_LEN = 12

OK = "Ok"
NO_GRANT = "NoGrant"
GRANT_EXPIRED = "GrantExpired"
GRANT_REVOKED = "GrantRevoked"
PAYMENT_MISSING = "PaymentMissing"
CONSENT_MISSING = "ConsentMissing"
BAD_IDENTITY = "BadIdentity"

DECISION_REASONS = (
    OK,
    NO_GRANT,
    GRANT_EXPIRED,
    GRANT_REVOKED,
    PAYMENT_MISSING,
    CONSENT_MISSING,
    BAD_IDENTITY,
)


@dataclass
class SealedLocator:
    locator_id: str
    asset_did: str
    nonce: bytes
    ciphertext: bytes


@dataclass
class ConsentReceipt:
    consumer: str
    asset_did: str
    license_digest: str
    signature: str
    recorded_at: int

    def to_doc(self) -> dict:
        return {
            "consumer": self.consumer,
            "asset_did": self.asset_did,
            "license_digest": self.license_digest,
            "signature": self.signature,
            "recorded_at": self.recorded_at,
        }


@dataclass
class AuthorizationDecision:
    authorized: bool
    reason: str
    grant_id: str | None = None

    def to_doc(self) -> dict:
        return {
            "authorized": self.authorized,
            "reason": self.reason,
            "grant_id": self.grant_id,
        }


def consent_message(consumer: str, asset_did: str, license_digest: str) -> bytes:
    """Byte string a consumer signs to acknowledge a license."""
    return (consumer + asset_did + license_digest).encode("utf-8")


def authorize_message(consumer: str, dataset_did: str, algorithm_did: str) -> bytes:
    return crypto.signing_bytes(
        "authorize_job",
        consumer=consumer,
        dataset=dataset_did,
        algorithm=algorithm_did,
    )


class Provider:
    """Holds the sealing key, consent receipts, and the runtime trust token."""

    def __init__(
        self,
        ledger: Ledger,
        catalog: Catalog,
        key_path: str | None = None,
        clock: Clock | None = None,
    ):
        self.ledger = ledger
        self.catalog = catalog
        self.clock = clock or SystemClock()
        self._key = self._load_or_create_key(key_path)
        self._sealed: dict[str, SealedLocator] = {}
        self._consents: dict[tuple[str, str], ConsentReceipt] = {}
        self._runtime_token: str | None = None

    @staticmethod
    def _load_or_create_key(key_path: str | None) -> bytes:
        if key_path is None:
            return AESGCM.generate_key(bit_length=256)
        if os.path.exists(key_path):
            with open(key_path, "rb") as fh:
                key = fh.read()
            if len(key) != 32:
                raise ValueError(f"provider key at {key_path} is not 32 bytes")
            return key
        key = AESGCM.generate_key(bit_length=256)
        fd = os.open(key_path, os.O_WRONLY | os.O_CREAT | os.O_EXCL, 0o600)
        with os.fdopen(fd, "wb") as fh:
            fh.write(key)
        return key

    def issue_runtime_token(self) -> str:
        """Mint the trust token the co-located runtime must present to unseal."""
        self._runtime_token = secrets.token_hex(32)
        return self._runtime_token

    # -- sealing ---------------------------------------------------------

    def seal_locator(self, location: str, asset_did: str) -> SealedLocator:
        locator_id = secrets.token_hex(16)
        nonce = secrets.token_bytes(NONCE_LEN)
        ciphertext = AESGCM(self._key).encrypt(
            nonce, location.encode("utf-8"), asset_did.encode("utf-8")
        )
        sealed = SealedLocator(
            locator_id=locator_id,
            asset_did=asset_did,
            nonce=nonce,
            ciphertext=ciphertext,
        )
        self._sealed[locator_id] = sealed
        self.ledger.append_audit(
            "locator.seal",
            crypto.canonical_bytes(
                {
                    "locator_id": locator_id,
                    "asset_did": asset_did,
                    "ciphertext_digest": crypto.sha256_hex(nonce + ciphertext),
                }
            ),
        )
        return sealed

    def unseal_for_runtime(self, locator_id: str, runtime_token: str) -> str:
        if self._runtime_token is None or runtime_token != self._runtime_token:
            raise BadRuntimeToken("runtime token not recognized")
        sealed = self._sealed.get(locator_id)
        if sealed is None:
            raise UnknownLocator(locator_id)
        try:
            plaintext = AESGCM(self._key).decrypt(
                sealed.nonce, sealed.ciphertext, sealed.asset_did.encode("utf-8")
            )
        except InvalidTag as exc:
            raise SealTampered(locator_id) from exc
        return plaintext.decode("utf-8")

    def has_locator(self, locator_id: str) -> bool:
        return locator_id in self._sealed

    # -- consent ---------------------------------------------------------

    def record_consent(
        self, consumer: str, asset_did: str, license_digest: str, signature: bytes
    ) -> ConsentReceipt:
        ddo = self.catalog.resolve(asset_did)  # NotFound propagates
        if license_digest != ddo.license_digest:
            raise DigestMismatch(
                f"consent digest {license_digest[:12]} does not match current license"
            )
        public_key = self.ledger.public_key_of(consumer)
        if not crypto.verify(
            public_key, signature, consent_message(consumer, asset_did, license_digest)
        ):
            raise BadSignature("consent signature invalid")
        receipt = ConsentReceipt(
            consumer=consumer,
            asset_did=asset_did,
            license_digest=license_digest,
            signature=signature.hex(),
            recorded_at=self.clock.now(),
        )
        self._consents[(consumer, asset_did)] = receipt
        self.ledger.append_audit("consent.record", crypto.canonical_bytes(receipt.to_doc()))
        return receipt

    def consent_for(self, consumer: str, asset_did: str) -> ConsentReceipt | None:
        return self._consents.get((consumer, asset_did))

    # -- authorization ---------------------------------------------------

    def authorize_job(
        self,
        consumer: str,
        dataset_did: str,
        algorithm_did: str,
        signature: bytes,
    ) -> AuthorizationDecision:
        """Run the fixed check order: identity, payment, grant liveness, consent.

        A failed check yields a decision, not an exception; every decision is
        audited.
        """
        decision = self._decide(consumer, dataset_did, algorithm_did, signature)
        self.ledger.append_audit(
            "authorize.decision",
            crypto.canonical_bytes(
                {
                    "consumer": consumer,
                    "dataset": dataset_did,
                    "algorithm": algorithm_did,
                    **decision.to_doc(),
                }
            ),
        )
        return decision

    def _decide(
        self,
        consumer: str,
        dataset_did: str,
        algorithm_did: str,
        signature: bytes,
    ) -> AuthorizationDecision:
        if not self.ledger.has_identity(consumer):
            return AuthorizationDecision(False, BAD_IDENTITY)
        public_key = self.ledger.public_key_of(consumer)
        if not crypto.verify(
            public_key, signature, authorize_message(consumer, dataset_did, algorithm_did)
        ):
            return AuthorizationDecision(False, BAD_IDENTITY)

        orders = self.ledger.orders_for(consumer, dataset_did, algorithm_did)
        if not any(o.state in ("Locked", "Released") for o in orders):
            return AuthorizationDecision(False, PAYMENT_MISSING)

        grants = self.ledger.grants_for(consumer, dataset_did, algorithm_did)
        if not grants:
            return AuthorizationDecision(False, NO_GRANT)
        now = self.clock.now()
        live = [g for g in grants if not g.revoked and now < g.expires_at]
        if not live:
            # Newest grant names the failure; expiry is checked before revocation.
            newest = grants[0]
            if now >= newest.expires_at and not newest.revoked:
                return AuthorizationDecision(False, GRANT_EXPIRED)
            if newest.revoked:
                return AuthorizationDecision(False, GRANT_REVOKED)
            return AuthorizationDecision(False, GRANT_EXPIRED)
        grant = live[0]

        try:
            ddo = self.catalog.resolve(dataset_did)
        except NotFound:
            return AuthorizationDecision(False, NO_GRANT)
        if ddo.requires_consent_ack:
            receipt = self._consents.get((consumer, dataset_did))
            if receipt is None or receipt.license_digest != ddo.license_digest:
                return AuthorizationDecision(False, CONSENT_MISSING)

        return AuthorizationDecision(True, OK, grant_id=grant.grant_id)
