"""Canonical serialization, hashing, Ed25519 signatures, and DID derivation.

Every digest and signature in the system is computed over the canonical
document form: key-sorted JSON with no whitespace, encoded as UTF-8.
Pinning this here keeps fixtures and audit hashes bit-stable.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives.asymmetric.ed25519 import (
    Ed25519PrivateKey,
    Ed25519PublicKey,
)

DID_PREFIX = "did:cliox:"
JOB_DID_PREFIX = "did:cliox:job:"


def canonical_bytes(obj: Any) -> bytes:
    """Serialize to the canonical form: key-sorted, whitespace-free, UTF-8."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest_document(obj: Any) -> str:
    """SHA-256 hex digest of a document's canonical serialization."""
    return sha256_hex(canonical_bytes(obj))


def generate_keypair(seed: bytes | None = None) -> tuple[bytes, bytes]:
    """Return (secret_key, public_key) raw bytes for a fresh Ed25519 keypair.

    The secret key is the 64-byte concatenation of the 32-byte private seed
    and the 32-byte public key, so it round-trips through `sign`.  A fixed
    32-byte `seed` yields a deterministic keypair (used for golden fixtures).
    """
    if seed is None:
        private = Ed25519PrivateKey.generate()
    else:
        private = Ed25519PrivateKey.from_private_bytes(seed)
    from cryptography.hazmat.primitives import serialization

    priv_raw = private.private_bytes(
        serialization.Encoding.Raw,
        serialization.PrivateFormat.Raw,
        serialization.NoEncryption(),
    )
    pub_raw = private.public_key().public_bytes(
        serialization.Encoding.Raw, serialization.PublicFormat.Raw
    )
    return priv_raw + pub_raw, pub_raw


def sign(secret_key: bytes, message: bytes) -> bytes:
    """Ed25519 signature with the 64-byte secret produced by `generate_keypair`."""
    private = Ed25519PrivateKey.from_private_bytes(secret_key[:32])
    return private.sign(message)


def verify(public_key: bytes, signature: bytes, message: bytes) -> bool:
    try:
        Ed25519PublicKey.from_public_bytes(public_key).verify(signature, message)
        return True
    except (InvalidSignature, ValueError):
        return False


def did_for_public_key(public_key: bytes) -> str:
    """Identity DID: prefix + lowercase hex of the first 20 bytes of SHA-256(key)."""
    return DID_PREFIX + hashlib.sha256(public_key).digest()[:20].hex()


def did_for_asset(author_did: str, name: str, created_at: int) -> str:
    """Asset DID derived from publisher, name, and creation time."""
    preimage = (author_did + name + str(created_at)).encode("utf-8")
    return DID_PREFIX + hashlib.sha256(preimage).digest()[:20].hex()


def is_asset_did(value: str) -> bool:
    if not value.startswith(DID_PREFIX) or value.startswith(JOB_DID_PREFIX):
        return False
    suffix = value[len(DID_PREFIX):]
    return len(suffix) == 40 and all(c in "0123456789abcdef" for c in suffix)


def signing_bytes(kind: str, **fields: Any) -> bytes:
    """Canonical message for operation signatures: the op tag plus its fields."""
    doc = {"op": kind}
    doc.update(fields)
    return canonical_bytes(doc)
