"""Canonical serialization, signatures, and DID derivation."""

from __future__ import annotations

import hashlib

import pytest

from cliox import crypto


def test_canonical_bytes_sorts_keys_and_strips_whitespace():
    blob = crypto.canonical_bytes({"b": 1, "a": [2, {"z": None, "y": "ü"}]})
    assert blob == '{"a":[2,{"y":"ü","z":null}],"b":1}'.encode("utf-8")


def test_canonical_bytes_is_stable_under_key_insertion_order():
    one = crypto.canonical_bytes({"x": 1, "y": 2})
    two = crypto.canonical_bytes({"y": 2, "x": 1})
    assert one == two


def test_digest_document_matches_direct_sha256():
    doc = {"kind": "probe", "n": 7}
    expected = hashlib.sha256(crypto.canonical_bytes(doc)).hexdigest()
    assert crypto.digest_document(doc) == expected


def test_sign_and_verify_round_trip():
    secret, public = crypto.generate_keypair()
    message = b"state change 42"
    signature = crypto.sign(secret, message)
    assert crypto.verify(public, signature, message)


def test_verify_rejects_wrong_key_and_tampered_message():
    secret, public = crypto.generate_keypair()
    _, other_public = crypto.generate_keypair()
    message = b"authorize transfer"
    signature = crypto.sign(secret, message)
    assert not crypto.verify(other_public, signature, message)
    assert not crypto.verify(public, signature, b"authorize transfer!")
    flipped = bytes([signature[0] ^ 1]) + signature[1:]
    assert not crypto.verify(public, flipped, message)


def test_seeded_keypair_is_deterministic():
    seed = bytes(32)
    first = crypto.generate_keypair(seed=seed)
    second = crypto.generate_keypair(seed=seed)
    assert first == second


def test_identity_dids_unique_across_many_keys():
    dids = set()
    for _ in range(1000):
        _, public = crypto.generate_keypair()
        dids.add(crypto.did_for_public_key(public))
    assert len(dids) == 1000


def test_identity_did_shape():
    _, public = crypto.generate_keypair()
    did = crypto.did_for_public_key(public)
    assert did.startswith("did:cliox:")
    suffix = did[len("did:cliox:") :]
    assert len(suffix) == 40
    assert suffix == hashlib.sha256(public).digest()[:20].hex()


def test_asset_did_depends_on_every_component():
    base = crypto.did_for_asset("did:cliox:" + "a" * 40, "Letters", 1000)
    assert base != crypto.did_for_asset("did:cliox:" + "b" * 40, "Letters", 1000)
    assert base != crypto.did_for_asset("did:cliox:" + "a" * 40, "Letters2", 1000)
    assert base != crypto.did_for_asset("did:cliox:" + "a" * 40, "Letters", 1001)
    assert base == crypto.did_for_asset("did:cliox:" + "a" * 40, "Letters", 1000)


def test_signing_bytes_includes_op_tag():
    one = crypto.signing_bytes("mint", owner="x")
    two = crypto.signing_bytes("burn", owner="x")
    assert one != two
    assert b'"op":"mint"' in one
