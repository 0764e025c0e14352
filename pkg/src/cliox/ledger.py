"""Simulated settlement and registry layer.

Identities, euro-e balances (integer minor units), data NFTs, data-token
classes, multi-party escrow, access grants, and the hash-chained audit log.
Stands in for the on-chain layer: every state mutation is serialized through
one writer lock and appends at least one audit entry.
"""

from __future__ import annotations

import json
import os
import secrets
import threading
from dataclasses import dataclass, field, replace

from . import crypto
from .clock import Clock, SystemClock
from .errors import (
    BadSignature,
    BadSplit,
    DuplicateAsset,
    InsufficientFunds,
    NotLocked,
    NotOwner,
    UnknownIdentity,
    UnknownNft,
    UnknownOrder,
)

ROLES = frozenset(
    {"holder", "ai_contributor", "viz_contributor", "consumer", "provider", "keeper"}
)

GENESIS_HASH = "0" * 64

ORDER_LOCKED = "Locked"
ORDER_RELEASED = "Released"
ORDER_REFUNDED = "Refunded"


@dataclass
class Identity:
    """Keypair-backed participant.  The secret key never enters ledger state."""

    did: str
    public_key: bytes
    secret_key: bytes | None
    roles: frozenset[str]


@dataclass
class Account:
    did: str
    balance: int = 0
    nonce: int = 0


@dataclass
class DataNft:
    nft_id: str
    owner: str
    asset_did: str
    minted_at: int


@dataclass
class DataTokenClass:
    token_id: str
    nft_id: str
    price_per_access: int
    total_minted: int = 0


@dataclass
class EscrowOrder:
    order_id: str
    buyer: str
    asset_did: str
    algorithm_did: str
    amount_locked: int
    payees: list[tuple[str, int]]
    state: str = ORDER_LOCKED
    created_at: int = 0
    settled_at: int | None = None


@dataclass
class AccessGrant:
    grant_id: str
    consumer: str
    dataset_did: str
    algorithm_did: str
    expires_at: int
    revoked: bool = False


@dataclass(frozen=True)
class LedgerEntry:
    index: int
    timestamp: int
    kind: str
    payload_digest: str
    prev_hash: str
    entry_hash: str

    def to_doc(self) -> dict:
        return {
            "index": self.index,
            "timestamp": self.timestamp,
            "kind": self.kind,
            "payload_digest": self.payload_digest,
            "prev_hash": self.prev_hash,
            "entry_hash": self.entry_hash,
        }


def entry_hash_of(index: int, timestamp: int, prev_hash: str, payload_digest: str, kind: str) -> str:
    """Chained entry hash over every persisted field except the hash itself."""
    preimage = f"{index}{timestamp}{prev_hash}{payload_digest}{kind}"
    return crypto.sha256_hex(preimage.encode("utf-8"))


class AuditLog:
    """Append-only hash chain, optionally mirrored line-by-line to a file.

    Verification re-reads the file when one is configured so offline
    tampering of any persisted byte is detected at its line index.
    """

    _FIELDS = ("index", "timestamp", "kind", "payload_digest", "prev_hash", "entry_hash")

    def __init__(self, path: str | os.PathLike | None = None, clock: Clock | None = None):
        self.path = os.fspath(path) if path is not None else None
        self.clock = clock or SystemClock()
        self.entries: list[LedgerEntry] = []
        if self.path and os.path.exists(self.path):
            self._load()

    def _load(self) -> None:
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                doc = json.loads(line)
                self.entries.append(LedgerEntry(**{k: doc[k] for k in self._FIELDS}))

    @property
    def head_hash(self) -> str:
        return self.entries[-1].entry_hash if self.entries else GENESIS_HASH

    def append(self, kind: str, payload_bytes: bytes) -> LedgerEntry:
        index = len(self.entries)
        timestamp = self.clock.now()
        payload_digest = crypto.sha256_hex(payload_bytes)
        prev_hash = self.head_hash
        entry = LedgerEntry(
            index=index,
            timestamp=timestamp,
            kind=kind,
            payload_digest=payload_digest,
            prev_hash=prev_hash,
            entry_hash=entry_hash_of(index, timestamp, prev_hash, payload_digest, kind),
        )
        self.entries.append(entry)
        if self.path:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(crypto.canonical_bytes(entry.to_doc()).decode("utf-8") + "\n")
        return entry

    def _stored_docs(self) -> list[object]:
        """Entry documents as persisted: parsed file lines, or memory entries.

        The file is read as bytes: a tampered byte need not be valid UTF-8,
        and verification must still name the owning line instead of raising.
        """
        if self.path and os.path.exists(self.path):
            with open(self.path, "rb") as fh:
                raw = fh.read()
            docs: list[object] = []
            for line in raw.split(b"\n"):
                if not line:
                    continue
                try:
                    docs.append(json.loads(line.decode("utf-8")))
                except (UnicodeDecodeError, ValueError):
                    docs.append(None)
            return docs
        return [e.to_doc() for e in self.entries]

    def verify(self) -> dict:
        """Recompute every hash and link; report the first disagreeing index."""
        expected_prev = GENESIS_HASH
        for i, doc in enumerate(self._stored_docs()):
            if not isinstance(doc, dict):
                return {"valid": False, "first_bad_index": i}
            try:
                index = doc["index"]
                timestamp = doc["timestamp"]
                kind = doc["kind"]
                payload_digest = doc["payload_digest"]
                prev_hash = doc["prev_hash"]
                entry_hash = doc["entry_hash"]
            except (KeyError, TypeError):
                return {"valid": False, "first_bad_index": i}
            if index != i or prev_hash != expected_prev:
                return {"valid": False, "first_bad_index": i}
            if not isinstance(timestamp, int) or not isinstance(kind, str):
                return {"valid": False, "first_bad_index": i}
            recomputed = entry_hash_of(index, timestamp, prev_hash, payload_digest, kind)
            if recomputed != entry_hash:
                return {"valid": False, "first_bad_index": i}
            expected_prev = entry_hash
        return {"valid": True, "first_bad_index": None}


class Ledger:
    """Single-writer registry of identities, balances, assets, and escrow."""

    def __init__(self, audit_path: str | os.PathLike | None = None, clock: Clock | None = None):
        self.clock = clock or SystemClock()
        self.audit = AuditLog(audit_path, clock=self.clock)
        self._lock = threading.RLock()
        self._identities: dict[str, Identity] = {}
        self._accounts: dict[str, Account] = {}
        self._nfts: dict[str, DataNft] = {}
        self._nft_by_asset: dict[str, str] = {}
        self._tokens: dict[str, DataTokenClass] = {}
        self._token_by_nft: dict[str, str] = {}
        self._orders: dict[str, EscrowOrder] = {}
        self._grants: dict[str, AccessGrant] = {}
        self._grant_order: dict[str, str] = {}

    # -- audit -------------------------------------------------------------

    def append_audit(self, kind: str, payload_bytes: bytes) -> LedgerEntry:
        with self._lock:
            return self.audit.append(kind, payload_bytes)

    def _audit_doc(self, kind: str, doc: dict) -> LedgerEntry:
        return self.audit.append(kind, crypto.canonical_bytes(doc))

    def verify_chain(self) -> dict:
        return self.audit.verify()

    # -- identities and balances ------------------------------------------

    def create_identity(self, roles: set[str] | frozenset[str]) -> Identity:
        roles = frozenset(roles)
        if not roles:
            raise ValueError("roles must be non-empty")
        unknown = roles - ROLES
        if unknown:
            raise ValueError(f"unknown roles: {sorted(unknown)}")
        secret_key, public_key = crypto.generate_keypair()
        did = crypto.did_for_public_key(public_key)
        with self._lock:
            identity = Identity(did=did, public_key=public_key, secret_key=secret_key, roles=roles)
            self._identities[did] = Identity(did, public_key, None, roles)
            self._accounts[did] = Account(did=did)
            self._audit_doc(
                "identity.create",
                {"did": did, "roles": sorted(roles), "public_key": public_key.hex()},
            )
            return identity

    def register_identity(self, public_key: bytes, roles: set[str] | frozenset[str]) -> Identity:
        """Register an externally generated keypair (e.g. fixture identities)."""
        roles = frozenset(roles)
        if not roles or roles - ROLES:
            raise ValueError("invalid role set")
        did = crypto.did_for_public_key(public_key)
        with self._lock:
            if did not in self._identities:
                self._identities[did] = Identity(did, public_key, None, roles)
                self._accounts[did] = Account(did=did)
                self._audit_doc(
                    "identity.create",
                    {"did": did, "roles": sorted(roles), "public_key": public_key.hex()},
                )
            return self._identities[did]

    def get_identity(self, did: str) -> Identity:
        with self._lock:
            identity = self._identities.get(did)
            if identity is None:
                raise UnknownIdentity(did)
            return identity

    def public_key_of(self, did: str) -> bytes:
        return self.get_identity(did).public_key

    def has_identity(self, did: str) -> bool:
        with self._lock:
            return did in self._identities

    def get_account(self, did: str) -> Account:
        with self._lock:
            account = self._accounts.get(did)
            if account is None:
                raise UnknownIdentity(did)
            return replace(account)

    def spendable(self, did: str) -> int:
        return self.get_account(did).balance

    def faucet(self, did: str, amount: int) -> Account:
        if amount <= 0:
            raise ValueError("faucet amount must be positive")
        with self._lock:
            account = self._accounts.get(did)
            if account is None:
                raise UnknownIdentity(did)
            account.balance += amount
            self._audit_doc("account.faucet", {"did": did, "amount": amount})
            return replace(account)

    def transfer(self, from_did: str, to_did: str, amount: int) -> tuple[Account, Account]:
        if amount <= 0:
            raise ValueError("transfer amount must be positive")
        with self._lock:
            src = self._accounts.get(from_did)
            dst = self._accounts.get(to_did)
            if src is None:
                raise UnknownIdentity(from_did)
            if dst is None:
                raise UnknownIdentity(to_did)
            if src.balance < amount:
                raise InsufficientFunds(f"balance {src.balance} < {amount}")
            src.balance -= amount
            dst.balance += amount
            src.nonce += 1
            self._audit_doc(
                "account.transfer", {"from": from_did, "to": to_did, "amount": amount}
            )
            return replace(src), replace(dst)

    # -- NFTs and data tokens ---------------------------------------------

    def mint_data_nft(self, owner: str, asset_did: str, signature: bytes) -> DataNft:
        with self._lock:
            identity = self._identities.get(owner)
            if identity is None:
                raise UnknownIdentity(owner)
            message = crypto.signing_bytes("mint_data_nft", owner=owner, asset_did=asset_did)
            if not crypto.verify(identity.public_key, signature, message):
                raise BadSignature("mint signature does not verify for owner")
            if asset_did in self._nft_by_asset:
                raise DuplicateAsset(asset_did)
            nft = DataNft(
                nft_id=secrets.token_hex(16),
                owner=owner,
                asset_did=asset_did,
                minted_at=len(self.audit.entries),
            )
            self._nfts[nft.nft_id] = nft
            self._nft_by_asset[asset_did] = nft.nft_id
            self._accounts[owner].nonce += 1
            self._audit_doc(
                "nft.mint", {"nft_id": nft.nft_id, "owner": owner, "asset_did": asset_did}
            )
            return replace(nft)

    def create_data_token(
        self, caller: str, nft_id: str, price_per_access: int, signature: bytes
    ) -> DataTokenClass:
        if price_per_access < 0:
            raise ValueError("price_per_access must be >= 0")
        with self._lock:
            identity = self._identities.get(caller)
            if identity is None:
                raise UnknownIdentity(caller)
            nft = self._nfts.get(nft_id)
            if nft is None:
                raise UnknownNft(nft_id)
            message = crypto.signing_bytes(
                "create_data_token", caller=caller, nft_id=nft_id, price=price_per_access
            )
            if not crypto.verify(identity.public_key, signature, message):
                raise BadSignature("token signature does not verify")
            if nft.owner != caller:
                raise NotOwner(f"{caller} does not own nft {nft_id}")
            token = DataTokenClass(
                token_id=secrets.token_hex(16), nft_id=nft_id, price_per_access=price_per_access
            )
            self._tokens[token.token_id] = token
            self._token_by_nft[nft_id] = token.token_id
            self._accounts[caller].nonce += 1
            self._audit_doc(
                "token.create",
                {"token_id": token.token_id, "nft_id": nft_id, "price": price_per_access},
            )
            return replace(token)

    def nft_for_asset(self, asset_did: str) -> DataNft:
        with self._lock:
            nft_id = self._nft_by_asset.get(asset_did)
            if nft_id is None:
                raise UnknownNft(f"no NFT for asset {asset_did}")
            return replace(self._nfts[nft_id])

    def token_for_asset(self, asset_did: str) -> DataTokenClass | None:
        with self._lock:
            nft_id = self._nft_by_asset.get(asset_did)
            if nft_id is None:
                return None
            token_id = self._token_by_nft.get(nft_id)
            return replace(self._tokens[token_id]) if token_id else None

    # -- escrow ------------------------------------------------------------

    def lock_escrow(
        self,
        buyer: str,
        asset_did: str,
        algorithm_did: str,
        amount: int,
        payees: list[tuple[str, int]],
    ) -> EscrowOrder:
        if amount <= 0:
            raise ValueError("escrow amount must be positive")
        with self._lock:
            account = self._accounts.get(buyer)
            if account is None:
                raise UnknownIdentity(buyer)
            if not payees:
                raise BadSplit("payees must be non-empty")
            if sum(bp for _, bp in payees) != 10_000:
                raise BadSplit("payee shares must sum to 10000 basis points")
            for payee_did, _ in payees:
                if payee_did not in self._accounts:
                    raise UnknownIdentity(payee_did)
            if account.balance < amount:
                raise InsufficientFunds(f"spendable {account.balance} < {amount}")
            account.balance -= amount
            account.nonce += 1
            order = EscrowOrder(
                order_id=secrets.token_hex(16),
                buyer=buyer,
                asset_did=asset_did,
                algorithm_did=algorithm_did,
                amount_locked=amount,
                payees=list(payees),
                state=ORDER_LOCKED,
                created_at=len(self.audit.entries),
            )
            self._orders[order.order_id] = order
            nft_id = self._nft_by_asset.get(asset_did)
            if nft_id and nft_id in self._token_by_nft:
                self._tokens[self._token_by_nft[nft_id]].total_minted += 1
            self._audit_doc(
                "escrow.lock",
                {
                    "order_id": order.order_id,
                    "buyer": buyer,
                    "asset_did": asset_did,
                    "algorithm_did": algorithm_did,
                    "amount": amount,
                    "payees": [[d, bp] for d, bp in payees],
                },
            )
            return replace(order, payees=list(order.payees))

    def release_escrow(self, order_id: str) -> list[tuple[str, int]]:
        with self._lock:
            order = self._orders.get(order_id)
            if order is None:
                raise UnknownOrder(order_id)
            if order.state != ORDER_LOCKED:
                raise NotLocked(f"order {order_id} is {order.state}")
            payouts = split_amount(order.amount_locked, order.payees)
            for payee_did, payout in payouts:
                self._accounts[payee_did].balance += payout
            order.state = ORDER_RELEASED
            order.settled_at = len(self.audit.entries)
            self._audit_doc(
                "escrow.release",
                {"order_id": order_id, "payouts": [[d, p] for d, p in payouts]},
            )
            return payouts

    def refund_escrow(self, order_id: str) -> Account:
        with self._lock:
            order = self._orders.get(order_id)
            if order is None:
                raise UnknownOrder(order_id)
            if order.state != ORDER_LOCKED:
                raise NotLocked(f"order {order_id} is {order.state}")
            account = self._accounts[order.buyer]
            account.balance += order.amount_locked
            order.state = ORDER_REFUNDED
            order.settled_at = len(self.audit.entries)
            self._audit_doc(
                "escrow.refund", {"order_id": order_id, "amount": order.amount_locked}
            )
            return replace(account)

    def get_order(self, order_id: str) -> EscrowOrder:
        with self._lock:
            order = self._orders.get(order_id)
            if order is None:
                raise UnknownOrder(order_id)
            return replace(order, payees=list(order.payees))

    def orders(self) -> list[EscrowOrder]:
        with self._lock:
            return [replace(o, payees=list(o.payees)) for o in self._orders.values()]

    def locked_total(self) -> int:
        with self._lock:
            return sum(o.amount_locked for o in self._orders.values() if o.state == ORDER_LOCKED)

    def balances_total(self) -> int:
        with self._lock:
            return sum(a.balance for a in self._accounts.values())

    # -- access grants -----------------------------------------------------

    def grant_access(self, order_id: str, duration_secs: int) -> AccessGrant:
        if duration_secs < 0:
            raise ValueError("duration must be >= 0")
        with self._lock:
            order = self._orders.get(order_id)
            if order is None:
                raise UnknownOrder(order_id)
            if order.state == ORDER_REFUNDED:
                raise NotLocked(f"order {order_id} was refunded")
            grant = AccessGrant(
                grant_id=secrets.token_hex(16),
                consumer=order.buyer,
                dataset_did=order.asset_did,
                algorithm_did=order.algorithm_did,
                expires_at=self.clock.now() + duration_secs,
                revoked=False,
            )
            self._grants[grant.grant_id] = grant
            self._grant_order[grant.grant_id] = order_id
            self._audit_doc(
                "grant.issue",
                {
                    "grant_id": grant.grant_id,
                    "order_id": order_id,
                    "consumer": grant.consumer,
                    "dataset_did": grant.dataset_did,
                    "algorithm_did": grant.algorithm_did,
                    "expires_at": grant.expires_at,
                },
            )
            return replace(grant)

    def revoke_grant(self, grant_id: str) -> AccessGrant:
        with self._lock:
            grant = self._grants.get(grant_id)
            if grant is None:
                raise UnknownOrder(grant_id)
            grant.revoked = True
            self._audit_doc("grant.revoke", {"grant_id": grant_id})
            return replace(grant)

    def get_grant(self, grant_id: str) -> AccessGrant:
        with self._lock:
            grant = self._grants.get(grant_id)
            if grant is None:
                raise UnknownOrder(grant_id)
            return replace(grant)

    def order_for_grant(self, grant_id: str) -> str | None:
        with self._lock:
            return self._grant_order.get(grant_id)

    def grants_for(self, consumer: str, dataset_did: str, algorithm_did: str) -> list[AccessGrant]:
        """Grants for the (consumer, dataset, algorithm) triple, newest first.

        Equal expiries are broken by issuance order: two purchases in the
        same second must still bind the later grant, or settlement would
        target the earlier purchase's order.
        """
        with self._lock:
            hits = [
                (issued, g)
                for issued, g in enumerate(self._grants.values())
                if g.consumer == consumer
                and g.dataset_did == dataset_did
                and g.algorithm_did == algorithm_did
            ]
            hits.sort(key=lambda pair: (pair[1].expires_at, pair[0]), reverse=True)
            return [replace(g) for _, g in hits]

    def orders_for(self, buyer: str, dataset_did: str, algorithm_did: str) -> list[EscrowOrder]:
        with self._lock:
            return [
                replace(o, payees=list(o.payees))
                for o in self._orders.values()
                if o.buyer == buyer
                and o.asset_did == dataset_did
                and o.algorithm_did == algorithm_did
            ]


def split_amount(amount: int, payees: list[tuple[str, int]]) -> list[tuple[str, int]]:
    """Floor split by basis points; the rounding remainder goes to the first payee."""
    payouts = [(did, amount * bp // 10_000) for did, bp in payees]
    remainder = amount - sum(p for _, p in payouts)
    if remainder:
        first_did, first_amount = payouts[0]
        payouts[0] = (first_did, first_amount + remainder)
    return payouts
