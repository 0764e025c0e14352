"""Composition root: one data-space node.

Wires the ledger, catalog, provider, and runtime together, bootstraps the
operator identities, registers the built-in algorithm assets, and exposes
the high-level flows (publish, consent, purchase, submit) shared by the
HTTP portal and the CLI.  The node custodies Ed25519 secret keys for every
identity it creates; clients authenticate with bearer tokens and the node
signs on their behalf.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from . import crypto
from .catalog import Catalog, build_ddo
from .clock import Clock, SystemClock
from .config import NodeConfig
from .errors import (
    AssetRetired,
    ConsentRequired,
    DuplicateAsset,
    RoleRequired,
    UnknownIdentity,
    UnknownNft,
)
from .ledger import Ledger
from .provider import Provider, authorize_message, consent_message
from .runtime import OutputPolicy, Runtime, result_request_message

BUILTIN_ALGORITHM_SPECS = (
    ("eda", "Corpus overview", "Document counts, date histogram, and frequent terms."),
    ("clustering", "Document clustering", "Seeded k-means over TF-IDF document vectors."),
    ("topics", "Topic extraction", "Latent topics via collapsed Gibbs sampling."),
    ("sentiment", "Sentiment timeline", "Lexicon-based sentiment aggregated by month."),
    ("comm_graph", "Communication network", "Pseudonymized sender-recipient graph."),
)

ALGORITHM_LICENSE = (
    "Algorithm use license: results may be used for research and teaching; "
    "re-identification of masked individuals is prohibited."
)


@dataclass
class PurchaseOutcome:
    order_id: str
    grant_id: str
    amount_locked: int
    expires_at: int


class ClioxNode:
    def __init__(self, config: NodeConfig | None = None, clock: Clock | None = None):
        self.config = config or NodeConfig()
        self.config.validate()
        self.clock = clock or SystemClock()
        data_dir = self.config.data_dir
        os.makedirs(data_dir, exist_ok=True)
        self.ledger = Ledger(
            audit_path=os.path.join(data_dir, "audit.log"), clock=self.clock
        )
        self.catalog = Catalog(self.ledger)
        self.provider = Provider(
            self.ledger,
            self.catalog,
            key_path=os.path.join(data_dir, "provider.key"),
            clock=self.clock,
        )
        runtime_token = self.provider.issue_runtime_token()
        self.runtime = Runtime(
            self.ledger,
            self.catalog,
            self.provider,
            runtime_token,
            results_dir=os.path.join(data_dir, "results"),
            policy=OutputPolicy(
                k_min=self.config.k_min,
                max_terms_per_list=self.config.max_terms_per_list,
            ),
            clock=self.clock,
            worker_limit=self.config.worker_limit,
        )
        self._keyring: dict[str, bytes] = {}
        self.operator_did: str = ""
        self.ai_contributor_did: str = ""
        self.viz_contributor_did: str = ""
        self.algorithm_assets: dict[str, str] = {}
        self._bootstrap()

    # -- identities ------------------------------------------------------

    def create_identity(self, roles: set[str]) -> tuple[str, frozenset[str]]:
        identity = self.ledger.create_identity(roles)
        self._keyring[identity.did] = identity.secret_key
        return identity.did, identity.roles

    def secret_of(self, did: str) -> bytes:
        secret = self._keyring.get(did)
        if secret is None:
            raise UnknownIdentity(f"no custodied key for {did}")
        return secret

    def sign_for(self, did: str, message: bytes) -> bytes:
        return crypto.sign(self.secret_of(did), message)

    def _bootstrap(self) -> None:
        self.operator_did, _ = self.create_identity({"provider", "keeper"})
        self.ai_contributor_did, _ = self.create_identity({"ai_contributor"})
        self.viz_contributor_did, _ = self.create_identity({"viz_contributor"})
        for key, title, description in BUILTIN_ALGORITHM_SPECS:
            ddo = build_ddo(
                author_did=self.ai_contributor_did,
                author_secret=self.secret_of(self.ai_contributor_did),
                asset_type="algorithm",
                name=title,
                description=description,
                license_text=ALGORITHM_LICENSE,
                price_per_access=self.config.algorithm_price,
                created_at=self.clock.now(),
                tags=["builtin:" + key, "algorithm"],
            )
            self.catalog.register_asset(ddo)
            self._mint_for(self.ai_contributor_did, ddo.did)
            self.algorithm_assets[key] = ddo.did

    def _mint_for(self, owner: str, asset_did: str) -> None:
        message = crypto.signing_bytes("mint_data_nft", owner=owner, asset_did=asset_did)
        self.ledger.mint_data_nft(owner, asset_did, self.sign_for(owner, message))

    # -- publication -----------------------------------------------------

    def publish_dataset(
        self,
        holder_did: str,
        name: str,
        description: str,
        price_per_access: int,
        location: str,
        license_text: str,
        tags: list[str] | None = None,
        requires_consent_ack: bool = True,
    ) -> str:
        identity = self.ledger.get_identity(holder_did)
        if "holder" not in identity.roles:
            raise RoleRequired("publishing requires the holder role")
        for existing in self.catalog.all_assets():
            if (
                not existing.retired
                and existing.author == holder_did
                and existing.name == name
            ):
                raise DuplicateAsset(f"active asset named {name!r} already published")
        created_at = self.clock.now()
        asset_did = crypto.did_for_asset(holder_did, name, created_at)
        sealed = self.provider.seal_locator(location, asset_did)
        ddo = build_ddo(
            author_did=holder_did,
            author_secret=self.secret_of(holder_did),
            asset_type="dataset",
            name=name,
            description=description,
            license_text=license_text,
            price_per_access=price_per_access,
            created_at=created_at,
            tags=tags,
            requires_consent_ack=requires_consent_ack,
            sealed_locator_id=sealed.locator_id,
        )
        assert ddo.did == asset_did
        self.catalog.register_asset(ddo)
        self._mint_for(holder_did, ddo.did)
        nft = self.ledger.nft_for_asset(ddo.did)
        token_message = crypto.signing_bytes(
            "create_data_token", caller=holder_did, nft_id=nft.nft_id, price=price_per_access
        )
        self.ledger.create_data_token(
            holder_did, nft.nft_id, price_per_access, self.sign_for(holder_did, token_message)
        )
        return ddo.did

    def retire_asset(self, caller_did: str, asset_did: str):
        message = crypto.signing_bytes("retire_asset", did=asset_did, caller=caller_did)
        return self.catalog.retire_asset(asset_did, caller_did, self.sign_for(caller_did, message))

    # -- consent and purchase --------------------------------------------

    def record_consent(self, consumer_did: str, asset_did: str, license_digest: str | None = None):
        ddo = self.catalog.resolve(asset_did)
        digest = license_digest if license_digest is not None else ddo.license_digest
        signature = self.sign_for(consumer_did, consent_message(consumer_did, asset_did, digest))
        return self.provider.record_consent(consumer_did, asset_did, digest, signature)

    def purchase(
        self,
        consumer_did: str,
        dataset_did: str,
        algorithm_did: str,
        duration_secs: int | None = None,
    ) -> PurchaseOutcome:
        dataset = self.catalog.resolve(dataset_did)
        algorithm = self.catalog.resolve(algorithm_did)
        if dataset.retired:
            raise AssetRetired(dataset_did)
        if algorithm.retired:
            raise AssetRetired(algorithm_did)
        if dataset.requires_consent_ack:
            receipt = self.provider.consent_for(consumer_did, dataset_did)
            if receipt is None or receipt.license_digest != dataset.license_digest:
                raise ConsentRequired(
                    f"dataset {dataset_did} requires a consent acknowledgement first"
                )
        amount = dataset.price_per_access + algorithm.price_per_access
        payees = self._payees_for(dataset_did, algorithm_did)
        order = self.ledger.lock_escrow(consumer_did, dataset_did, algorithm_did, amount, payees)
        duration = duration_secs or self.config.default_grant_hours * 3600
        grant = self.ledger.grant_access(order.order_id, duration)
        return PurchaseOutcome(
            order_id=order.order_id,
            grant_id=grant.grant_id,
            amount_locked=order.amount_locked,
            expires_at=grant.expires_at,
        )

    def _payees_for(self, dataset_did: str, algorithm_did: str) -> list[tuple[str, int]]:
        """Map split roles to concrete DIDs for this dataset/algorithm pair."""
        holder = self.ledger.nft_for_asset(dataset_did).owner
        try:
            ai_contributor = self.ledger.nft_for_asset(algorithm_did).owner
        except UnknownNft:
            ai_contributor = self.ai_contributor_did
        role_dids = {
            "holder": holder,
            "ai_contributor": ai_contributor,
            "viz_contributor": self.viz_contributor_did,
            "runtime_operator": self.operator_did,
        }
        split = self.config.payee_split
        return [(role_dids[role], split[role]) for role in sorted(split)]

    # -- jobs ------------------------------------------------------------

    def submit_job(self, consumer_did: str, dataset_did: str, algorithm_did: str, params: dict):
        signature = self.sign_for(
            consumer_did, authorize_message(consumer_did, dataset_did, algorithm_did)
        )
        return self.runtime.submit_job(consumer_did, dataset_did, algorithm_did, params, signature)

    def get_result(self, consumer_did: str, job_did: str) -> dict:
        signature = self.sign_for(consumer_did, result_request_message(job_did, consumer_did))
        return self.runtime.get_result(job_did, consumer_did, signature)

    def shutdown(self) -> None:
        self.runtime.shutdown()
