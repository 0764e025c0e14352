"""Node configuration.

Configuration is a flat JSON file; every field has a default so a node can
start with an empty object.  The payee split is expressed in basis points
over the four revenue roles and must total 10000.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SPLIT_ROLES = ("holder", "ai_contributor", "viz_contributor", "runtime_operator")

DEFAULT_SPLIT = {role: 2500 for role in SPLIT_ROLES}

GOVERNANCE_MODELS = ("consortium", "non_profit", "private", "open_source")


@dataclass
class GovernanceInfo:
    operator_name: str = "Clio-X Community Node"
    model: str = "consortium"
    members: list[dict] = field(
        default_factory=lambda: [
            {"name": "City Archive", "affiliation_url": "https://archive.example.org"},
            {"name": "University DH Lab", "affiliation_url": "https://dhlab.example.edu"},
            {"name": "Records Cooperative", "affiliation_url": "https://records.example.net"},
        ]
    )
    contact: str = "operators@cliox.example.org"

    def validate(self) -> None:
        if self.model not in GOVERNANCE_MODELS:
            raise ValueError(f"governance model must be one of {GOVERNANCE_MODELS}")
        if self.model == "consortium" and not self.members:
            raise ValueError("consortium governance requires at least one member")
        for member in self.members:
            if not member.get("name"):
                raise ValueError("governance member entries need a name")

    def to_doc(self) -> dict:
        return {
            "operator_name": self.operator_name,
            "model": self.model,
            "members": [dict(m) for m in self.members],
            "contact": self.contact,
        }


@dataclass
class NodeConfig:
    host: str = "127.0.0.1"
    port: int = 8400
    data_dir: str = "./cliox-data"
    worker_limit: int = 2
    k_min: int = 5
    max_terms_per_list: int = 50
    session_ttl_secs: int = 3600
    default_grant_hours: int = 24
    algorithm_price: int = 0
    payee_split: dict[str, int] = field(default_factory=lambda: dict(DEFAULT_SPLIT))
    governance: GovernanceInfo = field(default_factory=GovernanceInfo)

    def validate(self) -> None:
        if self.worker_limit < 1:
            raise ValueError("worker_limit must be >= 1")
        if self.k_min < 1:
            raise ValueError("k_min must be >= 1")
        if self.max_terms_per_list < 1:
            raise ValueError("max_terms_per_list must be >= 1")
        if set(self.payee_split) != set(SPLIT_ROLES):
            raise ValueError(f"payee_split must cover exactly {SPLIT_ROLES}")
        if any(bp < 0 for bp in self.payee_split.values()):
            raise ValueError("payee_split shares must be non-negative")
        if sum(self.payee_split.values()) != 10_000:
            raise ValueError("payee_split must sum to 10000 basis points")
        self.governance.validate()

    @classmethod
    def from_doc(cls, doc: dict) -> "NodeConfig":
        governance = GovernanceInfo(**doc["governance"]) if "governance" in doc else GovernanceInfo()
        known = {
            k: v for k, v in doc.items() if k != "governance" and k in cls.__dataclass_fields__
        }
        unknown = set(doc) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        config = cls(governance=governance, **known)
        config.validate()
        return config

    @classmethod
    def load(cls, path: str) -> "NodeConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_doc(json.load(fh))

    def to_doc(self) -> dict:
        return {
            "host": self.host,
            "port": self.port,
            "data_dir": self.data_dir,
            "worker_limit": self.worker_limit,
            "k_min": self.k_min,
            "max_terms_per_list": self.max_terms_per_list,
            "session_ttl_secs": self.session_ttl_secs,
            "default_grant_hours": self.default_grant_hours,
            "algorithm_price": self.algorithm_price,
            "payee_split": dict(self.payee_split),
            "governance": self.governance.to_doc(),
        }
