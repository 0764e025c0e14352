"""Shared fixtures: deterministic nodes, fixture corpus, funded consumers."""

from __future__ import annotations

import os

import pytest

from cliox.clock import ManualClock
from cliox.config import NodeConfig
from cliox.node import ClioxNode

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")
SMALL_CORPUS = os.path.join(FIXTURES, "corpus_small")

DATASET_PRICE = 20_000
FUND = 500_000


@pytest.fixture
def manual_clock() -> ManualClock:
    return ManualClock()


@pytest.fixture
def node(tmp_path, manual_clock) -> ClioxNode:
    cfg = NodeConfig(data_dir=str(tmp_path / "node"), worker_limit=2)
    built = ClioxNode(cfg, clock=manual_clock)
    yield built
    built.shutdown()


@pytest.fixture
def published(node):
    """Node with a funded holder/consumer and the small corpus published."""
    did, _ = node.create_identity({"holder", "consumer"})
    node.ledger.faucet(did, FUND)
    dataset = node.publish_dataset(
        did,
        "Harborview Mail",
        "Small correspondence fixture.",
        DATASET_PRICE,
        SMALL_CORPUS,
        "Research license. No re-identification.",
        tags=["mail", "fixture"],
        requires_consent_ack=True,
    )
    node.record_consent(did, dataset)
    return {"node": node, "consumer": did, "dataset": dataset}


def buy_and_run(env: dict, algorithm_key: str, params: dict, duration: int = 24 * 3600):
    """Purchase the fixture dataset for one algorithm, run one job, return it."""
    node: ClioxNode = env["node"]
    algo = node.algorithm_assets[algorithm_key]
    node.purchase(env["consumer"], env["dataset"], algo, duration)
    job = node.submit_job(env["consumer"], env["dataset"], algo, params)
    if job.state == "Authorized":
        node.runtime.run_job(job.job_did)
    return job
