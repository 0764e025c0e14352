"""Trusted compute-to-data runtime.

Jobs move Submitted -> {Authorized, Rejected}, Authorized -> Running,
Running -> {Succeeded, Failed}.  A run unseals the data location, loads and
masks the corpus, executes a built-in algorithm, pushes the aggregate
through the output policy, stores the result, and settles the escrow order:
released on success, refunded on failure, exactly once either way.  Nothing
derived from raw text leaves this module except policy-approved aggregates.
"""

from __future__ import annotations

import copy
import json
import os
import re
import secrets
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import crypto
from .analytics.algorithms import BUILTIN_ALGORITHMS
from .analytics.corpus import load_corpus
from .analytics.masking import (
    ADDRESS_RE,
    EMAIL_RE,
    PHONE_RE,
    SSN_RE,
    default_name_dictionary,
    mask_corpus,
)
from .analytics.results import AggregateResult, SchemaError, validate_result
from .catalog import Catalog
from .clock import Clock, SystemClock
from .errors import (
    AlgorithmError,
    AssetRetired,
    ClioxError,
    CorpusLoadError,
    MissingSeed,
    NotFinished,
    NotFound,
    NotYourJob,
    PolicyViolation,
    UnknownAsset,
    UnknownJob,
)
from .ledger import ORDER_LOCKED, Ledger
from .provider import Provider

SUBMITTED = "Submitted"
AUTHORIZED = "Authorized"
REJECTED = "Rejected"
RUNNING = "Running"
SUCCEEDED = "Succeeded"
FAILED = "Failed"

TERMINAL_STATES = (REJECTED, SUCCEEDED, FAILED)

DEFAULT_PII_PATTERNS: tuple[re.Pattern, ...] = (SSN_RE, EMAIL_RE, PHONE_RE, ADDRESS_RE)

MAX_SEED = 2**64


@dataclass
class OutputPolicy:
    """Suppression, truncation, and a fail-closed PII scan on every result."""

    k_min: int = 5
    max_terms_per_list: int = 50
    pii_patterns: tuple[re.Pattern, ...] = DEFAULT_PII_PATTERNS

    def enforce(self, result: AggregateResult) -> AggregateResult:
        payload = copy.deepcopy(result.payload)
        suppressed = 0

        if result.kind == "eda":
            histogram = payload["date_histogram"]
            keep = {m: c for m, c in histogram.items() if c >= self.k_min}
            suppressed += len(histogram) - len(keep)
            payload["date_histogram"] = keep
            payload["top_terms"] = payload["top_terms"][: self.max_terms_per_list]
        elif result.kind == "clustering":
            keep_clusters = []
            for cluster in payload["clusters"]:
                if cluster["size"] < self.k_min:
                    suppressed += 1
                    continue
                cluster["top_terms"] = cluster["top_terms"][: self.max_terms_per_list]
                keep_clusters.append(cluster)
            payload["clusters"] = keep_clusters
        elif result.kind == "topics":
            for topic in payload["topics"]:
                topic["terms"] = topic["terms"][: self.max_terms_per_list]
        elif result.kind == "sentiment":
            monthly = payload["monthly"]
            keep = {m: b for m, b in monthly.items() if b["docs"] >= self.k_min}
            suppressed += len(monthly) - len(keep)
            payload["monthly"] = keep
        elif result.kind == "comm_graph":
            edges = payload["edges"]
            keep_edges = [e for e in edges if e["count"] >= self.k_min]
            suppressed += len(edges) - len(keep_edges)
            payload["edges"] = keep_edges

        enforced = AggregateResult(
            kind=result.kind,
            algorithm=result.algorithm,
            params=copy.deepcopy(result.params),
            seed=result.seed,
            payload=payload,
            suppressed_buckets=suppressed,
        )
        try:
            validate_result(enforced)
        except SchemaError as exc:
            raise PolicyViolation(f"result schema rejected: {exc}") from exc
        serialized = crypto.canonical_bytes(enforced.to_doc()).decode("utf-8")
        for pattern in self.pii_patterns:
            if pattern.search(serialized):
                raise PolicyViolation(f"PII pattern {pattern.pattern!r} found in output")
        return enforced


@dataclass
class ComputeJob:
    job_did: str
    consumer: str
    dataset_did: str
    algorithm_did: str
    params: dict
    seed: int
    state: str = SUBMITTED
    reason: str | None = None
    grant_id: str | None = None
    submitted_at: int = 0
    finished_at: int | None = None
    result_digest: str | None = None
    log_lines: list[str] = field(default_factory=list)

    def status_doc(self) -> dict:
        return {
            "job_did": self.job_did,
            "state": self.state,
            "reason": self.reason,
            "dataset_did": self.dataset_did,
            "algorithm_did": self.algorithm_did,
            "submitted_at": self.submitted_at,
            "finished_at": self.finished_at,
            "result_digest": self.result_digest,
        }


def result_request_message(job_did: str, consumer: str) -> bytes:
    return crypto.signing_bytes("get_result", job=job_did, consumer=consumer)


class Runtime:
    """Schedules and executes compute jobs against sealed corpora."""

    def __init__(
        self,
        ledger: Ledger,
        catalog: Catalog,
        provider: Provider,
        runtime_token: str,
        results_dir: str,
        policy: OutputPolicy | None = None,
        name_dictionary: frozenset[str] | None = None,
        clock: Clock | None = None,
        worker_limit: int = 2,
    ):
        self.ledger = ledger
        self.catalog = catalog
        self.provider = provider
        self.policy = policy or OutputPolicy()
        self.clock = clock or SystemClock()
        self.results_dir = results_dir
        os.makedirs(results_dir, exist_ok=True)
        self._runtime_token = runtime_token
        self._name_dictionary = name_dictionary or default_name_dictionary()
        self._jobs: dict[str, ComputeJob] = {}
        self._events: dict[str, list[dict]] = {}
        self._lock = threading.RLock()
        self._executor = ThreadPoolExecutor(max_workers=worker_limit)

    # -- submission ------------------------------------------------------

    def submit_job(
        self,
        consumer: str,
        dataset_did: str,
        algorithm_did: str,
        params: dict,
        signature: bytes,
    ) -> ComputeJob:
        dataset = self._resolve_asset(dataset_did)
        algorithm = self._resolve_asset(algorithm_did)
        if dataset.retired:
            raise AssetRetired(dataset_did)
        if algorithm.retired:
            raise AssetRetired(algorithm_did)
        params = dict(params)
        seed = params.pop("seed", None)
        if seed is None or isinstance(seed, bool) or not isinstance(seed, int):
            raise MissingSeed("params must include an integer 'seed'")
        if not 0 <= seed < MAX_SEED:
            raise MissingSeed(f"seed must be in [0, 2**64), got {seed}")

        job = ComputeJob(
            job_did=crypto.JOB_DID_PREFIX + secrets.token_hex(16),
            consumer=consumer,
            dataset_did=dataset_did,
            algorithm_did=algorithm_did,
            params=params,
            seed=seed,
            submitted_at=self.clock.now(),
        )
        with self._lock:
            self._jobs[job.job_did] = job
        self.ledger.append_audit(
            "job.submit",
            crypto.canonical_bytes(
                {
                    "job_did": job.job_did,
                    "consumer": consumer,
                    "dataset": dataset_did,
                    "algorithm": algorithm_did,
                    "params": params,
                    "seed": seed,
                }
            ),
        )
        decision = self.provider.authorize_job(consumer, dataset_did, algorithm_did, signature)
        if decision.authorized:
            job.state = AUTHORIZED
            job.grant_id = decision.grant_id
            self.ledger.append_audit(
                "job.authorize",
                crypto.canonical_bytes({"job_did": job.job_did, "grant_id": decision.grant_id}),
            )
        else:
            job.state = REJECTED
            job.reason = decision.reason
            job.finished_at = self.clock.now()
            self.ledger.append_audit(
                "job.reject",
                crypto.canonical_bytes({"job_did": job.job_did, "reason": decision.reason}),
            )
            self._emit(job)
        return job

    def _resolve_asset(self, did: str):
        try:
            return self.catalog.resolve(did)
        except NotFound as exc:
            raise UnknownAsset(did) from exc

    def schedule(self, job_did: str) -> None:
        """Queue an authorized job on the worker pool."""
        self._executor.submit(self.run_job, job_did)

    # -- execution -------------------------------------------------------

    def run_job(self, job_did: str) -> ComputeJob:
        job = self._get_job(job_did)
        if job.state != AUTHORIZED:
            raise ValueError(f"job {job_did} is {job.state}, not {AUTHORIZED}")
        job.state = RUNNING
        self.ledger.append_audit(
            "job.start", crypto.canonical_bytes({"job_did": job.job_did})
        )
        try:
            enforced = self._execute(job)
        except ClioxError as exc:
            reason = exc.code
            if reason not in ("PolicyViolation", "CorpusLoadError"):
                reason = "AlgorithmError"
            self._finish_failed(job, reason, str(exc))
            return job
        except Exception as exc:  # algorithm bugs must not wedge the runtime
            self._finish_failed(job, "AlgorithmError", repr(exc))
            return job

        digest = enforced.digest()
        produced_at = self.clock.now()
        record = {
            "job_did": job.job_did,
            "produced_at": produced_at,
            "result": enforced.to_doc(),
            "log_lines": list(job.log_lines),
            "result_digest": digest,
        }
        path = os.path.join(self.results_dir, job.job_did)
        with open(path, "wb") as fh:
            fh.write(crypto.canonical_bytes(record))
        job.state = SUCCEEDED
        job.finished_at = produced_at
        job.result_digest = digest
        self.ledger.append_audit(
            "job.finish",
            crypto.canonical_bytes({"job_did": job.job_did, "result_digest": digest}),
        )
        self._settle(job, success=True)
        self._emit(job)
        return job

    def _execute(self, job: ComputeJob) -> AggregateResult:
        dataset = self.catalog.resolve(job.dataset_did)
        algorithm_ddo = self.catalog.resolve(job.algorithm_did)
        if not dataset.sealed_locator_id:
            raise CorpusLoadError(f"dataset {job.dataset_did} has no sealed locator")
        location = self.provider.unseal_for_runtime(
            dataset.sealed_locator_id, self._runtime_token
        )
        job.log_lines.append("locator unsealed")
        docs = load_corpus(location)
        job.log_lines.append(f"loaded {len(docs)} documents")
        masked, _ = mask_corpus(docs, self._name_dictionary)
        total_masked = sum(sum(d.mask_counts.values()) for d in masked)
        job.log_lines.append(f"masked {len(masked)} documents, {total_masked} spans replaced")
        key = self._builtin_key(algorithm_ddo)
        fn = BUILTIN_ALGORITHMS.get(key)
        if fn is None:
            raise AlgorithmError(f"no built-in algorithm for asset {job.algorithm_did}")
        result = fn(masked, job.params, job.seed)
        job.log_lines.append(f"algorithm {key} completed")
        enforced = self.policy.enforce(result)
        job.log_lines.append(
            f"output policy applied, {enforced.suppressed_buckets} buckets suppressed"
        )
        return enforced

    @staticmethod
    def _builtin_key(ddo) -> str:
        for tag in ddo.tags:
            if tag.startswith("builtin:"):
                return tag.split(":", 1)[1]
        return ddo.name.strip().lower()

    def _finish_failed(self, job: ComputeJob, reason: str, detail: str) -> None:
        job.state = FAILED
        job.reason = reason
        job.finished_at = self.clock.now()
        job.log_lines.append(f"failed: {reason}")
        self.ledger.append_audit(
            "job.fail",
            crypto.canonical_bytes({"job_did": job.job_did, "reason": reason}),
        )
        self._settle(job, success=False)
        self._emit(job)

    def _settle(self, job: ComputeJob, success: bool) -> None:
        """Release or refund the backing escrow order, at most once per order."""
        if job.grant_id is None:
            return
        order_id = self.ledger.order_for_grant(job.grant_id)
        if order_id is None:
            return
        order = self.ledger.get_order(order_id)
        if order.state != ORDER_LOCKED:
            return
        if success:
            self.ledger.release_escrow(order_id)
        else:
            self.ledger.refund_escrow(order_id)

    # -- queries ---------------------------------------------------------

    def _get_job(self, job_did: str) -> ComputeJob:
        with self._lock:
            job = self._jobs.get(job_did)
        if job is None:
            raise UnknownJob(job_did)
        return job

    def get_status(self, job_did: str) -> dict:
        return self._get_job(job_did).status_doc()

    def get_result(self, job_did: str, consumer: str, signature: bytes) -> dict:
        job = self._get_job(job_did)
        if job.consumer != consumer:
            raise NotYourJob(job_did)
        public_key = self.ledger.public_key_of(consumer)
        if not crypto.verify(public_key, signature, result_request_message(job_did, consumer)):
            raise NotYourJob(job_did)
        if job.state != SUCCEEDED:
            raise NotFinished(f"job {job_did} is {job.state}")
        path = os.path.join(self.results_dir, job.job_did)
        with open(path, "rb") as fh:
            return json.loads(fh.read().decode("utf-8"))

    def wait_for(self, job_did: str, timeout: float = 30.0) -> ComputeJob:
        deadline = time.monotonic() + timeout
        while time.monotonic() < deadline:
            job = self._get_job(job_did)
            if job.state in TERMINAL_STATES:
                return job
            time.sleep(0.02)
        raise TimeoutError(f"job {job_did} did not finish within {timeout}s")

    def get_events(self, consumer: str, since: int = 0) -> list[dict]:
        with self._lock:
            feed = self._events.get(consumer, [])
            return [e for e in feed if e["seq"] > since]

    def _emit(self, job: ComputeJob) -> None:
        with self._lock:
            feed = self._events.setdefault(job.consumer, [])
            feed.append(
                {
                    "seq": len(feed) + 1,
                    "job_did": job.job_did,
                    "state": job.state,
                    "reason": job.reason,
                    "at": self.clock.now(),
                }
            )

    def shutdown(self) -> None:
        self._executor.shutdown(wait=True)
