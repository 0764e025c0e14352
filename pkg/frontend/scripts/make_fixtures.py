"""Freeze portal API responses into tests/fixtures/.

Runs one full marketplace scenario against a real in-process node and
records every HTTP body the web client consumes.  The vitest suites then
exercise the browser code against these frozen bodies instead of mocking
shapes by hand, so a drift between backend and client types shows up as a
fixture regeneration diff rather than a silently wrong stub.

Also captures adversarial material the sovereignty tests need: the full
sentinel catalog, verbatim raw corpus lines, and the verification report
for a genuinely tampered on-disk audit log.

Usage: python3 scripts/make_fixtures.py   (from frontend/)
"""

from __future__ import annotations

import json
import os
import shutil
import sys
import tempfile

from fastapi.testclient import TestClient

from cliox.api import create_app
from cliox.clock import ManualClock
from cliox.config import NodeConfig
from cliox.democorpus import generate_corpus, sentinel_catalog
from cliox.node import ClioxNode

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")

T0 = 1_771_200_000  # 2026-02-16 00:00:00 UTC, keeps timestamps stable across runs

DATASET_NAME = "Harborview Correspondence"
DATASET_DESC = (
    "Digitized office mail of a mid-size firm, eight months of internal "
    "correspondence prepared for distant reading."
)
LICENSE_TEXT = (
    "Research license: aggregate outputs only, no attempt to re-identify "
    "correspondents, cite the archive in derived work."
)

JOB_SPECS = [
    ("eda", {"seed": 11}),
    ("clustering", {"seed": 12, "k": 4}),
    ("topics", {"seed": 13, "n_topics": 3, "iters": 40}),
    ("sentiment", {"seed": 14}),
    ("comm_graph", {"seed": 15}),
]


def write(name: str, doc) -> None:
    path = os.path.join(FIXTURES_DIR, name)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    print(f"  {name}")


def main() -> int:
    os.makedirs(FIXTURES_DIR, exist_ok=True)
    workdir = tempfile.mkdtemp(prefix="cliox-fixtures-")
    corpus_dir = os.path.join(workdir, "corpus")
    data_dir = os.path.join(workdir, "node")
    try:
        catalog = generate_corpus(corpus_dir, n_docs=200, seed=4242)
        write("sentinels.json", catalog)

        # Verbatim raw lines the rendered DOM must never contain.  Long
        # lines only: short fragments would trip on coincidental overlap
        # with legitimate UI copy.
        samples: list[str] = []
        doc_paths = sorted(
            os.path.join(parent, f)
            for parent, _dirs, files in os.walk(corpus_dir)
            for f in files
        )
        for path in doc_paths[:40]:
            with open(path, encoding="utf-8") as fh:
                for line in fh.read().splitlines():
                    line = line.strip()
                    if len(line) > 40 and not line.startswith(("From:", "To:", "Date:")):
                        samples.append(line)
        write("raw_samples.json", sorted(set(samples))[:60])

        clock = ManualClock(T0)
        config = NodeConfig(data_dir=data_dir)
        node = ClioxNode(config=config, clock=clock)
        client = TestClient(create_app(node))

        def ok(resp, status):
            if resp.status_code != status:
                raise SystemExit(f"{resp.request.method} {resp.url}: {resp.status_code} {resp.text}")
            return resp.json()

        # Holder publishes the dataset.
        holder = ok(client.post("/identities", json={"roles": ["holder"]}), 201)
        holder_session = ok(
            client.post("/sessions", json={"did": holder["did"], "auth_token": holder["auth_token"]}),
            201,
        )
        hauth = {"Authorization": f"Bearer {holder_session['session_token']}"}
        clock.advance(3)
        published = ok(
            client.post(
                "/assets",
                json={
                    "name": DATASET_NAME,
                    "description": DATASET_DESC,
                    "price_per_access": 20000,
                    "location": corpus_dir,
                    "license_text": LICENSE_TEXT,
                    "tags": ["correspondence", "demo"],
                    "requires_consent_ack": True,
                },
                headers=hauth,
            ),
            201,
        )
        dataset_did = published["did"]

        # Consumer signs up, funds up, buys access.
        consumer = ok(client.post("/identities", json={"roles": ["consumer"]}), 201)
        write("identity.json", consumer)
        clock.advance(2)
        session = ok(
            client.post(
                "/sessions", json={"did": consumer["did"], "auth_token": consumer["auth_token"]}
            ),
            201,
        )
        write("session.json", session)
        cauth = {"Authorization": f"Bearer {session['session_token']}"}
        write("faucet.json", ok(client.post("/faucet", json={"amount": 500000}, headers=cauth), 200))

        write("governance.json", ok(client.get("/governance"), 200))
        write("search_hits.json", ok(client.get("/assets", params={"query": ""}), 200))
        write("search_empty.json", ok(client.get("/assets", params={"query": "zzzznothing"}), 200))
        write("asset_detail.json", ok(client.get(f"/assets/{dataset_did}"), 200))

        clock.advance(2)
        write(
            "consent.json",
            ok(client.post("/consents", json={"asset_did": dataset_did}, headers=cauth), 201),
        )

        algorithms = ok(client.get("/governance"), 200)["algorithm_assets"]
        order_fixture_written = False
        job_dids: dict[str, str] = {}
        for key, params in JOB_SPECS:
            clock.advance(2)
            order = ok(
                client.post(
                    "/orders",
                    json={
                        "dataset_did": dataset_did,
                        "algorithm_did": algorithms[key],
                        "duration_hours": 24,
                    },
                    headers=cauth,
                ),
                201,
            )
            if not order_fixture_written:
                write("order.json", order)
                order_fixture_written = True
            submitted = ok(
                client.post(
                    "/jobs",
                    json={
                        "dataset_did": dataset_did,
                        "algorithm_did": algorithms[key],
                        "params": params,
                    },
                    headers=cauth,
                ),
                202,
            )
            job_dids[key] = submitted["job_did"]
            if key == "eda":
                write("job_submit.json", submitted)
            node.runtime.wait_for(submitted["job_did"])

        eda_status = ok(client.get(f"/jobs/{job_dids['eda']}", headers=cauth), 200)
        write("job_succeeded.json", eda_status)
        running = dict(eda_status)
        running.update({"state": "Running", "finished_at": None, "result_digest": None})
        write("job_running.json", running)

        for key in job_dids:
            write(
                f"result_{key}.json",
                ok(client.get(f"/jobs/{job_dids[key]}/result", headers=cauth), 200),
            )

        write("events.json", ok(client.get("/events", headers=cauth), 200))
        write("audit_page.json", ok(client.get("/audit", params={"page_size": 50}), 200))
        write("audit_verify_ok.json", ok(client.get("/audit/verify"), 200))

        # Expire the open grants, then submit: the server itself names the
        # refusal the banner must show verbatim.
        clock.advance(25 * 3600)
        session2 = ok(
            client.post(
                "/sessions", json={"did": consumer["did"], "auth_token": consumer["auth_token"]}
            ),
            201,
        )
        cauth2 = {"Authorization": f"Bearer {session2['session_token']}"}
        rejected = client.post(
            "/jobs",
            json={
                "dataset_did": dataset_did,
                "algorithm_did": algorithms["eda"],
                "params": {"seed": 11},
            },
            headers=cauth2,
        )
        if rejected.status_code != 403:
            raise SystemExit(f"expected 403 rejection, got {rejected.status_code} {rejected.text}")
        write("rejected_job.json", rejected.json())

        # Tamper one byte of the persisted chain and record the real report.
        audit_path = os.path.join(data_dir, "audit.log")
        with open(audit_path, "rb") as fh:
            raw = fh.read()
        offset = len(raw) // 2
        with open(audit_path, "wb") as fh:
            fh.write(raw[:offset] + bytes([raw[offset] ^ 0x5A]) + raw[offset + 1 :])
        bad = ok(client.get("/audit/verify"), 200)
        if bad["valid"]:
            raise SystemExit("tampered log still verified; fixture would be wrong")
        write("audit_verify_bad.json", bad)
        with open(audit_path, "wb") as fh:
            fh.write(raw)

        suppressed = [
            k for k in job_dids
            if json.load(open(os.path.join(FIXTURES_DIR, f"result_{k}.json")))["result"][
                "suppressed_buckets"
            ]
            > 0
        ]
        print(f"kinds with suppressed buckets: {suppressed or 'none'}")
        if not suppressed:
            print("WARNING: no fixture exercises the suppression notice", file=sys.stderr)
        node.shutdown()
        return 0
    finally:
        shutil.rmtree(workdir, ignore_errors=True)


if __name__ == "__main__":
    raise SystemExit(main())
