"""Command-line client for the data-space portal.

Talks to a running portal over HTTP only.  State lives in a profile
directory (~/.cliox/<profile>/): the identity auth token and the current
session token.  Exit codes: 0 success, 1 domain error reported by the
portal, 2 usage error.
"""

from __future__ import annotations

import json
import os
import shutil
import time

import click
import requests

DEFAULT_API = "http://127.0.0.1:8400"

DEMO_DATASET_NAME = "Riverbend Mail Archive"
DEMO_LICENSE = (
    "Research access license: aggregates only, no re-identification, "
    "cite the archive in publications."
)


class CliError(click.ClickException):
    """Domain failure relayed from the portal; exits with status 1."""


class Profile:
    def __init__(self, name: str):
        self.name = name
        self.dir = os.path.expanduser(os.path.join("~", ".cliox", name))

    def path(self, filename: str) -> str:
        return os.path.join(self.dir, filename)

    def load(self, filename: str) -> dict | None:
        try:
            with open(self.path(filename), "r", encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, ValueError):
            return None

    def save(self, filename: str, doc: dict) -> None:
        os.makedirs(self.dir, exist_ok=True)
        with open(self.path(filename), "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


class ApiClient:
    def __init__(self, base_url: str, profile: Profile):
        self.base_url = base_url.rstrip("/")
        self.profile = profile

    def request(
        self,
        method: str,
        path: str,
        body: dict | None = None,
        params: dict | None = None,
        auth: bool = False,
    ) -> dict:
        headers = {}
        if auth:
            headers["Authorization"] = f"Bearer {self.ensure_session()}"
        try:
            response = requests.request(
                method,
                self.base_url + path,
                json=body,
                params=params,
                headers=headers,
                timeout=60,
            )
        except requests.RequestException as exc:
            raise CliError(f"cannot reach portal at {self.base_url}: {exc}") from exc
        if response.status_code >= 400:
            try:
                error = response.json().get("error", {})
            except ValueError:
                error = {}
            code = error.get("code", str(response.status_code))
            message = error.get("message", response.text[:200])
            raise CliError(f"{code}: {message}")
        if response.content:
            return response.json()
        return {}

    def identity(self) -> dict:
        doc = self.profile.load("identity.json")
        if not doc:
            raise CliError("no identity in this profile; run: cliox identity create")
        return doc

    def ensure_session(self) -> str:
        session = self.profile.load("session.json")
        if session and session.get("expires_at", 0) > time.time() + 30:
            return session["session_token"]
        identity = self.identity()
        doc = self.request(
            "POST",
            "/sessions",
            body={"did": identity["did"], "auth_token": identity["auth_token"]},
        )
        self.profile.save("session.json", doc)
        return doc["session_token"]


def emit(ctx: click.Context, doc: dict, human: str | list[str]) -> None:
    if ctx.obj["json"]:
        click.echo(json.dumps(doc, indent=2, sort_keys=True))
    elif isinstance(human, list):
        for line in human:
            click.echo(line)
    else:
        click.echo(human)


@click.group()
@click.option("--api", envvar="CLIOX_API", default=DEFAULT_API, show_default=True)
@click.option("--profile", "profile_name", envvar="CLIOX_PROFILE", default="default")
@click.option("--json", "json_mode", is_flag=True, help="Machine-readable output.")
@click.pass_context
def main(ctx: click.Context, api: str, profile_name: str, json_mode: bool):
    """Clio-X data space client."""
    profile = Profile(profile_name)
    ctx.obj = {
        "json": json_mode,
        "client": ApiClient(api, profile),
        "profile": profile,
    }


@main.group()
def identity():
    """Identity management."""


@identity.command("create")
@click.option("--roles", default="consumer", show_default=True, help="Comma-separated roles.")
@click.pass_context
def identity_create(ctx: click.Context, roles: str):
    client: ApiClient = ctx.obj["client"]
    role_list = [r.strip() for r in roles.split(",") if r.strip()]
    doc = client.request("POST", "/identities", body={"roles": role_list})
    client.profile.save("identity.json", doc)
    emit(ctx, doc, [f"did: {doc['did']}", f"roles: {', '.join(doc['roles'])}"])


@main.command()
@click.argument("amount", type=int)
@click.pass_context
def faucet(ctx: click.Context, amount: int):
    """Credit AMOUNT euro cents of simulated funds."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request("POST", "/faucet", body={"amount": amount}, auth=True)
    emit(ctx, doc, f"balance: {doc['balance']} cents")


@main.command()
@click.option("--name", required=True)
@click.option("--desc", "description", default="")
@click.option("--price", required=True, type=int, help="Price per access in euro cents.")
@click.option("--location", required=True, help="Server-side corpus directory.")
@click.option("--license", "license_value", required=True, help="License text or a file path.")
@click.option("--tags", default="", help="Comma-separated tags.")
@click.option("--consent/--no-consent", "consent_required", default=True, show_default=True)
@click.pass_context
def publish(
    ctx: click.Context,
    name: str,
    description: str,
    price: int,
    location: str,
    license_value: str,
    tags: str,
    consent_required: bool,
):
    """Publish a dataset (requires the holder role)."""
    if os.path.isfile(license_value):
        with open(license_value, "r", encoding="utf-8") as fh:
            license_text = fh.read()
    else:
        license_text = license_value
    client: ApiClient = ctx.obj["client"]
    doc = client.request(
        "POST",
        "/assets",
        body={
            "name": name,
            "description": description,
            "price_per_access": price,
            "location": location,
            "license_text": license_text,
            "tags": [t.strip() for t in tags.split(",") if t.strip()],
            "requires_consent_ack": consent_required,
        },
        auth=True,
    )
    emit(ctx, doc, f"published: {doc['did']}")


@main.command()
@click.argument("query", nargs=-1)
@click.option("--type", "asset_type", default=None)
@click.option("--max-price", type=int, default=None)
@click.pass_context
def search(ctx: click.Context, query: tuple[str, ...], asset_type: str | None, max_price):
    """Search the catalog."""
    client: ApiClient = ctx.obj["client"]
    params: dict = {"query": " ".join(query)}
    if asset_type:
        params["type"] = asset_type
    if max_price is not None:
        params["max_price"] = max_price
    doc = client.request("GET", "/assets", params=params)
    lines = [
        f"{h['did']}  {h['asset_type']:<10} {h['price_per_access']:>8}c  {h['name']}"
        for h in doc["hits"]
    ] or ["no matches"]
    emit(ctx, doc, lines)


@main.command()
@click.argument("did")
@click.pass_context
def show(ctx: click.Context, did: str):
    """Show one asset's full metadata."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request("GET", f"/assets/{did}")
    ddo = doc["ddo"]
    emit(
        ctx,
        doc,
        [
            f"did: {ddo['did']}",
            f"name: {ddo['name']}",
            f"type: {ddo['asset_type']}",
            f"author: {ddo['author']}",
            f"price: {ddo['price_per_access']} cents",
            f"consent required: {ddo['requires_consent_ack']}",
            f"retired: {ddo['retired']}",
            f"license digest: {ddo['license_digest']}",
            f"registered at audit index: {doc['registered_audit_index']}",
            "license:",
            ddo["license_text"],
        ],
    )


@main.command()
@click.argument("did")
@click.pass_context
def consent(ctx: click.Context, did: str):
    """Acknowledge an asset's license terms."""
    client: ApiClient = ctx.obj["client"]
    asset = client.request("GET", f"/assets/{did}")
    digest = asset["ddo"]["license_digest"]
    doc = client.request(
        "POST", "/consents", body={"asset_did": did, "license_digest": digest}, auth=True
    )
    emit(ctx, doc, f"consent recorded for {did} (license {digest[:12]}...)")


@main.command()
@click.option("--dataset", required=True)
@click.option("--algorithm", required=True)
@click.option("--hours", type=int, default=24, show_default=True)
@click.pass_context
def buy(ctx: click.Context, dataset: str, algorithm: str, hours: int):
    """Lock escrow for a dataset/algorithm pair and receive an access grant."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request(
        "POST",
        "/orders",
        body={"dataset_did": dataset, "algorithm_did": algorithm, "duration_hours": hours},
        auth=True,
    )
    emit(
        ctx,
        doc,
        [
            f"order: {doc['order_id']}",
            f"grant: {doc['grant_id']} (expires_at {doc['expires_at']})",
            f"locked: {doc['amount_locked']} cents, balance now {doc['balance']}",
        ],
    )


def _parse_param(raw: str) -> tuple[str, object]:
    if "=" not in raw:
        raise click.UsageError(f"--param expects key=value, got {raw!r}")
    key, value = raw.split("=", 1)
    try:
        return key, int(value)
    except ValueError:
        pass
    try:
        return key, float(value)
    except ValueError:
        return key, value


@main.command()
@click.option("--dataset", required=True)
@click.option("--algorithm", required=True)
@click.option("--param", "params", multiple=True, help="Algorithm parameter key=value.")
@click.option("--seed", required=True, type=int)
@click.option("--wait/--no-wait", default=True, show_default=True)
@click.pass_context
def run(
    ctx: click.Context,
    dataset: str,
    algorithm: str,
    params: tuple[str, ...],
    seed: int,
    wait: bool,
):
    """Submit a compute job against a purchased dataset."""
    client: ApiClient = ctx.obj["client"]
    body_params: dict = dict(_parse_param(p) for p in params)
    body_params["seed"] = seed
    doc = client.request(
        "POST",
        "/jobs",
        body={"dataset_did": dataset, "algorithm_did": algorithm, "params": body_params},
        auth=True,
    )
    job_did = doc["job_did"]
    if not wait:
        emit(ctx, doc, f"job submitted: {job_did}")
        return
    status = _poll_job(client, job_did)
    emit(
        ctx,
        status,
        [
            f"job: {job_did}",
            f"state: {status['state']}"
            + (f" ({status['reason']})" if status.get("reason") else ""),
            f"result digest: {status.get('result_digest')}",
        ],
    )
    if status["state"] != "Succeeded":
        raise CliError(f"job finished in state {status['state']}: {status.get('reason')}")


def _poll_job(client: ApiClient, job_did: str, timeout: float = 180.0) -> dict:
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        status = client.request("GET", f"/jobs/{job_did}", auth=True)
        if status["state"] in ("Rejected", "Succeeded", "Failed"):
            return status
        time.sleep(0.25)
    raise CliError(f"timed out waiting for job {job_did}")


@main.command()
@click.argument("job_did")
@click.pass_context
def status(ctx: click.Context, job_did: str):
    """Show a job's current state."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request("GET", f"/jobs/{job_did}", auth=True)
    emit(
        ctx,
        doc,
        [
            f"state: {doc['state']}" + (f" ({doc['reason']})" if doc.get("reason") else ""),
            f"result digest: {doc.get('result_digest')}",
        ],
    )


@main.command()
@click.argument("job_did")
@click.option("--out", "out_path", default=None, help="Write the result document to a file.")
@click.pass_context
def result(ctx: click.Context, job_did: str, out_path: str | None):
    """Fetch a finished job's aggregate result."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request("GET", f"/jobs/{job_did}/result", auth=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    inner = doc["result"]
    emit(
        ctx,
        doc,
        [
            f"kind: {inner['kind']}",
            f"seed: {inner['seed']}",
            f"suppressed buckets: {inner['suppressed_buckets']}",
            f"digest: {doc['result_digest']}",
        ]
        + ([f"written: {out_path}"] if out_path else []),
    )


@main.command()
@click.argument("job_did")
@click.option("--outdir", default=None, help="Directory for figures and CSV files.")
@click.pass_context
def report(ctx: click.Context, job_did: str, outdir: str | None):
    """Render a finished job's result into charts and CSV files."""
    from .reporting import render_result

    client: ApiClient = ctx.obj["client"]
    doc = client.request("GET", f"/jobs/{job_did}/result", auth=True)
    if outdir is None:
        outdir = f"report-{job_did.rsplit(':', 1)[-1][:12]}"
    written = render_result(doc, outdir)
    emit(ctx, {"written": written}, [f"wrote {p}" for p in written])


@main.group()
def audit():
    """Audit log inspection."""


@audit.command("verify")
@click.pass_context
def audit_verify(ctx: click.Context):
    """Verify the full hash chain server-side."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request("GET", "/audit/verify")
    if doc["valid"]:
        emit(ctx, doc, f"chain valid ({doc['total_entries']} entries)")
    else:
        emit(ctx, doc, f"CHAIN BROKEN at index {doc['first_bad_index']}")
        raise CliError("audit chain verification failed")


@audit.command("list")
@click.option("--page", type=int, default=0)
@click.option("--page-size", type=int, default=20)
@click.pass_context
def audit_list(ctx: click.Context, page: int, page_size: int):
    """Show one page of audit entries."""
    client: ApiClient = ctx.obj["client"]
    doc = client.request("GET", "/audit", params={"page": page, "page_size": page_size})
    lines = [
        f"[{e['index']:>5}] {e['kind']:<20} {e['entry_hash'][:16]}..."
        for e in doc["entries"]
    ]
    lines.append(f"page {doc['page']} of {doc['total_entries']} total entries")
    emit(ctx, doc, lines)


@main.group()
def corpus():
    """Local corpus utilities."""


@corpus.command("ingest")
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.pass_context
def corpus_ingest(ctx: click.Context, directory: str):
    """Validate a mail directory and stage it into the profile for publishing."""
    from .analytics.corpus import load_corpus
    from .analytics.masking import mask_corpus

    docs = load_corpus(directory)
    if not docs:
        raise CliError(f"no parseable documents under {directory}")
    masked, _ = mask_corpus(docs)
    totals: dict[str, int] = {}
    for doc in masked:
        for category, count in doc.mask_counts.items():
            totals[category] = totals.get(category, 0) + count
    months = sorted({d.month for d in masked if d.month})
    profile: Profile = ctx.obj["profile"]
    staged = os.path.join(profile.dir, "corpora", os.path.basename(os.path.abspath(directory)))
    if os.path.abspath(directory) != staged:
        if os.path.isdir(staged):
            shutil.rmtree(staged)
        shutil.copytree(directory, staged)
    summary = {
        "documents": len(docs),
        "months": months,
        "mask_spans": totals,
        "staged_path": staged,
    }
    emit(
        ctx,
        summary,
        [
            f"documents: {len(docs)}",
            f"months: {months[0]} .. {months[-1]}" if months else "months: none",
            f"maskable spans found: {totals}",
            f"staged at: {staged}",
            f"publish with: cliox publish --name ... --price ... --location {staged} --license ...",
        ],
    )


@main.command()
@click.option("--price", type=int, default=25000, show_default=True)
@click.pass_context
def demo(ctx: click.Context, price: int):
    """Run the full golden path against the configured portal; idempotent."""
    client: ApiClient = ctx.obj["client"]
    profile: Profile = ctx.obj["profile"]
    lines: list[str] = []

    if not profile.load("identity.json"):
        doc = client.request(
            "POST", "/identities", body={"roles": ["consumer", "holder"]}
        )
        profile.save("identity.json", doc)
        lines.append(f"created identity {doc['did']}")
    else:
        lines.append(f"reusing identity {profile.load('identity.json')['did']}")

    balance = client.request("POST", "/faucet", body={"amount": 100_000}, auth=True)["balance"]
    lines.append(f"faucet credited, balance {balance} cents")

    from .democorpus import generate_corpus

    corpus_dir = os.path.join(profile.dir, "demo-corpus")
    if not os.path.isdir(corpus_dir):
        generate_corpus(corpus_dir, n_docs=200)
        lines.append(f"generated demo corpus at {corpus_dir}")
    else:
        lines.append(f"reusing demo corpus at {corpus_dir}")

    existing = client.request("GET", "/assets", params={"query": DEMO_DATASET_NAME})
    dataset_did = None
    for hit in existing["hits"]:
        if hit["name"] == DEMO_DATASET_NAME:
            dataset_did = hit["did"]
            lines.append(f"dataset already published: {dataset_did}")
            break
    if dataset_did is None:
        published = client.request(
            "POST",
            "/assets",
            body={
                "name": DEMO_DATASET_NAME,
                "description": "Synthetic corporate mail archive for demonstrations.",
                "price_per_access": price,
                "location": corpus_dir,
                "license_text": DEMO_LICENSE,
                "tags": ["demo", "mail"],
                "requires_consent_ack": True,
            },
            auth=True,
        )
        dataset_did = published["did"]
        lines.append(f"published dataset {dataset_did}")

    algorithms = client.request("GET", "/governance")["algorithm_assets"]
    algo_did = algorithms["eda"]

    digest = client.request("GET", f"/assets/{dataset_did}")["ddo"]["license_digest"]
    client.request(
        "POST", "/consents", body={"asset_did": dataset_did, "license_digest": digest}, auth=True
    )
    lines.append("license consent recorded")

    order = client.request(
        "POST",
        "/orders",
        body={"dataset_did": dataset_did, "algorithm_did": algo_did, "duration_hours": 24},
        auth=True,
    )
    lines.append(f"order {order['order_id']} locked {order['amount_locked']} cents")

    job = client.request(
        "POST",
        "/jobs",
        body={
            "dataset_did": dataset_did,
            "algorithm_did": algo_did,
            "params": {"seed": 42},
        },
        auth=True,
    )
    final = _poll_job(client, job["job_did"])
    lines.append(f"job {job['job_did']} finished: {final['state']}")
    if final["state"] != "Succeeded":
        raise CliError(f"demo job failed: {final.get('reason')}")

    fetched = client.request("GET", f"/jobs/{job['job_did']}/result", auth=True)
    lines.append(
        f"result digest {fetched['result_digest'][:16]}..., "
        f"suppressed buckets {fetched['result']['suppressed_buckets']}"
    )

    verdict = client.request("GET", "/audit/verify")
    lines.append(
        f"audit chain valid={verdict['valid']} over {verdict['total_entries']} entries"
    )
    emit(ctx, {"steps": lines}, lines)


@main.command()
@click.option("--config", "config_path", default=None, help="Path to a JSON node config.")
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
def serve(config_path: str | None, host: str | None, port: int | None):
    """Start a portal node and serve the HTTP API."""
    import uvicorn

    from .api import create_app
    from .config import NodeConfig
    from .node import ClioxNode

    config = NodeConfig.load(config_path) if config_path else NodeConfig()
    if host:
        config.host = host
    if port:
        config.port = port
    node = ClioxNode(config)
    click.echo(f"data dir: {config.data_dir}")
    click.echo(f"serving on http://{config.host}:{config.port}")
    try:
        uvicorn.run(create_app(node), host=config.host, port=config.port, log_level="warning")
    finally:
        node.shutdown()


if __name__ == "__main__":
    main()
