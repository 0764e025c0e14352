"""HTTP portal over one data-space node.

Thin JSON layer: every route delegates to node flows and maps domain error
codes onto HTTP statuses.  Clients authenticate by exchanging the identity
auth token for a short-lived session token carried in the Authorization
header; the node signs requests with the custodied keys of the session
identity.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from fastapi import Depends, FastAPI, Header, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import AuthRequired, ClioxError
from .node import ClioxNode
from .runtime import AUTHORIZED

STATUS_BY_CODE = {
    "MissingSeed": 400,
    "BadSplit": 400,
    "BadK": 400,
    "BadTopicCount": 400,
    "MissingLocator": 400,
    "AuthRequired": 401,
    "InsufficientFunds": 402,
    "RoleRequired": 403,
    "NotOwner": 403,
    "NotYourJob": 403,
    "BadSignature": 403,
    "BadRuntimeToken": 403,
    "SealTampered": 403,
    "NotFound": 404,
    "UnknownAsset": 404,
    "UnknownJob": 404,
    "UnknownOrder": 404,
    "UnknownNft": 404,
    "UnknownLocator": 404,
    "UnknownIdentity": 404,
    "DuplicateAsset": 409,
    "DuplicateDid": 409,
    "ConsentRequired": 409,
    "AssetRetired": 409,
    "NotFinished": 409,
    "NotLocked": 409,
    "DigestMismatch": 409,
    "EmptyCorpus": 409,
}


@dataclass
class ApiSession:
    token: str
    did: str
    expires_at: int


class IdentityBody(BaseModel):
    roles: list[str]


class SessionBody(BaseModel):
    did: str
    auth_token: str


class FaucetBody(BaseModel):
    amount: int


class PublishBody(BaseModel):
    name: str
    description: str = ""
    price_per_access: int
    location: str
    license_text: str
    tags: list[str] = []
    requires_consent_ack: bool = True


class ConsentBody(BaseModel):
    asset_did: str
    license_digest: str | None = None


class OrderBody(BaseModel):
    dataset_did: str
    algorithm_did: str
    duration_hours: int | None = None


class JobBody(BaseModel):
    dataset_did: str
    algorithm_did: str
    params: dict


def create_app(node: ClioxNode) -> FastAPI:
    app = FastAPI(title="Clio-X portal", docs_url=None, redoc_url=None)
    # The web portal is served as static files from any origin; auth rides in
    # a bearer header, never a cookie, so a wildcard grants nothing extra.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    auth_tokens: dict[str, str] = {}
    sessions: dict[str, ApiSession] = {}

    @app.exception_handler(ClioxError)
    async def cliox_error_handler(request: Request, exc: ClioxError):
        status = STATUS_BY_CODE.get(exc.code, 500)
        return JSONResponse(
            status_code=status,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "BadRequest", "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "BadRequest", "message": str(exc)}},
        )

    def current_did(authorization: str | None = Header(default=None)) -> str:
        if not authorization or not authorization.startswith("Bearer "):
            raise AuthRequired("missing bearer session token")
        token = authorization[len("Bearer ") :]
        session = sessions.get(token)
        if session is None:
            raise AuthRequired("unknown session token")
        if node.clock.now() >= session.expires_at:
            del sessions[token]
            raise AuthRequired("session expired")
        return session.did

    # -- identity and funds ----------------------------------------------

    @app.post("/identities", status_code=201)
    def create_identity(body: IdentityBody):
        did, roles = node.create_identity(set(body.roles))
        auth_token = secrets.token_hex(32)
        auth_tokens[auth_token] = did
        return {"did": did, "roles": sorted(roles), "auth_token": auth_token}

    @app.post("/sessions", status_code=201)
    def create_session(body: SessionBody):
        if auth_tokens.get(body.auth_token) != body.did:
            raise AuthRequired("auth token does not match identity")
        token = secrets.token_hex(32)
        expires_at = node.clock.now() + node.config.session_ttl_secs
        sessions[token] = ApiSession(token=token, did=body.did, expires_at=expires_at)
        identity = node.ledger.get_identity(body.did)
        return {
            "session_token": token,
            "expires_at": expires_at,
            "did": body.did,
            "roles": sorted(identity.roles),
            "balance": node.ledger.get_account(body.did).balance,
        }

    @app.post("/faucet")
    def faucet(body: FaucetBody, did: str = Depends(current_did)):
        account = node.ledger.faucet(did, body.amount)
        return {"did": did, "balance": account.balance}

    # -- catalog ---------------------------------------------------------

    @app.post("/assets", status_code=201)
    def publish(body: PublishBody, did: str = Depends(current_did)):
        asset_did = node.publish_dataset(
            holder_did=did,
            name=body.name,
            description=body.description,
            price_per_access=body.price_per_access,
            location=body.location,
            license_text=body.license_text,
            tags=body.tags,
            requires_consent_ack=body.requires_consent_ack,
        )
        nft = node.ledger.nft_for_asset(asset_did)
        return {"did": asset_did, "nft_id": nft.nft_id}

    @app.get("/assets")
    def search_assets(
        query: str = "",
        type: str | None = None,
        max_price: int | None = None,
        tag: str | None = None,
    ):
        hits = node.catalog.search(query, asset_type=type, max_price=max_price, tag=tag)
        return {"hits": [h.to_doc() for h in hits]}

    @app.get("/assets/{did}")
    def get_asset(did: str):
        ddo = node.catalog.resolve(did)
        return {
            "ddo": ddo.to_doc(),
            "registered_audit_index": node.catalog.registered_at(did),
        }

    @app.post("/assets/{did}/retire")
    def retire(did: str, caller: str = Depends(current_did)):
        ddo = node.retire_asset(caller, did)
        return {"did": did, "retired": ddo.retired}

    # -- consent and orders ----------------------------------------------

    @app.post("/consents", status_code=201)
    def record_consent(body: ConsentBody, did: str = Depends(current_did)):
        receipt = node.record_consent(did, body.asset_did, body.license_digest)
        return receipt.to_doc()

    @app.post("/orders", status_code=201)
    def create_order(body: OrderBody, did: str = Depends(current_did)):
        duration = body.duration_hours * 3600 if body.duration_hours else None
        outcome = node.purchase(did, body.dataset_did, body.algorithm_did, duration)
        return {
            "order_id": outcome.order_id,
            "grant_id": outcome.grant_id,
            "amount_locked": outcome.amount_locked,
            "expires_at": outcome.expires_at,
            "balance": node.ledger.get_account(did).balance,
        }

    # -- jobs ------------------------------------------------------------

    @app.post("/jobs", status_code=202)
    def submit_job(body: JobBody, did: str = Depends(current_did)):
        job = node.submit_job(did, body.dataset_did, body.algorithm_did, body.params)
        if job.state != AUTHORIZED:
            return JSONResponse(
                status_code=403,
                content={
                    "error": {
                        "code": job.reason,
                        "message": f"job rejected: {job.reason}",
                        "job_did": job.job_did,
                    }
                },
            )
        node.runtime.schedule(job.job_did)
        return {"job_did": job.job_did, "state": job.state}

    @app.get("/jobs/{job_did}")
    def job_status(job_did: str, did: str = Depends(current_did)):
        return node.runtime.get_status(job_did)

    @app.get("/jobs/{job_did}/result")
    def job_result(job_did: str, did: str = Depends(current_did)):
        return node.get_result(did, job_did)

    @app.get("/events")
    def events(since: int = 0, did: str = Depends(current_did)):
        return {"events": node.runtime.get_events(did, since)}

    # -- transparency ----------------------------------------------------

    @app.get("/audit")
    def audit_page(page: int = 0, page_size: int = 50):
        if page < 0 or not 1 <= page_size <= 500:
            raise ValueError("page must be >= 0 and page_size in [1, 500]")
        entries = node.ledger.audit.entries
        start = page * page_size
        chunk = entries[start : start + page_size]
        return {
            "entries": [e.to_doc() for e in chunk],
            "page": page,
            "page_size": page_size,
            "total_entries": len(entries),
        }

    @app.get("/audit/verify")
    def audit_verify():
        report = node.ledger.verify_chain()
        report["total_entries"] = len(node.ledger.audit.entries)
        return report

    @app.get("/governance")
    def governance():
        return {
            "governance": node.config.governance.to_doc(),
            "payee_split": dict(node.config.payee_split),
            "k_min": node.config.k_min,
            "max_terms_per_list": node.config.max_terms_per_list,
            "algorithm_price": node.config.algorithm_price,
            "algorithm_assets": dict(node.algorithm_assets),
        }

    return app
