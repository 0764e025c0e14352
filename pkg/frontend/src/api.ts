/**
 * HTTP client for the node portal.
 *
 * Every method maps to exactly one documented route; nothing else in the
 * app touches fetch.  Non-2xx responses become ApiError carrying the
 * server's error code so views can translate it for people.
 */

import type {
  AssetDetailDoc,
  AuditPageDoc,
  AuditVerifyDoc,
  ConsentDoc,
  EventsDoc,
  FaucetDoc,
  GovernanceDoc,
  IdentityDoc,
  JobResultDoc,
  JobStatusDoc,
  JobSubmitDoc,
  OrderDoc,
  SearchDoc,
  SessionDoc,
} from "./types";

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly jobDid: string | undefined;

  constructor(status: number, code: string, message: string, jobDid?: string) {
    super(message);
    this.status = status;
    this.code = code;
    this.jobDid = jobDid;
  }
}

export class PortalClient {
  private readonly base: string;
  private sessionToken: string | null = null;

  constructor(baseUrl: string, private readonly fetchFn: typeof fetch = fetch) {
    this.base = baseUrl.replace(/\/+$/, "");
  }

  setSessionToken(token: string | null): void {
    this.sessionToken = token;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (this.sessionToken) headers["Authorization"] = `Bearer ${this.sessionToken}`;
    const resp = await this.fetchFn(this.base + path, {
      method,
      headers,
      body: body === undefined ? null : JSON.stringify(body),
    });
    const text = await resp.text();
    let doc: unknown = null;
    try {
      doc = text ? JSON.parse(text) : null;
    } catch {
      throw new ApiError(resp.status, "BadResponse", `non-JSON response from ${path}`);
    }
    if (!resp.ok) {
      const err = (doc as { error?: { code?: string; message?: string; job_did?: string } })?.error;
      throw new ApiError(
        resp.status,
        err?.code ?? "HttpError",
        err?.message ?? `request to ${path} failed with ${resp.status}`,
        err?.job_did,
      );
    }
    return doc as T;
  }

  createIdentity(roles: string[]): Promise<IdentityDoc> {
    return this.request("POST", "/identities", { roles });
  }

  createSession(did: string, authToken: string): Promise<SessionDoc> {
    return this.request("POST", "/sessions", { did, auth_token: authToken });
  }

  faucet(amount: number): Promise<FaucetDoc> {
    return this.request("POST", "/faucet", { amount });
  }

  search(query: string, type?: string, maxPrice?: number): Promise<SearchDoc> {
    const params = new URLSearchParams();
    if (query) params.set("query", query);
    if (type) params.set("type", type);
    if (maxPrice !== undefined) params.set("max_price", String(maxPrice));
    const qs = params.toString();
    return this.request("GET", qs ? `/assets?${qs}` : "/assets");
  }

  getAsset(did: string): Promise<AssetDetailDoc> {
    return this.request("GET", `/assets/${did}`);
  }

  recordConsent(assetDid: string, licenseDigest?: string): Promise<ConsentDoc> {
    const body: Record<string, unknown> = { asset_did: assetDid };
    if (licenseDigest !== undefined) body["license_digest"] = licenseDigest;
    return this.request("POST", "/consents", body);
  }

  createOrder(datasetDid: string, algorithmDid: string, durationHours?: number): Promise<OrderDoc> {
    const body: Record<string, unknown> = {
      dataset_did: datasetDid,
      algorithm_did: algorithmDid,
    };
    if (durationHours !== undefined) body["duration_hours"] = durationHours;
    return this.request("POST", "/orders", body);
  }

  submitJob(
    datasetDid: string,
    algorithmDid: string,
    params: Record<string, number | string>,
  ): Promise<JobSubmitDoc> {
    return this.request("POST", "/jobs", {
      dataset_did: datasetDid,
      algorithm_did: algorithmDid,
      params,
    });
  }

  jobStatus(jobDid: string): Promise<JobStatusDoc> {
    return this.request("GET", `/jobs/${jobDid}`);
  }

  jobResult(jobDid: string): Promise<JobResultDoc> {
    return this.request("GET", `/jobs/${jobDid}/result`);
  }

  events(since = 0): Promise<EventsDoc> {
    return this.request("GET", `/events?since=${since}`);
  }

  auditPage(page = 0, pageSize = 50): Promise<AuditPageDoc> {
    return this.request("GET", `/audit?page=${page}&page_size=${pageSize}`);
  }

  auditVerify(): Promise<AuditVerifyDoc> {
    return this.request("GET", "/audit/verify");
  }

  governance(): Promise<GovernanceDoc> {
    return this.request("GET", "/governance");
  }
}
