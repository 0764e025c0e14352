/**
 * In-memory stand-in for the node portal, serving the frozen fixtures.
 *
 * Every request is recorded so tests can assert the client never strays
 * from the documented routes.  Just enough state is simulated to carry a
 * full researcher journey: a session token, a balance, orders, and jobs
 * that report Running once before settling on the frozen result for
 * their algorithm.  An undocumented path is an immediate throw.
 */

import { fx } from "./fixtures";
import type { EventDoc, JobState } from "../../src/types";

export interface RecordedRequest {
  method: string;
  path: string;
  body?: unknown;
}

interface FakeJob {
  jobDid: string;
  kind: string;
  polls: number;
  state: JobState;
  digest: string;
}

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function errorResponse(status: number, code: string, message: string): Response {
  return jsonResponse({ error: { code, message } }, status);
}

export class FakeServer {
  readonly requests: RecordedRequest[] = [];
  readonly base = "http://node.test";

  private balance = 0;
  private sessionToken: string | null = null;
  private tampered = false;
  private grantsExpired = false;
  private governanceDown = false;
  private jobs = new Map<string, FakeJob>();
  private events: EventDoc[] = [];
  private counter = 0;
  /** Status polls a job answers with Running before settling. */
  pollsBeforeDone = 2;

  constructor(private readonly now: () => number = () => Math.floor(Date.now() / 1000)) {}

  /** Flip the audit verification report to the tampered capture. */
  tamper(): void {
    this.tampered = true;
  }

  /** Future job submissions are refused the way the real node refuses them. */
  expireGrants(): void {
    this.grantsExpired = true;
  }

  /** Simulate a node that never published its governance record. */
  dropGovernance(): void {
    this.governanceDown = true;
  }

  private kindOf(algorithmDid: string): string | undefined {
    for (const [key, did] of Object.entries(fx.governance.algorithm_assets)) {
      if (did === algorithmDid) return key;
    }
    return undefined;
  }

  private authorized(init: RequestInit | undefined): boolean {
    const headers = (init?.headers ?? {}) as Record<string, string>;
    const header = headers["Authorization"] ?? "";
    return this.sessionToken !== null && header === `Bearer ${this.sessionToken}`;
  }

  readonly fetch: typeof fetch = async (input, init) => {
    const url = new URL(String(input));
    const method = (init?.method ?? "GET").toUpperCase();
    const path = url.pathname;
    const body = init?.body ? (JSON.parse(String(init.body)) as Record<string, unknown>) : {};
    this.requests.push({ method, path: path + url.search, body: init?.body ? body : undefined });

    if (method === "POST" && path === "/identities") return jsonResponse(fx.identity, 201);

    if (method === "POST" && path === "/sessions") {
      if (body["auth_token"] !== fx.identity.auth_token || body["did"] !== fx.identity.did) {
        return errorResponse(401, "AuthRequired", "auth token does not match identity");
      }
      this.sessionToken = fx.session.session_token;
      return jsonResponse({ ...fx.session, balance: this.balance }, 201);
    }

    if (method === "POST" && path === "/faucet") {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      this.balance += Number(body["amount"] ?? 0);
      return jsonResponse({ did: fx.session.did, balance: this.balance });
    }

    if (method === "GET" && path === "/assets") {
      const query = url.searchParams.get("query") ?? "";
      const type = url.searchParams.get("type");
      const doc = query.startsWith("zzz") ? fx.searchEmpty : fx.searchHits;
      const hits = type ? doc.hits.filter((h) => h.asset_type === type) : doc.hits;
      return jsonResponse({ hits });
    }

    if (method === "GET" && path.startsWith("/assets/")) {
      const did = path.slice("/assets/".length);
      if (did !== fx.assetDetail.ddo.did) {
        return errorResponse(404, "UnknownAsset", `no asset ${did}`);
      }
      return jsonResponse(fx.assetDetail);
    }

    if (method === "POST" && path === "/consents") {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      return jsonResponse(fx.consent, 201);
    }

    if (method === "POST" && path === "/orders") {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      const price = fx.assetDetail.ddo.price_per_access;
      if (this.balance < price) {
        return errorResponse(402, "InsufficientFunds", "balance does not cover the price");
      }
      this.balance -= price;
      this.counter += 1;
      return jsonResponse(
        {
          order_id: `order-${this.counter}`,
          grant_id: `grant-${this.counter}`,
          amount_locked: price,
          expires_at: this.now() + 24 * 3600,
          balance: this.balance,
        },
        201,
      );
    }

    if (method === "POST" && path === "/jobs") {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      if (this.grantsExpired) return jsonResponse(fx.rejectedJob, 403);
      const kind = this.kindOf(String(body["algorithm_did"]));
      if (!kind) return errorResponse(404, "UnknownAsset", "no such algorithm");
      this.counter += 1;
      const jobDid = `did:cliox:job:${String(this.counter).padStart(32, "0")}`;
      this.jobs.set(jobDid, {
        jobDid,
        kind,
        polls: 0,
        state: "Authorized",
        digest: fx.results[kind]?.result_digest ?? "",
      });
      return jsonResponse({ job_did: jobDid, state: "Authorized" }, 202);
    }

    if (method === "GET" && path.startsWith("/jobs/") && path.endsWith("/result")) {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      const jobDid = path.slice("/jobs/".length, -"/result".length);
      const job = this.jobs.get(jobDid);
      if (!job) return errorResponse(404, "UnknownJob", `no job ${jobDid}`);
      if (job.state !== "Succeeded") {
        return errorResponse(409, "NotFinished", `job ${jobDid} has no result yet`);
      }
      const result = fx.results[job.kind];
      if (!result) return errorResponse(404, "UnknownJob", "no frozen result for kind");
      return jsonResponse({ ...result, job_did: jobDid });
    }

    if (method === "GET" && path.startsWith("/jobs/")) {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      const jobDid = path.slice("/jobs/".length);
      const job = this.jobs.get(jobDid);
      if (!job) return errorResponse(404, "UnknownJob", `no job ${jobDid}`);
      job.polls += 1;
      if (job.polls < this.pollsBeforeDone) {
        return jsonResponse({ ...fx.jobRunning, job_did: jobDid });
      }
      if (job.state !== "Succeeded") {
        job.state = "Succeeded";
        this.events.push({
          seq: this.events.length + 1,
          job_did: jobDid,
          state: "Succeeded",
          reason: null,
          at: this.now(),
        });
      }
      return jsonResponse({
        ...fx.jobSucceeded,
        job_did: jobDid,
        finished_at: this.now(),
        result_digest: job.digest,
      });
    }

    if (method === "GET" && path === "/events") {
      if (!this.authorized(init)) return errorResponse(401, "AuthRequired", "missing bearer session token");
      const since = Number(url.searchParams.get("since") ?? "0");
      return jsonResponse({ events: this.events.filter((e) => e.seq > since) });
    }

    if (method === "GET" && path === "/audit") {
      return jsonResponse(fx.auditPage);
    }

    if (method === "GET" && path === "/audit/verify") {
      return jsonResponse(this.tampered ? fx.auditVerifyBad : fx.auditVerifyOk);
    }

    if (method === "GET" && path === "/governance") {
      if (this.governanceDown) return errorResponse(500, "Unavailable", "governance unavailable");
      return jsonResponse(fx.governance);
    }

    throw new Error(`FakeServer: unhandled route ${method} ${path}`);
  };
}
