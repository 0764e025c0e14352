/**
 * One mutable store for everything the views share.
 *
 * Session, balance, catalog hits, the selected asset, purchased grants
 * and the jobs this browser has submitted.  Views subscribe and re-render
 * on change; there is no diffing, pages are small enough to rebuild.
 */

import type { AssetDetailDoc, JobState, SearchHit, SessionDoc } from "./types";

export interface GrantInfo {
  grantId: string;
  orderId: string;
  datasetDid: string;
  algorithmDid: string;
  amountLocked: number;
  /** Server-issued expiry; countdowns derive from this, never from local guesses. */
  expiresAt: number;
}

export interface JobInfo {
  jobDid: string;
  datasetDid: string;
  algorithmDid: string;
  algorithmKey: string;
  params: Record<string, number | string>;
  state: JobState;
  reason: string | null;
  resultDigest: string | null;
}

export interface PortalState {
  session: SessionDoc | null;
  balance: number;
  query: string;
  hits: SearchHit[];
  searched: boolean;
  selected: AssetDetailDoc | null;
  grants: GrantInfo[];
  jobs: JobInfo[];
}

type Listener = (state: PortalState) => void;

/** Legal moves of the job lifecycle; anything else is a client bug. */
const JOB_TRANSITIONS: Record<JobState, JobState[]> = {
  Submitted: ["Authorized", "Rejected"],
  Authorized: ["Running", "Failed"],
  Running: ["Succeeded", "Failed"],
  Rejected: [],
  Succeeded: [],
  Failed: [],
};

export class Store {
  readonly state: PortalState = {
    session: null,
    balance: 0,
    query: "",
    hits: [],
    searched: false,
    selected: null,
    grants: [],
    jobs: [],
  };

  private listeners: Listener[] = [];

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  setSession(session: SessionDoc): void {
    this.state.session = session;
    this.state.balance = session.balance;
    this.notify();
  }

  setBalance(balance: number): void {
    this.state.balance = balance;
    this.notify();
  }

  setSearch(query: string, hits: SearchHit[]): void {
    this.state.query = query;
    this.state.hits = hits;
    this.state.searched = true;
    this.notify();
  }

  selectAsset(detail: AssetDetailDoc | null): void {
    this.state.selected = detail;
    this.notify();
  }

  addGrant(grant: GrantInfo): void {
    this.state.grants.push(grant);
    this.notify();
  }

  /** Newest live grant covering the pair, or undefined when access lapsed. */
  liveGrant(datasetDid: string, algorithmDid: string, nowSecs: number): GrantInfo | undefined {
    const covering = this.state.grants.filter(
      (g) => g.datasetDid === datasetDid && g.algorithmDid === algorithmDid && nowSecs < g.expiresAt,
    );
    covering.sort((a, b) => b.expiresAt - a.expiresAt);
    return covering[0];
  }

  addJob(job: JobInfo): void {
    this.state.jobs.push(job);
    this.notify();
  }

  getJob(jobDid: string): JobInfo | undefined {
    return this.state.jobs.find((j) => j.jobDid === jobDid);
  }

  updateJob(jobDid: string, state: JobState, reason: string | null, resultDigest: string | null): void {
    const job = this.getJob(jobDid);
    if (!job) return;
    if (job.state !== state) {
      const legal = JOB_TRANSITIONS[job.state] ?? [];
      if (!legal.includes(state)) {
        // Poll responses can skip intermediate states (Authorized seen as
        // Succeeded); accept forward terminal jumps, reject the impossible.
        const terminal = state === "Succeeded" || state === "Failed" || state === "Rejected";
        if (!terminal) return;
      }
      job.state = state;
    }
    job.reason = reason;
    job.resultDigest = resultDigest;
    this.notify();
  }
}
