/**
 * Frozen backend responses, one import per captured body.
 *
 * Regenerate with scripts/make_fixtures.py against a live checkout of the
 * node package; never edit these by hand.
 */

import assetDetailJson from "../fixtures/asset_detail.json";
import auditPageJson from "../fixtures/audit_page.json";
import auditVerifyBadJson from "../fixtures/audit_verify_bad.json";
import auditVerifyOkJson from "../fixtures/audit_verify_ok.json";
import consentJson from "../fixtures/consent.json";
import eventsJson from "../fixtures/events.json";
import faucetJson from "../fixtures/faucet.json";
import governanceJson from "../fixtures/governance.json";
import identityJson from "../fixtures/identity.json";
import jobRunningJson from "../fixtures/job_running.json";
import jobSubmitJson from "../fixtures/job_submit.json";
import jobSucceededJson from "../fixtures/job_succeeded.json";
import orderJson from "../fixtures/order.json";
import rawSamplesJson from "../fixtures/raw_samples.json";
import rejectedJobJson from "../fixtures/rejected_job.json";
import resultClusteringJson from "../fixtures/result_clustering.json";
import resultCommGraphJson from "../fixtures/result_comm_graph.json";
import resultEdaJson from "../fixtures/result_eda.json";
import resultSentimentJson from "../fixtures/result_sentiment.json";
import resultTopicsJson from "../fixtures/result_topics.json";
import searchEmptyJson from "../fixtures/search_empty.json";
import searchHitsJson from "../fixtures/search_hits.json";
import sentinelsJson from "../fixtures/sentinels.json";
import sessionJson from "../fixtures/session.json";

import type {
  AssetDetailDoc,
  AuditPageDoc,
  AuditVerifyDoc,
  ConsentDoc,
  ErrorBody,
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
} from "../../src/types";

export const fx = {
  assetDetail: assetDetailJson as unknown as AssetDetailDoc,
  auditPage: auditPageJson as unknown as AuditPageDoc,
  auditVerifyBad: auditVerifyBadJson as unknown as AuditVerifyDoc,
  auditVerifyOk: auditVerifyOkJson as unknown as AuditVerifyDoc,
  consent: consentJson as unknown as ConsentDoc,
  events: eventsJson as unknown as EventsDoc,
  faucet: faucetJson as unknown as FaucetDoc,
  governance: governanceJson as unknown as GovernanceDoc,
  identity: identityJson as unknown as IdentityDoc,
  jobRunning: jobRunningJson as unknown as JobStatusDoc,
  jobSubmit: jobSubmitJson as unknown as JobSubmitDoc,
  jobSucceeded: jobSucceededJson as unknown as JobStatusDoc,
  order: orderJson as unknown as OrderDoc,
  rejectedJob: rejectedJobJson as unknown as ErrorBody,
  results: {
    eda: resultEdaJson as unknown as JobResultDoc,
    clustering: resultClusteringJson as unknown as JobResultDoc,
    topics: resultTopicsJson as unknown as JobResultDoc,
    sentiment: resultSentimentJson as unknown as JobResultDoc,
    comm_graph: resultCommGraphJson as unknown as JobResultDoc,
  } as Record<string, JobResultDoc>,
  searchEmpty: searchEmptyJson as unknown as SearchDoc,
  searchHits: searchHitsJson as unknown as SearchDoc,
  sentinels: sentinelsJson as unknown as Record<string, string[]>,
  rawSamples: rawSamplesJson as unknown as string[],
  session: sessionJson as unknown as SessionDoc,
};

export const RESULT_KINDS = ["eda", "clustering", "topics", "sentiment", "comm_graph"] as const;

/** Every sentinel PII string the demo corpus plants, flat. */
export function allSentinels(): string[] {
  return Object.values(fx.sentinels).flat();
}
