/**
 * Document shapes of the portal API, one interface per response body.
 *
 * These mirror what the node actually serves; the test fixtures are frozen
 * backend responses, so a shape drift here fails compilation against real
 * data rather than against a hand-written guess.
 */

export interface IdentityDoc {
  did: string;
  roles: string[];
  auth_token: string;
}

export interface SessionDoc {
  session_token: string;
  expires_at: number;
  did: string;
  roles: string[];
  balance: number;
}

export interface FaucetDoc {
  did: string;
  balance: number;
}

export interface SearchHit {
  did: string;
  name: string;
  asset_type: string;
  price_per_access: number;
  snippet: string;
  score: number;
}

export interface SearchDoc {
  hits: SearchHit[];
}

export interface Ddo {
  did: string;
  asset_type: string;
  name: string;
  description: string;
  author: string;
  license_text: string;
  license_digest: string;
  requires_consent_ack: boolean;
  price_per_access: number;
  tags: string[];
  created_at: number;
  sealed_locator_id: string | null;
  signature: string;
  retired: boolean;
}

export interface AssetDetailDoc {
  ddo: Ddo;
  registered_audit_index: number | null;
}

export interface ConsentDoc {
  consumer: string;
  asset_did: string;
  license_digest: string;
  signature: string;
  recorded_at: number;
}

export interface OrderDoc {
  order_id: string;
  grant_id: string;
  amount_locked: number;
  expires_at: number;
  balance: number;
}

export type JobState =
  | "Submitted"
  | "Authorized"
  | "Rejected"
  | "Running"
  | "Succeeded"
  | "Failed";

export interface JobSubmitDoc {
  job_did: string;
  state: JobState;
}

export interface JobStatusDoc {
  job_did: string;
  state: JobState;
  reason: string | null;
  dataset_did: string;
  algorithm_did: string;
  submitted_at: number;
  finished_at: number | null;
  result_digest: string | null;
}

export type TermWeight = [string, number];

export interface EdaPayload {
  total_docs: number;
  date_histogram: Record<string, number>;
  top_terms: TermWeight[];
}

export interface ClusterEntry {
  size: number;
  top_terms: TermWeight[];
}

export interface ClusteringPayload {
  k: number;
  inertia: number;
  clusters: ClusterEntry[];
}

export interface TopicEntry {
  prevalence: number;
  terms: TermWeight[];
}

export interface TopicsPayload {
  n_topics: number;
  topics: TopicEntry[];
}

export interface SentimentPayload {
  overall_mean: number;
  monthly: Record<string, { mean: number; docs: number }>;
}

export interface GraphEdge {
  source: string;
  target: string;
  count: number;
}

export interface CommGraphPayload {
  nodes: string[];
  edges: GraphEdge[];
}

export type ResultKind = "eda" | "clustering" | "topics" | "sentiment" | "comm_graph";

export interface AggregateResultDoc {
  kind: string;
  algorithm: string;
  params: Record<string, string | number | boolean | null>;
  seed: number;
  payload: unknown;
  suppressed_buckets: number;
}

export interface JobResultDoc {
  job_did: string;
  produced_at: number;
  result: AggregateResultDoc;
  log_lines: string[];
  result_digest: string;
}

export interface EventDoc {
  seq: number;
  job_did: string;
  state: JobState;
  reason: string | null;
  at: number;
}

export interface EventsDoc {
  events: EventDoc[];
}

export interface AuditEntryDoc {
  index: number;
  timestamp: number;
  kind: string;
  payload_digest: string;
  prev_hash: string;
  entry_hash: string;
}

export interface AuditPageDoc {
  entries: AuditEntryDoc[];
  page: number;
  page_size: number;
  total_entries: number;
}

export interface AuditVerifyDoc {
  valid: boolean;
  first_bad_index: number | null;
  total_entries: number;
}

export interface GovernanceMember {
  name: string;
  affiliation_url: string;
}

export interface GovernanceDoc {
  governance: {
    operator_name: string;
    model: string;
    members: GovernanceMember[];
    contact: string;
  };
  payee_split: Record<string, number>;
  k_min: number;
  max_terms_per_list: number;
  algorithm_price: number;
  algorithm_assets: Record<string, string>;
}

export interface ErrorBody {
  error: {
    code: string;
    message: string;
    job_did?: string;
  };
}

/** Static portal configuration shipped next to the bundle. */
export interface PortalConfig {
  api_base_url: string;
  node_name: string;
}
