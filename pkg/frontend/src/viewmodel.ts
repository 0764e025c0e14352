/**
 * Typed view over one job result document.
 *
 * Built from the result endpoint's body and nothing else; the dashboard
 * renders this model, never the raw document.  A body that does not match
 * its declared kind yields a diagnostic model instead of a throw, so the
 * dashboard can always show something explicit.
 */

import type {
  AggregateResultDoc,
  ClusteringPayload,
  CommGraphPayload,
  EdaPayload,
  JobResultDoc,
  SentimentPayload,
  TermWeight,
  TopicsPayload,
} from "./types";

interface Common {
  jobDid: string;
  producedAt: number;
  algorithm: string;
  params: Record<string, string | number | boolean | null>;
  seed: number;
  suppressedBuckets: number;
  resultDigest: string;
}

export interface EdaViewModel extends Common {
  kind: "eda";
  totalDocs: number;
  topTerms: TermWeight[];
  histogram: { month: string; count: number }[];
}

export interface ClusteringViewModel extends Common {
  kind: "clustering";
  k: number;
  inertia: number;
  clusters: { label: string; size: number; topTerms: TermWeight[] }[];
}

export interface TopicsViewModel extends Common {
  kind: "topics";
  nTopics: number;
  topics: { label: string; prevalence: number; terms: TermWeight[] }[];
}

export interface SentimentViewModel extends Common {
  kind: "sentiment";
  overallMean: number;
  monthly: { month: string; mean: number; docs: number }[];
}

export interface CommGraphViewModel extends Common {
  kind: "comm_graph";
  nodes: string[];
  edges: { source: string; target: string; count: number }[];
}

/** Result body did not match its declared kind; carries what went wrong. */
export interface MismatchViewModel extends Common {
  kind: "mismatch";
  declaredKind: string;
  problem: string;
}

export type ResultViewModel =
  | EdaViewModel
  | ClusteringViewModel
  | TopicsViewModel
  | SentimentViewModel
  | CommGraphViewModel
  | MismatchViewModel;

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function termList(value: unknown, where: string): TermWeight[] {
  if (!Array.isArray(value)) throw new Error(`${where}: expected a list of [term, weight] pairs`);
  return value.map((pair, i) => {
    if (!Array.isArray(pair) || pair.length !== 2) throw new Error(`${where}[${i}]: not a pair`);
    const [term, weight] = pair;
    if (typeof term !== "string" || typeof weight !== "number") {
      throw new Error(`${where}[${i}]: expected [string, number]`);
    }
    return [term, weight];
  });
}

function sortedMonths(value: unknown, where: string): [string, unknown][] {
  if (!isRecord(value)) throw new Error(`${where}: expected month-keyed object`);
  return Object.entries(value).sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0));
}

function buildEda(common: Common, payload: unknown): EdaViewModel {
  if (!isRecord(payload)) throw new Error("eda payload is not an object");
  if (typeof payload["total_docs"] !== "number") throw new Error("eda.total_docs missing");
  const histogram = sortedMonths(payload["date_histogram"], "eda.date_histogram").map(
    ([month, count]) => {
      if (typeof count !== "number") throw new Error(`eda.date_histogram[${month}]: not a number`);
      return { month, count };
    },
  );
  return {
    ...common,
    kind: "eda",
    totalDocs: payload["total_docs"],
    topTerms: termList(payload["top_terms"], "eda.top_terms"),
    histogram,
  };
}

function buildClustering(common: Common, payload: unknown): ClusteringViewModel {
  if (!isRecord(payload)) throw new Error("clustering payload is not an object");
  const { k, inertia, clusters } = payload as Partial<ClusteringPayload>;
  if (typeof k !== "number" || typeof inertia !== "number" || !Array.isArray(clusters)) {
    throw new Error("clustering payload needs k, inertia, clusters");
  }
  return {
    ...common,
    kind: "clustering",
    k,
    inertia,
    clusters: clusters.map((c, i) => {
      if (!isRecord(c) || typeof c["size"] !== "number") {
        throw new Error(`clustering.clusters[${i}]: bad entry`);
      }
      return {
        label: `Group ${i + 1}`,
        size: c["size"],
        topTerms: termList(c["top_terms"], `clustering.clusters[${i}].top_terms`),
      };
    }),
  };
}

function buildTopics(common: Common, payload: unknown): TopicsViewModel {
  if (!isRecord(payload)) throw new Error("topics payload is not an object");
  const { n_topics, topics } = payload as Partial<TopicsPayload>;
  if (typeof n_topics !== "number" || !Array.isArray(topics)) {
    throw new Error("topics payload needs n_topics and topics");
  }
  if (topics.length !== n_topics) {
    throw new Error(`topics: declared ${n_topics} topics but body lists ${topics.length}`);
  }
  return {
    ...common,
    kind: "topics",
    nTopics: n_topics,
    topics: topics.map((t, i) => {
      if (!isRecord(t) || typeof t["prevalence"] !== "number") {
        throw new Error(`topics[${i}]: bad entry`);
      }
      return {
        label: `Theme ${i + 1}`,
        prevalence: t["prevalence"],
        terms: termList(t["terms"], `topics[${i}].terms`),
      };
    }),
  };
}

function buildSentiment(common: Common, payload: unknown): SentimentViewModel {
  if (!isRecord(payload)) throw new Error("sentiment payload is not an object");
  const overall = payload["overall_mean"];
  if (typeof overall !== "number") throw new Error("sentiment.overall_mean missing");
  const monthly = sortedMonths(payload["monthly"], "sentiment.monthly").map(([month, bucket]) => {
    if (!isRecord(bucket) || typeof bucket["mean"] !== "number" || typeof bucket["docs"] !== "number") {
      throw new Error(`sentiment.monthly[${month}]: bad bucket`);
    }
    return { month, mean: bucket["mean"], docs: bucket["docs"] };
  });
  return { ...common, kind: "sentiment", overallMean: overall, monthly };
}

function buildCommGraph(common: Common, payload: unknown): CommGraphViewModel {
  if (!isRecord(payload)) throw new Error("comm_graph payload is not an object");
  const { nodes, edges } = payload as Partial<CommGraphPayload>;
  if (!Array.isArray(nodes) || !Array.isArray(edges)) {
    throw new Error("comm_graph payload needs nodes and edges");
  }
  return {
    ...common,
    kind: "comm_graph",
    nodes: nodes.map((n, i) => {
      if (typeof n !== "string") throw new Error(`comm_graph.nodes[${i}]: not a string`);
      return n;
    }),
    edges: edges.map((e, i) => {
      if (
        !isRecord(e) ||
        typeof e["source"] !== "string" ||
        typeof e["target"] !== "string" ||
        typeof e["count"] !== "number"
      ) {
        throw new Error(`comm_graph.edges[${i}]: bad edge`);
      }
      return { source: e["source"], target: e["target"], count: e["count"] };
    }),
  };
}

const BUILDERS: Record<string, (common: Common, payload: unknown) => ResultViewModel> = {
  eda: buildEda,
  clustering: buildClustering,
  topics: buildTopics,
  sentiment: buildSentiment,
  comm_graph: buildCommGraph,
};

export function buildViewModel(doc: JobResultDoc): ResultViewModel {
  const result: AggregateResultDoc = doc.result;
  const common: Common = {
    jobDid: doc.job_did,
    producedAt: doc.produced_at,
    algorithm: result.algorithm,
    params: result.params,
    seed: result.seed,
    suppressedBuckets: result.suppressed_buckets,
    resultDigest: doc.result_digest,
  };
  const builder = BUILDERS[result.kind];
  if (!builder) {
    return {
      ...common,
      kind: "mismatch",
      declaredKind: result.kind,
      problem: `unknown result kind "${result.kind}"`,
    };
  }
  try {
    return builder(common, result.payload);
  } catch (exc) {
    return {
      ...common,
      kind: "mismatch",
      declaredKind: result.kind,
      problem: exc instanceof Error ? exc.message : String(exc),
    };
  }
}

export type { EdaPayload, ClusteringPayload, TopicsPayload, SentimentPayload, CommGraphPayload };
