/**
 * Plain-language copy shown next to every chart and field.
 *
 * The portal's audience is archivists and humanities researchers, not
 * data-space engineers, so each blurb says what a reader can and cannot
 * conclude, in ordinary words.  Kept in one module so wording stays
 * consistent and every chart provably has a non-empty explanation.
 */

export const CHART_EXPLANATIONS = {
  eda_terms:
    "The words that appear most often across the whole collection, ranked by " +
    "how many times each occurs. Counts cover every document, so a tall bar " +
    "means the word is common overall, not that it matters in any one letter.",
  eda_histogram:
    "How many documents fall in each month. Gaps or spikes usually reflect " +
    "how the archive was assembled rather than sudden changes in activity.",
  sentiment_line:
    "The average tone of the documents written in each month, from -1 " +
    "(consistently negative wording) to +1 (consistently positive). Hover a " +
    "point to see how many documents the month's average rests on; an " +
    "average over few documents is easily swayed by a single letter.",
  topics_panels:
    "Each panel is one recurring theme the model found: a set of words that " +
    "tend to appear together. The bar next to each word shows how strongly " +
    "it belongs to the theme, and the panel heading shows what share of the " +
    "collection leans on it. Themes are statistical, not curated subjects.",
  clustering_bubbles:
    "Documents grouped by vocabulary similarity. Each bubble is one group, " +
    "sized by how many documents it holds; hover to see the words that set " +
    "the group apart. Groups are descriptive, they carry no fixed meaning.",
  comm_graph:
    "Who wrote to whom, with names replaced by neutral labels like P1. A " +
    "thicker line means more messages between the pair. Labels cannot be " +
    "traced back to people; pairs with very few messages are withheld.",
} as const;

export const FIELD_TOOLTIPS = {
  price:
    "One-time price for a time-limited right to run computations on this " +
    "collection. You never download the documents themselves.",
  asset_type:
    "Datasets are document collections held by the archive; algorithms are " +
    "the computations you can send to them.",
  license: "The terms you accept before buying access. Kept verbatim on file.",
  governance_badge: "Who operates this node and under which model.",
  audit_provenance:
    "Position of this asset's registration in the node's tamper-evident " +
    "activity log. Anyone can re-check the log at any time.",
  consent:
    "The archive requires an explicit acknowledgement of the license before " +
    "access can be purchased.",
  seed:
    "Number that fixes the random choices inside the algorithm. The same " +
    "seed on the same collection reproduces the result exactly.",
  param_k: "How many groups to sort the documents into.",
  param_n_topics: "How many recurring themes to look for.",
  param_iters: "How many refinement passes the theme model makes.",
  suppressed:
    "Some counts were withheld because they covered fewer documents than " +
    "the node's privacy floor allows.",
  digest:
    "Fingerprint of the published result. Re-running with the same seed " +
    "must reproduce this fingerprint bit for bit.",
} as const;

export const MICROCOPY = {
  audit_log: "tamper-evident activity log",
  empty_catalog: "No collections match your search. Clear the filters to see everything this node offers.",
  wallet_hint: "Demo balance in euro cents. Top up freely; no real money is involved.",
  expired_form:
    "Your access to this collection has ended. Purchase access again to run further computations.",
} as const;

/** Human phrasing for machine refusal codes surfaced by the node. */
export const REASON_TEXT: Record<string, string> = {
  GrantExpired: "Your purchased access to this collection has expired.",
  GrantRevoked: "The archive has withdrawn your access to this collection.",
  PaymentMissing: "No paid access covers this dataset and algorithm pair. Purchase access first.",
  ConsentMissing: "You have not acknowledged the collection's license yet.",
  BadIdentity: "Your identity could not be verified. Sign in again.",
  ConsentRequired: "This collection requires you to acknowledge its license before purchase.",
  InsufficientFunds: "Your balance does not cover this purchase. Use the faucet to top up.",
  PolicyViolation: "The computation's output did not pass the privacy checks, so nothing was released.",
  AlgorithmError: "The computation failed while running. Your payment was returned.",
  CorpusLoadError: "The archive's documents could not be loaded. Your payment was returned.",
  AuthRequired: "Your session has ended. Sign in again.",
};

export function reasonText(code: string | null | undefined): string {
  if (!code) return "";
  return REASON_TEXT[code] ?? `The node refused the request (${code}).`;
}
