/**
 * Result dashboard: one layout per result kind, every chart explained.
 *
 * Renders only the typed view model.  Each chart sits inside a figure
 * with a non-empty .explanation paragraph; a result that failed model
 * building gets a diagnostic panel naming the mismatch, never a blank.
 */

import { rankedBars, columnChart } from "../charts/bars";
import { bubbleChart } from "../charts/bubbles";
import { forceGraph } from "../charts/graph";
import { sentimentLine } from "../charts/line";
import { h } from "../dom";
import { CHART_EXPLANATIONS, FIELD_TOOLTIPS, MICROCOPY } from "../explanations";
import type {
  ClusteringViewModel,
  CommGraphViewModel,
  EdaViewModel,
  MismatchViewModel,
  ResultViewModel,
  SentimentViewModel,
  TopicsViewModel,
} from "../viewmodel";

function chartBlock(title: string, chart: Element, explanation: string): HTMLElement {
  return h(
    "figure",
    { class: "chart-block" },
    h("figcaption", {}, title),
    chart,
    h("p", { class: "explanation" }, explanation),
  );
}

function suppressionNotice(vm: ResultViewModel): HTMLElement | null {
  if (vm.suppressedBuckets <= 0) return null;
  return h(
    "div",
    { class: "suppression-notice", role: "note", title: FIELD_TOOLTIPS.suppressed },
    `${vm.suppressedBuckets} small ${vm.suppressedBuckets === 1 ? "group was" : "groups were"} ` +
      "withheld to protect the people in the documents.",
  );
}

function aboutPanel(vm: ResultViewModel): HTMLElement {
  const paramItems = Object.entries(vm.params).map(([key, value]) =>
    h("li", {}, `${key}: ${String(value)}`),
  );
  return h(
    "section",
    { class: "about-computation" },
    h("h3", {}, "About this computation"),
    h("p", {}, `Algorithm: ${vm.algorithm}`),
    h(
      "p",
      { title: FIELD_TOOLTIPS.seed },
      `Seed: ${vm.seed}. Re-running with this seed reproduces the result exactly.`,
    ),
    paramItems.length ? h("ul", { class: "param-list" }, ...paramItems) : h("p", {}, "No parameters."),
    h("p", { class: "digest", title: FIELD_TOOLTIPS.digest }, `Result fingerprint: ${vm.resultDigest}`),
    h(
      "p",
      {},
      "Recorded in the ",
      h("a", { href: "#/governance", class: "audit-link" }, MICROCOPY.audit_log),
      ".",
    ),
  );
}

function edaSection(vm: EdaViewModel): HTMLElement[] {
  return [
    h("p", { class: "kind-summary" }, `${vm.totalDocs} documents analyzed.`),
    chartBlock("Most frequent words", rankedBars(vm.topTerms), CHART_EXPLANATIONS.eda_terms),
    chartBlock("Documents per month", columnChart(vm.histogram), CHART_EXPLANATIONS.eda_histogram),
  ];
}

function sentimentSection(vm: SentimentViewModel): HTMLElement[] {
  return [
    h("p", { class: "kind-summary" }, `Overall mean tone ${vm.overallMean.toFixed(3)}.`),
    chartBlock("Tone by month", sentimentLine(vm.monthly), CHART_EXPLANATIONS.sentiment_line),
  ];
}

function topicsSection(vm: TopicsViewModel): HTMLElement[] {
  const panels = vm.topics.map((topic) =>
    h(
      "article",
      { class: "topic-panel", "data-topic": topic.label },
      h("h3", {}, `${topic.label} · ${(topic.prevalence * 100).toFixed(1)}% of the collection`),
      rankedBars(topic.terms, 10),
    ),
  );
  return [
    chartBlock(
      `${vm.nTopics} recurring themes`,
      h("div", { class: "topic-grid", "data-chart": "topic-panels" }, ...panels),
      CHART_EXPLANATIONS.topics_panels,
    ),
  ];
}

function clusteringSection(vm: ClusteringViewModel): HTMLElement[] {
  return [
    h(
      "p",
      { class: "kind-summary" },
      `${vm.k} groups, within-group spread ${vm.inertia.toFixed(2)}.`,
    ),
    chartBlock(
      "Group sizes",
      bubbleChart(vm.clusters),
      CHART_EXPLANATIONS.clustering_bubbles,
    ),
  ];
}

function commGraphSection(vm: CommGraphViewModel): HTMLElement[] {
  return [
    h(
      "p",
      { class: "kind-summary" },
      `${vm.nodes.length} correspondents, ${vm.edges.length} connections shown.`,
    ),
    chartBlock("Who wrote to whom", forceGraph(vm.nodes, vm.edges), CHART_EXPLANATIONS.comm_graph),
  ];
}

function mismatchSection(vm: MismatchViewModel): HTMLElement[] {
  return [
    h(
      "div",
      { class: "schema-mismatch", role: "alert" },
      h("h3", {}, "This result could not be displayed"),
      h(
        "p",
        {},
        `The node declared a "${vm.declaredKind}" result, but its content does not match ` +
          "that shape. Nothing is wrong with your purchase; the result document itself is " +
          "inconsistent and was not rendered.",
      ),
      h("p", { class: "mismatch-detail" }, `Technical detail: ${vm.problem}`),
    ),
  ];
}

const TITLES: Record<string, string> = {
  eda: "Collection overview",
  clustering: "Document groups",
  topics: "Recurring themes",
  sentiment: "Tone over time",
  comm_graph: "Correspondence network",
  mismatch: "Result problem",
};

export function renderDashboard(vm: ResultViewModel): HTMLElement {
  let body: HTMLElement[];
  switch (vm.kind) {
    case "eda":
      body = edaSection(vm);
      break;
    case "sentiment":
      body = sentimentSection(vm);
      break;
    case "topics":
      body = topicsSection(vm);
      break;
    case "clustering":
      body = clusteringSection(vm);
      break;
    case "comm_graph":
      body = commGraphSection(vm);
      break;
    case "mismatch":
      body = mismatchSection(vm);
      break;
  }
  const children: (HTMLElement | null)[] = [
    h("h2", {}, TITLES[vm.kind] ?? "Result"),
    suppressionNotice(vm),
    ...body,
  ];
  if (vm.kind !== "mismatch") children.push(aboutPanel(vm));
  return h(
    "section",
    { class: "dashboard", "data-kind": vm.kind },
    ...children,
  );
}
