/**
 * Dashboard completeness over the five result kinds.
 *
 * For every frozen result the dashboard must render the chart type the
 * kind calls for, each chart must carry a non-empty explanation element,
 * and the provenance panel must name algorithm, seed and parameters.
 */

import { describe, expect, it } from "vitest";

import { renderDashboard } from "../src/views/dashboard";
import { buildViewModel } from "../src/viewmodel";
import type { JobResultDoc } from "../src/types";
import { fx, RESULT_KINDS } from "./helpers/fixtures";

function render(kind: string): HTMLElement {
  const doc = fx.results[kind];
  if (!doc) throw new Error(`no fixture for ${kind}`);
  return renderDashboard(buildViewModel(doc));
}

const EXPECTED_CHARTS: Record<string, string[]> = {
  eda: ["ranked-bars", "columns"],
  clustering: ["bubbles"],
  topics: ["topic-panels"],
  sentiment: ["line"],
  comm_graph: ["force-graph"],
};

describe("dashboard completeness", () => {
  for (const kind of RESULT_KINDS) {
    it(`renders ${kind} with its chart type and explanations`, () => {
      const view = render(kind);

      for (const chart of EXPECTED_CHARTS[kind] ?? []) {
        expect(
          view.querySelector(`[data-chart="${chart}"]`),
          `${kind} must render a ${chart} chart`,
        ).toBeTruthy();
      }

      const explanations = Array.from(view.querySelectorAll(".explanation"));
      expect(explanations.length, `${kind} has no explanation elements`).toBeGreaterThan(0);
      for (const node of explanations) {
        expect((node.textContent ?? "").trim().length).toBeGreaterThan(20);
      }
      // every chart block is explained, not just some
      for (const block of Array.from(view.querySelectorAll(".chart-block"))) {
        const note = block.querySelector(".explanation");
        expect(note, `${kind} has a chart block without an explanation`).toBeTruthy();
        expect((note?.textContent ?? "").trim().length).toBeGreaterThan(20);
      }

      const about = view.querySelector(".about-computation");
      expect(about, `${kind} lacks the provenance panel`).toBeTruthy();
      const aboutText = about?.textContent ?? "";
      expect(aboutText).toContain(`Algorithm: ${kind}`);
      expect(aboutText).toContain("Seed:");
      expect(about?.querySelector(".audit-link")).toBeTruthy();
      expect(aboutText).toContain("Result fingerprint:");
    });
  }

  it("renders exactly n_topics theme panels", () => {
    const view = render("topics");
    const doc = fx.results["topics"] as JobResultDoc;
    const declared = (doc.result.payload as { n_topics: number }).n_topics;
    expect(view.querySelectorAll(".topic-panel").length).toBe(declared);
    // each panel ranks its terms as bars with visible weights
    for (const panel of Array.from(view.querySelectorAll(".topic-panel"))) {
      expect(panel.querySelector('[data-chart="ranked-bars"]')).toBeTruthy();
    }
  });

  it("prints counts on the term bars instead of a word cloud", () => {
    const view = render("eda");
    const doc = fx.results["eda"] as JobResultDoc;
    const [topTerm, topCount] = (doc.result.payload as { top_terms: [string, number][] })
      .top_terms[0] ?? ["", 0];
    const bars = view.querySelector('[data-chart="ranked-bars"]');
    expect(bars?.textContent).toContain(topTerm);
    expect(bars?.textContent).toContain(String(topCount));
  });

  it("keeps the sentiment scale fixed and exposes doc counts on hover", () => {
    const view = render("sentiment");
    const chart = view.querySelector('[data-chart="line"]');
    expect(chart?.textContent).toContain("+1");
    expect(chart?.textContent).toContain("-1");
    const point = chart?.querySelector("circle.line-point[data-month='2001-01']");
    expect(point?.querySelector("title")?.textContent).toContain("25 documents");
  });

  it("labels cluster bubbles with sizes and term hovers", () => {
    const view = render("clustering");
    const bubbles = Array.from(view.querySelectorAll(".bubble"));
    const doc = fx.results["clustering"] as JobResultDoc;
    const payload = doc.result.payload as { k: number; clusters: { size: number }[] };
    expect(bubbles.length).toBe(payload.k);
    const first = bubbles[0];
    expect(first?.getAttribute("data-size")).toBe(String(payload.clusters[0]?.size));
    expect(first?.querySelector("title")?.textContent).toContain("Distinctive terms");
  });

  it("draws the correspondence network over pseudonyms only", () => {
    const view = render("comm_graph");
    const chart = view.querySelector('[data-chart="force-graph"]');
    expect(chart).toBeTruthy();
    const doc = fx.results["comm_graph"] as JobResultDoc;
    const payload = doc.result.payload as { nodes: string[]; edges: unknown[] };
    expect(chart?.querySelectorAll(".graph-node").length).toBe(payload.nodes.length);
    expect(chart?.querySelectorAll(".graph-edge").length).toBe(payload.edges.length);
    for (const label of Array.from(chart?.querySelectorAll(".graph-label") ?? [])) {
      expect(label.textContent).toMatch(/^P\d+$/);
    }
  });

  it("shows the suppression notice exactly when buckets were withheld", () => {
    const withheld = render("comm_graph");
    const notice = withheld.querySelector(".suppression-notice");
    expect(notice).toBeTruthy();
    const doc = fx.results["comm_graph"] as JobResultDoc;
    expect(notice?.textContent).toContain(String(doc.result.suppressed_buckets));

    const clean = render("eda");
    expect(clean.querySelector(".suppression-notice")).toBeNull();
  });

  it("explains a result whose body does not match its declared kind", () => {
    const doc = fx.results["eda"] as JobResultDoc;
    const broken: JobResultDoc = {
      ...doc,
      result: { ...doc.result, payload: { unexpected: true } },
    };
    const view = renderDashboard(buildViewModel(broken));
    const panel = view.querySelector(".schema-mismatch");
    expect(panel).toBeTruthy();
    expect((panel?.textContent ?? "").trim().length).toBeGreaterThan(40);
    expect(panel?.textContent).toContain("eda");
  });
});
