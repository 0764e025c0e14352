/**
 * Ranked horizontal bars and monthly columns, plain SVG.
 *
 * Bars carry their value as visible text: readers asked for countable
 * charts, not word clouds.  Layout is fixed-coordinate so it renders the
 * same in a browser and in the test DOM.
 */

import { svg } from "../dom";
import type { TermWeight } from "../types";

const BAR_H = 22;
const GAP = 6;
const LABEL_W = 150;
const VALUE_W = 80;
const PLOT_W = 420;

function fmtWeight(weight: number): string {
  return Number.isInteger(weight) ? String(weight) : weight.toFixed(4);
}

/** Horizontal bar per term, longest first, value printed at the bar end. */
export function rankedBars(terms: TermWeight[], maxBars = 20): SVGElement {
  const shown = terms.slice(0, maxBars);
  const top = shown.reduce((acc, [, w]) => Math.max(acc, w), 0) || 1;
  const height = shown.length * (BAR_H + GAP) + GAP;
  const chart = svg("svg", {
    "data-chart": "ranked-bars",
    viewBox: `0 0 ${LABEL_W + PLOT_W + VALUE_W} ${height}`,
    width: LABEL_W + PLOT_W + VALUE_W,
    height,
    role: "img",
  });
  shown.forEach(([term, weight], i) => {
    const y = GAP + i * (BAR_H + GAP);
    const w = Math.max(2, Math.round((weight / top) * PLOT_W));
    const row = svg("g", { "data-term": term });
    row.append(
      svg(
        "text",
        { x: LABEL_W - 8, y: y + BAR_H - 6, "text-anchor": "end", class: "bar-label" },
        term,
      ),
      svg("rect", { x: LABEL_W, y, width: w, height: BAR_H, class: "bar" }),
      svg(
        "text",
        { x: LABEL_W + w + 6, y: y + BAR_H - 6, class: "bar-value" },
        fmtWeight(weight),
      ),
    );
    chart.append(row);
  });
  return chart;
}

/** Vertical column per month with the count printed above each column. */
export function columnChart(buckets: { month: string; count: number }[]): SVGElement {
  const colW = 48;
  const gap = 10;
  const plotH = 180;
  const top = buckets.reduce((acc, b) => Math.max(acc, b.count), 0) || 1;
  const width = buckets.length * (colW + gap) + gap;
  const height = plotH + 60;
  const chart = svg("svg", {
    "data-chart": "columns",
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    role: "img",
  });
  buckets.forEach((bucket, i) => {
    const x = gap + i * (colW + gap);
    const h = Math.max(2, Math.round((bucket.count / top) * plotH));
    const y = 20 + (plotH - h);
    const col = svg("g", { "data-month": bucket.month });
    col.append(
      svg("text", { x: x + colW / 2, y: y - 5, "text-anchor": "middle", class: "col-value" },
        String(bucket.count)),
      svg("rect", { x, y, width: colW, height: h, class: "bar" }),
      svg("text", { x: x + colW / 2, y: plotH + 40, "text-anchor": "middle", class: "col-label" },
        bucket.month),
    );
    chart.append(col);
  });
  return chart;
}
