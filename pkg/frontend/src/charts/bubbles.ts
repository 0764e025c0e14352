/**
 * Cluster sizes as a row of area-scaled bubbles.
 *
 * Area, not radius, tracks the document count, otherwise big groups read
 * as far bigger than they are.  Hovering a bubble lists the terms that
 * set the group apart.
 */

import { svg } from "../dom";
import type { TermWeight } from "../types";

export interface Bubble {
  label: string;
  size: number;
  topTerms: TermWeight[];
}

const MAX_R = 70;
const MIN_R = 12;

export function bubbleChart(bubbles: Bubble[]): SVGElement {
  const top = bubbles.reduce((acc, b) => Math.max(acc, b.size), 0) || 1;
  const radii = bubbles.map((b) => Math.max(MIN_R, Math.sqrt(b.size / top) * MAX_R));
  const width = radii.reduce((acc, r) => acc + 2 * r + 24, 24);
  const height = 2 * MAX_R + 80;
  const chart = svg("svg", {
    "data-chart": "bubbles",
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    role: "img",
  });
  let x = 24;
  bubbles.forEach((bubble, i) => {
    const r = radii[i] ?? MIN_R;
    const cx = x + r;
    const cy = MAX_R + 20;
    const hover = bubble.topTerms
      .slice(0, 5)
      .map(([term, w]) => `${term} (${w.toFixed(3)})`)
      .join(", ");
    const circle = svg("circle", {
      cx,
      cy,
      r: r.toFixed(1),
      class: "bubble",
      "data-cluster": bubble.label,
      "data-size": bubble.size,
    });
    circle.append(
      svg("title", {}, `${bubble.label}: ${bubble.size} documents. Distinctive terms: ${hover}`),
    );
    chart.append(circle);
    chart.append(
      svg("text", { x: cx, y: cy + 5, "text-anchor": "middle", class: "bubble-value" },
        String(bubble.size)),
      svg("text", { x: cx, y: 2 * MAX_R + 60, "text-anchor": "middle", class: "col-label" },
        bubble.label),
    );
    x += 2 * r + 24;
  });
  return chart;
}
