/**
 * Monthly sentiment line on a fixed -1..+1 scale.
 *
 * The scale never rescales to the data: a flat line near zero should look
 * flat, not dramatic.  Each point carries a native tooltip naming the
 * month, the mean and how many documents it rests on.
 */

import { svg } from "../dom";

export interface MonthPoint {
  month: string;
  mean: number;
  docs: number;
}

const PLOT_H = 200;
const STEP_X = 70;
const PAD_X = 50;

function yOf(mean: number): number {
  const clamped = Math.max(-1, Math.min(1, mean));
  return 20 + ((1 - clamped) / 2) * PLOT_H;
}

export function sentimentLine(points: MonthPoint[]): SVGElement {
  const width = PAD_X * 2 + Math.max(points.length - 1, 1) * STEP_X;
  const height = PLOT_H + 80;
  const chart = svg("svg", {
    "data-chart": "line",
    viewBox: `0 0 ${width} ${height}`,
    width,
    height,
    role: "img",
  });

  for (const [value, label] of [
    [1, "+1"],
    [0, "0"],
    [-1, "-1"],
  ] as [number, string][]) {
    const y = yOf(value);
    chart.append(
      svg("line", { x1: PAD_X, y1: y, x2: width - PAD_X, y2: y, class: value === 0 ? "axis-zero" : "axis" }),
      svg("text", { x: PAD_X - 8, y: y + 4, "text-anchor": "end", class: "axis-label" }, label),
    );
  }

  const coords = points.map((p, i) => ({ ...p, x: PAD_X + i * STEP_X, y: yOf(p.mean) }));
  if (coords.length > 1) {
    const path = coords.map((c, i) => `${i === 0 ? "M" : "L"}${c.x},${c.y.toFixed(1)}`).join(" ");
    chart.append(svg("path", { d: path, class: "line-path", fill: "none" }));
  }
  for (const c of coords) {
    const point = svg("circle", {
      cx: c.x,
      cy: c.y.toFixed(1),
      r: 5,
      class: "line-point",
      "data-month": c.month,
      "data-docs": c.docs,
    });
    point.append(
      svg("title", {}, `${c.month}: mean ${c.mean.toFixed(3)} over ${c.docs} documents`),
    );
    chart.append(point);
    chart.append(
      svg("text", { x: c.x, y: PLOT_H + 60, "text-anchor": "middle", class: "col-label" }, c.month),
    );
  }
  return chart;
}
