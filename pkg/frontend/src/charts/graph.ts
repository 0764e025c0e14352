/**
 * Force-directed correspondence graph over pseudonymous labels.
 *
 * The layout runs a fixed number of spring iterations synchronously at
 * build time from a deterministic circular start, so the same data always
 * lands in the same place and the test DOM sees the finished picture.
 */

import { svg } from "../dom";
import type { GraphEdge } from "../types";

const SIZE = 460;
const CENTER = SIZE / 2;
const ITERATIONS = 250;
const SPRING_LEN = 120;
const SPRING_K = 0.02;
const REPULSE_K = 18000;
const STEP = 0.85;

interface Point {
  x: number;
  y: number;
}

function layout(nodes: string[], edges: GraphEdge[]): Map<string, Point> {
  const pos = new Map<string, Point>();
  nodes.forEach((name, i) => {
    const angle = (2 * Math.PI * i) / Math.max(nodes.length, 1);
    pos.set(name, {
      x: CENTER + Math.cos(angle) * (CENTER - 60),
      y: CENTER + Math.sin(angle) * (CENTER - 60),
    });
  });
  const linked = edges
    .map((e) => [pos.get(e.source), pos.get(e.target)] as const)
    .filter((pair): pair is readonly [Point, Point] => Boolean(pair[0] && pair[1]));

  for (let step = 0; step < ITERATIONS; step++) {
    const force = new Map<string, Point>(nodes.map((n) => [n, { x: 0, y: 0 }]));
    const points = nodes
      .map((n) => [n, pos.get(n)] as const)
      .filter((pair): pair is readonly [string, Point] => Boolean(pair[1]));
    for (let i = 0; i < points.length; i++) {
      for (let j = i + 1; j < points.length; j++) {
        const [na, a] = points[i]!;
        const [nb, b] = points[j]!;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = REPULSE_K / d2;
        const d = Math.sqrt(d2);
        const fa = force.get(na)!;
        const fb = force.get(nb)!;
        fa.x += (dx / d) * push;
        fa.y += (dy / d) * push;
        fb.x -= (dx / d) * push;
        fb.y -= (dy / d) * push;
      }
    }
    for (const [a, b] of linked) {
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = SPRING_K * (d - SPRING_LEN);
      // both endpoint objects live in `pos`; mutate in place
      a.x += (dx / d) * pull;
      a.y += (dy / d) * pull;
      b.x -= (dx / d) * pull;
      b.y -= (dy / d) * pull;
    }
    for (const [name, p] of pos) {
      const f = force.get(name)!;
      p.x = Math.min(SIZE - 30, Math.max(30, p.x + f.x * STEP * 0.01));
      p.y = Math.min(SIZE - 30, Math.max(30, p.y + f.y * STEP * 0.01));
    }
  }
  return pos;
}

export function forceGraph(nodes: string[], edges: GraphEdge[]): SVGElement {
  const pos = layout(nodes, edges);
  const maxCount = edges.reduce((acc, e) => Math.max(acc, e.count), 1);
  const chart = svg("svg", {
    "data-chart": "force-graph",
    viewBox: `0 0 ${SIZE} ${SIZE}`,
    width: SIZE,
    height: SIZE,
    role: "img",
  });
  for (const edge of edges) {
    const a = pos.get(edge.source);
    const b = pos.get(edge.target);
    if (!a || !b) continue;
    const line = svg("line", {
      x1: a.x.toFixed(1),
      y1: a.y.toFixed(1),
      x2: b.x.toFixed(1),
      y2: b.y.toFixed(1),
      class: "graph-edge",
      "stroke-width": (1 + (edge.count / maxCount) * 5).toFixed(2),
      "data-source": edge.source,
      "data-target": edge.target,
      "data-count": edge.count,
    });
    line.append(
      svg("title", {}, `${edge.source} wrote to ${edge.target} ${edge.count} times`),
    );
    chart.append(line);
  }
  for (const name of nodes) {
    const p = pos.get(name);
    if (!p) continue;
    const dot = svg("circle", {
      cx: p.x.toFixed(1),
      cy: p.y.toFixed(1),
      r: 14,
      class: "graph-node",
      "data-node": name,
    });
    chart.append(dot);
    chart.append(
      svg(
        "text",
        { x: p.x.toFixed(1), y: (p.y + 4).toFixed(1), "text-anchor": "middle", class: "graph-label" },
        name,
      ),
    );
  }
  return chart;
}
