/** Tiny element builders, enough DOM sugar to skip a framework. */

const SVG_NS = "http://www.w3.org/2000/svg";

export type Child = Node | string | null | undefined;

export interface Attrs {
  [key: string]: string | number | boolean | EventListener | undefined;
}

function applyAttrs(el: Element, attrs: Attrs): void {
  for (const [key, value] of Object.entries(attrs)) {
    if (value === undefined || value === false) continue;
    if (key.startsWith("on") && typeof value === "function") {
      el.addEventListener(key.slice(2).toLowerCase(), value);
    } else if (value === true) {
      el.setAttribute(key, "");
    } else {
      el.setAttribute(key, String(value));
    }
  }
}

function appendChildren(el: Element, children: Child[]): void {
  for (const child of children) {
    if (child === null || child === undefined) continue;
    el.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
}

export function h<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const el = document.createElement(tag);
  applyAttrs(el, attrs);
  appendChildren(el, children);
  return el;
}

export function svg(tag: string, attrs: Attrs = {}, ...children: Child[]): SVGElement {
  const el = document.createElementNS(SVG_NS, tag) as SVGElement;
  applyAttrs(el, attrs);
  appendChildren(el, children);
  return el;
}

export function clear(el: Element): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

/** Euro cents to a display string; all ledger amounts are integers. */
export function formatCents(cents: number): string {
  const sign = cents < 0 ? "-" : "";
  const abs = Math.abs(cents);
  const euros = Math.floor(abs / 100);
  const rest = String(abs % 100).padStart(2, "0");
  return `${sign}€${euros}.${rest}`;
}

export function formatTimestamp(epochSecs: number): string {
  return new Date(epochSecs * 1000).toISOString().replace("T", " ").slice(0, 19) + " UTC";
}

/** Remaining lifetime of a grant, derived from the server's expires_at. */
export function formatCountdown(expiresAt: number, nowSecs: number): string {
  const left = expiresAt - nowSecs;
  if (left <= 0) return "expired";
  const hours = Math.floor(left / 3600);
  const mins = Math.floor((left % 3600) / 60);
  if (hours > 0) return `${hours}h ${mins}m left`;
  const secs = left % 60;
  return mins > 0 ? `${mins}m ${secs}s left` : `${secs}s left`;
}
