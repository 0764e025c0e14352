/**
 * Hash router and page orchestration.
 *
 * Four routes: catalog, job console, per-job dashboard, governance.
 * Result documents are fetched once per job and cached; results are
 * immutable once published, so re-renders never refetch them.
 */

import { ApiError, PortalClient } from "./api";
import type { AppContext } from "./context";
import { h } from "./dom";
import { reasonText } from "./explanations";
import { Store } from "./state";
import type { GovernanceDoc, PortalConfig } from "./types";
import { buildViewModel, type ResultViewModel } from "./viewmodel";
import { renderCatalog } from "./views/catalog";
import { renderDashboard } from "./views/dashboard";
import { renderGovernance } from "./views/governance";
import { renderJobs } from "./views/jobs";
import { renderBanner, renderChrome } from "./views/layout";

export interface AppOptions {
  now?: () => number;
  pollDelayMs?: number;
}

export class PortalApp {
  readonly ctx: AppContext;
  private readonly header: HTMLElement;
  private readonly bannerArea: HTMLElement;
  private readonly main: HTMLElement;
  private readonly resultCache = new Map<string, ResultViewModel>();
  private renderToken = 0;
  /** Resolves when the most recent route render has settled; tests await it. */
  routeSettled: Promise<void> = Promise.resolve();

  constructor(
    root: HTMLElement,
    client: PortalClient,
    config: PortalConfig,
    options: AppOptions = {},
  ) {
    this.header = h("header", { class: "portal-header" });
    this.bannerArea = h("div", { class: "banner-area" });
    this.main = h("main", { class: "portal-main" });
    root.replaceChildren(this.header, this.bannerArea, this.main);

    const store = new Store();
    this.ctx = {
      client,
      store,
      config,
      governance: null,
      now: options.now ?? (() => Math.floor(Date.now() / 1000)),
      pollDelayMs: options.pollDelayMs ?? 500,
      navigate: (hash: string) => {
        if (window.location.hash !== hash) window.location.hash = hash;
        this.routeSettled = this.renderRoute();
      },
      banner: (kind, text) => renderBanner(this.bannerArea, kind, text),
      refresh: () => {
        this.routeSettled = this.renderRoute();
      },
    };
    store.subscribe(() => {
      this.routeSettled = this.renderRoute();
    });
  }

  async start(): Promise<void> {
    try {
      this.ctx.governance = await this.ctx.client.governance();
    } catch {
      this.ctx.governance = null; // governance page will warn explicitly
    }
    window.addEventListener("hashchange", () => {
      this.routeSettled = this.renderRoute();
    });
    this.routeSettled = this.renderRoute();
    await this.routeSettled;
  }

  private mount(view: HTMLElement): void {
    this.main.replaceChildren(view);
  }

  async renderRoute(): Promise<void> {
    const token = ++this.renderToken;
    const hash = window.location.hash || "#/catalog";
    renderChrome(this.ctx, this.header, hash);

    if (hash.startsWith("#/dashboard/")) {
      const jobDid = hash.slice("#/dashboard/".length);
      let vm = this.resultCache.get(jobDid);
      if (!vm) {
        this.mount(h("p", { class: "loading" }, "Fetching the result…"));
        try {
          const doc = await this.ctx.client.jobResult(jobDid);
          vm = buildViewModel(doc);
          this.resultCache.set(jobDid, vm);
        } catch (exc) {
          if (token !== this.renderToken) return;
          const text =
            exc instanceof ApiError ? reasonText(exc.code) || exc.message : String(exc);
          this.mount(
            h(
              "section",
              { class: "dashboard-error", role: "alert" },
              h("h2", {}, "No result to show"),
              h("p", {}, text),
            ),
          );
          return;
        }
      }
      if (token !== this.renderToken) return; // a newer navigation won
      this.mount(renderDashboard(vm));
      return;
    }

    if (hash.startsWith("#/jobs")) {
      this.mount(renderJobs(this.ctx));
      return;
    }
    if (hash.startsWith("#/governance")) {
      this.mount(renderGovernance(this.ctx));
      return;
    }
    this.mount(renderCatalog(this.ctx));
  }
}
