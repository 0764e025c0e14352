/**
 * Catalog behavior: progressive disclosure, consent gating, empty state.
 */

import { describe, expect, it } from "vitest";

import { fx } from "./helpers/fixtures";
import { bootApp, signIn, type Harness } from "./helpers/harness";

async function searchAll(harness: Harness): Promise<void> {
  const form = harness.root.querySelector<HTMLFormElement>(".search-form");
  if (!form) throw new Error("search form missing");
  form.dispatchEvent(new Event("submit"));
  await harness.settle();
}

async function openDataset(harness: Harness): Promise<void> {
  const card = harness.root.querySelector<HTMLButtonElement>(
    `.hit-card[data-did="${fx.assetDetail.ddo.did}"]`,
  );
  if (!card) throw new Error("dataset card missing");
  card.click();
  await harness.settle();
}

describe("catalog view", () => {
  it("lists hit cards with name, price and type only", async () => {
    const harness = await bootApp();
    await searchAll(harness);

    const cards = Array.from(harness.root.querySelectorAll(".hit-card"));
    expect(cards.length).toBe(fx.searchHits.hits.length);
    const datasetCard = cards.find(
      (c) => c.getAttribute("data-did") === fx.assetDetail.ddo.did,
    );
    expect(datasetCard?.querySelector(".hit-name")?.textContent).toBe(fx.assetDetail.ddo.name);
    expect(datasetCard?.querySelector(".hit-type")?.textContent).toBe("dataset");
    expect(datasetCard?.querySelector(".hit-price")?.textContent).toContain("200.00");
    // disclosure is progressive: no license or description on the card
    expect(datasetCard?.textContent).not.toContain(fx.assetDetail.ddo.license_text);
  });

  it("shows a helpful empty state when nothing matches", async () => {
    const harness = await bootApp();
    const input = harness.root.querySelector<HTMLInputElement>(".search-input");
    const form = harness.root.querySelector<HTMLFormElement>(".search-form");
    if (!input || !form) throw new Error("search form missing");
    input.value = "zzznothing";
    form.dispatchEvent(new Event("submit"));
    await harness.settle();

    const empty = harness.root.querySelector(".empty-state");
    expect(empty).toBeTruthy();
    expect(empty?.textContent).toContain("No collections match");
    expect(harness.root.querySelectorAll(".hit-card").length).toBe(0);
  });

  it("opens a drawer with description, license, governance and provenance", async () => {
    const harness = await bootApp();
    await searchAll(harness);
    await openDataset(harness);

    const drawer = harness.root.querySelector(".asset-drawer");
    expect(drawer).toBeTruthy();
    const ddo = fx.assetDetail.ddo;
    expect(drawer?.querySelector(".asset-description")?.textContent).toBe(ddo.description);
    expect(drawer?.querySelector(".license-text")?.textContent).toBe(ddo.license_text);
    expect(drawer?.querySelector(".governance-badge")?.textContent).toContain(
      fx.governance.governance.operator_name,
    );
    expect(drawer?.querySelector(".audit-provenance")?.textContent).toContain(
      `entry ${fx.assetDetail.registered_audit_index}`,
    );
    // every fact row explains itself on hover
    const tooltipped = drawer?.querySelectorAll("dt[title]") ?? [];
    expect(tooltipped.length).toBeGreaterThanOrEqual(3);
    for (const dt of Array.from(tooltipped)) {
      expect((dt.getAttribute("title") ?? "").length).toBeGreaterThan(10);
    }
  });

  it("keeps Buy disabled until the license is acknowledged", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await searchAll(harness);
    await openDataset(harness);

    expect(fx.assetDetail.ddo.requires_consent_ack).toBe(true);
    const buy = harness.root.querySelector<HTMLButtonElement>(".buy-button");
    const consent = harness.root.querySelector<HTMLInputElement>(".consent-box");
    if (!buy || !consent) throw new Error("buy area incomplete");
    expect(buy.disabled).toBe(true);

    consent.checked = true;
    consent.dispatchEvent(new Event("change"));
    expect(buy.disabled).toBe(false);

    consent.checked = false;
    consent.dispatchEvent(new Event("change"));
    expect(buy.disabled).toBe(true);
  });

  it("purchasing access records consent, locks the price and lists the grant", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await searchAll(harness);
    await openDataset(harness);

    const buy = harness.root.querySelector<HTMLButtonElement>(".buy-button");
    const consent = harness.root.querySelector<HTMLInputElement>(".consent-box");
    if (!buy || !consent) throw new Error("buy area incomplete");
    consent.checked = true;
    consent.dispatchEvent(new Event("change"));
    buy.click();
    await harness.settle();

    const consents = harness.server.requests.filter(
      (r) => r.method === "POST" && r.path === "/consents",
    );
    const orders = harness.server.requests.filter(
      (r) => r.method === "POST" && r.path === "/orders",
    );
    expect(consents.length).toBe(1);
    expect(orders.length).toBe(1);
    expect(harness.app.ctx.store.state.grants.length).toBe(1);
    // purchase moved the console into view with a live countdown
    expect(harness.root.querySelector(".grant-card")?.textContent).toContain("Access");
    expect(harness.app.ctx.store.state.balance).toBe(
      100000 - fx.assetDetail.ddo.price_per_access,
    );
  });

  it("filters by asset type through the documented query parameter", async () => {
    const harness = await bootApp();
    const select = harness.root.querySelector<HTMLSelectElement>(".type-select");
    const form = harness.root.querySelector<HTMLFormElement>(".search-form");
    if (!select || !form) throw new Error("search form missing");
    select.value = "algorithm";
    form.dispatchEvent(new Event("submit"));
    await harness.settle();

    const cards = Array.from(harness.root.querySelectorAll(".hit-card"));
    expect(cards.length).toBe(
      fx.searchHits.hits.filter((h) => h.asset_type === "algorithm").length,
    );
    for (const card of cards) {
      expect(card.querySelector(".hit-type")?.textContent).toBe("algorithm");
    }
  });
});
