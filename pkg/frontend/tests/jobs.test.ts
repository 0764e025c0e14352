/**
 * Job console: forms, polling, refusal banners, expiry, reproducibility.
 */

import { describe, expect, it } from "vitest";

import { fx } from "./helpers/fixtures";
import { bootApp, signIn, type Harness } from "./helpers/harness";

async function buyPair(harness: Harness, kind: string): Promise<void> {
  await harness.go("#/catalog");
  const form = harness.root.querySelector<HTMLFormElement>(".search-form");
  form?.dispatchEvent(new Event("submit"));
  await harness.settle();
  harness.root
    .querySelector<HTMLButtonElement>(`.hit-card[data-did="${fx.assetDetail.ddo.did}"]`)
    ?.click();
  await harness.settle();
  const select = harness.root.querySelector<HTMLSelectElement>(".algo-select");
  const consent = harness.root.querySelector<HTMLInputElement>(".consent-box");
  const buy = harness.root.querySelector<HTMLButtonElement>(".buy-button");
  if (!select || !consent || !buy) throw new Error("drawer incomplete");
  const did = fx.governance.algorithm_assets[kind];
  if (!did) throw new Error(`no asset for ${kind}`);
  select.value = did;
  consent.checked = true;
  consent.dispatchEvent(new Event("change"));
  buy.click();
  await harness.settle();
}

function submitForm(harness: Harness, kind: string): void {
  const form = harness.root.querySelector<HTMLFormElement>(`.param-form[data-algorithm="${kind}"]`);
  if (!form) throw new Error(`no form for ${kind}`);
  form.dispatchEvent(new Event("submit"));
}

async function waitFor(check: () => boolean, what: string, timeoutMs = 4000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    if (check()) return;
    await new Promise((resolve) => setTimeout(resolve, 1));
  }
  throw new Error(`timed out waiting for ${what}`);
}

function bannerText(harness: Harness): string {
  return Array.from(harness.root.querySelectorAll(".banner-text"))
    .map((node) => node.textContent ?? "")
    .join(" | ");
}

describe("job console", () => {
  it("shows parameter forms with inline explanations per algorithm", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "topics");
    await harness.go("#/jobs");

    const form = harness.root.querySelector(`.param-form[data-algorithm="topics"]`);
    expect(form).toBeTruthy();
    expect(form?.querySelector(".seed-input")).toBeTruthy();
    expect(form?.querySelector(".n-topics-input")).toBeTruthy();
    expect(form?.querySelector(".iters-input")).toBeTruthy();
    const helps = Array.from(form?.querySelectorAll(".param-help") ?? []);
    expect(helps.length).toBeGreaterThanOrEqual(3);
    for (const help of helps) {
      expect((help.textContent ?? "").length).toBeGreaterThan(10);
    }
  });

  it("advances the status chip from running to succeeded while polling", async () => {
    const harness = await bootApp();
    harness.server.pollsBeforeDone = 4; // keep the running window observable
    await signIn(harness);
    await buyPair(harness, "eda");
    await harness.go("#/jobs");
    submitForm(harness, "eda");

    await waitFor(
      () => harness.root.querySelector('.job-card[data-state="Running"]') !== null,
      "running chip",
    );
    const runningChip = harness.root.querySelector('.job-card[data-state="Running"] .status-chip');
    expect(runningChip?.querySelector('[data-step="Running"]')?.classList.contains("reached")).toBe(
      true,
    );
    expect(
      runningChip?.querySelector('[data-step="Succeeded"]')?.classList.contains("reached"),
    ).toBe(false);

    await waitFor(
      () => harness.root.querySelector('.job-card[data-state="Succeeded"]') !== null,
      "succeeded chip",
    );
    const doneChip = harness.root.querySelector('.job-card[data-state="Succeeded"] .status-chip');
    expect(doneChip?.querySelector('[data-step="Succeeded"]')?.classList.contains("reached")).toBe(
      true,
    );
  });

  it("offers dashboard, re-run and try-another actions after success", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "eda");
    await harness.go("#/jobs");
    submitForm(harness, "eda");
    await waitFor(
      () => harness.root.querySelector('.job-card[data-state="Succeeded"]') !== null,
      "job completion",
    );

    const card = harness.root.querySelector('.job-card[data-state="Succeeded"]');
    const dashboard = card?.querySelector<HTMLAnchorElement>(".open-dashboard");
    expect(dashboard?.getAttribute("href")).toMatch(/^#\/dashboard\/did:cliox:job:/);
    expect(card?.querySelector(".rerun-button")).toBeTruthy();
    expect(card?.querySelector<HTMLAnchorElement>(".try-another")?.getAttribute("href")).toBe(
      "#/catalog",
    );
  });

  it("announces an identical fingerprint when a re-run repeats the seed", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "eda");
    await harness.go("#/jobs");
    submitForm(harness, "eda");
    await waitFor(
      () => harness.app.ctx.store.state.jobs.filter((j) => j.state === "Succeeded").length === 1,
      "first run",
    );

    harness.root.querySelector<HTMLButtonElement>(".rerun-button")?.click();
    await waitFor(
      () => harness.app.ctx.store.state.jobs.filter((j) => j.state === "Succeeded").length === 2,
      "second run",
    );
    await harness.settle();

    const [first, second] = harness.app.ctx.store.state.jobs;
    expect(first?.resultDigest).toBeTruthy();
    expect(first?.resultDigest).toBe(second?.resultDigest);
    expect(bannerText(harness)).toContain("identical");
  });

  it("sends the edited parameters with the submission", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "clustering");
    await harness.go("#/jobs");

    const form = harness.root.querySelector<HTMLFormElement>(
      '.param-form[data-algorithm="clustering"]',
    );
    const k = form?.querySelector<HTMLInputElement>(".k-input");
    const seed = form?.querySelector<HTMLInputElement>(".seed-input");
    if (!form || !k || !seed) throw new Error("clustering form incomplete");
    k.value = "6";
    seed.value = "99";
    form.dispatchEvent(new Event("submit"));
    await waitFor(
      () => harness.app.ctx.store.state.jobs.some((j) => j.state === "Succeeded"),
      "clustering run",
    );

    const submit = harness.server.requests.find(
      (r) => r.method === "POST" && r.path === "/jobs",
    );
    expect(submit?.body).toMatchObject({ params: { k: 6, seed: 99 } });
  });

  it("renders a server refusal as a banner quoting the code verbatim", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "eda");
    harness.server.expireGrants();
    await harness.go("#/jobs");
    submitForm(harness, "eda");
    await waitFor(() => bannerText(harness).includes("GrantExpired"), "refusal banner");

    const text = bannerText(harness);
    expect(text).toContain("(GrantExpired)");
    expect(text).toContain("expired");
    // the refusal never minted a job card
    expect(harness.root.querySelectorAll(".job-card").length).toBe(0);
  });

  it("disables the form and says why once the grant lapses", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "eda");

    harness.clock.now += 25 * 3600;
    await harness.go("#/jobs");

    const card = harness.root.querySelector('.grant-card[data-expired="true"]');
    expect(card).toBeTruthy();
    expect(card?.querySelector(".expired-note")?.textContent).toContain("has ended");
    expect(card?.querySelector<HTMLButtonElement>(".run-button")?.disabled).toBe(true);
    expect(card?.querySelector<HTMLInputElement>(".seed-input")?.disabled).toBe(true);
    expect(card?.querySelector(".grant-countdown")?.textContent).toContain("expired");
  });

  it("shows a live countdown derived from the server expiry", async () => {
    const harness = await bootApp();
    await signIn(harness);
    await buyPair(harness, "eda");
    await harness.go("#/jobs");

    const countdown = harness.root.querySelector(".grant-countdown")?.textContent ?? "";
    expect(countdown).toContain("24h 0m left"); // pinned clock, rendered at purchase time
    const grant = harness.app.ctx.store.state.grants[0];
    expect(grant?.expiresAt).toBe(harness.clock.now + 24 * 3600);
  });
});
