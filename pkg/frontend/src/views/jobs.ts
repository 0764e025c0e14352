/**
 * Job console: run computations against purchased access.
 *
 * Each live grant renders its own parameter form; expired grants keep
 * their card but the form is disabled and says why.  Submitted jobs are
 * polled with back-off until a terminal state, the status chip advancing
 * as the server reports progress.  Refusals surface as banners wording
 * the server's code for people while still quoting it verbatim.
 */

import { ApiError } from "../api";
import type { AppContext } from "../context";
import { formatCountdown, h } from "../dom";
import { FIELD_TOOLTIPS, MICROCOPY, reasonText } from "../explanations";
import type { GrantInfo, JobInfo } from "../state";
import type { JobState } from "../types";

const PARAM_FIELDS: Record<string, { name: string; label: string; tooltip: string; value: number }[]> = {
  eda: [],
  sentiment: [],
  comm_graph: [],
  clustering: [{ name: "k", label: "Groups", tooltip: FIELD_TOOLTIPS.param_k, value: 4 }],
  topics: [
    { name: "n_topics", label: "Themes", tooltip: FIELD_TOOLTIPS.param_n_topics, value: 3 },
    { name: "iters", label: "Passes", tooltip: FIELD_TOOLTIPS.param_iters, value: 40 },
  ],
};

const CHIP_ORDER: JobState[] = ["Submitted", "Authorized", "Running", "Succeeded"];

function algorithmKey(ctx: AppContext, algorithmDid: string): string {
  const assets = ctx.governance?.algorithm_assets ?? {};
  for (const [key, did] of Object.entries(assets)) {
    if (did === algorithmDid) return key;
  }
  return "unknown";
}

async function pollUntilDone(ctx: AppContext, jobDid: string): Promise<void> {
  let delay = ctx.pollDelayMs;
  let lastSeq = 0;
  for (;;) {
    await new Promise((resolve) => setTimeout(resolve, delay));
    delay = Math.min(delay * 2, ctx.pollDelayMs * 16); // back off, stay bounded
    try {
      const events = await ctx.client.events(lastSeq);
      for (const event of events.events) {
        lastSeq = Math.max(lastSeq, event.seq);
        if (event.job_did === jobDid) {
          ctx.store.updateJob(jobDid, event.state, event.reason, null);
        }
      }
      const status = await ctx.client.jobStatus(jobDid);
      ctx.store.updateJob(jobDid, status.state, status.reason, status.result_digest);
      if (status.state === "Succeeded" || status.state === "Failed" || status.state === "Rejected") {
        return;
      }
    } catch (exc) {
      ctx.banner("error", exc instanceof ApiError ? exc.message : String(exc));
      return;
    } finally {
      ctx.refresh();
    }
  }
}

function digestTwin(ctx: AppContext, finished: JobInfo): JobInfo | undefined {
  return ctx.store.state.jobs.find(
    (other) =>
      other.jobDid !== finished.jobDid &&
      other.datasetDid === finished.datasetDid &&
      other.algorithmDid === finished.algorithmDid &&
      other.resultDigest !== null &&
      JSON.stringify(other.params) === JSON.stringify(finished.params),
  );
}

export async function submitAndTrack(
  ctx: AppContext,
  datasetDid: string,
  algorithmDid: string,
  params: Record<string, number>,
): Promise<void> {
  try {
    const submitted = await ctx.client.submitJob(datasetDid, algorithmDid, params);
    ctx.store.addJob({
      jobDid: submitted.job_did,
      datasetDid,
      algorithmDid,
      algorithmKey: algorithmKey(ctx, algorithmDid),
      params,
      state: submitted.state,
      reason: null,
      resultDigest: null,
    });
    ctx.refresh();
    await pollUntilDone(ctx, submitted.job_did);
    const job = ctx.store.getJob(submitted.job_did);
    if (!job) return;
    if (job.state === "Succeeded") {
      const twin = digestTwin(ctx, job);
      if (twin && twin.resultDigest === job.resultDigest) {
        ctx.banner(
          "success",
          "Re-run confirmed: the result fingerprint is identical to the earlier " +
            "run with the same seed.",
        );
      } else {
        ctx.banner("success", "Computation finished. The dashboard is ready.");
      }
    } else if (job.state === "Failed") {
      ctx.banner("error", `${reasonText(job.reason)} (${job.reason ?? "Failed"})`);
    }
  } catch (exc) {
    if (exc instanceof ApiError) {
      // 403 rejections carry the machine code; quote it for the record.
      ctx.banner("error", `${reasonText(exc.code)} (${exc.code})`);
    } else {
      ctx.banner("error", String(exc));
    }
    ctx.refresh();
  }
}

function paramForm(ctx: AppContext, grant: GrantInfo, expired: boolean): HTMLElement {
  const key = algorithmKey(ctx, grant.algorithmDid);
  const fields = PARAM_FIELDS[key] ?? [];
  const inputs: [string, HTMLInputElement][] = [];

  const seedInput = h("input", {
    type: "number",
    class: "seed-input",
    name: "seed",
    value: 11,
    disabled: expired,
  }) as HTMLInputElement;

  const rows = [
    h(
      "label",
      { class: "param-row", title: FIELD_TOOLTIPS.seed },
      "Seed ",
      seedInput,
      h("small", { class: "param-help" }, "Fixes the algorithm's random choices; keep it to reproduce."),
    ),
  ];
  for (const field of fields) {
    const input = h("input", {
      type: "number",
      class: `${field.name.replace("_", "-")}-input`,
      name: field.name,
      value: field.value,
      disabled: expired,
    }) as HTMLInputElement;
    inputs.push([field.name, input]);
    rows.push(
      h(
        "label",
        { class: "param-row", title: field.tooltip },
        `${field.label} `,
        input,
        h("small", { class: "param-help" }, field.tooltip),
      ),
    );
  }

  let running = false;
  const runButton = h(
    "button",
    { type: "submit", class: "run-button", disabled: expired },
    `Run ${key}`,
  ) as HTMLButtonElement;

  const form = h(
    "form",
    {
      class: "param-form",
      "data-algorithm": key,
      onsubmit: (event: Event) => {
        event.preventDefault();
        if (running || expired) return;
        running = true;
        runButton.disabled = true;
        const params: Record<string, number> = { seed: Number(seedInput.value) };
        for (const [name, input] of inputs) params[name] = Number(input.value);
        void submitAndTrack(ctx, grant.datasetDid, grant.algorithmDid, params).finally(() => {
          running = false;
          ctx.refresh();
        });
      },
    },
    ...rows,
    runButton,
  );
  return form;
}

function grantCard(ctx: AppContext, grant: GrantInfo): HTMLElement {
  const expired = ctx.now() >= grant.expiresAt;
  const key = algorithmKey(ctx, grant.algorithmDid);
  return h(
    "article",
    { class: "grant-card", "data-grant": grant.grantId, "data-expired": String(expired) },
    h("h3", {}, `${key} on ${grant.datasetDid.slice(0, 22)}…`),
    h(
      "p",
      { class: "grant-countdown" },
      expired ? "Access expired" : `Access ${formatCountdown(grant.expiresAt, ctx.now())}`,
    ),
    expired ? h("p", { class: "expired-note" }, MICROCOPY.expired_form) : null,
    paramForm(ctx, grant, expired),
  );
}

function statusChip(state: JobState, reason: string | null): HTMLElement {
  const steps = CHIP_ORDER.map((step) => {
    const reached =
      CHIP_ORDER.indexOf(step) <= CHIP_ORDER.indexOf(state === "Failed" || state === "Rejected" ? "Running" : state);
    return h(
      "span",
      { class: `chip-step${reached && state !== "Rejected" ? " reached" : ""}`, "data-step": step },
      step,
    );
  });
  const chip = h("span", { class: "status-chip", "data-state": state }, ...steps);
  if (state === "Failed" || state === "Rejected") {
    chip.append(h("span", { class: "chip-step terminal-bad", "data-step": state }, `${state}${reason ? `: ${reason}` : ""}`));
  }
  return chip;
}

function jobCard(ctx: AppContext, job: JobInfo): HTMLElement {
  const done = job.state === "Succeeded";
  const grant = ctx.store.liveGrant(job.datasetDid, job.algorithmDid, ctx.now());
  return h(
    "article",
    { class: "job-card", "data-job": job.jobDid, "data-state": job.state },
    h("h3", {}, `${job.algorithmKey} · seed ${String(job.params["seed"] ?? "?")}`),
    statusChip(job.state, job.reason),
    job.reason && !done
      ? h("p", { class: "job-reason" }, `${reasonText(job.reason)} (${job.reason})`)
      : null,
    done
      ? h(
          "p",
          { class: "job-actions" },
          h("a", { class: "open-dashboard", href: `#/dashboard/${job.jobDid}` }, "Open dashboard"),
          " · ",
          h(
            "button",
            {
              class: "rerun-button",
              onclick: () => {
                if (!grant) {
                  ctx.banner("error", MICROCOPY.expired_form);
                  return;
                }
                void submitAndTrack(
                  ctx,
                  job.datasetDid,
                  job.algorithmDid,
                  job.params as Record<string, number>,
                );
              },
            },
            "Re-run",
          ),
          " · ",
          h("a", { class: "try-another", href: "#/catalog" }, "Try another algorithm"),
        )
      : null,
  );
}

export function renderJobs(ctx: AppContext): HTMLElement {
  const { grants, jobs } = ctx.store.state;
  return h(
    "section",
    { class: "jobs-view" },
    h("h2", {}, "Computations"),
    grants.length
      ? h("div", { class: "grant-list" }, ...grants.map((grant) => grantCard(ctx, grant)))
      : h(
          "p",
          { class: "empty-state" },
          "No access yet. Buy access to a collection in the catalog first.",
        ),
    jobs.length ? h("h2", {}, "Runs") : null,
    jobs.length
      ? h("div", { class: "job-list" }, ...jobs.slice().reverse().map((job) => jobCard(ctx, job)))
      : null,
  );
}
