/**
 * Catalog: search the node's assets, inspect one, purchase access.
 *
 * Cards show only name, price and type; everything else waits until a
 * card is opened, and the drawer reveals description, license, governance
 * and provenance step by step.  The Buy button stays disabled until the
 * license is acknowledged whenever the collection demands it.
 */

import { ApiError } from "../api";
import type { AppContext } from "../context";
import { formatCents, formatCountdown, formatTimestamp, h } from "../dom";
import { FIELD_TOOLTIPS, MICROCOPY, reasonText } from "../explanations";
import type { AssetDetailDoc, SearchHit } from "../types";

function hitCard(ctx: AppContext, hit: SearchHit): HTMLElement {
  return h(
    "button",
    {
      class: "hit-card",
      "data-did": hit.did,
      onclick: async () => {
        try {
          const detail = await ctx.client.getAsset(hit.did);
          ctx.store.selectAsset(detail);
        } catch (exc) {
          ctx.banner("error", exc instanceof ApiError ? reasonText(exc.code) || exc.message : String(exc));
        }
      },
    },
    h("span", { class: "hit-name" }, hit.name),
    h(
      "span",
      { class: "hit-price", title: FIELD_TOOLTIPS.price },
      hit.price_per_access === 0 ? "included" : formatCents(hit.price_per_access),
    ),
    h("span", { class: "hit-type", title: FIELD_TOOLTIPS.asset_type }, hit.asset_type),
  );
}

function algorithmChoices(ctx: AppContext): [string, string][] {
  const assets = ctx.governance?.algorithm_assets ?? {};
  return Object.entries(assets).sort(([a], [b]) => (a < b ? -1 : 1));
}

function drawer(ctx: AppContext, detail: AssetDetailDoc): HTMLElement {
  const ddo = detail.ddo;
  const needsAck = ddo.requires_consent_ack;
  let consentChecked = false;
  let buying = false;

  const choices = algorithmChoices(ctx);
  const algoSelect = h(
    "select",
    { class: "algo-select" },
    ...choices.map(([key, did]) => h("option", { value: did }, key)),
  ) as HTMLSelectElement;

  const buyButton = h(
    "button",
    { class: "buy-button", disabled: needsAck },
    `Buy 24h access (${formatCents(ddo.price_per_access)})`,
  ) as HTMLButtonElement;

  const consentRow = needsAck
    ? h(
        "label",
        { class: "consent-row", title: FIELD_TOOLTIPS.consent },
        (() => {
          const box = h("input", { type: "checkbox", class: "consent-box" }) as HTMLInputElement;
          box.addEventListener("change", () => {
            consentChecked = box.checked;
            buyButton.disabled = !consentChecked || buying;
          });
          return box;
        })(),
        " I have read the license and accept its terms.",
      )
    : null;

  buyButton.addEventListener("click", async () => {
    if (buying) return; // a second click must not lock funds twice
    buying = true;
    buyButton.disabled = true;
    const algorithmDid = algoSelect.value;
    try {
      if (needsAck) await ctx.client.recordConsent(ddo.did);
      const order = await ctx.client.createOrder(ddo.did, algorithmDid, 24);
      ctx.store.setBalance(order.balance);
      ctx.store.addGrant({
        grantId: order.grant_id,
        orderId: order.order_id,
        datasetDid: ddo.did,
        algorithmDid,
        amountLocked: order.amount_locked,
        expiresAt: order.expires_at,
      });
      ctx.banner(
        "success",
        `Access purchased. ${formatCents(order.amount_locked)} held in escrow, ` +
          `${formatCountdown(order.expires_at, ctx.now())}.`,
      );
      ctx.navigate("#/jobs");
    } catch (exc) {
      const text =
        exc instanceof ApiError ? reasonText(exc.code) || exc.message : String(exc);
      ctx.banner("error", text);
      buying = false;
      buyButton.disabled = needsAck && !consentChecked;
    }
  });

  const governanceName = ctx.governance?.governance.operator_name ?? "operator unknown";
  const governanceModel = ctx.governance?.governance.model ?? "unpublished";

  return h(
    "aside",
    { class: "asset-drawer", "data-did": ddo.did },
    h(
      "button",
      { class: "drawer-close", onclick: () => ctx.store.selectAsset(null) },
      "Close",
    ),
    h("h2", {}, ddo.name),
    h("p", { class: "asset-description" }, ddo.description || "No description provided."),
    h(
      "dl",
      { class: "asset-facts" },
      h("dt", { title: FIELD_TOOLTIPS.asset_type }, "Type"),
      h("dd", {}, ddo.asset_type),
      h("dt", { title: FIELD_TOOLTIPS.price }, "Price"),
      h("dd", {}, formatCents(ddo.price_per_access)),
      h("dt", {}, "Published"),
      h("dd", {}, formatTimestamp(ddo.created_at)),
      h("dt", { title: FIELD_TOOLTIPS.governance_badge }, "Operated by"),
      h(
        "dd",
        { class: "governance-badge" },
        `${governanceName} (${governanceModel})`,
      ),
      h("dt", { title: FIELD_TOOLTIPS.audit_provenance }, "Provenance"),
      h(
        "dd",
        { class: "audit-provenance" },
        detail.registered_audit_index === null
          ? "not in the activity log"
          : `entry ${detail.registered_audit_index} of the ${MICROCOPY.audit_log}`,
      ),
    ),
    h(
      "details",
      { class: "license-fold" },
      h("summary", { title: FIELD_TOOLTIPS.license }, "License terms"),
      h("pre", { class: "license-text" }, ddo.license_text),
    ),
    ddo.retired
      ? h("p", { class: "retired-note" }, "This collection has been withdrawn from sale.")
      : h(
          "div",
          { class: "buy-area" },
          h("label", {}, "Computation to license: ", algoSelect),
          consentRow,
          buyButton,
        ),
  );
}

export function renderCatalog(ctx: AppContext): HTMLElement {
  const { state } = ctx.store;
  const queryInput = h("input", {
    class: "search-input",
    type: "search",
    placeholder: "Search collections and computations",
    value: state.query,
  }) as HTMLInputElement;

  const typeSelect = h(
    "select",
    { class: "type-select" },
    h("option", { value: "" }, "all types"),
    h("option", { value: "dataset" }, "collections"),
    h("option", { value: "algorithm" }, "computations"),
  ) as HTMLSelectElement;

  const run = async () => {
    try {
      const doc = await ctx.client.search(queryInput.value, typeSelect.value || undefined);
      ctx.store.setSearch(queryInput.value, doc.hits);
    } catch (exc) {
      ctx.banner("error", exc instanceof ApiError ? exc.message : String(exc));
    }
  };

  const form = h(
    "form",
    {
      class: "search-form",
      onsubmit: (event: Event) => {
        event.preventDefault();
        void run();
      },
    },
    queryInput,
    typeSelect,
    h("button", { type: "submit" }, "Search"),
  );

  let results: HTMLElement;
  if (!state.searched) {
    results = h("p", { class: "catalog-hint" }, "Search to browse what this node offers.");
  } else if (state.hits.length === 0) {
    results = h("p", { class: "empty-state" }, MICROCOPY.empty_catalog);
  } else {
    results = h("div", { class: "hit-list" }, ...state.hits.map((hit) => hitCard(ctx, hit)));
  }

  return h(
    "section",
    { class: "catalog-view" },
    h("h2", {}, "Catalog"),
    form,
    results,
    state.selected ? drawer(ctx, state.selected) : null,
  );
}
