/**
 * App shell: branding, navigation, the balance widget and banners.
 *
 * Money stays tucked behind a fold-out widget; the only wallet actions a
 * researcher ever needs are reading the balance and topping it up.
 */

import { ApiError } from "../api";
import type { AppContext } from "../context";
import { formatCents, h } from "../dom";
import { MICROCOPY, reasonText } from "../explanations";

export function renderBanner(area: HTMLElement, kind: string, text: string): void {
  const note = h(
    "div",
    { class: `banner banner-${kind}`, role: kind === "error" ? "alert" : "status" },
    h("span", { class: "banner-text" }, text),
  );
  note.append(
    h("button", { class: "banner-dismiss", onclick: () => note.remove() }, "Dismiss"),
  );
  area.prepend(note);
  while (area.children.length > 3) area.lastElementChild?.remove();
}

function sessionArea(ctx: AppContext): HTMLElement {
  const session = ctx.store.state.session;
  if (!session) {
    return h(
      "button",
      {
        class: "join-button",
        onclick: async () => {
          try {
            const identity = await ctx.client.createIdentity(["consumer"]);
            const session = await ctx.client.createSession(identity.did, identity.auth_token);
            ctx.client.setSessionToken(session.session_token);
            ctx.store.setSession(session);
            ctx.banner("success", "Researcher identity created. You are signed in.");
          } catch (exc) {
            ctx.banner("error", exc instanceof ApiError ? exc.message : String(exc));
          }
        },
      },
      "Join as researcher",
    );
  }

  const faucetButton = h(
    "button",
    {
      class: "faucet-button",
      onclick: async () => {
        try {
          const doc = await ctx.client.faucet(100000);
          ctx.store.setBalance(doc.balance);
        } catch (exc) {
          ctx.banner("error", exc instanceof ApiError ? reasonText(exc.code) || exc.message : String(exc));
        }
      },
    },
    "Top up",
  );

  return h(
    "details",
    { class: "balance-widget" },
    h("summary", { class: "balance-summary" }, formatCents(ctx.store.state.balance)),
    h(
      "div",
      { class: "balance-body" },
      h("p", { class: "wallet-hint" }, MICROCOPY.wallet_hint),
      h("p", { class: "session-did" }, `Signed in as ${session.did.slice(0, 26)}…`),
      faucetButton,
    ),
  );
}

export function renderChrome(ctx: AppContext, header: HTMLElement, activeHash: string): void {
  header.replaceChildren(
    h("span", { class: "brand" }, ctx.config.node_name),
    h(
      "nav",
      { class: "main-nav" },
      ...[
        ["#/catalog", "Catalog"],
        ["#/jobs", "Computations"],
        ["#/governance", "Governance"],
      ].map(([hash, label]) =>
        h(
          "a",
          { href: hash, class: activeHash.startsWith(hash ?? "") ? "nav-link active" : "nav-link" },
          label ?? "",
        ),
      ),
    ),
    sessionArea(ctx),
  );
}
