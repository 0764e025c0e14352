/**
 * Governance page: who runs the node, and proof the log still holds.
 *
 * The audit badge is live: rendering fires a fresh verification request,
 * and the badge flips red naming the first broken entry if the persisted
 * chain no longer checks out.  A node without a published governance
 * record gets a visible warning, not a blank page.
 */

import type { AppContext } from "../context";
import { h } from "../dom";
import { MICROCOPY } from "../explanations";

export function renderGovernance(ctx: AppContext): HTMLElement {
  const section = h("section", { class: "governance-view" }, h("h2", {}, "Governance"));

  const doc = ctx.governance;
  if (!doc) {
    section.append(
      h(
        "div",
        { class: "governance-warning", role: "alert" },
        "This node has not published a governance record. You cannot see who " +
          "operates it or under which rules; treat its assets accordingly.",
      ),
    );
    return section;
  }

  const gov = doc.governance;
  section.append(
    h("p", { class: "operator-name" }, gov.operator_name),
    h("p", { class: "governance-model" }, `Operated as a ${gov.model.replace("_", " ")} node.`),
    h(
      "ul",
      { class: "member-list" },
      ...gov.members.map((member) =>
        h(
          "li",
          { class: "member" },
          member.affiliation_url
            ? h("a", { href: member.affiliation_url, rel: "noopener" }, member.name)
            : member.name,
        ),
      ),
    ),
    h("p", { class: "governance-contact" }, `Contact: ${gov.contact}`),
    h(
      "p",
      { class: "privacy-floors" },
      `Privacy floors: results never report groups smaller than ${doc.k_min} documents, ` +
        `and term lists stop at ${doc.max_terms_per_list} entries.`,
    ),
  );

  const badge = h(
    "div",
    { class: "audit-badge", "data-status": "checking" },
    `Checking the ${MICROCOPY.audit_log}…`,
  );
  section.append(h("h3", {}, "Activity log"), badge);

  void ctx.client
    .auditVerify()
    .then((report) => {
      badge.replaceChildren();
      if (report.valid) {
        badge.setAttribute("data-status", "verified");
        badge.classList.add("badge-ok");
        badge.append(
          `Verified: all ${report.total_entries} entries of the ${MICROCOPY.audit_log} check out.`,
        );
      } else {
        badge.setAttribute("data-status", "broken");
        badge.classList.add("badge-broken");
        badge.append(
          `Warning: the ${MICROCOPY.audit_log} fails verification at entry ` +
            `${report.first_bad_index}. Records from that point on cannot be trusted.`,
        );
      }
    })
    .catch(() => {
      badge.replaceChildren();
      badge.setAttribute("data-status", "unreachable");
      badge.classList.add("badge-broken");
      badge.append(`The ${MICROCOPY.audit_log} could not be checked.`);
    });

  return section;
}
