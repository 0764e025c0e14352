/** Shared plumbing handed to every view. */

import type { PortalClient } from "./api";
import type { Store } from "./state";
import type { GovernanceDoc, PortalConfig } from "./types";

export interface AppContext {
  client: PortalClient;
  store: Store;
  config: PortalConfig;
  /** Cached governance document; loaded once at boot, null if unavailable. */
  governance: GovernanceDoc | null;
  /** Current time in epoch seconds; injectable so tests can pin the clock. */
  now(): number;
  /** Base polling delay in ms; tests shrink this to keep suites fast. */
  pollDelayMs: number;
  navigate(hash: string): void;
  /** Show a dismissible banner; kind steers the styling only. */
  banner(kind: "info" | "error" | "success", text: string): void;
  /** Re-render the active route. */
  refresh(): void;
}
