/** Builds a booted app over a FakeServer inside the test DOM. */

import { PortalClient } from "../../src/api";
import { PortalApp } from "../../src/app";
import type { PortalConfig } from "../../src/types";
import { FakeServer } from "./fakeServer";

export const TEST_CONFIG: PortalConfig = {
  api_base_url: "http://node.test",
  node_name: "Clio-X Test Node",
};

export interface Harness {
  server: FakeServer;
  app: PortalApp;
  root: HTMLElement;
  /** Mutable test clock, epoch seconds. */
  clock: { now: number };
  go(hash: string): Promise<void>;
  settle(): Promise<void>;
}

export async function bootApp(options: { governanceDown?: boolean } = {}): Promise<Harness> {
  window.location.hash = "";
  document.body.innerHTML = "";
  const root = document.createElement("div");
  document.body.append(root);

  const clock = { now: 1_771_200_000 };
  const server = new FakeServer(() => clock.now);
  if (options.governanceDown) server.dropGovernance();
  const client = new PortalClient(server.base, server.fetch);
  const app = new PortalApp(root, client, TEST_CONFIG, {
    now: () => clock.now,
    pollDelayMs: 1,
  });
  await app.start();

  const settleFn = async () => {
    // let queued hashchange tasks and poll timers run, then await the render
    await new Promise((resolve) => setTimeout(resolve, 0));
    await app.routeSettled;
    await new Promise((resolve) => setTimeout(resolve, 0));
    await app.routeSettled;
  };
  return {
    server,
    app,
    root,
    clock,
    go: async (hash: string) => {
      app.ctx.navigate(hash);
      await settleFn();
    },
    settle: settleFn,
  };
}

/** Sign in and fund the account; most journeys start here. */
export async function signIn(harness: Harness): Promise<void> {
  const join = harness.root.querySelector<HTMLButtonElement>(".join-button");
  if (!join) throw new Error("join button missing");
  join.click();
  await harness.settle();
  const summary = harness.root.querySelector(".balance-summary");
  if (!summary) throw new Error("sign-in did not produce the balance widget");
  const topUp = harness.root.querySelector<HTMLButtonElement>(".faucet-button");
  if (!topUp) throw new Error("faucet button missing");
  topUp.click();
  await harness.settle();
}
