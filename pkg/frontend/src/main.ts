/** Boot: read the static config, build the client, start the app. */

import { PortalClient } from "./api";
import { PortalApp } from "./app";
import type { PortalConfig } from "./types";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app mount point");
  const resp = await fetch("config.json");
  if (!resp.ok) {
    root.textContent = "The portal configuration could not be loaded.";
    return;
  }
  const config = (await resp.json()) as PortalConfig;
  document.title = config.node_name;
  const client = new PortalClient(config.api_base_url);
  const app = new PortalApp(root, client, config);
  await app.start();
}

void boot();
