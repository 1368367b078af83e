// Browser bootstrap: reuse the session named in the URL so a reload
// reproduces the same scene, otherwise create a fresh one and put its id
// in the query string.

import { mountPlayground } from "./app.js";

declare global {
  interface Window {
    __ATOMXR_BASE__?: string;
  }
}

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) {
    throw new Error("missing #app element");
  }
  const params = new URLSearchParams(location.search);
  const playground = await mountPlayground(root, {
    base: window.__ATOMXR_BASE__ ?? "",
    sessionId: params.get("session") ?? undefined,
  });
  if (!params.get("session")) {
    params.set("session", playground.state.sessionId);
    history.replaceState(null, "", `?${params.toString()}`);
  }
}

void boot();
