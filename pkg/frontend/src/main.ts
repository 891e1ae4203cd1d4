// Bootstrap: create a session from a triangulation file chosen by the
// user (or the built-in staircase) and mount the explorer.

import { DescJson, StripApi } from "./api.js";
import { ExplorerController } from "./state.js";
import { mountExplorer, render } from "./ui.js";

const STAIRCASE: DescJson = {
  arcs: ["C(0,0)", "C(1,0)"],
  families: [{ kind: "periodic", seed: ["C(0,0)", "C(1,0)"], period: 1, dir: "both" }],
  window: [-1, 2],
};

export async function start(root: HTMLElement, base = ""): Promise<ExplorerController> {
  const api = new StripApi(base);
  const id = await api.createSession(STAIRCASE);
  const controller = new ExplorerController(api, id, -6, 6);
  const panels = mountExplorer(root, controller);
  const data = await controller.load();
  render(panels, controller, data);
  const input = document.createElement("input");
  input.type = "file";
  input.addEventListener("change", async () => {
    const file = input.files?.[0];
    if (!file) {
      return;
    }
    const desc = JSON.parse(await file.text()) as DescJson;
    const sid = await api.createSession(desc);
    const next = new ExplorerController(api, sid, -6, 6);
    const p = mountExplorer(root, next);
    render(p, next, await next.load());
  });
  root.prepend(input);
  return controller;
}

declare global {
  interface Window {
    stripExplorerStart: typeof start;
  }
}

if (typeof window !== "undefined") {
  window.stripExplorerStart = start;
}
