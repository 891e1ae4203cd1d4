// DOM shell: strip panel with clickable arcs, quiver panel, status badges.

import { QuiverJson } from "./api.js";
import { ExplorerController, HomBadges, ViewData, statusBadges } from "./state.js";

export interface Panels {
  strip: HTMLElement;
  quiver: HTMLElement;
  badges: HTMLElement;
  history: HTMLElement;
  error: HTMLElement;
  probe: HTMLElement;
}

export function mountExplorer(root: HTMLElement, controller: ExplorerController): Panels {
  root.innerHTML = `
    <div class="toolbar">
      <button data-act="pan-left">&larr; pan</button>
      <button data-act="pan-right">pan &rarr;</button>
      <button data-act="undo">undo</button>
      <span class="badges"></span>
      <span class="error"></span>
    </div>
    <div class="strip"></div>
    <div class="probe"></div>
    <div class="quiver"></div>
    <ol class="history"></ol>`;
  const panels: Panels = {
    strip: root.querySelector(".strip") as HTMLElement,
    quiver: root.querySelector(".quiver") as HTMLElement,
    badges: root.querySelector(".badges") as HTMLElement,
    history: root.querySelector(".history") as HTMLElement,
    error: root.querySelector(".error") as HTMLElement,
    probe: root.querySelector(".probe") as HTMLElement,
  };
  root.querySelector('[data-act="pan-left"]')?.addEventListener("click", () => {
    void controller.pan(-2).then((d) => render(panels, controller, d));
  });
  root.querySelector('[data-act="pan-right"]')?.addEventListener("click", () => {
    void controller.pan(2).then((d) => render(panels, controller, d));
  });
  root.querySelector('[data-act="undo"]')?.addEventListener("click", () => {
    void controller.undo().then((d) => render(panels, controller, d));
  });
  return panels;
}

export function render(panels: Panels, controller: ExplorerController, data: ViewData): void {
  panels.strip.innerHTML = data.window.svg;
  panels.badges.textContent = statusBadges(data.status).join(" | ");
  panels.error.textContent = data.lastError ?? "";
  panels.history.innerHTML = "";
  renderQuiver(panels.quiver, data.window.quiver);
  attachArcHandlers(panels, controller);
}

function attachArcHandlers(panels: Panels, controller: ExplorerController): void {
  panels.strip.querySelectorAll("path").forEach((path) => {
    const arc = path.querySelector("title")?.textContent;
    if (!arc) {
      return;
    }
    path.addEventListener("click", (ev: Event) => {
      const mouse = ev as MouseEvent;
      if (mouse.shiftKey) {
        controller.select(arc);
        void controller.probeHom().then((b) => renderProbe(panels.probe, arc, b));
        return;
      }
      void controller.clickFlip(arc).then((d) => render(panels, controller, d));
    });
  });
}

function renderProbe(el: HTMLElement, arc: string, badges: HomBadges | null): void {
  el.textContent = badges
    ? `hom ${badges.hom} / hom-reverse ${badges.homReverse} / ext ${badges.ext}`
    : `selected ${arc}; shift-click a second arc to probe`;
}

function renderQuiver(el: HTMLElement, quiver: QuiverJson | null): void {
  if (!quiver) {
    el.textContent = "no quiver (triangulation not compact)";
    return;
  }
  const rows = quiver.arrows.map(([a, b]) => `<li>${a} → ${b}</li>`).join("");
  const verts = quiver.vertices
    .map((v) => `<span class="${v.interior ? "int" : "frontier"}">${v.arc}</span>`)
    .join(" ");
  el.innerHTML = `<div class="verts">${verts}</div><ul class="arrows">${rows}</ul>`;
}
