// View-state controller: all interaction goes through here, and every
// mutation reaches the server only via the flip/undo endpoints.

import {
  ApiError,
  FlipResponse,
  StripApi,
  StatusJson,
  WindowResponse,
} from "./api.js";

export const MAX_VIEWPORT_WIDTH = 80;

export interface ViewState {
  sessionId: string;
  lo: number;
  hi: number;
  selection: string[]; // up to two arcs, members of the window response
  historyLength: number;
}

export interface ViewData {
  view: ViewState;
  window: WindowResponse;
  status: StatusJson;
  lastError: string | null;
}

export interface HomBadges {
  hom: number;
  homReverse: number;
  ext: number;
}

export class ExplorerController {
  private view: ViewState;
  private data: ViewData | null = null;

  constructor(
    private api: StripApi,
    sessionId: string,
    lo = -6,
    hi = 6,
  ) {
    this.view = { sessionId, lo, hi, selection: [], historyLength: 0 };
    clampViewport(this.view);
  }

  current(): ViewData {
    if (!this.data) {
      throw new Error("viewport not loaded yet");
    }
    return this.data;
  }

  async load(): Promise<ViewData> {
    const state = await this.api.getState(this.view.sessionId);
    const win = await this.api.getWindow(this.view.sessionId, this.view.lo, this.view.hi);
    this.view.historyLength = state.history.length;
    this.view.selection = this.view.selection.filter((a) => win.arcs.includes(a));
    this.data = { view: this.view, window: win, status: state.status, lastError: null };
    return this.data;
  }

  async pan(delta: number): Promise<ViewData> {
    this.view.lo += delta;
    this.view.hi += delta;
    return this.load();
  }

  async zoom(delta: number): Promise<ViewData> {
    this.view.lo -= delta;
    this.view.hi += delta;
    clampViewport(this.view);
    return this.load();
  }

  /** Click-to-flip: 409s surface as an inline message, not an exception. */
  async clickFlip(arc: string): Promise<ViewData> {
    try {
      const res: FlipResponse = await this.api.flip(this.view.sessionId, arc);
      this.view.selection = this.view.selection.map((a) => (a === res.removed ? res.added : a));
      const out = await this.load();
      out.lastError = null;
      return out;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        const out = await this.load();
        out.lastError =
          err.code === "no_quadrilateral" ? "arc has no flip here" : err.message;
        return out;
      }
      throw err;
    }
  }

  async undo(): Promise<ViewData> {
    try {
      await this.api.undo(this.view.sessionId);
    } catch (err) {
      if (!(err instanceof ApiError && err.status === 409)) {
        throw err;
      }
    }
    return this.load();
  }

  /** Toggle an arc in the two-slot selection. */
  select(arc: string): string[] {
    const win = this.data?.window;
    if (!win || !win.arcs.includes(arc)) {
      throw new Error(`${arc} is not in the current window`);
    }
    const sel = this.view.selection;
    if (sel.includes(arc)) {
      this.view.selection = sel.filter((a) => a !== arc);
    } else {
      this.view.selection = [...sel, arc].slice(-2);
    }
    return this.view.selection;
  }

  async probeHom(): Promise<HomBadges | null> {
    const [a, b] = this.view.selection;
    if (!a || !b) {
      return null;
    }
    const sid = this.view.sessionId;
    const [hom, homReverse, ext] = await Promise.all([
      this.api.hom(sid, a, b),
      this.api.hom(sid, b, a),
      this.api.ext(sid, a, b),
    ]);
    return { hom, homReverse, ext };
  }
}

export function clampViewport(view: ViewState): void {
  if (view.hi < view.lo) {
    [view.lo, view.hi] = [view.hi, view.lo];
  }
  const width = view.hi - view.lo;
  if (width > MAX_VIEWPORT_WIDTH) {
    view.hi = view.lo + MAX_VIEWPORT_WIDTH;
  }
}

export function statusBadges(status: StatusJson): string[] {
  const badges: string[] = [];
  badges.push(status.compact ? "compact" : "not compact");
  if (status.components !== undefined) {
    badges.push(`${status.components} component${status.components === 1 ? "" : "s"}`);
  }
  for (const f of status.fountains ?? []) {
    badges.push(`${f.kind} fountain at ${f.base}`);
  }
  return badges;
}
