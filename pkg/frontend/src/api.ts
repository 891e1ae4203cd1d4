// Typed client for the strip triangulation session service.

export interface FamilyJson {
  kind: string;
  [key: string]: unknown;
}

export interface DescJson {
  arcs: string[];
  families: FamilyJson[];
  window: [number, number];
}

export interface FountainJson {
  base: string;
  kind: "left" | "right" | "full";
}

export interface StatusJson {
  certified: boolean;
  compact?: boolean;
  fountains?: FountainJson[];
  components?: number;
  compact_witness?: string;
}

export interface QuiverVertex {
  arc: string;
  interior: boolean;
}

export interface QuiverJson {
  vertices: QuiverVertex[];
  arrows: [string, string][];
}

export interface SessionState {
  id: string;
  desc: DescJson;
  status: StatusJson;
  history: { removed: string; added: string }[];
}

export interface WindowResponse {
  arcs: string[];
  quiver: QuiverJson | null;
  svg: string;
}

export interface FlipResponse {
  removed: string;
  added: string;
  quiver_delta: { window: [number, number]; quiver: QuiverJson | null };
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function unwrap<T>(res: Response): Promise<T> {
  const body = (await res.json()) as Record<string, unknown>;
  if (!res.ok) {
    throw new ApiError(
      res.status,
      String(body.error ?? "unknown"),
      String(body.message ?? res.statusText),
    );
  }
  return body as T;
}

export class StripApi {
  constructor(private base: string) {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  async createSession(desc: DescJson): Promise<string> {
    const res = await fetch(this.url("/sessions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(desc),
    });
    const body = await unwrap<{ id: string }>(res);
    return body.id;
  }

  async getState(id: string): Promise<SessionState> {
    return unwrap(await fetch(this.url(`/sessions/${id}`)));
  }

  async getWindow(id: string, lo: number, hi: number): Promise<WindowResponse> {
    return unwrap(await fetch(this.url(`/sessions/${id}/window?lo=${lo}&hi=${hi}`)));
  }

  async flip(id: string, arc: string): Promise<FlipResponse> {
    const res = await fetch(this.url(`/sessions/${id}/flip`), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ arc }),
    });
    return unwrap(res);
  }

  async undo(id: string): Promise<{ removed: string; added: string }> {
    return unwrap(await fetch(this.url(`/sessions/${id}/undo`), { method: "POST" }));
  }

  async hom(id: string, from: string, to: string): Promise<number> {
    const res = await fetch(
      this.url(`/sessions/${id}/hom?from=${encodeURIComponent(from)}&to=${encodeURIComponent(to)}`),
    );
    const body = await unwrap<{ dim: number }>(res);
    return body.dim;
  }

  async ext(id: string, from: string, to: string): Promise<number> {
    const res = await fetch(
      this.url(`/sessions/${id}/ext?from=${encodeURIComponent(from)}&to=${encodeURIComponent(to)}`),
    );
    const body = await unwrap<{ dim: number }>(res);
    return body.dim;
  }
}

/** Canonical text form matching the server's encoding: recursively sorted
 * keys, compact separators, trailing newline. */
export function canonicalJson(value: unknown): string {
  return `${stringifySorted(value)}\n`;
}

function stringifySorted(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return `[${value.map(stringifySorted).join(",")}]`;
  }
  const obj = value as Record<string, unknown>;
  const keys = Object.keys(obj).sort();
  const parts = keys.map((k) => `${JSON.stringify(k)}:${stringifySorted(obj[k])}`);
  return `{${parts.join(",")}}`;
}
