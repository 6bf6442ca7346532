/**
 * Explorer session state and its sharable URL form.
 *
 * The whole session, including the sampling seed, round-trips through the
 * query string, so a copied URL reproduces the exact same view down to the
 * sampled sentences.
 */

import type { FilterPayload } from "./types.js";

export type ViewName = "stats" | "sample" | "document" | "wizard";

export interface ExplorerSession {
  corpusId: string | null;
  /** Frames driving the stats views; stats stay locked while empty. */
  frames: string[];
  filter: FilterPayload;
  sampleSeed: number;
  sampleSize: number;
  view: ViewName;
  docId: string | null;
}

export const DEFAULT_SESSION: ExplorerSession = {
  corpusId: null,
  frames: [],
  filter: {},
  sampleSeed: 0,
  sampleSize: 10,
  view: "stats",
  docId: null,
};

const VIEWS: ViewName[] = ["stats", "sample", "document", "wizard"];

export function statsUnlocked(session: ExplorerSession): boolean {
  return session.frames.length > 0;
}

function filterIsEmpty(filter: FilterPayload): boolean {
  return !(
    filter.doc_predicates?.length ||
    filter.event_predicates?.length ||
    filter.frame_whitelist?.length
  );
}

/** Session -> query string, dropping fields at their default. */
export function encodeSession(session: ExplorerSession): string {
  const params = new URLSearchParams();
  if (session.corpusId) params.set("corpus", session.corpusId);
  if (session.frames.length) params.set("frames", session.frames.join(","));
  if (!filterIsEmpty(session.filter)) {
    params.set("filter", JSON.stringify(session.filter));
  }
  params.set("seed", String(session.sampleSeed));
  if (session.sampleSize !== DEFAULT_SESSION.sampleSize) {
    params.set("n", String(session.sampleSize));
  }
  if (session.view !== DEFAULT_SESSION.view) params.set("view", session.view);
  if (session.docId) params.set("doc", session.docId);
  return params.toString();
}

/** Query string -> session; malformed pieces fall back to defaults. */
export function decodeSession(search: string): ExplorerSession {
  const params = new URLSearchParams(search);
  const session: ExplorerSession = { ...DEFAULT_SESSION, filter: {} };
  session.corpusId = params.get("corpus");
  const frames = params.get("frames");
  session.frames = frames ? frames.split(",").filter(Boolean) : [];
  const rawFilter = params.get("filter");
  if (rawFilter) {
    try {
      const parsed = JSON.parse(rawFilter) as FilterPayload;
      if (parsed && typeof parsed === "object") session.filter = parsed;
    } catch {
      session.filter = {};
    }
  }
  const seed = Number(params.get("seed"));
  if (Number.isInteger(seed)) session.sampleSeed = seed;
  const n = Number(params.get("n"));
  if (Number.isInteger(n) && n > 0) session.sampleSize = n;
  const view = params.get("view") as ViewName | null;
  if (view && VIEWS.includes(view)) session.view = view;
  session.docId = params.get("doc");
  return session;
}

/** Minimal observable value holder; views re-render on set. */
export class Store<T> {
  private listeners = new Set<(value: T) => void>();

  constructor(private value: T) {}

  get(): T {
    return this.value;
  }

  set(next: T): void {
    this.value = next;
    for (const listener of this.listeners) listener(next);
  }

  update(patch: Partial<T>): void {
    this.set({ ...this.value, ...patch });
  }

  subscribe(listener: (value: T) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }
}
