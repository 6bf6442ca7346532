/**
 * Typed client for the framelens service.
 *
 * Thin request wrappers only: the client never transforms response bodies,
 * so whatever a view displays came out of exactly one HTTP response.
 */

import type {
  AlternativesResponse,
  AnalyzeResponse,
  ConstructionsStatResponse,
  CorporaResponse,
  DocumentResponse,
  ErrorEnvelope,
  FilterPayload,
  ForegroundingResponse,
  FramesStatResponse,
  RoleLinksStatResponse,
  SampleRequest,
  SampleResponse,
  SchemaResponse,
  SearchResponse,
  TimeLagResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

function hasFilter(filter?: FilterPayload): boolean {
  if (!filter) return false;
  return Boolean(
    filter.doc_predicates?.length ||
      filter.event_predicates?.length ||
      filter.frame_whitelist?.length,
  );
}

export class FramelensClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.text();
    let parsed: unknown = null;
    try {
      parsed = body ? JSON.parse(body) : null;
    } catch {
      parsed = null;
    }
    if (!response.ok) {
      const envelope = parsed as ErrorEnvelope | null;
      if (envelope && typeof envelope === "object" && envelope.error) {
        throw new ApiError(response.status, envelope.error.code, envelope.error.message);
      }
      throw new ApiError(response.status, "bad_status", `HTTP ${response.status}`);
    }
    return parsed as T;
  }

  private get<T>(path: string): Promise<T> {
    return this.request<T>(path);
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  corpora(): Promise<CorporaResponse> {
    return this.get("/corpora");
  }

  schema(corpusId: string): Promise<SchemaResponse> {
    return this.get(`/corpora/${encodeURIComponent(corpusId)}/schema`);
  }

  document(corpusId: string, docId: string): Promise<DocumentResponse> {
    const corpus = encodeURIComponent(corpusId);
    return this.get(`/corpora/${corpus}/documents/${encodeURIComponent(docId)}`);
  }

  statsFrames(corpusId: string, filter?: FilterPayload): Promise<FramesStatResponse> {
    const path = `/corpora/${encodeURIComponent(corpusId)}/stats/frames`;
    return hasFilter(filter) ? this.post(path, { filter }) : this.get(path);
  }

  statsConstructions(
    corpusId: string,
    filter?: FilterPayload,
  ): Promise<ConstructionsStatResponse> {
    const path = `/corpora/${encodeURIComponent(corpusId)}/stats/constructions`;
    return hasFilter(filter) ? this.post(path, { filter }) : this.get(path);
  }

  statsRoleLinks(
    corpusId: string,
    frame: string,
    filter?: FilterPayload,
  ): Promise<RoleLinksStatResponse> {
    const path = `/corpora/${encodeURIComponent(corpusId)}/stats/role-links`;
    if (hasFilter(filter)) return this.post(path, { frame, filter });
    return this.get(`${path}?frame=${encodeURIComponent(frame)}`);
  }

  statsTimeLag(
    corpusId: string,
    frames: string[],
    bucketDays: number,
    filter?: FilterPayload,
  ): Promise<TimeLagResponse> {
    const path = `/corpora/${encodeURIComponent(corpusId)}/stats/time-lag`;
    if (hasFilter(filter)) {
      return this.post(path, { frames, bucket_days: bucketDays, filter });
    }
    const params = new URLSearchParams();
    for (const frame of frames) params.append("frames", frame);
    params.set("bucket_days", String(bucketDays));
    return this.get(`${path}?${params}`);
  }

  statsForegrounding(
    corpusId: string,
    frame: string,
    filter?: FilterPayload,
  ): Promise<ForegroundingResponse> {
    const path = `/corpora/${encodeURIComponent(corpusId)}/stats/foregrounding`;
    if (hasFilter(filter)) return this.post(path, { frame, filter });
    return this.get(`${path}?frame=${encodeURIComponent(frame)}`);
  }

  sample(corpusId: string, body: SampleRequest): Promise<SampleResponse> {
    return this.post(`/corpora/${encodeURIComponent(corpusId)}/sample`, body);
  }

  searchFrames(keywords: string[], topN?: number): Promise<SearchResponse> {
    const body: Record<string, unknown> = { keywords };
    if (topN !== undefined) body["top_n"] = topN;
    return this.post("/frames/search", body);
  }

  alternatives(frames: string[]): Promise<AlternativesResponse> {
    return this.post("/frames/alternatives", { frames });
  }

  analyze(payload: unknown): Promise<AnalyzeResponse> {
    return this.post("/analyze", payload);
  }
}

/**
 * Keeps one in-flight identity per key; a response is applied only if no
 * newer request on the same key was started meanwhile. Callers get null
 * for stale results, so an out-of-order response can never overwrite
 * newer state.
 */
export class LatestGuard {
  private readonly seq = new Map<string, number>();

  async run<T>(key: string, task: () => Promise<T>): Promise<T | null> {
    const id = (this.seq.get(key) ?? 0) + 1;
    this.seq.set(key, id);
    const result = await task();
    return this.seq.get(key) === id ? result : null;
  }
}
