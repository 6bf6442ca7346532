/**
 * Wire types for the framelens HTTP API.
 *
 * These mirror the server's JSON payloads field for field. The explorer
 * renders them as-is: every number shown in the UI is a value from one of
 * these records, never something derived client-side.
 */

export interface CorpusSummary {
  corpus_id: string;
  documents: number;
  sentences: number;
  instances: number;
  events: number;
  frames: string[];
  analysis_failures: number;
}

export interface CorporaResponse {
  corpora: CorpusSummary[];
}

export interface SchemaResponse {
  corpus_id: string;
  document: string[];
  event: string[];
  frames: string[];
}

export interface FrameCountRecord {
  frame: string;
  count: number;
}

export interface FramesStatResponse {
  corpus_id: string;
  stat: "frames";
  records: FrameCountRecord[];
}

export interface ConstructionRecord {
  frame: string;
  construction: string;
  count: number;
}

export interface ConstructionsStatResponse {
  corpus_id: string;
  stat: "constructions";
  records: ConstructionRecord[];
}

export interface RoleLinkRecord {
  frame: string;
  role: string;
  path: string;
  count: number;
}

export interface RoleLinksStatResponse {
  corpus_id: string;
  stat: "role-links";
  frame: string;
  records: RoleLinkRecord[];
}

export interface TimeLagBucket {
  start_days: number;
  end_days: number;
  counts: Record<string, number>;
}

export interface TimeLagResponse {
  corpus_id: string;
  stat: "time-lag";
  frames: string[];
  bucket_days: number;
  buckets: TimeLagBucket[];
  negative_lags: number;
  unlinked_documents: number;
}

export interface ForegroundingResponse {
  corpus_id: string;
  stat: "foregrounding";
  frame: string;
  share: number;
  total: number;
}

export interface Span {
  start: number;
  end: number;
}

export interface RoleSpan extends Span {
  name: string;
}

export interface RoleLink {
  role: string;
  path: string;
  resolved: boolean;
}

export interface AnnotationRecord {
  instance_id: string;
  frame: string;
  construction: string;
  is_root: boolean;
  role_links: RoleLink[];
}

export interface InstanceRecord {
  instance_id: string;
  frame: string;
  trigger: Span;
  roles: RoleSpan[];
  /** Present on document and analyze payloads, absent on samples. */
  annotation?: AnnotationRecord | null;
}

export interface SentenceView {
  sent_id: string;
  text: string;
  tokens: string[];
  instances: InstanceRecord[];
}

export interface DocumentResponse {
  doc_id: string;
  metadata: Record<string, unknown>;
  sentences: SentenceView[];
}

export interface SampleSentence extends SentenceView {
  doc_id: string;
}

export interface SampleResponse {
  corpus_id: string;
  query: FeatureQueryPayload;
  n: number;
  seed: number;
  sentences: SampleSentence[];
}

export interface FrameSuggestion {
  frame: string;
  definition: string;
  examples: string[];
  distance: number;
}

export interface SearchResponse {
  keywords: string[];
  top_n: number;
  results: FrameSuggestion[];
}

export interface AlternativesResponse {
  frames: string[];
  alternatives: string[];
  added: string[];
}

export interface AnalyzeResponse {
  sentences: SentenceView[];
  alternatives: Record<string, string[]>;
}

export type PredicateOp = "eq" | "in" | "range";

export interface Predicate {
  key: string;
  op: PredicateOp;
  value: unknown;
}

export interface FilterPayload {
  doc_predicates?: Predicate[];
  event_predicates?: Predicate[];
  frame_whitelist?: string[];
}

export interface RoleLinkQuery {
  role?: string;
  path?: string;
}

export interface FeatureQueryPayload {
  frame?: string | null;
  construction?: string | null;
  role_link?: RoleLinkQuery | null;
  is_root?: boolean | null;
}

export interface SampleRequest {
  query: FeatureQueryPayload;
  n?: number;
  seed?: number;
  filter?: FilterPayload;
}

export interface ErrorEnvelope {
  error: {
    code: string;
    message: string;
  };
}
