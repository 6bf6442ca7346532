/**
 * Frame-discovery wizard: define an event type by keywords, pick frames
 * from service suggestions, then view analyzed documents.
 *
 * All transitions are pure state -> state functions; WizardFlow wires them
 * to the HTTP client. Invariants enforced here:
 *
 *   - steps only advance in order; going back never loses progress
 *   - the keyword step cannot be left empty (inline validation)
 *   - accepted frames are always a subset of suggested plus manually added
 */

import type { FramelensClient } from "./api.js";
import { LatestGuard } from "./api.js";
import type {
  AlternativesResponse,
  AnalyzeResponse,
  SearchResponse,
} from "./types.js";

export type WizardStep = "event_definition" | "frame_selection" | "document_visualization";

export const WIZARD_STEPS: readonly WizardStep[] = [
  "event_definition",
  "frame_selection",
  "document_visualization",
];

export type CardSource = "search" | "alternative" | "manual";

export interface SuggestionCard {
  frame: string;
  definition: string;
  examples: string[];
  /** Embedding distance for search hits; null for the other sources. */
  distance: number | null;
  source: CardSource;
}

export interface WizardState {
  step: WizardStep;
  /** High-water mark over step indices; never decreases. */
  maxStepReached: number;
  keywords: string[];
  keywordError: string | null;
  cards: SuggestionCard[];
  accepted: string[];
  manual: string[];
  analysis: AnalyzeResponse | null;
  error: string | null;
}

export function initialWizard(): WizardState {
  return {
    step: "event_definition",
    maxStepReached: 0,
    keywords: [],
    keywordError: null,
    cards: [],
    accepted: [],
    manual: [],
    analysis: null,
    error: null,
  };
}

export function stepIndex(step: WizardStep): number {
  return WIZARD_STEPS.indexOf(step);
}

export function parseKeywords(raw: string): string[] {
  const seen = new Set<string>();
  for (const piece of raw.split(/[\s,;]+/)) {
    const word = piece.trim().toLowerCase();
    if (word) seen.add(word);
  }
  return [...seen];
}

export function setKeywords(state: WizardState, raw: string): WizardState {
  return { ...state, keywords: parseKeywords(raw), keywordError: null };
}

export function canAdvance(state: WizardState): boolean {
  switch (state.step) {
    case "event_definition":
      return state.keywords.length > 0;
    case "frame_selection":
      return state.accepted.length > 0;
    case "document_visualization":
      return false;
  }
}

/** Move one step forward, or set the inline validation message. */
export function advance(state: WizardState): WizardState {
  if (state.step === "event_definition" && !state.keywords.length) {
    return { ...state, keywordError: "Enter at least one keyword to continue." };
  }
  if (state.step === "frame_selection" && !state.accepted.length) {
    return { ...state, error: "Accept at least one frame to continue." };
  }
  const index = stepIndex(state.step);
  const next = WIZARD_STEPS[index + 1];
  if (!next) return state;
  return {
    ...state,
    step: next,
    maxStepReached: Math.max(state.maxStepReached, index + 1),
    keywordError: null,
    error: null,
  };
}

export function goBack(state: WizardState): WizardState {
  const index = stepIndex(state.step);
  const previous = WIZARD_STEPS[index - 1];
  if (!previous) return state;
  return { ...state, step: previous, error: null };
}

/** Replace the suggestion cards with one card per search result. */
export function applySearchResults(state: WizardState, response: SearchResponse): WizardState {
  const cards: SuggestionCard[] = response.results.map((result) => ({
    frame: result.frame,
    definition: result.definition,
    examples: result.examples,
    distance: result.distance,
    source: "search",
  }));
  const manualCards = state.cards.filter((card) => card.source === "manual");
  const names = new Set(cards.map((card) => card.frame));
  for (const card of manualCards) {
    if (!names.has(card.frame)) cards.push(card);
  }
  const available = new Set(cards.map((card) => card.frame));
  return {
    ...state,
    cards,
    accepted: state.accepted.filter((frame) => available.has(frame)),
  };
}

/**
 * Merge perspective alternatives into the card list. New frames surface as
 * extra cards so a one-sided frame choice exposes its counterparts.
 */
export function applyAlternatives(
  state: WizardState,
  response: AlternativesResponse,
): WizardState {
  const known = new Set(state.cards.map((card) => card.frame));
  const added: SuggestionCard[] = [];
  for (const frame of response.alternatives) {
    if (known.has(frame)) continue;
    known.add(frame);
    added.push({ frame, definition: "", examples: [], distance: null, source: "alternative" });
  }
  return added.length ? { ...state, cards: [...state.cards, ...added] } : state;
}

function isOffered(state: WizardState, frame: string): boolean {
  return state.cards.some((card) => card.frame === frame) || state.manual.includes(frame);
}

/** Accept a frame; only offered or manually added frames qualify. */
export function acceptFrame(state: WizardState, frame: string): WizardState {
  if (!isOffered(state, frame)) {
    return { ...state, error: `Frame ${frame} is not among the suggestions.` };
  }
  if (state.accepted.includes(frame)) return state;
  return { ...state, accepted: [...state.accepted, frame], error: null };
}

export function unacceptFrame(state: WizardState, frame: string): WizardState {
  return { ...state, accepted: state.accepted.filter((name) => name !== frame) };
}

/** Add a frame by name; it becomes a card and is immediately acceptable. */
export function addManualFrame(state: WizardState, frame: string): WizardState {
  const name = frame.trim();
  if (!name) return state;
  const withManual = state.manual.includes(name)
    ? state
    : { ...state, manual: [...state.manual, name] };
  if (withManual.cards.some((card) => card.frame === name)) return withManual;
  return {
    ...withManual,
    cards: [
      ...withManual.cards,
      { frame: name, definition: "", examples: [], distance: null, source: "manual" },
    ],
  };
}

export function applyAnalysis(state: WizardState, response: AnalyzeResponse): WizardState {
  return { ...state, analysis: response };
}

/**
 * Async orchestration around the pure transitions. Responses go through a
 * LatestGuard keyed by operation, so a slow earlier search can never
 * replace the results of a newer one.
 */
export class WizardFlow {
  state: WizardState = initialWizard();
  private readonly guard = new LatestGuard();

  constructor(
    private readonly client: FramelensClient,
    private readonly onChange: (state: WizardState) => void = () => {},
  ) {}

  private commit(state: WizardState): void {
    this.state = state;
    this.onChange(state);
  }

  async submitKeywords(raw: string): Promise<void> {
    const next = setKeywords(this.state, raw);
    this.commit(next);
    if (!next.keywords.length) {
      this.commit(advance(next));
      return;
    }
    const response = await this.guard.run("search", () =>
      this.client.searchFrames(next.keywords),
    );
    if (response === null) return;
    this.commit(advance(applySearchResults(this.state, response)));
  }

  async accept(frame: string): Promise<void> {
    const next = acceptFrame(this.state, frame);
    this.commit(next);
    if (next.error || !next.accepted.length) return;
    const response = await this.guard.run("alternatives", () =>
      this.client.alternatives(next.accepted),
    );
    if (response === null) return;
    this.commit(applyAlternatives(this.state, response));
  }

  async visualize(payload: unknown): Promise<void> {
    const response = await this.guard.run("analyze", () => this.client.analyze(payload));
    if (response === null) return;
    this.commit(advance(applyAnalysis(this.state, response)));
  }
}
