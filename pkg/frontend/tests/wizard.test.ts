/**
 * Wizard state machine over recorded search and alternatives responses.
 * The headline behaviour: accepting Impact surfaces Cause_impact as an
 * alternative suggestion card.
 */

import { describe, expect, it } from "vitest";

import { renderAnnotatedSentence } from "../src/annotate.js";
import type { FramelensClient } from "../src/api.js";
import type {
  AlternativesResponse,
  AnalyzeResponse,
  SearchResponse,
} from "../src/types.js";
import {
  WIZARD_STEPS,
  WizardFlow,
  acceptFrame,
  addManualFrame,
  advance,
  applyAlternatives,
  applySearchResults,
  canAdvance,
  goBack,
  initialWizard,
  setKeywords,
} from "../src/wizard.js";
import { fixture } from "./helpers.js";

const search = fixture<SearchResponse>("search_impact.json");
const alternatives = fixture<AlternativesResponse>("alternatives_impact.json");

function invariantHolds(state: ReturnType<typeof initialWizard>): boolean {
  const offered = new Set([...state.cards.map((card) => card.frame), ...state.manual]);
  return state.accepted.every((frame) => offered.has(frame));
}

describe("step transitions", () => {
  it("starts at event definition and refuses to advance without keywords", () => {
    const state = initialWizard();
    expect(state.step).toBe("event_definition");
    const stuck = advance(state);
    expect(stuck.step).toBe("event_definition");
    expect(stuck.keywordError).toMatch(/keyword/);
  });

  it("advances through the steps in order once inputs are valid", () => {
    let state = setKeywords(initialWizard(), "crash, collision collide");
    expect(state.keywords).toEqual(["crash", "collision", "collide"]);
    expect(canAdvance(state)).toBe(true);
    state = advance(state);
    expect(state.step).toBe("frame_selection");
    state = applySearchResults(state, search);
    state = acceptFrame(state, "Impact");
    state = advance(state);
    expect(state.step).toBe("document_visualization");
    expect(state.maxStepReached).toBe(2);
  });

  it("allows going back without losing the high-water mark", () => {
    let state = advance(setKeywords(initialWizard(), "crash"));
    state = applySearchResults(state, search);
    state = acceptFrame(state, "Impact");
    state = advance(state);
    state = goBack(state);
    expect(state.step).toBe("frame_selection");
    expect(state.maxStepReached).toBe(2);
    state = goBack(state);
    expect(state.step).toBe("event_definition");
    expect(goBack(state).step).toBe("event_definition");
    expect(WIZARD_STEPS[state.maxStepReached]).toBe("document_visualization");
  });
});

describe("frame selection", () => {
  it("turns N search results into N suggestion cards with definitions and examples", () => {
    const state = applySearchResults(initialWizard(), search);
    expect(state.cards).toHaveLength(search.results.length);
    state.cards.forEach((card, index) => {
      const result = search.results[index]!;
      expect(card.frame).toBe(result.frame);
      expect(card.definition).toBe(result.definition);
      expect(card.examples).toEqual(result.examples);
      expect(card.distance).toBe(result.distance);
      expect(card.source).toBe("search");
    });
  });

  it("surfaces Cause_impact after Impact is accepted", () => {
    let state = applySearchResults(initialWizard(), search);
    state = acceptFrame(state, "Impact");
    expect(state.accepted).toEqual(["Impact"]);
    state = applyAlternatives(state, alternatives);
    const frames = state.cards.map((card) => card.frame);
    expect(frames).toContain("Cause_impact");
    const causeImpact = state.cards.find((card) => card.frame === "Cause_impact")!;
    expect(["search", "alternative"]).toContain(causeImpact.source);
    expect(invariantHolds(state)).toBe(true);
  });

  it("rejects accepting a frame that was never offered", () => {
    const state = acceptFrame(applySearchResults(initialWizard(), search), "Nonesuch");
    expect(state.accepted).toEqual([]);
    expect(state.error).toMatch(/Nonesuch/);
    expect(invariantHolds(state)).toBe(true);
  });

  it("lets manually added frames be accepted", () => {
    let state = addManualFrame(applySearchResults(initialWizard(), search), "Killing");
    state = acceptFrame(state, "Killing");
    expect(state.accepted).toContain("Killing");
    expect(state.cards.find((card) => card.frame === "Killing")?.source).toBe("manual");
    expect(invariantHolds(state)).toBe(true);
  });

  it("drops accepted frames that a new search no longer offers", () => {
    let state = applySearchResults(initialWizard(), search);
    state = acceptFrame(state, "Impact");
    const rerun: SearchResponse = { ...search, results: search.results.slice(1) };
    state = applySearchResults(state, rerun);
    expect(state.accepted).toEqual([]);
    expect(invariantHolds(state)).toBe(true);
  });
});

describe("wizard flow", () => {
  function fakeClient(overrides: Partial<Record<string, unknown>>): FramelensClient {
    const base = {
      searchFrames: () => Promise.resolve(search),
      alternatives: () => Promise.resolve(alternatives),
      analyze: () => Promise.reject(new Error("not wired")),
    };
    return { ...base, ...overrides } as unknown as FramelensClient;
  }

  it("runs keyword search and lands on frame selection", async () => {
    const flow = new WizardFlow(fakeClient({}));
    await flow.submitKeywords("crash collision");
    expect(flow.state.step).toBe("frame_selection");
    expect(flow.state.cards).toHaveLength(search.results.length);
  });

  it("merges alternatives after accepting a frame", async () => {
    const flow = new WizardFlow(fakeClient({}));
    await flow.submitKeywords("crash collision");
    await flow.accept("Impact");
    expect(flow.state.cards.map((card) => card.frame)).toContain("Cause_impact");
  });

  it("keeps empty keyword submissions on the first step with a message", async () => {
    const flow = new WizardFlow(fakeClient({}));
    await flow.submitKeywords("   ");
    expect(flow.state.step).toBe("event_definition");
    expect(flow.state.keywordError).toMatch(/keyword/);
  });

  it("reaches document visualization through the analyze endpoint", async () => {
    const request = fixture<unknown>("analyze_fig1_request.json");
    const analysis = fixture<AnalyzeResponse>("analyze_fig1_response.json");
    const sent: unknown[] = [];
    const flow = new WizardFlow(
      fakeClient({
        analyze: (payload: unknown) => {
          sent.push(payload);
          return Promise.resolve(analysis);
        },
      }),
    );
    await flow.submitKeywords("crash collision");
    await flow.accept("Impact");
    await flow.visualize(request);
    expect(sent).toEqual([request]);
    expect(flow.state.step).toBe("document_visualization");
    expect(flow.state.analysis).toEqual(analysis);
    const rendered = flow.state.analysis!.sentences.map(renderAnnotatedSentence);
    expect(rendered[0]).toContain('data-frame="Impact"');
    expect(rendered[1]).toContain('data-frame="Cause_impact"');
  });

  it("ignores a slow stale search once a newer one has answered", async () => {
    let releaseFirst: (value: SearchResponse) => void = () => {};
    const first = new Promise<SearchResponse>((resolve) => {
      releaseFirst = resolve;
    });
    const second: SearchResponse = {
      ...search,
      results: [search.results[0]!],
    };
    let call = 0;
    const flow = new WizardFlow(
      fakeClient({
        searchFrames: () => {
          call += 1;
          return call === 1 ? first : Promise.resolve(second);
        },
      }),
    );
    const stale = flow.submitKeywords("crash");
    await flow.submitKeywords("collision");
    expect(flow.state.cards).toHaveLength(1);
    releaseFirst(search);
    await stale;
    expect(flow.state.cards).toHaveLength(1);
  });
});
