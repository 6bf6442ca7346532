/**
 * Browser entry point: wires the store, client, and renderers to the DOM.
 *
 * Views re-render from (session, latest responses); data fetching runs
 * through a LatestGuard per view so a stale response never lands. The
 * session lives in the URL, seed included, and a pasted URL reproduces
 * the same view exactly.
 */

import { ApiError, FramelensClient, LatestGuard } from "./api.js";
import { renderAnnotatedSentence } from "./annotate.js";
import {
  NO_MATCHES,
  renderConstructionChart,
  renderEmptyState,
  renderForegrounding,
  renderFrameFrequencies,
  renderRoleLinkTable,
  renderTimeLagChart,
  escapeHtml,
} from "./charts.js";
import { buildFilter, widgetsFromSchema, type FilterWidget } from "./filters.js";
import {
  DEFAULT_SESSION,
  decodeSession,
  encodeSession,
  statsUnlocked,
  Store,
  type ExplorerSession,
  type ViewName,
} from "./session.js";
import { WizardFlow, canAdvance, type WizardState } from "./wizard.js";
import type { SchemaResponse } from "./types.js";

// The bundle is static; ?api=http://host:port points it at a service on
// another origin, same origin otherwise.
const apiBase = new URLSearchParams(location.search).get("api") ?? "";
const client = new FramelensClient(apiBase);
const guard = new LatestGuard();
const session = new Store<ExplorerSession>({
  ...DEFAULT_SESSION,
  ...decodeSession(location.search),
});

let schema: SchemaResponse | null = null;
let widgets: FilterWidget[] = [];
const widgetValues: Record<string, string> = {};
const wizard = new WizardFlow(client, (state) => renderWizard(state));

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function syncUrl(): void {
  const params = new URLSearchParams(encodeSession(session.get()));
  if (apiBase) params.set("api", apiBase);
  const query = params.toString();
  history.replaceState(null, "", query ? `?${query}` : location.pathname);
}

function showError(target: HTMLElement, error: unknown): void {
  const message =
    error instanceof ApiError ? `${error.code}: ${error.message}` : String(error);
  target.innerHTML = `<div class="error-banner">${escapeHtml(message)}</div>`;
}

async function loadCorpora(): Promise<void> {
  const body = await client.corpora();
  const current = session.get().corpusId;
  const select = el("corpus-select") as HTMLSelectElement;
  select.innerHTML = body.corpora
    .map(
      (corpus) =>
        `<option value="${escapeHtml(corpus.corpus_id)}"` +
        `${corpus.corpus_id === current ? " selected" : ""}>` +
        `${escapeHtml(corpus.corpus_id)} (${corpus.documents} docs)</option>`,
    )
    .join("");
  if (!current && body.corpora.length) {
    session.update({ corpusId: body.corpora[0]!.corpus_id });
  }
}

async function loadSchema(): Promise<void> {
  const state = session.get();
  if (!state.corpusId) return;
  schema = await client.schema(state.corpusId);
  widgets = widgetsFromSchema(schema);
  el("frame-picker").innerHTML = schema.frames
    .map(
      (frame) =>
        `<label><input type="checkbox" value="${escapeHtml(frame)}"` +
        `${state.frames.includes(frame) ? " checked" : ""}> ${escapeHtml(frame)}</label>`,
    )
    .join("");
  el("filter-widgets").innerHTML = widgets
    .map(
      (widget) =>
        `<label class="filter-widget">${escapeHtml(widget.label)} ` +
        `<input data-widget="${escapeHtml(widget.id)}" ` +
        `value="${escapeHtml(widgetValues[widget.id] ?? "")}" ` +
        `placeholder="value, a|b, or lo..hi"></label>`,
    )
    .join("");
}

function currentFilter() {
  return buildFilter(widgets, widgetValues, session.get().frames);
}

async function renderStats(): Promise<void> {
  const target = el("view");
  const state = session.get();
  if (!state.corpusId) return;
  if (!statsUnlocked(state)) {
    target.innerHTML = renderEmptyState(
      "Pick at least one frame to unlock the statistics views.",
    );
    return;
  }
  const corpus = state.corpusId;
  const filter = currentFilter();
  const frame = state.frames[0]!;
  try {
    const result = await guard.run("stats", () =>
      Promise.all([
        client.statsFrames(corpus, filter),
        client.statsConstructions(corpus, filter),
        client.statsRoleLinks(corpus, frame, filter),
        client.statsTimeLag(corpus, state.frames, 7, filter),
        client.statsForegrounding(corpus, frame, filter).catch((error: unknown) => {
          if (error instanceof ApiError && error.code === "query_error") return null;
          throw error;
        }),
      ]),
    );
    if (result === null) return;
    const [frames, constructions, roleLinks, timeLag, foregrounding] = result;
    target.innerHTML =
      `<section><h2>Frame frequencies</h2>${renderFrameFrequencies(frames)}</section>` +
      `<section><h2>Constructions by frame</h2>${renderConstructionChart(constructions)}</section>` +
      `<section><h2>Role links for ${escapeHtml(frame)}</h2>${renderRoleLinkTable(roleLinks)}</section>` +
      `<section><h2>Coverage by publication lag</h2>${renderTimeLagChart(timeLag)}</section>` +
      (foregrounding
        ? `<section><h2>Victim foregrounding</h2>${renderForegrounding(foregrounding)}</section>`
        : "");
  } catch (error) {
    showError(target, error);
  }
}

async function renderSample(): Promise<void> {
  const target = el("view");
  const state = session.get();
  if (!state.corpusId || !state.frames.length) {
    target.innerHTML = renderEmptyState("Pick a frame to sample sentences for.");
    return;
  }
  try {
    const response = await guard.run("sample", () =>
      client.sample(state.corpusId!, {
        query: { frame: state.frames[0] },
        n: state.sampleSize,
        seed: state.sampleSeed,
        filter: currentFilter(),
      }),
    );
    if (response === null) return;
    if (!response.sentences.length) {
      target.innerHTML = renderEmptyState(NO_MATCHES);
      return;
    }
    target.innerHTML = response.sentences
      .map(
        (sentence) =>
          `<article class="sample" data-doc="${escapeHtml(sentence.doc_id)}">` +
          `<header><a href="#" class="doc-link" data-doc="${escapeHtml(sentence.doc_id)}">` +
          `${escapeHtml(sentence.doc_id)}</a> / ${escapeHtml(sentence.sent_id)}</header>` +
          renderAnnotatedSentence(sentence) +
          `</article>`,
      )
      .join("");
  } catch (error) {
    showError(target, error);
  }
}

async function renderDocument(): Promise<void> {
  const target = el("view");
  const state = session.get();
  if (!state.corpusId || !state.docId) {
    target.innerHTML = renderEmptyState("Pick a document from the sample view.");
    return;
  }
  try {
    const body = await guard.run("document", () =>
      client.document(state.corpusId!, state.docId!),
    );
    if (body === null) return;
    const meta = Object.entries(body.metadata)
      .map(([key, value]) => `<dt>${escapeHtml(key)}</dt><dd>${escapeHtml(String(value))}</dd>`)
      .join("");
    target.innerHTML =
      `<article class="document"><h2>${escapeHtml(body.doc_id)}</h2>` +
      `<dl class="doc-meta">${meta}</dl>` +
      body.sentences.map(renderAnnotatedSentence).join("") +
      `</article>`;
  } catch (error) {
    showError(target, error);
  }
}

function renderWizard(state: WizardState): void {
  if (session.get().view !== "wizard") return;
  const target = el("view");
  if (state.step === "event_definition") {
    target.innerHTML =
      `<section class="wizard"><h2>1. Define the event type</h2>` +
      `<p>Keywords that describe the events you care about:</p>` +
      `<input id="wizard-keywords" value="${escapeHtml(state.keywords.join(" "))}">` +
      (state.keywordError
        ? `<p class="inline-error">${escapeHtml(state.keywordError)}</p>`
        : "") +
      `<button id="wizard-search">Search frames</button></section>`;
    el("wizard-search").onclick = () => {
      void wizard.submitKeywords((el("wizard-keywords") as HTMLInputElement).value);
    };
    return;
  }
  if (state.step === "frame_selection") {
    const cards = state.cards
      .map((card) => {
        const accepted = state.accepted.includes(card.frame);
        const examples = card.examples
          .map((example) => `<li>${escapeHtml(example)}</li>`)
          .join("");
        return (
          `<div class="card ${card.source}${accepted ? " accepted" : ""}"` +
          ` data-frame="${escapeHtml(card.frame)}">` +
          `<h3>${escapeHtml(card.frame)}</h3>` +
          (card.distance !== null ? `<p class="distance">d=${card.distance}</p>` : "") +
          (card.definition ? `<p>${escapeHtml(card.definition)}</p>` : "") +
          (examples ? `<ul class="examples">${examples}</ul>` : "") +
          `<button class="accept" data-frame="${escapeHtml(card.frame)}">` +
          `${accepted ? "Accepted" : "Accept"}</button></div>`
        );
      })
      .join("");
    target.innerHTML =
      `<section class="wizard"><h2>2. Choose frames</h2>` +
      `<div class="cards">${cards}</div>` +
      (state.error ? `<p class="inline-error">${escapeHtml(state.error)}</p>` : "") +
      `<button id="wizard-back">Back</button>` +
      `<button id="wizard-next"${canAdvance(state) ? "" : " disabled"}>Continue</button>` +
      `</section>`;
    for (const button of target.querySelectorAll<HTMLButtonElement>("button.accept")) {
      button.onclick = () => void wizard.accept(button.dataset["frame"]!);
    }
    el("wizard-back").onclick = () => renderWizard({ ...state, step: "event_definition" });
    el("wizard-next").onclick = () => {
      const request = buildAnalyzeRequestFromSession();
      if (request) void wizard.visualize(request);
    };
    return;
  }
  const sentences = state.analysis
    ? state.analysis.sentences.map(renderAnnotatedSentence).join("")
    : renderEmptyState("No analysis yet.");
  target.innerHTML =
    `<section class="wizard"><h2>3. Documents through your frames</h2>` +
    `${sentences}<button id="wizard-back">Back</button></section>`;
  el("wizard-back").onclick = () => renderWizard({ ...state, step: "frame_selection" });
}

/** Paste area for pre-parsed sentences; kept out of renderWizard for reuse. */
function buildAnalyzeRequestFromSession(): unknown | null {
  const raw = prompt("Paste an analyze request (parsed sentences JSON):");
  if (!raw) return null;
  try {
    return JSON.parse(raw);
  } catch {
    alert("That was not valid JSON.");
    return null;
  }
}

function rerender(): void {
  syncUrl();
  const view = session.get().view;
  for (const tab of document.querySelectorAll<HTMLButtonElement>("nav .tab")) {
    tab.classList.toggle("active", tab.dataset["view"] === view);
  }
  if (view === "stats") void renderStats();
  else if (view === "sample") void renderSample();
  else if (view === "document") void renderDocument();
  else renderWizard(wizard.state);
}

function bindChrome(): void {
  (el("corpus-select") as HTMLSelectElement).onchange = (event) => {
    const corpusId = (event.target as HTMLSelectElement).value;
    session.update({ corpusId, frames: [], docId: null });
    void loadSchema().then(rerender);
  };
  for (const tab of document.querySelectorAll<HTMLButtonElement>("nav .tab")) {
    tab.onclick = () => session.update({ view: tab.dataset["view"] as ViewName });
  }
  el("frame-picker").onchange = () => {
    const checked = [
      ...document.querySelectorAll<HTMLInputElement>("#frame-picker input:checked"),
    ].map((input) => input.value);
    session.update({ frames: checked });
  };
  el("filter-widgets").onchange = (event) => {
    const input = event.target as HTMLInputElement;
    const id = input.dataset["widget"];
    if (id) widgetValues[id] = input.value;
    rerender();
  };
  (el("seed-input") as HTMLInputElement).onchange = (event) => {
    const seed = Number((event.target as HTMLInputElement).value);
    if (Number.isInteger(seed)) session.update({ sampleSeed: seed });
  };
  el("share-button").onclick = () => {
    void navigator.clipboard.writeText(location.href);
  };
  el("view").addEventListener("click", (event) => {
    const link = (event.target as HTMLElement).closest<HTMLElement>(".doc-link");
    if (!link) return;
    event.preventDefault();
    session.update({ view: "document", docId: link.dataset["doc"] ?? null });
  });
}

async function main(): Promise<void> {
  bindChrome();
  session.subscribe(rerender);
  try {
    await loadCorpora();
    await loadSchema();
  } catch (error) {
    showError(el("view"), error);
    return;
  }
  (el("seed-input") as HTMLInputElement).value = String(session.get().sampleSeed);
  rerender();
}

void main();
