/**
 * Filter widgets derived from a corpus schema.
 *
 * The schema endpoint lists the metadata keys each corpus actually has, so
 * the filter form is generated per corpus instead of hard-coded. Widget
 * values use a small text syntax mapped onto the API's predicate records:
 *
 *   agency-x          eq
 *   north|south       in
 *   2021-06-01..2021-06-30   range (closed interval)
 */

import type { FilterPayload, Predicate, SchemaResponse } from "./types.js";

export interface FilterWidget {
  id: string;
  scope: "document" | "event";
  key: string;
  label: string;
}

// Identifier keys are join keys, not things a user filters on.
const HIDDEN_KEYS = new Set(["doc_id", "event_id"]);

function labelFor(key: string): string {
  const words = key.split("_").filter(Boolean);
  return words
    .map((word) => word.charAt(0).toUpperCase() + word.slice(1))
    .join(" ");
}

export function widgetsFromSchema(schema: SchemaResponse): FilterWidget[] {
  const widgets: FilterWidget[] = [];
  for (const key of schema.document) {
    if (HIDDEN_KEYS.has(key)) continue;
    widgets.push({ id: `doc:${key}`, scope: "document", key, label: labelFor(key) });
  }
  for (const key of schema.event) {
    if (HIDDEN_KEYS.has(key)) continue;
    widgets.push({ id: `event:${key}`, scope: "event", key, label: labelFor(key) });
  }
  return widgets;
}

export function parsePredicate(key: string, raw: string): Predicate | null {
  const value = raw.trim();
  if (!value) return null;
  if (value.includes("..")) {
    const [lo, hi] = value.split("..", 2);
    if (lo?.trim() && hi?.trim()) {
      return { key, op: "range", value: [lo.trim(), hi.trim()] };
    }
  }
  if (value.includes("|")) {
    const options = value
      .split("|")
      .map((part) => part.trim())
      .filter(Boolean);
    if (options.length > 1) return { key, op: "in", value: options };
  }
  return { key, op: "eq", value };
}

/**
 * Compose the API filter object from widget values and the selected frame
 * set. Empty inputs contribute nothing; an all-empty form yields {}.
 */
export function buildFilter(
  widgets: FilterWidget[],
  values: Record<string, string>,
  frames: string[],
): FilterPayload {
  const docPredicates: Predicate[] = [];
  const eventPredicates: Predicate[] = [];
  for (const widget of widgets) {
    const predicate = parsePredicate(widget.key, values[widget.id] ?? "");
    if (!predicate) continue;
    (widget.scope === "document" ? docPredicates : eventPredicates).push(predicate);
  }
  const filter: FilterPayload = {};
  if (docPredicates.length) filter.doc_predicates = docPredicates;
  if (eventPredicates.length) filter.event_predicates = eventPredicates;
  if (frames.length) filter.frame_whitelist = [...frames];
  return filter;
}
