/**
 * Filter widgets come from the schema endpoint, not from hard-coded lists,
 * and compile to the API's predicate records.
 */

import { describe, expect, it } from "vitest";

import { buildFilter, parsePredicate, widgetsFromSchema } from "../src/filters.js";
import type { SchemaResponse } from "../src/types.js";
import { fixture } from "./helpers.js";

const schema = fixture<SchemaResponse>("schema_mini.json");

describe("widget generation", () => {
  it("creates one widget per metadata key, skipping identifiers", () => {
    const widgets = widgetsFromSchema(schema);
    const documentKeys = widgets
      .filter((widget) => widget.scope === "document")
      .map((widget) => widget.key);
    const eventKeys = widgets
      .filter((widget) => widget.scope === "event")
      .map((widget) => widget.key);
    expect(documentKeys).toEqual(
      schema.document.filter((key) => key !== "doc_id" && key !== "event_id"),
    );
    expect(eventKeys).toEqual(
      schema.event.filter((key) => key !== "event_id" && key !== "doc_id"),
    );
    expect(widgets.find((widget) => widget.key === "pub_date")?.label).toBe("Pub Date");
  });
});

describe("predicate syntax", () => {
  it("maps plain text to eq", () => {
    expect(parsePredicate("source", "agency-x")).toEqual({
      key: "source",
      op: "eq",
      value: "agency-x",
    });
  });

  it("maps pipe lists to in", () => {
    expect(parsePredicate("region", "north|south")).toEqual({
      key: "region",
      op: "in",
      value: ["north", "south"],
    });
  });

  it("maps double-dot spans to closed ranges", () => {
    expect(parsePredicate("pub_date", "2021-06-01..2021-06-30")).toEqual({
      key: "pub_date",
      op: "range",
      value: ["2021-06-01", "2021-06-30"],
    });
  });

  it("ignores blank input", () => {
    expect(parsePredicate("source", "   ")).toBeNull();
  });
});

describe("filter assembly", () => {
  it("collects predicates per scope and adds the frame whitelist", () => {
    const widgets = widgetsFromSchema(schema);
    const filter = buildFilter(
      widgets,
      { "doc:source": "agency-x", "event:region": "north|south", "doc:title": "" },
      ["Killing", "Death"],
    );
    expect(filter).toEqual({
      doc_predicates: [{ key: "source", op: "eq", value: "agency-x" }],
      event_predicates: [{ key: "region", op: "in", value: ["north", "south"] }],
      frame_whitelist: ["Killing", "Death"],
    });
  });

  it("returns an empty object when nothing is set", () => {
    expect(buildFilter(widgetsFromSchema(schema), {}, [])).toEqual({});
  });
});
