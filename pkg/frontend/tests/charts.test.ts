/**
 * Stats renderers against recorded API responses. The displayed figures
 * must be the response values verbatim; the unit-bar check pins the
 * construction chart to the ten single-count records of the contrastive
 * examples corpus.
 */

import { describe, expect, it } from "vitest";

import {
  NO_MATCHES,
  renderConstructionChart,
  renderForegrounding,
  renderFrameFrequencies,
  renderRoleLinkTable,
  renderTimeLagChart,
} from "../src/charts.js";
import type {
  ConstructionsStatResponse,
  ForegroundingResponse,
  FramesStatResponse,
  RoleLinksStatResponse,
  TimeLagResponse,
} from "../src/types.js";
import { attrValues, fixture, tagsWithClass } from "./helpers.js";

const table2 = fixture<ConstructionsStatResponse>("table2_constructions.json");
const emptyStat = fixture<ConstructionsStatResponse>("mini_constructions_empty.json");
const frames = fixture<FramesStatResponse>("mini_frames.json");
const roleLinks = fixture<RoleLinksStatResponse>("mini_role_links.json");
const timeLag = fixture<TimeLagResponse>("mini_time_lag.json");
const foregrounding = fixture<ForegroundingResponse>("mini_foregrounding.json");

describe("construction chart", () => {
  it("renders the contrastive-examples fixture as ten unit bars", () => {
    const html = renderConstructionChart(table2);
    const segments = tagsWithClass(html, "segment");
    expect(segments).toHaveLength(10);
    for (const segment of segments) {
      expect(segment).toContain('data-count="1"');
      expect(segment).toContain("--units: 1");
    }
    const pairs = segments.map((segment) => {
      const frame = /data-frame="([^"]*)"/.exec(segment)![1];
      const construction = /data-construction="([^"]*)"/.exec(segment)![1];
      return `${frame}/${construction}`;
    });
    expect(pairs).toEqual(
      table2.records.map((record) => `${record.frame}/${record.construction}`),
    );
  });

  it("copies every count from the response, deriving nothing", () => {
    const html = renderConstructionChart(table2);
    const counts = attrValues(html, "data-count").map(Number);
    expect(counts).toEqual(table2.records.map((record) => record.count));
  });

  it("shows the explicit empty state when no records match", () => {
    expect(emptyStat.records).toHaveLength(0);
    const html = renderConstructionChart(emptyStat);
    expect(html).toContain('class="empty-state"');
    expect(html).toContain(NO_MATCHES);
  });
});

describe("frame frequency list", () => {
  it("lists response counts verbatim", () => {
    const html = renderFrameFrequencies(frames);
    expect(attrValues(html, "data-frame")).toEqual(frames.records.map((r) => r.frame));
    expect(attrValues(html, "data-count").map(Number)).toEqual(
      frames.records.map((r) => r.count),
    );
  });
});

describe("role-link table", () => {
  it("renders one row per record with role, path, and count", () => {
    const html = renderRoleLinkTable(roleLinks);
    const rows = html.match(/<tr data-role=/g) ?? [];
    expect(rows).toHaveLength(roleLinks.records.length);
    for (const record of roleLinks.records) {
      expect(html).toContain(`<td class="path">${record.path}</td>`);
      expect(html).toContain(`<td class="count">${record.count}</td>`);
    }
  });

  it("falls back to the empty state for an empty record list", () => {
    const html = renderRoleLinkTable({ ...roleLinks, records: [] });
    expect(html).toContain('class="empty-state"');
  });
});

describe("time-lag chart", () => {
  it("marks every bucket of every frame with its response count", () => {
    const html = renderTimeLagChart(timeLag);
    const polylines = html.match(/<polyline/g) ?? [];
    expect(polylines).toHaveLength(timeLag.frames.length);
    const markers = tagsWithClass(html, "marker");
    expect(markers).toHaveLength(timeLag.frames.length * timeLag.buckets.length);
    const byFrame = new Map<string, number[]>();
    for (const marker of markers) {
      const frame = /data-frame="([^"]*)"/.exec(marker)![1]!;
      const count = Number(/data-count="([^"]*)"/.exec(marker)![1]);
      byFrame.set(frame, [...(byFrame.get(frame) ?? []), count]);
    }
    for (const frame of timeLag.frames) {
      expect(byFrame.get(frame)).toEqual(
        timeLag.buckets.map((bucket) => bucket.counts[frame] ?? 0),
      );
    }
  });

  it("reports negative lags and unlinked documents verbatim", () => {
    const html = renderTimeLagChart(timeLag);
    expect(html).toContain(
      `negative lags: <b data-stat="negative_lags">${timeLag.negative_lags}</b>`,
    );
    expect(html).toContain(
      `unlinked documents: <b data-stat="unlinked_documents">${timeLag.unlinked_documents}</b>`,
    );
  });
});

describe("foregrounding", () => {
  it("shows share and total exactly as returned", () => {
    const html = renderForegrounding(foregrounding);
    expect(html).toContain(`data-share="${foregrounding.share}"`);
    expect(html).toContain(`data-total="${foregrounding.total}"`);
    expect(html).toContain(`<b>${foregrounding.share}</b>`);
    expect(html).toContain(`<b>${foregrounding.total}</b>`);
  });
});
