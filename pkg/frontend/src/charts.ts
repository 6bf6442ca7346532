/**
 * Stats renderers: pure functions from API responses to HTML strings.
 *
 * Counts are copied into the markup verbatim (text and data-count
 * attributes). Geometry is the only thing computed here; no displayed
 * figure is derived client-side.
 */

import type {
  ConstructionRecord,
  ConstructionsStatResponse,
  ForegroundingResponse,
  FrameCountRecord,
  FramesStatResponse,
  RoleLinksStatResponse,
  TimeLagResponse,
} from "./types.js";

export function escapeHtml(value: string): string {
  return value
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function renderEmptyState(message: string): string {
  return `<div class="empty-state">${escapeHtml(message)}</div>`;
}

export const NO_MATCHES = "No instances match the current filter.";

// Stable palette: construction label -> CSS class suffix.
const CONSTRUCTION_ORDER = [
  "nonverbal",
  "vrb_impersonal",
  "vrb_unaccusative",
  "vrb_passive",
  "vrb_active",
  "other",
];

function constructionClass(construction: string): string {
  const index = CONSTRUCTION_ORDER.indexOf(construction);
  return index >= 0 ? `c${index}` : "cx";
}

function groupByFrame(records: ConstructionRecord[]): Map<string, ConstructionRecord[]> {
  const groups = new Map<string, ConstructionRecord[]>();
  for (const record of records) {
    const group = groups.get(record.frame);
    if (group) group.push(record);
    else groups.set(record.frame, [record]);
  }
  return groups;
}

/**
 * Stacked bar chart of constructions per frame. One column per frame, one
 * segment per (frame, construction) record; segment height is the record
 * count in chart units (--units), so a count of 1 renders as a unit bar.
 */
export function renderConstructionChart(response: ConstructionsStatResponse): string {
  if (!response.records.length) return renderEmptyState(NO_MATCHES);
  const columns: string[] = [];
  for (const [frame, records] of groupByFrame(response.records)) {
    const segments = records
      .map(
        (record) =>
          `<div class="segment ${constructionClass(record.construction)}"` +
          ` data-frame="${escapeHtml(record.frame)}"` +
          ` data-construction="${escapeHtml(record.construction)}"` +
          ` data-count="${record.count}"` +
          ` style="--units: ${record.count}"` +
          ` title="${escapeHtml(`${record.construction}: ${record.count}`)}"></div>`,
      )
      .join("");
    columns.push(
      `<div class="bar-column" data-frame="${escapeHtml(frame)}">` +
        `<div class="bar-stack">${segments}</div>` +
        `<div class="bar-label">${escapeHtml(frame)}</div></div>`,
    );
  }
  const legend = CONSTRUCTION_ORDER.map(
    (construction) =>
      `<span class="legend-item ${constructionClass(construction)}">` +
      `${escapeHtml(construction)}</span>`,
  ).join("");
  return (
    `<figure class="construction-chart">` +
    `<div class="bars">${columns.join("")}</div>` +
    `<figcaption class="legend">${legend}</figcaption></figure>`
  );
}

/** Simple count list for the frame-frequency stat. */
export function renderFrameFrequencies(response: FramesStatResponse): string {
  if (!response.records.length) return renderEmptyState(NO_MATCHES);
  const rows = response.records
    .map(
      (record: FrameCountRecord) =>
        `<li data-frame="${escapeHtml(record.frame)}" data-count="${record.count}">` +
        `<span class="frame-name">${escapeHtml(record.frame)}</span>` +
        `<span class="count">${record.count}</span></li>`,
    )
    .join("");
  return `<ol class="frame-frequencies">${rows}</ol>`;
}

/** Role-link frequency table: role, dependency path, count, verbatim. */
export function renderRoleLinkTable(response: RoleLinksStatResponse): string {
  if (!response.records.length) return renderEmptyState(NO_MATCHES);
  const rows = response.records
    .map(
      (record) =>
        `<tr data-role="${escapeHtml(record.role)}" data-count="${record.count}">` +
        `<td>${escapeHtml(record.role)}</td>` +
        `<td class="path">${escapeHtml(record.path)}</td>` +
        `<td class="count">${record.count}</td></tr>`,
    )
    .join("");
  return (
    `<table class="role-links"><thead><tr>` +
    `<th>Role</th><th>Path</th><th>Count</th>` +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

/**
 * Line chart of mention counts per publication-lag bucket, one polyline per
 * frame. Marker labels and the footer figures are response values.
 */
export function renderTimeLagChart(response: TimeLagResponse): string {
  if (!response.buckets.length) return renderEmptyState(NO_MATCHES);
  const width = 560;
  const height = 200;
  const pad = 24;
  const innerWidth = width - pad * 2;
  const innerHeight = height - pad * 2;
  const maxCount = Math.max(
    1,
    ...response.buckets.flatMap((bucket) => Object.values(bucket.counts)),
  );
  const step = response.buckets.length > 1 ? innerWidth / (response.buckets.length - 1) : 0;
  const x = (index: number) => pad + index * step;
  const y = (count: number) => pad + innerHeight - (count / maxCount) * innerHeight;

  const series = response.frames
    .map((frame, frameIndex) => {
      const points: string[] = [];
      const markers: string[] = [];
      response.buckets.forEach((bucket, index) => {
        const count = bucket.counts[frame] ?? 0;
        points.push(`${x(index)},${y(count)}`);
        markers.push(
          `<circle class="marker s${frameIndex}" cx="${x(index)}" cy="${y(count)}" r="3"` +
            ` data-frame="${escapeHtml(frame)}"` +
            ` data-bucket="${bucket.start_days}-${bucket.end_days}"` +
            ` data-count="${count}"><title>` +
            escapeHtml(`${frame}, days ${bucket.start_days} to ${bucket.end_days}: ${count}`) +
            `</title></circle>`,
        );
      });
      return (
        `<g class="series" data-frame="${escapeHtml(frame)}">` +
        `<polyline class="line s${frameIndex}" fill="none" points="${points.join(" ")}"/>` +
        markers.join("") +
        `</g>`
      );
    })
    .join("");

  const axis = response.buckets
    .map(
      (bucket, index) =>
        `<text class="tick" x="${x(index)}" y="${height - 4}">${bucket.start_days}</text>`,
    )
    .join("");
  const legend = response.frames
    .map((frame, i) => `<span class="legend-item s${i}">${escapeHtml(frame)}</span>`)
    .join("");
  return (
    `<figure class="time-lag-chart">` +
    `<svg viewBox="0 0 ${width} ${height}" role="img">${series}${axis}</svg>` +
    `<figcaption><span class="legend">${legend}</span>` +
    `<span class="lag-meta">bucket: ${response.bucket_days} days, ` +
    `negative lags: <b data-stat="negative_lags">${response.negative_lags}</b>, ` +
    `unlinked documents: <b data-stat="unlinked_documents">${response.unlinked_documents}</b>` +
    `</span></figcaption></figure>`
  );
}

/** Foregrounding share, reported exactly as the service returned it. */
export function renderForegrounding(response: ForegroundingResponse): string {
  if (!response.total) return renderEmptyState(NO_MATCHES);
  return (
    `<p class="foregrounding" data-frame="${escapeHtml(response.frame)}"` +
    ` data-share="${response.share}" data-total="${response.total}">` +
    `Victim foregrounded in a <b>${response.share}</b> share of ` +
    `<b>${response.total}</b> ${escapeHtml(response.frame)} instances.</p>`
  );
}
