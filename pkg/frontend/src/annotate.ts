/**
 * Annotated sentence rendering.
 *
 * Sentences arrive with their token forms and frame instances; this module
 * lays the token-index spans over the tokens. Triggers render as boxed
 * spans labelled with their frame, role spans as bracketed regions carrying
 * the role name, with the server's dependency path in the hover title.
 * Overlapping spans nest: marks are ordered by span start, then by length
 * (longer first), so an enclosing span always wraps the spans inside it.
 */

import { escapeHtml } from "./charts.js";
import type { InstanceRecord, SentenceView } from "./types.js";

export interface Mark {
  kind: "trigger" | "role";
  start: number;
  end: number;
  /** Frame name for triggers, role name for role spans. */
  label: string;
  /** Hover text; for roles this includes the dependency path. */
  title: string;
  instanceId: string;
}

export interface MarkNode extends Mark {
  children: MarkNode[];
}

function pathFor(instance: InstanceRecord, role: string): string | null {
  const link = instance.annotation?.role_links.find((l) => l.role === role);
  return link ? link.path : null;
}

function collectMarks(view: SentenceView): Mark[] {
  const marks: Mark[] = [];
  const limit = view.tokens.length;
  const clamp = (value: number) => Math.max(0, Math.min(value, limit));
  for (const instance of view.instances) {
    const trigger = { start: clamp(instance.trigger.start), end: clamp(instance.trigger.end) };
    if (trigger.start < trigger.end) {
      marks.push({
        kind: "trigger",
        start: trigger.start,
        end: trigger.end,
        label: instance.frame,
        title: instance.frame,
        instanceId: instance.instance_id,
      });
    }
    for (const role of instance.roles) {
      const start = clamp(role.start);
      const end = clamp(role.end);
      if (start >= end) continue;
      const path = pathFor(instance, role.name);
      marks.push({
        kind: "role",
        start,
        end,
        label: role.name,
        title: path ? `${role.name}: ${path}` : role.name,
        instanceId: instance.instance_id,
      });
    }
  }
  return marks;
}

/**
 * Marks sorted and nested. Order is span start, then length with longer
 * spans first; a trigger coextensive with a role nests inside it.
 */
export function sentenceMarks(view: SentenceView): MarkNode[] {
  const sorted = [...collectMarks(view)].sort((a, b) => {
    if (a.start !== b.start) return a.start - b.start;
    const lengthDiff = b.end - b.start - (a.end - a.start);
    if (lengthDiff !== 0) return lengthDiff;
    if (a.kind !== b.kind) return a.kind === "role" ? -1 : 1;
    return a.label.localeCompare(b.label);
  });
  const roots: MarkNode[] = [];
  const stack: MarkNode[] = [];
  for (const mark of sorted) {
    while (stack.length && stack[stack.length - 1]!.end <= mark.start) stack.pop();
    const parent = stack[stack.length - 1];
    // Partial overlap has no meaning over token spans; clip to the parent.
    const node: MarkNode = { ...mark, children: [] };
    if (parent && node.end > parent.end) node.end = parent.end;
    if (parent) parent.children.push(node);
    else roots.push(node);
    stack.push(node);
  }
  return roots;
}

function renderTokens(tokens: string[], start: number, end: number): string {
  return escapeHtml(tokens.slice(start, end).join(" "));
}

function renderNode(node: MarkNode, tokens: string[]): string {
  const content = renderRange(tokens, node.start, node.end, node.children);
  if (node.kind === "trigger") {
    return (
      `<span class="trigger" data-instance="${escapeHtml(node.instanceId)}"` +
      ` data-frame="${escapeHtml(node.label)}">` +
      `<span class="frame-label">${escapeHtml(node.label)}</span>` +
      `<span class="trigger-text">${content}</span></span>`
    );
  }
  return (
    `<span class="role" data-instance="${escapeHtml(node.instanceId)}"` +
    ` data-role="${escapeHtml(node.label)}" title="${escapeHtml(node.title)}">` +
    `<span class="bracket">[</span>${content}` +
    `<span class="role-tag">${escapeHtml(node.label)}</span>` +
    `<span class="bracket">]</span></span>`
  );
}

function renderRange(
  tokens: string[],
  start: number,
  end: number,
  children: MarkNode[],
): string {
  const parts: string[] = [];
  let cursor = start;
  for (const child of children) {
    if (child.start > cursor) parts.push(renderTokens(tokens, cursor, child.start));
    parts.push(renderNode(child, tokens));
    cursor = Math.max(cursor, child.end);
  }
  if (cursor < end) parts.push(renderTokens(tokens, cursor, end));
  return parts.filter(Boolean).join(" ");
}

function renderMeta(instance: InstanceRecord): string {
  const chips: string[] = [
    `<span class="chip frame">${escapeHtml(instance.frame)}</span>`,
  ];
  const annotation = instance.annotation;
  if (annotation) {
    chips.push(
      `<span class="chip construction">${escapeHtml(annotation.construction)}</span>`,
    );
    chips.push(
      `<span class="chip root">${annotation.is_root ? "root" : "embedded"}</span>`,
    );
    for (const link of annotation.role_links) {
      chips.push(
        `<span class="chip link ${link.resolved ? "resolved" : "unresolved"}">` +
          `${escapeHtml(`${link.role}: ${link.path}`)}</span>`,
      );
    }
  } else if (instance.annotation === null) {
    chips.push(`<span class="chip missing">analysis unavailable</span>`);
  }
  return (
    `<li data-instance="${escapeHtml(instance.instance_id)}">${chips.join("")}</li>`
  );
}

/**
 * One sentence as HTML. Sentences without instances come back as plain
 * text; annotated ones get the marked-up token stream plus a meta line per
 * instance (frame, construction, root status, role links).
 */
export function renderAnnotatedSentence(view: SentenceView): string {
  if (!view.instances.length) {
    return `<p class="sentence plain" data-sent-id="${escapeHtml(view.sent_id)}">${escapeHtml(view.text)}</p>`;
  }
  const body = renderRange(view.tokens, 0, view.tokens.length, sentenceMarks(view));
  const meta = view.instances.map(renderMeta).join("");
  return (
    `<div class="sentence annotated" data-sent-id="${escapeHtml(view.sent_id)}"` +
    ` title="${escapeHtml(view.text)}">` +
    `<p class="sentence-text">${body}</p>` +
    `<ul class="instance-meta">${meta}</ul></div>`
  );
}
