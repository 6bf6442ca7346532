/** Shared test utilities: fixture loading and light HTML probing. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, name), "utf-8")) as T;
}

/** All values of one data-* attribute, in document order. */
export function attrValues(html: string, attr: string): string[] {
  const pattern = new RegExp(`${attr}="([^"]*)"`, "g");
  return [...html.matchAll(pattern)].map((match) => match[1]!);
}

/** Opening tags that carry the given class token. */
export function tagsWithClass(html: string, cls: string): string[] {
  const pattern = new RegExp(`<[a-z]+ class="[^"]*\\b${cls}\\b[^"]*"[^>]*>`, "g");
  return html.match(pattern) ?? [];
}

/** Text content with all tags stripped, whitespace collapsed. */
export function textContent(html: string): string {
  return html
    .replace(/<[^>]+>/g, " ")
    .replace(/\s+/g, " ")
    .trim();
}
