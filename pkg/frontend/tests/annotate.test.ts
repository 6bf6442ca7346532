/**
 * Annotated sentence rendering against the recorded contrastive document:
 * the same crash described noun-first and verb-first must come out with
 * visibly different frame labels on "collision" and "hit".
 */

import { describe, expect, it } from "vitest";

import { renderAnnotatedSentence, sentenceMarks } from "../src/annotate.js";
import type { DocumentResponse, SentenceView } from "../src/types.js";
import { fixture, tagsWithClass, textContent } from "./helpers.js";

const doc = fixture<DocumentResponse>("fig1_document.json");
const [nounSentence, verbSentence] = doc.sentences as [SentenceView, SentenceView];

function triggerOf(html: string): { frame: string; text: string } {
  const match = /<span class="trigger"[^>]*data-frame="([^"]*)">.*?<span class="trigger-text">(.*?)<\/span><\/span>/.exec(
    html,
  );
  expect(match).not.toBeNull();
  return { frame: match![1]!, text: textContent(match![2]!) };
}

describe("contrastive pair", () => {
  it("boxes 'collision' with the Impact frame label", () => {
    const html = renderAnnotatedSentence(nounSentence);
    const trigger = triggerOf(html);
    expect(trigger.text).toBe("collision");
    expect(trigger.frame).toBe("Impact");
    expect(html).toContain(`<span class="frame-label">Impact</span>`);
  });

  it("boxes 'hit' with the Cause_impact frame label", () => {
    const html = renderAnnotatedSentence(verbSentence);
    const trigger = triggerOf(html);
    expect(trigger.text).toBe("hit");
    expect(trigger.frame).toBe("Cause_impact");
  });

  it("labels the two descriptions with distinct frames", () => {
    const first = triggerOf(renderAnnotatedSentence(nounSentence));
    const second = triggerOf(renderAnnotatedSentence(verbSentence));
    expect(first.frame).not.toBe(second.frame);
  });

  it("brackets role spans and carries the dependency path on hover", () => {
    const html = renderAnnotatedSentence(nounSentence);
    const [role] = tagsWithClass(html, "role");
    expect(role).toContain('data-role="Impactors"');
    expect(role).toContain('title="Impactors: nmod↓"');
    expect(html).toContain('<span class="bracket">[</span>');
    expect(textContent(html)).toContain("between a car and a cyclist");
  });

  it("shows construction and root status for every instance", () => {
    const nounHtml = renderAnnotatedSentence(nounSentence);
    expect(nounHtml).toContain('<span class="chip construction">nonverbal</span>');
    expect(nounHtml).toContain('<span class="chip root">root</span>');
    const verbHtml = renderAnnotatedSentence(verbSentence);
    expect(verbHtml).toContain('<span class="chip construction">vrb_active</span>');
    expect(verbHtml).toContain("Agent: nsubj↓");
    expect(verbHtml).toContain("Impactee: obj↓");
  });
});

describe("plain sentences", () => {
  it("renders a sentence without instances as unmarked text", () => {
    const view: SentenceView = {
      sent_id: "p1",
      text: "Nothing notable happened here",
      tokens: ["Nothing", "notable", "happened", "here"],
      instances: [],
    };
    const html = renderAnnotatedSentence(view);
    expect(html).toBe(
      '<p class="sentence plain" data-sent-id="p1">Nothing notable happened here</p>',
    );
  });
});

describe("span nesting", () => {
  const base = {
    sent_id: "n1",
    text: "a b c d e",
    tokens: ["a", "b", "c", "d", "e"],
  };

  it("orders marks by span start, then longer spans outside", () => {
    const view: SentenceView = {
      ...base,
      instances: [
        {
          instance_id: "i1",
          frame: "Outer",
          trigger: { start: 4, end: 5 },
          roles: [
            { name: "Wide", start: 0, end: 4 },
            { name: "Narrow", start: 1, end: 3 },
          ],
        },
      ],
    };
    const marks = sentenceMarks(view);
    expect(marks.map((mark) => mark.label)).toEqual(["Wide", "Outer"]);
    const wide = marks[0]!;
    expect(wide.children.map((child) => child.label)).toEqual(["Narrow"]);
  });

  it("nests a trigger inside a coextensive role span", () => {
    const view: SentenceView = {
      ...base,
      instances: [
        {
          instance_id: "i2",
          frame: "Event",
          trigger: { start: 1, end: 3 },
          roles: [{ name: "Theme", start: 1, end: 3 }],
        },
      ],
    };
    const [outer] = sentenceMarks(view);
    expect(outer!.kind).toBe("role");
    expect(outer!.children[0]!.kind).toBe("trigger");
    const html = renderAnnotatedSentence(view);
    expect(html.indexOf('class="role"')).toBeLessThan(html.indexOf('class="trigger"'));
  });

  it("keeps sibling marks in start order and all tokens visible", () => {
    const view: SentenceView = {
      ...base,
      instances: [
        {
          instance_id: "i3",
          frame: "Event",
          trigger: { start: 2, end: 3 },
          roles: [
            { name: "B", start: 3, end: 5 },
            { name: "A", start: 0, end: 2 },
          ],
        },
      ],
    };
    const marks = sentenceMarks(view);
    expect(marks.map((mark) => mark.label)).toEqual(["A", "Event", "B"]);
    expect(textContent(renderAnnotatedSentence(view))).toContain("a b");
  });
});
