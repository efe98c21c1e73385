/** Fixture-backed tests: the UI shows service data verbatim. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import type { CorpusReport, CorpusService } from "../src/api.js";
import { AnnotatedDocument, applyCorrections } from "../src/document.js";

const here = dirname(fileURLToPath(import.meta.url));
const fixture = JSON.parse(
  readFileSync(join(here, "fixtures", "corpus_fixture.json"), "utf-8"),
) as { document: string; response: string };

class FixtureService implements CorpusService {
  choices: { misspelt: string; chosen: string }[] = [];
  added: string[] = [];
  failChoices = false;

  corpus(_text: string): Promise<CorpusReport> {
    return Promise.resolve(JSON.parse(fixture.response) as CorpusReport);
  }

  recordChoice(misspelt: string, chosen: string): Promise<void> {
    if (this.failChoices) {
      return Promise.reject(new Error("offline"));
    }
    this.choices.push({ misspelt, chosen });
    return Promise.resolve();
  }

  addWord(word: string): Promise<void> {
    this.added.push(word);
    return Promise.resolve();
  }
}

class DownService implements CorpusService {
  corpus(): Promise<CorpusReport> {
    return Promise.reject(new Error("connection refused"));
  }
  recordChoice(): Promise<void> {
    return Promise.reject(new Error("connection refused"));
  }
  addWord(): Promise<void> {
    return Promise.reject(new Error("connection refused"));
  }
}

describe("suggestion fidelity", () => {
  it("displays suggestions byte-identical to the recorded response", async () => {
    const doc = new AnnotatedDocument(fixture.document);
    await doc.annotate(new FixtureService());
    const recorded = JSON.parse(fixture.response) as CorpusReport;
    expect(doc.tokens.length).toBe(recorded.tokens.length);
    for (let i = 0; i < recorded.tokens.length; i++) {
      const shown = JSON.stringify(doc.suggestionsFor(doc.tokens[i]));
      const sent = JSON.stringify(recorded.tokens[i].suggestions ?? []);
      expect(shown).toBe(sent);
    }
    // verdicts and counts pass through untouched as well
    expect(JSON.stringify(doc.tokens.map((t) => t.verdict))).toBe(
      JSON.stringify(recorded.tokens.map((t) => t.verdict)),
    );
    expect(JSON.stringify(doc.counts)).toBe(JSON.stringify(recorded.counts));
  });

  it("spans are ordered and non-overlapping", async () => {
    const doc = new AnnotatedDocument(fixture.document);
    await doc.annotate(new FixtureService());
    let cursor = 0;
    for (const token of doc.tokens) {
      expect(token.start).toBeGreaterThanOrEqual(cursor);
      expect(token.end).toBeGreaterThanOrEqual(token.start);
      expect(fixture.document.slice(token.start, token.end)).toBe(token.raw);
      cursor = token.end;
    }
  });
});

describe("corrections log", () => {
  it("replaying the log reproduces the displayed text", async () => {
    const service = new FixtureService();
    const doc = new AnnotatedDocument(fixture.document);
    await doc.annotate(service);
    const span = doc.flagged()[0];
    const suggestion = doc.suggestionsFor(span)[0];
    await doc.pickSuggestion(service, span, suggestion);
    expect(doc.text).not.toBe(doc.original);
    expect(applyCorrections(doc.original, doc.corrections)).toBe(doc.text);
    expect(service.choices).toEqual([
      { misspelt: span.raw, chosen: doc.suggestionForm(span, suggestion) },
    ]);
  });

  it("rejects picking a suggestion from another span", async () => {
    const service = new FixtureService();
    const doc = new AnnotatedDocument(fixture.document);
    await doc.annotate(service);
    const [first, second] = doc.flagged();
    const foreign = doc.suggestionsFor(second)[0];
    await expect(doc.pickSuggestion(service, first, foreign)).rejects.toThrow(
      /does not belong/,
    );
  });

  it("keeps the correction and queues a retry when the choice POST fails", async () => {
    const service = new FixtureService();
    service.failChoices = true;
    const doc = new AnnotatedDocument(fixture.document);
    await doc.annotate(service);
    const span = doc.flagged()[0];
    await doc.pickSuggestion(service, span, doc.suggestionsFor(span)[0]);
    expect(doc.text).not.toBe(doc.original); // correction kept locally
    expect(doc.pendingChoices.length).toBe(1);
    service.failChoices = false;
    await doc.retryPendingChoices(service);
    expect(doc.pendingChoices).toEqual([]);
    expect(service.choices.length).toBe(1);
  });
});

describe("unreachable service", () => {
  it("flags the state and keeps the document editable", async () => {
    const doc = new AnnotatedDocument("ಮಳೆ ಬರುತ್ತದೆ");
    await doc.annotate(new DownService());
    expect(doc.state).toBe("unreachable");
    expect(doc.lastError).toMatch(/connection refused/);
    expect(doc.text).toBe(doc.original);
    expect(doc.tokens).toEqual([]);
  });
});
