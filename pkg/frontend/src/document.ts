/** The annotated document: text, verdict spans, and a corrections log.
 *
 * Corrections are recorded in application order against the text as it
 * was when each was applied, so replaying the log over the original
 * text always reproduces the current text (the round-trip invariant
 * the tests assert).
 */

import type { CorpusService, CorpusReport, SuggestionRecord, TokenRecord } from "./api.js";

export interface Correction {
  start: number;
  end: number;
  replacement: string;
}

export function applyCorrections(original: string, log: readonly Correction[]): string {
  let text = original;
  for (const edit of log) {
    text = text.slice(0, edit.start) + edit.replacement + text.slice(edit.end);
  }
  return text;
}

export type DocumentState = "editable" | "annotating" | "annotated" | "unreachable";

export class AnnotatedDocument {
  readonly original: string;
  text: string;
  tokens: TokenRecord[] = [];
  counts: Record<string, number> = {};
  corrections: Correction[] = [];
  /** choices that failed to POST and should be retried */
  pendingChoices: { misspelt: string; chosen: string }[] = [];
  state: DocumentState = "editable";
  lastError = "";

  constructor(original: string) {
    this.original = original;
    this.text = original;
  }

  /** Fetch per-token verdicts from the service; spans must be ordered. */
  async annotate(service: CorpusService): Promise<void> {
    this.state = "annotating";
    let report: CorpusReport;
    try {
      report = await service.corpus(this.text);
    } catch (err) {
      this.state = "unreachable";
      this.lastError = err instanceof Error ? err.message : String(err);
      return;
    }
    let cursor = 0;
    for (const token of report.tokens) {
      if (token.start < cursor || token.end < token.start) {
        throw new Error(`overlapping or unordered span at ${token.start}`);
      }
      cursor = token.end;
    }
    this.tokens = report.tokens;
    this.counts = report.counts;
    this.state = "annotated";
  }

  flagged(): TokenRecord[] {
    return this.tokens.filter((t) => t.verdict === "misspelt");
  }

  /** Suggestions exactly as the service sent them: no reordering, no edits. */
  suggestionsFor(token: TokenRecord): SuggestionRecord[] {
    return token.suggestions ?? [];
  }

  displayForm(token: TokenRecord, script: "kannada" | "roman"): string {
    const value = script === "kannada" ? token.kannada : token.roman;
    return value ?? token.raw;
  }

  suggestionForm(token: TokenRecord, suggestion: SuggestionRecord): string {
    return token.script === "kannada" ? suggestion.kannada : suggestion.roman;
  }

  /** Replace a flagged span with a picked suggestion and record the choice. */
  async pickSuggestion(
    service: CorpusService,
    token: TokenRecord,
    suggestion: SuggestionRecord,
  ): Promise<void> {
    const candidates = this.suggestionsFor(token);
    if (!candidates.includes(suggestion)) {
      throw new Error("suggestion does not belong to this span");
    }
    const replacement = this.suggestionForm(token, suggestion);
    this.applyEdit({ start: token.start, end: token.end, replacement });
    const choice = { misspelt: token.raw, chosen: replacement };
    try {
      await service.recordChoice(choice.misspelt, choice.chosen);
    } catch {
      // keep the correction; remember the choice for a retry
      this.pendingChoices.push(choice);
    }
  }

  async retryPendingChoices(service: CorpusService): Promise<void> {
    const queue = this.pendingChoices;
    this.pendingChoices = [];
    for (const choice of queue) {
      try {
        await service.recordChoice(choice.misspelt, choice.chosen);
      } catch {
        this.pendingChoices.push(choice);
      }
    }
  }

  async addToLexicon(service: CorpusService, token: TokenRecord): Promise<void> {
    await service.addWord(token.raw);
  }

  private applyEdit(edit: Correction): void {
    this.corrections.push(edit);
    this.text = this.text.slice(0, edit.start) + edit.replacement + this.text.slice(edit.end);
    this.tokens = []; // spans are stale until the next annotation
    this.state = "editable";
  }
}
