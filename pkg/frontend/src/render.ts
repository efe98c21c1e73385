/** DOM rendering for the correction pane. */

import type { SuggestionRecord, TokenRecord } from "./api.js";
import type { AnnotatedDocument } from "./document.js";

export interface RenderCallbacks {
  onPick(token: TokenRecord, suggestion: SuggestionRecord): void;
  onAddWord(token: TokenRecord): void;
}

const VERDICT_LABEL: Record<string, string> = {
  correct: "in the lexicon",
  correct_inflected: "inflected form",
  correct_sandhi: "sandhi compound",
  misspelt: "misspelt",
};

export function renderDocument(
  container: HTMLElement,
  doc: AnnotatedDocument,
  script: "kannada" | "roman",
  callbacks: RenderCallbacks,
): void {
  container.textContent = "";
  let cursor = 0;
  for (const token of doc.tokens) {
    if (token.start > cursor) {
      container.appendChild(document.createTextNode(doc.text.slice(cursor, token.start)));
    }
    container.appendChild(renderToken(doc, token, script, callbacks));
    cursor = token.end;
  }
  if (cursor < doc.text.length) {
    container.appendChild(document.createTextNode(doc.text.slice(cursor)));
  }
}

function renderToken(
  doc: AnnotatedDocument,
  token: TokenRecord,
  script: "kannada" | "roman",
  callbacks: RenderCallbacks,
): HTMLElement {
  const span = document.createElement("span");
  span.className = `token ${token.verdict}`;
  span.textContent = doc.displayForm(token, token.error ? "roman" : script);
  span.title = tooltip(token);
  if (token.verdict === "misspelt" && !token.error) {
    span.classList.add("flagged");
    span.appendChild(buildPicker(doc, token, callbacks));
  }
  return span;
}

function tooltip(token: TokenRecord): string {
  const parts = [VERDICT_LABEL[token.verdict] ?? token.verdict];
  if (token.split) {
    parts.push(
      `${token.split.prefix} + ${token.split.suffix} [${token.split.rule}]`,
      `${token.split.prefix_kannada} + ${token.split.suffix_kannada}`,
    );
  }
  if (token.analysis) {
    const chain = token.analysis.stripped
      .map((s) => `${s.form}/${s.category}`)
      .join(", ");
    parts.push(`root ${token.analysis.root} (${token.analysis.root_kannada}) [${chain}]`);
  }
  if (token.error) {
    parts.push(token.error);
  }
  return parts.join("\n");
}

function buildPicker(
  doc: AnnotatedDocument,
  token: TokenRecord,
  callbacks: RenderCallbacks,
): HTMLElement {
  const picker = document.createElement("span");
  picker.className = "picker";
  const list = document.createElement("ul");
  for (const suggestion of doc.suggestionsFor(token)) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = `${suggestion.kannada} (${suggestion.roman})`;
    button.title = suggestion.provenance + (suggestion.rule ? `, ${suggestion.rule}` : "");
    button.addEventListener("click", () => callbacks.onPick(token, suggestion));
    item.appendChild(button);
    list.appendChild(item);
  }
  picker.appendChild(list);
  const add = document.createElement("button");
  add.type = "button";
  add.className = "add-word";
  add.textContent = "add to lexicon";
  add.addEventListener("click", () => callbacks.onAddWord(token));
  picker.appendChild(add);
  return picker;
}

export function renderCounts(element: HTMLElement, counts: Record<string, number>): void {
  if (!("total" in counts)) {
    element.textContent = "";
    return;
  }
  element.textContent =
    `${counts.total} words: ${counts.correct} correct, ` +
    `${counts.inflected} inflected, ${counts.sandhi} sandhi, ` +
    `${counts.misspelt} misspelt`;
}
