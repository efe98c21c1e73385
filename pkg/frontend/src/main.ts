import { ApiClient, SuggestionRecord, TokenRecord } from "./api.js";
import { AnnotatedDocument } from "./document.js";
import { renderCounts, renderDocument } from "./render.js";

const api = new ApiClient("");
let doc = new AnnotatedDocument("");
let script: "kannada" | "roman" = "kannada";

const input = document.getElementById("input") as HTMLTextAreaElement;
const fileInput = document.getElementById("file") as HTMLInputElement;
const annotateButton = document.getElementById("annotate") as HTMLButtonElement;
const scriptToggle = document.getElementById("script-toggle") as HTMLButtonElement;
const output = document.getElementById("output") as HTMLElement;
const countsLine = document.getElementById("counts") as HTMLElement;
const banner = document.getElementById("banner") as HTMLElement;

async function annotate(text: string): Promise<void> {
  doc = new AnnotatedDocument(text);
  await doc.annotate(api);
  refresh();
}

async function reannotate(): Promise<void> {
  await doc.annotate(api);
  if (doc.pendingChoices.length > 0) {
    await doc.retryPendingChoices(api);
  }
  refresh();
}

function refresh(): void {
  banner.textContent =
    doc.state === "unreachable"
      ? `service unreachable (${doc.lastError}); the document stays editable`
      : doc.pendingChoices.length > 0
        ? `${doc.pendingChoices.length} choice(s) pending retry`
        : "";
  banner.hidden = banner.textContent === "";
  renderDocument(output, doc, script, {
    onPick: (token: TokenRecord, suggestion: SuggestionRecord) => {
      void doc.pickSuggestion(api, token, suggestion).then(reannotate);
    },
    onAddWord: (token: TokenRecord) => {
      void doc.addToLexicon(api, token).then(reannotate);
    },
  });
  renderCounts(countsLine, doc.counts);
  input.value = doc.text;
}

annotateButton.addEventListener("click", () => void annotate(input.value));
scriptToggle.addEventListener("click", () => {
  script = script === "kannada" ? "roman" : "kannada";
  scriptToggle.textContent = script === "kannada" ? "show roman" : "show Kannada";
  refresh();
});
fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  void file.text().then((text) => {
    input.value = text;
    return annotate(text);
  });
});
