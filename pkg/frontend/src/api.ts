/** Typed client for the kanmorph HTTP/JSON service.
 *
 * The UI performs no linguistic computation of its own: everything it
 * displays comes verbatim from these responses.
 */

export interface SuggestionRecord {
  roman: string;
  kannada: string;
  provenance: string;
  rule: string | null;
  rank: number;
}

export interface SplitRecord {
  prefix: string;
  suffix: string;
  prefix_kannada: string;
  suffix_kannada: string;
  rule: string;
  boundary_index: number;
}

export interface StrippedMarkerRecord {
  form: string;
  category: string;
  rule: string | null;
}

export interface AnalysisRecord {
  root: string;
  root_kannada: string;
  stripped: StrippedMarkerRecord[];
}

export interface TokenRecord {
  raw: string;
  start: number;
  end: number;
  byte_offset: number;
  script: string;
  verdict: string;
  bucket: string;
  roman?: string;
  kannada?: string;
  error?: string;
  split?: SplitRecord;
  analysis?: AnalysisRecord;
  suggestions?: SuggestionRecord[];
}

export interface CorpusReport {
  tokens: TokenRecord[];
  counts: Record<string, number>;
}

export interface CorpusService {
  corpus(text: string): Promise<CorpusReport>;
  recordChoice(misspelt: string, chosen: string): Promise<void>;
  addWord(word: string): Promise<void>;
}

export class ApiClient implements CorpusService {
  constructor(readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, init);
    const body = await response.text();
    if (!response.ok) {
      let message = `${response.status} on ${path}`;
      try {
        message = JSON.parse(body).error?.message ?? message;
      } catch {
        /* non-JSON error body */
      }
      throw new Error(message);
    }
    return JSON.parse(body) as T;
  }

  corpus(text: string): Promise<CorpusReport> {
    return this.request<CorpusReport>("/corpus", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  }

  async recordChoice(misspelt: string, chosen: string): Promise<void> {
    await this.request("/choice", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ misspelt, chosen }),
    });
  }

  async addWord(word: string): Promise<void> {
    await this.request("/lexicon", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ word }),
    });
  }
}
