// Typed client for the concordance JSON API. The UI never builds context
// text itself: windows arrive as left/gap/keyword/right fields and are
// rendered verbatim.

export type ContextForm = "kwic" | "sentence";
export type MatchMode = "exact" | "prefix" | "substring";

export interface LetterEntry {
  letter: string;
  lemmas: number;
}

export interface LettersResponse {
  letters: LetterEntry[];
  total_lemmas: number;
}

export interface LemmaListEntry {
  lemma: string;
  frequency: number;
  concordance: string;
}

export interface LemmasResponse {
  letter: string;
  lemmas: LemmaListEntry[];
}

export interface OccurrenceRef {
  paragraph: number;
  sentence: number;
  token: number;
  surface: string;
  lemma: string;
  pos: string;
}

export interface ContextWindow {
  number: number;
  left: string;
  gap: string;
  keyword: string;
  right: string;
  occurrence: OccurrenceRef;
}

export interface ConcordanceResponse {
  query: { kind: "lemma"; text: string; context: ContextForm; k: number };
  total: number;
  windows: ContextWindow[];
}

export interface SearchGroup {
  surface: string;
  total: number;
  windows: ContextWindow[];
}

export interface SearchResponse {
  query: {
    kind: "form";
    text: string;
    match: MatchMode;
    context: ContextForm;
    k: number;
  };
  total: number;
  groups: SearchGroup[];
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await fetch(this.base + path, { signal });
    if (!response.ok) {
      let detail = `HTTP ${response.status}`;
      try {
        const body = (await response.json()) as { detail?: string };
        if (body.detail) detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  letters(signal?: AbortSignal): Promise<LettersResponse> {
    return this.get("/api/letters", signal);
  }

  lemmasForLetter(letter: string, signal?: AbortSignal): Promise<LemmasResponse> {
    return this.get(`/api/lemmas/${encodeURIComponent(letter)}`, signal);
  }

  concordance(
    lemma: string,
    context: ContextForm,
    signal?: AbortSignal,
  ): Promise<ConcordanceResponse> {
    const params = new URLSearchParams({ lemma, context });
    return this.get(`/api/concordance?${params}`, signal);
  }

  search(
    q: string,
    match: MatchMode,
    context: ContextForm,
    signal?: AbortSignal,
  ): Promise<SearchResponse> {
    const params = new URLSearchParams({ q, match, context });
    return this.get(`/api/search?${params}`, signal);
  }
}
