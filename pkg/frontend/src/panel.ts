// One context-form panel: query form with three match-mode radios, the
// letter bar, and a results region. Each panel keeps at most one request
// in flight; a newer submission aborts the pending one.

import { ApiClient, ApiError } from "./api.js";
import type { ContextForm, LetterEntry, MatchMode } from "./api.js";
import {
  el,
  renderConcordance,
  renderLemmaList,
  renderLetterBar,
  renderSearchResults,
} from "./render.js";

const MATCH_LABELS: [MatchMode, string][] = [
  ["exact", "словоформою"],
  ["prefix", "початковими літерами"],
  ["substring", "довільною частиною слова"],
];

export class Panel {
  readonly root: HTMLElement;
  private readonly input: HTMLInputElement;
  private readonly message: HTMLElement;
  private readonly results: HTMLElement;
  private readonly barSlot: HTMLElement;
  private inflight: AbortController | null = null;

  constructor(
    private readonly api: ApiClient,
    readonly context: ContextForm,
    heading: string,
  ) {
    this.root = el("div", "panel");
    this.root.dataset.context = context;
    this.root.append(el("h2", undefined, `Форма контексту — ${heading}`));

    const form = el("form", "query-form");
    this.input = el("input");
    this.input.type = "text";
    this.input.name = "q";
    const submit = el("input");
    submit.type = "submit";
    submit.value = "Submit Query";
    form.append(this.input, " ", submit);

    const modes = el("p", "modes", "Пошук за ");
    for (const [value, label] of MATCH_LABELS) {
      const radio = el("input");
      radio.type = "radio";
      radio.name = `match-${context}`;
      radio.value = value;
      radio.checked = value === "exact";
      const wrap = el("label");
      wrap.append(radio, ` ${label} `);
      modes.append(wrap);
    }
    form.append(modes);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submitQuery();
    });

    this.message = el("p", "message");
    this.message.hidden = true;
    this.barSlot = el("div", "bar-slot");
    this.results = el("div", "results");
    this.root.append(form, this.message, this.barSlot, this.results);
  }

  get matchMode(): MatchMode {
    const checked = this.root.querySelector<HTMLInputElement>(
      `input[name="match-${this.context}"]:checked`,
    );
    return (checked?.value as MatchMode) ?? "exact";
  }

  setLetters(letters: LetterEntry[]): void {
    this.barSlot.replaceChildren(
      renderLetterBar(letters, (letter) => void this.showLetter(letter)),
    );
  }

  showError(text: string): void {
    this.message.textContent = text;
    this.message.hidden = false;
  }

  private clearMessage(): void {
    this.message.hidden = true;
    this.message.textContent = "";
  }

  private begin(): AbortSignal {
    this.inflight?.abort();
    this.inflight = new AbortController();
    return this.inflight.signal;
  }

  async submitQuery(): Promise<void> {
    const query = this.input.value.trim();
    if (!query) {
      this.showError("Введіть запит.");
      return;
    }
    this.clearMessage();
    const signal = this.begin();
    try {
      const data = await this.api.search(query, this.matchMode, this.context, signal);
      this.results.replaceChildren(
        renderSearchResults(query, data.total, data.groups),
      );
    } catch (error) {
      this.reportFailure(error);
    }
  }

  async showLetter(letter: string): Promise<void> {
    this.clearMessage();
    const signal = this.begin();
    try {
      const data = await this.api.lemmasForLetter(letter, signal);
      this.results.replaceChildren(
        renderLemmaList(letter, data.lemmas, (lemma) => void this.showLemma(lemma)),
      );
    } catch (error) {
      this.reportFailure(error);
    }
  }

  async showLemma(lemma: string): Promise<void> {
    this.clearMessage();
    const signal = this.begin();
    try {
      const data = await this.api.concordance(lemma, this.context, signal);
      this.results.replaceChildren(
        renderConcordance(lemma, data.total, data.windows),
      );
    } catch (error) {
      this.reportFailure(error);
    }
  }

  private reportFailure(error: unknown): void {
    if (error instanceof DOMException && error.name === "AbortError") {
      return; // superseded by a newer request
    }
    if (error instanceof ApiError) {
      this.showError(error.message);
      return;
    }
    this.showError("Сервер недоступний. Спробуйте ще раз.");
  }
}
