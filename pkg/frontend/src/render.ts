// DOM builders. Everything is created programmatically with textContent,
// so corpus text can never inject markup; keywords get a real <b> element.

import type { ContextWindow, LemmaListEntry, LetterEntry, SearchGroup } from "./api.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderWindow(w: ContextWindow): HTMLLIElement {
  const li = el("li", "window");
  li.value = w.number;
  li.append(w.left ? w.left + w.gap : "");
  const kw = el("b", "kw", w.keyword);
  li.append(kw);
  li.append(w.right);
  return li;
}

export function renderWindowList(windows: ContextWindow[]): HTMLOListElement {
  const ol = el("ol", "windows");
  for (const w of windows) ol.append(renderWindow(w));
  return ol;
}

export function renderTotal(total: number): HTMLParagraphElement {
  return el("p", "total", `${total} контекстів`);
}

export function renderConcordance(
  lemma: string,
  total: number,
  windows: ContextWindow[],
): DocumentFragment {
  const fragment = document.createDocumentFragment();
  fragment.append(el("h3", "result-heading", `КОНКОРДАНС ЛЕМИ ${lemma}`));
  fragment.append(renderTotal(total));
  if (windows.length > 0) fragment.append(renderWindowList(windows));
  return fragment;
}

export function renderSearchResults(
  query: string,
  total: number,
  groups: SearchGroup[],
): DocumentFragment {
  const fragment = document.createDocumentFragment();
  fragment.append(el("h3", "result-heading", `Пошук: ${query}`));
  fragment.append(renderTotal(total));
  for (const group of groups) {
    fragment.append(el("h4", "group-heading",
      `${group.surface} (${group.total})`));
    fragment.append(renderWindowList(group.windows));
  }
  return fragment;
}

export function renderLetterBar(
  letters: LetterEntry[],
  onPick: (letter: string) => void,
): HTMLParagraphElement {
  const bar = el("p", "letters");
  bar.append("Пошук за лемою: ");
  for (const entry of letters) {
    const label = entry.letter === "A-Z" ? "A…Z"
      : entry.letter === "0-9" ? "0…9" : entry.letter;
    const link = el("a", "letter", label);
    link.href = "#";
    link.title = `${entry.lemmas}`;
    link.addEventListener("click", (event) => {
      event.preventDefault();
      onPick(entry.letter);
    });
    bar.append(link, " ");
  }
  return bar;
}

export function renderLemmaList(
  letter: string,
  lemmas: LemmaListEntry[],
  onPick: (lemma: string) => void,
): DocumentFragment {
  const fragment = document.createDocumentFragment();
  fragment.append(el("h3", "result-heading", `Леми на «${letter}»`));
  if (lemmas.length === 0) {
    fragment.append(el("p", "total", "Лем немає."));
    return fragment;
  }
  const list = el("ul", "lemmas");
  for (const entry of lemmas) {
    const item = el("li");
    const link = el("a", "lemma", entry.lemma);
    link.href = "#";
    link.addEventListener("click", (event) => {
      event.preventDefault();
      onPick(entry.lemma);
    });
    item.append(link, ` (${entry.frequency})`);
    list.append(item);
  }
  fragment.append(list);
  return fragment;
}
