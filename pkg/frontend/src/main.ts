// Application bootstrap: two side-by-side context-form panels over one
// shared letter bar dataset, exactly the layout of the original search
// page. The API base URL can be injected via window.CONCORDIA_API_BASE.

import { ApiClient } from "./api.js";
import { el } from "./render.js";
import { Panel } from "./panel.js";

declare global {
  interface Window {
    CONCORDIA_API_BASE?: string;
  }
}

export interface App {
  panels: [Panel, Panel];
  ready: Promise<void>;
}

export function initApp(root: HTMLElement, api?: ApiClient): App {
  const client = api ?? new ApiClient(window.CONCORDIA_API_BASE ?? "");
  root.replaceChildren();
  root.append(el("h1", undefined, "Онлайн-конкорданс"));

  const banner = el("p", "banner");
  banner.hidden = true;
  root.append(banner);

  const kwic = new Panel(client, "kwic", "+/- 7 слів");
  const sentence = new Panel(client, "sentence", "речення");
  const panels = el("div", "panels");
  panels.append(kwic.root, sentence.root);
  root.append(panels);

  const ready = client
    .letters()
    .then((data) => {
      kwic.setLetters(data.letters);
      sentence.setLetters(data.letters);
    })
    .catch(() => {
      banner.textContent =
        "Сервер конкордансу недоступний; пошук можна повторити пізніше.";
      banner.hidden = false;
    });

  return { panels: [kwic, sentence], ready };
}

if (typeof document !== "undefined") {
  const mount = document.getElementById("app");
  if (mount) initApp(mount);
}
