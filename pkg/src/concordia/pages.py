"""Server-rendered HTML: result lists, letter pages, and the entry page.

Layout follows the original online concordance: two context-form panels
(KWIC and sentence) with three match-mode radios each, a letter bar
underneath, and numbered result lines with the keyword in bold.
"""

from __future__ import annotations

from html import escape
from urllib.parse import quote

from .alphabet import DIGIT_GROUP, LATIN_GROUP, LETTER_BAR
from .concordance import ContextWindow

_STYLE = """\
body { font-family: Georgia, serif; margin: 2em auto; max-width: 56em; }
h1 { font-size: 1.4em; }
.panels { display: flex; gap: 2em; flex-wrap: wrap; }
.panel { border: 1px solid #999; padding: 1em; flex: 1 1 22em; }
.letters a { margin-right: .4em; text-decoration: none; }
ol.windows li { margin-bottom: .35em; }
b.kw { background: #ffe9a8; }
.total { color: #444; }
"""


def page(title: str, body: str) -> str:
    return (
        "<!DOCTYPE html>\n"
        '<html lang="uk">\n<head>\n<meta charset="utf-8">\n'
        f"<title>{escape(title)}</title>\n"
        f"<style>\n{_STYLE}</style>\n</head>\n<body>\n{body}\n</body>\n</html>\n"
    )


def letter_label(letter: str) -> str:
    if letter == LATIN_GROUP:
        return "A…Z"
    if letter == DIGIT_GROUP:
        return "0…9"
    return letter


def concordance_url(lemma: str, context: str = "kwic", html: bool = True) -> str:
    fmt = "&format=html" if html else ""
    return f"/api/concordance?lemma={quote(lemma)}&context={context}{fmt}"


def lemmas_url(letter: str, html: bool = True) -> str:
    fmt = "?format=html" if html else ""
    return f"/api/lemmas/{quote(letter)}{fmt}"


def letter_bar(current: str | None = None, file_links: bool = False) -> str:
    links = []
    for letter in LETTER_BAR:
        label = escape(letter_label(letter))
        href = letter_file_name(letter) if file_links else lemmas_url(letter)
        if letter == current:
            links.append(f"<b>{label}</b>")
        else:
            links.append(f'<a href="{href}">{label}</a>')
    return f'<p class="letters">Пошук за лемою: {" ".join(links)}</p>'


def letter_file_name(letter: str) -> str:
    if letter == LATIN_GROUP:
        return "letter-latin.html"
    if letter == DIGIT_GROUP:
        return "letter-digits.html"
    return f"letter-{ord(letter):04x}.html"


def windows_list(windows: list[ContextWindow]) -> str:
    items = []
    for w in windows:
        left = escape(w.left)
        gap = escape(w.keyword_gap) if w.left else ""
        right = escape(w.right)
        items.append(
            f'<li value="{w.number}">{left}{gap}'
            f'<b class="kw">{escape(w.keyword)}</b>{right}</li>'
        )
    return '<ol class="windows">\n' + "\n".join(items) + "\n</ol>" if items else "<p>0 контекстів</p>"


def concordance_page(lemma: str, context: str, windows: list[ContextWindow]) -> str:
    mode = "+/- 7 слів" if context == "kwic" else "речення"
    body = (
        f"<h1>КОНКОРДАНС ЛЕМИ {escape(lemma)} (форма контексту — {escape(mode)})</h1>\n"
        f'<p class="total">Всього контекстів: {len(windows)}</p>\n'
        + windows_list(windows)
    )
    return page(f"Конкорданс: {lemma}", body)


def search_page(query: str, match: str, context: str,
                groups: list[tuple[str, list[ContextWindow]]]) -> str:
    total = sum(len(ws) for _, ws in groups)
    parts = [
        f"<h1>Пошук словоформи «{escape(query)}» ({escape(match)})</h1>",
        f'<p class="total">Всього контекстів: {total}</p>',
    ]
    for surface, windows in groups:
        parts.append(f"<h2>{escape(surface)} ({len(windows)})</h2>")
        parts.append(windows_list(windows))
    if not groups:
        parts.append("<p>0 контекстів</p>")
    return page(f"Пошук: {query}", "\n".join(parts))


def letter_page(letter: str, lemmas: list[tuple[str, int]],
                file_links: bool = False) -> str:
    items = "\n".join(
        f'<li><a href="{concordance_url(lemma)}">{escape(lemma)}</a>'
        f" ({freq})</li>"
        for lemma, freq in lemmas
    )
    body = (
        f"<h1>Леми на «{escape(letter_label(letter))}»</h1>\n"
        + letter_bar(letter, file_links)
        + (f"<ul>\n{items}\n</ul>" if items else "<p>Лем немає.</p>")
    )
    return page(f"Леми: {letter_label(letter)}", body)


def _panel(context: str, heading: str) -> str:
    return f"""\
<div class="panel">
<h2>Форма контексту — {escape(heading)}</h2>
<form action="/api/search" method="get">
<input type="hidden" name="context" value="{context}">
<input type="hidden" name="format" value="html">
<input type="text" name="q">
<input type="submit" value="Submit Query">
<p>Пошук за
<label><input type="radio" name="match" value="exact" checked> словоформою</label>
<label><input type="radio" name="match" value="prefix"> початковими літерами</label>
<label><input type="radio" name="match" value="substring"> довільною частиною слова</label>
</p>
</form>
</div>"""


def entry_page(title: str = "Онлайн-конкорданс",
               file_links: bool = False) -> str:
    body = (
        f"<h1>{escape(title)}</h1>\n"
        '<div class="panels">\n'
        + _panel("kwic", "+/- 7 слів")
        + "\n"
        + _panel("sentence", "речення")
        + "\n</div>\n"
        + letter_bar(None, file_links)
    )
    return page(title, body)
