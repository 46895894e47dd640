"""Static-site export: one HTML page per index letter plus an entry page.

Pages link into the query endpoints of the running service, mirroring
the original per-letter files that hyperlinked into the query script.
Output is deterministic: rebuilding into a fresh directory produces
byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

from . import pages
from .alphabet import LETTER_BAR
from .concordance import ConcordanceIndex


def export_site(index: ConcordanceIndex, out_dir: str,
                title: str = "Онлайн-конкорданс") -> list[str]:
    """Write the site tree; returns the relative paths written."""
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    written: list[str] = []

    entry = pages.entry_page(title, file_links=True)
    (root / "index.html").write_text(entry, encoding="utf-8")
    written.append("index.html")

    for letter in LETTER_BAR:
        lemmas = index.alphabet_map.get(letter, [])
        freqs = [(lemma, index.frequency(lemma)) for lemma in lemmas]
        name = pages.letter_file_name(letter)
        html = pages.letter_page(letter, freqs, file_links=True)
        (root / name).write_text(html, encoding="utf-8")
        written.append(name)
    return written
