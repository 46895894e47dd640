"""Concordance index and context extraction.

The index is built once from a tagged document and is immutable: it maps
every lemma and every uppercased wordform to its occurrence list in
document order, so the length of a list IS the absolute frequency.
Context windows are rendered on demand from the document tokens, never
stored, and never cross a paragraph boundary.

Two presentation forms are supported: the sentence form (previous +
own + next sentence within the paragraph) and the KWIC form (a budget
of k whitespace-delimited chunks on each side; a chunk is a word with
its attached punctuation, or a free-standing punctuation group like the
dialogue dash, which consumes budget exactly like a word).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .alphabet import (
    LETTER_BAR,
    collation_key,
    letter_of,
    match_key,
    require_letter,
)
from .annotator import TaggedDocument, TaggedToken, render_tagged
from .errors import EmptyQueryError, MalformedLineError
from .lexicon import PosTag, parse_pos
from .text_model import TokenKind, decode_escapes

SNAPSHOT_MAGIC = "concordia-snapshot"
SNAPSHOT_VERSION = "1"


@dataclass(frozen=True)
class Occurrence:
    """One tagged word token, addressed by paragraph/sentence/token ordinals."""

    paragraph: int
    sentence: int
    token: int
    surface: str
    lemma: str
    pos: PosTag


@dataclass(frozen=True)
class ContextWindow:
    """One numbered concordance line with the keyword held separately.

    ``keyword_gap`` is the original whitespace between the left context
    and the keyword (empty when the keyword touches attached punctuation,
    as after an opening quote).
    """

    number: int
    left: str
    keyword: str
    right: str
    occurrence: Occurrence
    keyword_gap: str = " "

    @property
    def text(self) -> str:
        gap = self.keyword_gap if self.left else ""
        return f"{self.left}{gap}{self.keyword}{self.right}"


class ConcordanceIndex:
    """Inverted index over a tagged document; read-only after construction."""

    def __init__(self, document: TaggedDocument):
        self.document = document
        self.by_lemma: dict[str, list[Occurrence]] = {}
        self.by_form: dict[str, list[Occurrence]] = {}
        self._lemma_by_key: dict[str, str] = {}
        self._form_by_key: dict[str, str] = {}
        for p_idx, para in enumerate(document.paragraphs):
            for t_idx, tok in enumerate(para.tokens):
                if tok.kind is not TokenKind.WORD or not tok.tagged:
                    continue
                sent = _sentence_index(para.sentences, t_idx)
                occ = Occurrence(p_idx, sent, t_idx, tok.surface,
                                 tok.lemma, tok.pos)
                self.by_lemma.setdefault(tok.lemma, []).append(occ)
                self._lemma_by_key.setdefault(match_key(tok.lemma), tok.lemma)
                form = tok.surface.upper()
                self.by_form.setdefault(form, []).append(occ)
                self._form_by_key.setdefault(match_key(form), form)
        self.alphabet_map: dict[str, list[str]] = {}
        for lemma in self.by_lemma:
            self.alphabet_map.setdefault(letter_of(lemma), []).append(lemma)
        for lemmas in self.alphabet_map.values():
            lemmas.sort(key=collation_key)

    # -- lookups ---------------------------------------------------------

    def frequency(self, lemma: str) -> int:
        return len(self.occurrences(lemma))

    def occurrences(self, lemma: str) -> list[Occurrence]:
        hits = self.by_lemma.get(lemma)
        if hits is None:
            stored = self._lemma_by_key.get(match_key(lemma))
            hits = self.by_lemma.get(stored, []) if stored else []
        return hits

    def lemmas_for_letter(self, letter: str) -> list[str]:
        require_letter(letter)
        return list(self.alphabet_map.get(letter, []))

    def letter_counts(self) -> list[tuple[str, int]]:
        return [(l, len(self.alphabet_map.get(l, ()))) for l in LETTER_BAR]

    @property
    def document_checksum(self) -> str:
        digest = hashlib.sha256(render_tagged(self.document).encode("utf-8"))
        return digest.hexdigest()


def build_index(document: TaggedDocument) -> ConcordanceIndex:
    """Index every tagged word of the document."""
    return ConcordanceIndex(document)


def _sentence_index(spans, token_index: int) -> int:
    for k, sp in enumerate(spans):
        if sp.start <= token_index < sp.stop:
            return k
    return 0


# -- window extraction ---------------------------------------------------


def _visible(tokens: list[TaggedToken]) -> list[tuple[int, TaggedToken]]:
    """Tokens that take part in rendering (translation notes removed)."""
    return [(i, t) for i, t in enumerate(tokens)
            if t.kind is not TokenKind.NOTE]


def _chunks(visible: list[tuple[int, TaggedToken]]) -> list[list[int]]:
    """Group visible token positions into whitespace-delimited chunks."""
    groups: list[list[int]] = []
    for pos, (i, t) in enumerate(visible):
        if pos == 0 or t.gap:
            groups.append([pos])
        else:
            groups[-1].append(pos)
    return groups


def _render(visible: list[tuple[int, TaggedToken]], lead_gap: bool = False) -> str:
    parts = []
    for pos, (_, t) in enumerate(visible):
        text = decode_escapes(t.surface) if t.kind is TokenKind.WORD else t.surface
        parts.append((t.gap if pos or lead_gap else "") + text)
    return "".join(parts)


def _window(tokens: list[TaggedToken], occ: Occurrence, number: int,
            lo: int, hi: int) -> ContextWindow:
    """Render token range [lo, hi) split around the occurrence token."""
    visible = _visible(tokens)
    left = [(i, t) for i, t in visible if lo <= i < occ.token]
    right = [(i, t) for i, t in visible if occ.token < i < hi]
    return ContextWindow(
        number=number,
        left=_render(left),
        keyword=decode_escapes(occ.surface),
        right=_render(right, lead_gap=True),
        occurrence=occ,
        keyword_gap=tokens[occ.token].gap,
    )


def kwic_context(index: ConcordanceIndex, occ: Occurrence,
                 k: int = 7, number: int = 1) -> ContextWindow:
    """KWIC window: at most k chunks either side, inside the paragraph."""
    if k < 1:
        raise ValueError("window size k must be >= 1")
    tokens = index.document.paragraphs[occ.paragraph].tokens
    visible = _visible(tokens)
    groups = _chunks(visible)
    own = next(
        gi for gi, grp in enumerate(groups)
        if any(visible[p][0] == occ.token for p in grp)
    )
    lo_group = groups[max(0, own - k)]
    hi_group = groups[min(len(groups) - 1, own + k)]
    lo = visible[lo_group[0]][0]
    hi = visible[hi_group[-1]][0] + 1
    return _window(tokens, occ, number, lo, hi)


def sentence_context(index: ConcordanceIndex, occ: Occurrence,
                     number: int = 1) -> ContextWindow:
    """Sentence window: previous + own + next sentence of the paragraph."""
    para = index.document.paragraphs[occ.paragraph]
    spans = para.sentences
    s = occ.sentence
    lo = spans[s - 1].start if s > 0 else spans[s].start
    hi = spans[s + 1].stop if s + 1 < len(spans) else spans[s].stop
    return _window(para.tokens, occ, number, lo, hi)


def concordance_for_lemma(index: ConcordanceIndex, lemma: str,
                          mode: str = "kwic", k: int = 7) -> list[ContextWindow]:
    """All contexts of a lemma, numbered 1..n in document order."""
    if mode not in ("kwic", "sentence"):
        raise ValueError(f"unknown context mode {mode!r}")
    windows = []
    for n, occ in enumerate(index.occurrences(lemma), start=1):
        if mode == "kwic":
            windows.append(kwic_context(index, occ, k, n))
        else:
            windows.append(sentence_context(index, occ, n))
    return windows


def search_forms(index: ConcordanceIndex, query: str,
                 match: str = "exact") -> dict[str, list[Occurrence]]:
    """Find wordforms by exact form, prefix, or arbitrary substring.

    Matching is case- and homoglyph-insensitive; the result maps stored
    (uppercase) surfaces to occurrence lists, surfaces in collation order.
    """
    if match not in ("exact", "prefix", "substring"):
        raise ValueError(f"unknown match mode {match!r}")
    needle = match_key(query.strip())
    if not needle:
        raise EmptyQueryError("empty search query")
    hits: dict[str, list[Occurrence]] = {}
    for form, occs in index.by_form.items():
        key = match_key(form)
        if (
            (match == "exact" and key == needle)
            or (match == "prefix" and key.startswith(needle))
            or (match == "substring" and needle in key)
        ):
            hits[form] = list(occs)
    return dict(sorted(hits.items(), key=lambda kv: collation_key(kv[0])))


def lemmas_for_letter(index: ConcordanceIndex, letter: str) -> list[str]:
    """Sorted lemmas filed under one index-bar letter."""
    return index.lemmas_for_letter(letter)


# -- snapshot serialization ----------------------------------------------


def write_snapshot(index: ConcordanceIndex) -> str:
    """Versioned line-oriented dump of all occurrences, document order.

    Rebuilding the index from the same tagged corpus reproduces the
    snapshot byte for byte.
    """
    lines = [f"{SNAPSHOT_MAGIC}\t{SNAPSHOT_VERSION}\t{index.document_checksum}"]
    for para_idx, para in enumerate(index.document.paragraphs):
        for tok_idx, tok in enumerate(para.tokens):
            if tok.kind is TokenKind.WORD and tok.tagged:
                sent = _sentence_index(para.sentences, tok_idx)
                lines.append(
                    f"{para_idx}\t{sent}\t{tok_idx}\t{tok.surface}"
                    f"\t{tok.lemma}\t{tok.pos.value}"
                )
    return "\n".join(lines) + "\n"


def parse_snapshot(text: str) -> tuple[str, list[Occurrence]]:
    """Read a snapshot back as (document checksum, occurrence list)."""
    lines = text.splitlines()
    if not lines:
        raise MalformedLineError("empty snapshot", 1)
    header = lines[0].split("\t")
    if len(header) != 3 or header[0] != SNAPSHOT_MAGIC:
        raise MalformedLineError("bad snapshot header", 1, lines[0])
    if header[1] != SNAPSHOT_VERSION:
        raise MalformedLineError(
            f"unsupported snapshot version {header[1]!r}", 1, lines[0])
    occurrences = []
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise MalformedLineError("expected 6 fields", line_no, line)
        try:
            para, sent, tok = int(fields[0]), int(fields[1]), int(fields[2])
        except ValueError:
            raise MalformedLineError("non-integer coordinates", line_no, line)
        occurrences.append(
            Occurrence(para, sent, tok, fields[3], fields[4],
                       parse_pos(fields[5], line_no))
        )
    return header[2], occurrences
