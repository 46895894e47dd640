"""Document structure: paragraphs, tokens, sentences, lexical escapes.

The electronic text carries three conventions on top of plain prose:

* a run of trailing ``#`` marks distinguishes homographs ("АБО#");
* editorial translations of foreign phrases sit in braces ("{...}") and
  are excluded from every concordance view;
* diacritics in foreign words are written as HTML entities whose closing
  ";" is replaced by "^" ("Beh&ouml^rden"), because ";" is an ordinary
  punctuation mark in the text.

Tokenization is lossless: every token remembers the whitespace gap before
it, so a paragraph can be reassembled byte for byte.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from html.entities import name2codepoint

from .errors import UnbalancedBraceError

log = logging.getLogger("concordia")


class TokenKind(Enum):
    WORD = "word"
    PUNCT = "punct"
    NOTE = "note"


@dataclass(frozen=True)
class Token:
    """One lexical unit of a paragraph.

    ``surface`` is the marker-free rendering; for notes it is the full
    brace-delimited payload.  ``gap`` is the exact whitespace between the
    previous token and this one (empty when they touch).
    """

    kind: TokenKind
    surface: str
    marker: int = 0
    gap: str = ""
    start: int = -1
    end: int = -1

    @property
    def raw(self) -> str:
        """Source spelling, homograph marks included."""
        if self.kind is TokenKind.WORD and self.marker:
            return self.surface + "#" * self.marker
        return self.surface


@dataclass(frozen=True)
class SentenceSpan:
    """Half-open token index range of one sentence within a paragraph."""

    start: int
    stop: int


@dataclass(frozen=True)
class RawDocument:
    """Source text split into paragraphs; keeps the source verbatim."""

    source: str
    spans: tuple[tuple[int, int], ...]
    mode: str = "line"

    @property
    def paragraphs(self) -> list[str]:
        return [self.source[a:b] for a, b in self.spans]


_ESCAPE = r"&[A-Za-z][A-Za-z0-9]*\^"
_LETTER = r"[^\W\d_]"
_INNER = rf"(?:{_LETTER}|{_ESCAPE})"
_WORD = rf"{_INNER}(?:['’ʼ-]?{_INNER})*"

_SCANNER = re.compile(
    rf"(?P<ws>\s+)"
    rf"|(?P<note>\{{[^{{}}]*\}})"
    rf"|(?P<word>{_WORD})(?P<marks>#*)"
    rf"|(?P<punct>\S)",
    re.UNICODE,
)

_ESCAPE_RE = re.compile(r"&([A-Za-z][A-Za-z0-9]*)\^")

#: Multi-letter abbreviations whose trailing "." does not end a sentence.
ABBREVIATIONS = {"зв", "ін", "див", "пор", "проф"}

_CLOSERS = set('"»”’\')]')


def segment_paragraphs(source: str, mode: str = "line") -> RawDocument:
    """Split source text into paragraphs.

    ``line`` mode treats every non-blank line as one paragraph; ``blank``
    mode treats blank-line-separated blocks as paragraphs (internal
    newlines stay inside the paragraph).  Paragraph spans index into the
    unmodified source, so no text is ever lost.
    """
    if mode not in ("line", "blank"):
        raise ValueError(f"unknown paragraph mode {mode!r}")
    spans: list[tuple[int, int]] = []
    if mode == "line":
        pos = 0
        for line in source.split("\n"):
            end = pos + len(line)
            if line.strip():
                spans.append((pos, pos + len(line.rstrip())))
            pos = end + 1
    else:
        for m in re.finditer(r"(?:[^\n]*\S[^\n]*\n?)+", source):
            a, b = m.span()
            block = source[a:b].rstrip()
            if block:
                spans.append((a, a + len(block)))
    return RawDocument(source=source, spans=tuple(spans), mode=mode)


def tokenize(paragraph: str) -> list[Token]:
    """Break one paragraph into Word, Punctuation, and TranslationNote tokens.

    Words are maximal runs of letters with single internal apostrophes or
    hyphens and with ``&name^`` escapes allowed inline; a trailing run of
    ``#`` becomes the homograph marker.  Adjacent punctuation characters
    merge into one token.  Raises UnbalancedBraceError for a ``{`` with no
    ``}`` in the paragraph.
    """
    tokens: list[Token] = []
    gap = ""
    pending_punct: list[str] = []
    punct_start = -1

    def flush_punct(nonlocal_gap: str) -> str:
        nonlocal pending_punct, punct_start
        if pending_punct:
            text = "".join(pending_punct)
            tokens.append(
                Token(TokenKind.PUNCT, text, 0, nonlocal_gap,
                      punct_start, punct_start + len(text))
            )
            pending_punct = []
            punct_start = -1
            return ""
        return nonlocal_gap

    for m in _SCANNER.finditer(paragraph):
        if m.group("ws") is not None:
            gap = flush_punct(gap)
            gap += m.group("ws")
            continue
        if m.group("note") is not None:
            gap = flush_punct(gap)
            tokens.append(Token(TokenKind.NOTE, m.group("note"), 0, gap,
                                m.start(), m.end()))
            gap = ""
        elif m.group("word") is not None:
            gap = flush_punct(gap)
            marks = len(m.group("marks"))
            tokens.append(
                Token(TokenKind.WORD, m.group("word"), marks, gap,
                      m.start(), m.end())
            )
            gap = ""
        else:
            ch = m.group("punct")
            if ch == "{":
                raise UnbalancedBraceError(m.start())
            if not pending_punct:
                punct_start = m.start()
            pending_punct.append(ch)
    flush_punct(gap)
    return tokens


def detokenize(tokens: list[Token]) -> str:
    """Reassemble the paragraph the tokens came from, byte for byte."""
    return "".join(t.gap + t.raw for t in tokens)


def decode_escapes(surface: str) -> str:
    """Decode ``&name^`` entity escapes to their Unicode characters.

    Unknown entity names pass through verbatim and are reported on the
    package logger.  Idempotent: decoded text contains no decodable
    sequences.
    """
    if "&" not in surface:
        return surface

    def _sub(m: re.Match) -> str:
        name = m.group(1)
        cp = name2codepoint.get(name)
        if cp is None:
            log.warning("undecodable entity escape &%s^ left verbatim", name)
            return m.group(0)
        return chr(cp)

    return _ESCAPE_RE.sub(_sub, surface)


def strip_translations(tokens: list[Token]) -> list[Token]:
    """Return the token list with TranslationNote tokens removed."""
    return [t for t in tokens if t.kind is not TokenKind.NOTE]


def _is_sentence_end(tokens, i: int) -> bool:
    t = tokens[i]
    s = t.surface
    if not set(s) & set(".!?…"):
        return False
    if "!" in s or "?" in s:
        return True
    if set(s) <= {".", "…"} and (len(s) > 1 or "…" in s):
        # Ellipsis closes a sentence only before a capitalized word.
        for nxt in tokens[i + 1:]:
            if nxt.kind is TokenKind.WORD:
                return nxt.surface[0].isupper()
        return True
    # Single period: guard against abbreviations and initials.
    if i > 0 and tokens[i - 1].kind is TokenKind.WORD and not t.gap:
        prev = tokens[i - 1].surface
        if len(prev) == 1 or prev.lower() in ABBREVIATIONS:
            return False
    return True


def split_sentences(tokens) -> list[SentenceSpan]:
    """Partition a paragraph's tokens into sentence spans.

    Terminators are . ! ? and ellipses, with closing quotes and brackets
    absorbed into the sentence they end; dialogue dashes open the next
    sentence.  The spans are disjoint, ordered, and cover every token.
    """
    spans: list[SentenceSpan] = []
    start = 0
    i = 0
    n = len(tokens)
    while i < n:
        t = tokens[i]
        if t.kind is TokenKind.PUNCT and _is_sentence_end(tokens, i):
            j = i + 1
            while (
                j < n
                and tokens[j].kind is TokenKind.PUNCT
                and set(tokens[j].surface) <= _CLOSERS
            ):
                j += 1
            spans.append(SentenceSpan(start, j))
            start = j
            i = j
        else:
            i += 1
    if start < n:
        spans.append(SentenceSpan(start, n))
    return spans
