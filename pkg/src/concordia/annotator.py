"""Inline tagging: raw text + lemma table → `wordform<POS|LEMMA>` corpus.

Every word token is looked up by its uppercased surface plus homograph
marks; the marks are consumed by annotation and never appear in output.
Words missing from the table stay untagged and are collected into a
report instead of aborting the run.  Parsing tagged text back is the
exact inverse of rendering, byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import MalformedTagError, UnknownPosCodeError
from .lexicon import LemmaTable, PosTag, parse_pos
from .text_model import (
    RawDocument,
    SentenceSpan,
    Token,
    TokenKind,
    split_sentences,
    tokenize,
    _WORD,
)


@dataclass(frozen=True)
class TaggedToken:
    """A token of the annotated corpus; lemma and pos only on tagged words."""

    kind: TokenKind
    surface: str
    lemma: str | None = None
    pos: PosTag | None = None
    gap: str = ""

    @property
    def tagged(self) -> bool:
        return self.lemma is not None

    def render(self) -> str:
        if self.kind is TokenKind.WORD and self.lemma is not None:
            return f"{self.surface}<{self.pos.value}|{self.lemma}>"
        return self.surface


@dataclass
class TaggedParagraph:
    tokens: list[TaggedToken]
    sentences: list[SentenceSpan] = field(default_factory=list)

    def __post_init__(self):
        if not self.sentences and self.tokens:
            self.sentences = split_sentences(self.tokens)


@dataclass
class TaggedDocument:
    """Annotated corpus: paragraphs of tagged tokens plus provenance."""

    paragraphs: list[TaggedParagraph]
    mode: str = "line"
    source_name: str = ""
    table_checksum: str | None = None

    def word_count(self) -> int:
        return sum(
            1 for p in self.paragraphs for t in p.tokens
            if t.kind is TokenKind.WORD
        )

    def tagged_count(self) -> int:
        return sum(
            1 for p in self.paragraphs for t in p.tokens
            if t.kind is TokenKind.WORD and t.tagged
        )


@dataclass(frozen=True)
class UnknownWordform:
    """One unknown surface (marker marks included) with first coordinates."""

    surface: str
    paragraph: int
    sentence: int
    count: int


@dataclass
class AnnotationResult:
    document: TaggedDocument
    unknown: list[UnknownWordform]

    def report_tsv(self) -> str:
        lines = [
            f"{u.surface}\t{u.paragraph}\t{u.sentence}\t{u.count}"
            for u in self.unknown
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def annotate(doc: RawDocument, table: LemmaTable,
             source_name: str = "") -> AnnotationResult:
    """Tag every known word of the document; collect the unknown ones.

    Lookup is case-insensitive (the table keys are uppercase); the output
    keeps the original surface case.  Punctuation and translation notes
    pass through untouched.
    """
    paragraphs: list[TaggedParagraph] = []
    first_seen: dict[str, tuple[int, int]] = {}
    counts: dict[str, int] = {}
    for p_idx, para in enumerate(doc.paragraphs):
        tokens = tokenize(para)
        spans = split_sentences(tokens)
        tagged: list[TaggedToken] = []
        for t_idx, tok in enumerate(tokens):
            if tok.kind is not TokenKind.WORD:
                tagged.append(TaggedToken(tok.kind, tok.surface, gap=tok.gap))
                continue
            entry = table.lookup(tok.surface, tok.marker)
            if entry is None:
                key = tok.raw
                if key not in first_seen:
                    sent = next(
                        (k for k, sp in enumerate(spans)
                         if sp.start <= t_idx < sp.stop), 0)
                    first_seen[key] = (p_idx, sent)
                counts[key] = counts.get(key, 0) + 1
                tagged.append(TaggedToken(TokenKind.WORD, tok.surface, gap=tok.gap))
            else:
                tagged.append(
                    TaggedToken(TokenKind.WORD, tok.surface,
                                entry.lemma, entry.pos, tok.gap)
                )
        paragraphs.append(TaggedParagraph(tagged, spans))
    unknown = [
        UnknownWordform(key, first_seen[key][0], first_seen[key][1], counts[key])
        for key in first_seen
    ]
    document = TaggedDocument(paragraphs, doc.mode, source_name, table.checksum)
    return AnnotationResult(document, unknown)


def render_tagged(doc: TaggedDocument) -> str:
    """Render the annotated corpus back to its file form."""
    sep = "\n" if doc.mode == "line" else "\n\n"
    return sep.join(
        "".join(t.gap + t.render() for t in p.tokens) for p in doc.paragraphs
    )


_TAG_RE = re.compile(r"<([^<>|]*)\|([^<>|]*)>")
_PARSE_SCANNER = re.compile(
    rf"(?P<ws>\s+)"
    rf"|(?P<note>\{{[^{{}}]*\}})"
    rf"|(?P<word>{_WORD})"
    rf"|(?P<punct>[^\s<>|])"
    rf"|(?P<stray>[<>|])",
    re.UNICODE,
)


def parse_tagged(text: str, mode: str = "line",
                 source_name: str = "") -> TaggedDocument:
    """Parse a tagged corpus file; exact inverse of :func:`render_tagged`.

    The grammar is strict: a tag is exactly one ``<``, one ``|``, one
    ``>`` with a known POS code, attached directly to a word.  Anything
    else raises MalformedTagError with the byte offset.
    """
    if mode == "line":
        blocks = [b for b in text.split("\n") if b.strip()]
    else:
        blocks = [b for b in re.split(r"\n\s*\n", text) if b.strip()]
    paragraphs = [
        TaggedParagraph(_parse_tagged_paragraph(block.strip("\n")))
        for block in blocks
    ]
    return TaggedDocument(paragraphs, mode, source_name)


def _parse_tagged_paragraph(block: str) -> list[TaggedToken]:
    tokens: list[TaggedToken] = []
    gap = ""
    pending: list[str] = []
    pos = 0
    n = len(block)

    def flush_punct(g: str) -> str:
        nonlocal pending
        if pending:
            tokens.append(TaggedToken(TokenKind.PUNCT, "".join(pending), gap=g))
            pending = []
            return ""
        return g

    while pos < n:
        m = _PARSE_SCANNER.match(block, pos)
        if m is None or m.group("stray") is not None:
            raise MalformedTagError(
                f"stray {block[pos]!r} outside a tag", pos)
        if m.group("ws") is not None:
            gap = flush_punct(gap) + m.group("ws")
        elif m.group("note") is not None:
            gap = flush_punct(gap)
            tokens.append(TaggedToken(TokenKind.NOTE, m.group("note"), gap=gap))
            gap = ""
        elif m.group("word") is not None:
            gap = flush_punct(gap)
            surface = m.group("word")
            end = m.end()
            lemma = tag_pos = None
            if end < n and block[end] == "<":
                tm = _TAG_RE.match(block, end)
                if tm is None:
                    raise MalformedTagError("malformed tag after word", end)
                try:
                    tag_pos = parse_pos(tm.group(1))
                except UnknownPosCodeError:
                    raise MalformedTagError(
                        f"unknown POS code {tm.group(1)!r} in tag", end)
                lemma = tm.group(2)
                if not lemma:
                    raise MalformedTagError("empty lemma in tag", end)
                end = tm.end()
            tokens.append(TaggedToken(TokenKind.WORD, surface, lemma, tag_pos, gap))
            gap = ""
            pos = end
            continue
        else:
            pending.append(m.group("punct"))
        pos = m.end()
    flush_punct(gap)
    return tokens


def strip_tags(doc: TaggedDocument) -> str:
    """Plain text of the corpus: tags removed, translations kept in braces."""
    sep = "\n" if doc.mode == "line" else "\n\n"
    return sep.join(
        "".join(t.gap + t.surface for t in p.tokens) for p in doc.paragraphs
    )
