"""Corpus annotation and concordance engine for lemmatized Ukrainian text.

Pipeline: two source lists (frequency list, wordform alignment list)
merge into a wordform→lemma table; raw text is annotated into the inline
`wordform<POS|LEMMA>` format; an immutable inverted index serves KWIC
and sentence contexts over HTTP and as static pages.
"""

from .alphabet import LETTER_BAR, collation_key, fold_homoglyphs, letter_of
from .annotator import (
    AnnotationResult,
    TaggedDocument,
    TaggedParagraph,
    TaggedToken,
    annotate,
    parse_tagged,
    render_tagged,
    strip_tags,
)
from .concordance import (
    ConcordanceIndex,
    ContextWindow,
    Occurrence,
    build_index,
    concordance_for_lemma,
    kwic_context,
    lemmas_for_letter,
    parse_snapshot,
    search_forms,
    sentence_context,
    write_snapshot,
)
from .errors import ConcordiaError
from .lexicon import (
    FrequencyRecord,
    LemmaEntry,
    LemmaTable,
    PosTag,
    WordformRecord,
    build_lemma_table,
    parse_frequency_list,
    parse_lemma_file,
    parse_wordform_list,
    serialize_lemma_file,
)
from .text_model import (
    RawDocument,
    SentenceSpan,
    Token,
    TokenKind,
    decode_escapes,
    detokenize,
    segment_paragraphs,
    split_sentences,
    strip_translations,
    tokenize,
)

__version__ = "0.1.0"
