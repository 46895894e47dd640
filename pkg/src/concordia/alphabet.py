"""Ukrainian collation, homoglyph folding, and the index letter bar.

The source lists mix Cyrillic and Latin spellings of visually identical
letters (the frequency excerpt writes "АС" with Cyrillic letters where the
lemma files write Latin "AC").  All matching in the pipeline therefore goes
through :func:`fold_homoglyphs`, which rewrites the six Cyrillic lookalikes
А В С Е І Р to their Latin counterparts.  Folding is only a matching aid;
stored strings keep whatever spelling the input used.
"""

from __future__ import annotations

from .errors import UnknownLetterError

#: Ukrainian alphabet in dictionary order (Ґ after Г).
UKRAINIAN_ALPHABET = "АБВГҐДЕЄЖЗИІЇЙКЛМНОПРСТУФХЦЧШЩЬЮЯ"

#: Bar entry grouping every Latin-script lemma.
LATIN_GROUP = "A-Z"

#: Bar entry grouping digit-initial lemmas (and anything letterless).
DIGIT_GROUP = "0-9"

#: The full index bar: Ukrainian letters, then the Latin block, then digits.
LETTER_BAR: tuple[str, ...] = tuple(UKRAINIAN_ALPHABET) + (LATIN_GROUP, DIGIT_GROUP)

_FOLD_PAIRS = [
    ("А", "A"), ("В", "B"), ("С", "C"), ("Е", "E"), ("І", "I"), ("Р", "P"),
    ("а", "a"), ("в", "b"), ("с", "c"), ("е", "e"), ("і", "i"), ("р", "p"),
]
_FOLD_TABLE = {ord(c): l for c, l in _FOLD_PAIRS}

# Latin uppercase letters that are images of the fold; a word made of these
# alone cannot be told apart from a Cyrillic word by spelling.
_AMBIGUOUS_LATIN = set("ABCEIP")
_LATIN_TO_CYRILLIC = {l: c for c, l in _FOLD_PAIRS[:6]}

_UKR_ORDER = {ch: i for i, ch in enumerate(UKRAINIAN_ALPHABET)}

#: Characters ignored entirely when ordering (per dictionary convention).
_IGNORED_FOR_ORDER = {"'", "’", "ʼ", "-"}


def fold_homoglyphs(text: str) -> str:
    """Rewrite Cyrillic А В С Е І Р (either case) to Latin lookalikes."""
    return text.translate(_FOLD_TABLE)


def match_key(text: str) -> str:
    """Canonical key used for all case- and script-insensitive matching."""
    return fold_homoglyphs(text.upper())


def _base_letters(lemma: str) -> list[str]:
    """Letters of the lemma before any parenthetical qualifier."""
    base = lemma.split("(", 1)[0]
    return [ch for ch in base if ch.isalpha()]


def letter_of(lemma: str) -> str:
    """Index-bar entry a lemma is filed under.

    A lemma counts as Latin only if it contains a Latin letter that is not
    a homoglyph image; words spelled entirely with lookalikes (the Latin
    "A" rows of the source lemma files) belong to the Ukrainian letter.
    """
    letters = _base_letters(lemma)
    if not letters:
        return DIGIT_GROUP
    for ch in letters:
        if ch.isascii() and ch.upper() not in _AMBIGUOUS_LATIN:
            return LATIN_GROUP
    first = letters[0].upper()
    if first.isascii():
        first = _LATIN_TO_CYRILLIC.get(first, first)
    if first in _UKR_ORDER:
        return first
    return LATIN_GROUP if letters[0].isascii() else DIGIT_GROUP


def collation_key(text: str):
    """Sort key: Ukrainian block, then Latin, then digits; ' and - ignored.

    Within the Ukrainian block, Latin lookalike spellings order as the
    Cyrillic letters they stand for, so "A(спол.)" files between sibling
    А-lemmas rather than after Я.  A parenthetical qualifier or homograph
    mark run only breaks ties between otherwise equal base words, keeping
    "БАРАН(прізв.)" ahead of "БАРАНІВ(прикм.)".
    """
    group = letter_of(text)
    if group == LATIN_GROUP:
        rank = 1
    elif group == DIGIT_GROUP:
        rank = 2
    else:
        rank = 0
    cut = len(text)
    for stop in ("(", "#"):
        pos = text.find(stop)
        if pos != -1:
            cut = min(cut, pos)
    base: list[tuple[int, int]] = []
    for ch in text[:cut].upper():
        if ch in _IGNORED_FOR_ORDER:
            continue
        if rank == 0 and ch in _LATIN_TO_CYRILLIC:
            ch = _LATIN_TO_CYRILLIC[ch]
        if ch in _UKR_ORDER:
            base.append((0, _UKR_ORDER[ch]))
        elif ch.isascii() and ch.isalpha():
            base.append((1, ord(ch)))
        elif ch.isdigit():
            base.append((2, ord(ch)))
        else:
            base.append((3, ord(ch)))
    return rank, tuple(base), text[cut:]


def require_letter(letter: str) -> str:
    """Validate a bar entry, raising UnknownLetterError otherwise."""
    if letter not in LETTER_BAR:
        raise UnknownLetterError(letter)
    return letter
