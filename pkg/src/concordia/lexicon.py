"""Wordform→lemma tables: parsing the source lists and the .lemma format.

Two inputs feed the table: a frequency list of lemmas (3 columns:
frequency, lemma, POS) and an alphabetical wordform list (4–5 columns:
wordform, disambiguated form, form frequency, lemma, and on a group's
first row the lemma frequency).  The merged table is what the annotator
looks surface forms up in, and it serializes to the 3-column .lemma
format (surface key, lemma, POS).

Lemma frequencies, where declared, must equal the sum of the member form
frequencies; disagreements are collected as warnings rather than errors
so a partially lemmatized corpus can still be processed.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum

from .alphabet import collation_key, fold_homoglyphs, match_key
from .errors import (
    DuplicateSurfaceError,
    InconsistentGroupError,
    LemmaWithoutPosError,
    MalformedLineError,
    UnknownPosCodeError,
)


class PosTag(Enum):
    """Closed part-of-speech code set; two-letter codes are function words."""

    NOUN = "N"
    VERB = "V"
    ADJECTIVE = "J"
    ADVERB = "D"
    NUMERAL = "M"
    PRONOUN = "P"
    CONJUNCTION = "AC"
    PREPOSITION = "AP"
    PARTICLE = "AR"
    INTERJECTION = "AI"
    ARTICLE = "AA"

    @property
    def code(self) -> str:
        return self.value


_POS_BY_CODE = {t.value: t for t in PosTag}


def parse_pos(code: str, line_no: int | None = None) -> PosTag:
    """Resolve a POS code, accepting Cyrillic lookalike spellings."""
    folded = fold_homoglyphs(code.strip()).upper()
    tag = _POS_BY_CODE.get(folded)
    if tag is None:
        raise UnknownPosCodeError(code, line_no)
    return tag


@dataclass(frozen=True)
class FrequencyRecord:
    frequency: int
    lemma: str
    pos: PosTag


@dataclass(frozen=True)
class WordformRecord:
    surface_key: str
    disambiguated_form: str
    form_frequency: int
    lemma: str
    lemma_frequency: int | None = None


@dataclass(frozen=True)
class LemmaEntry:
    """One row of the table: a surface key resolved to (lemma, POS)."""

    surface_key: str
    lemma: str
    pos: PosTag


@dataclass
class LemmaGroup:
    """All surface keys filed under one lemma, with its frequency budget."""

    lemma: str
    pos: PosTag
    expected_frequency: int | None = None
    surface_keys: list[str] = field(default_factory=list)
    observed_frequency: int = 0


@dataclass(frozen=True)
class FrequencyMismatch:
    lemma: str
    expected: int
    observed: int

    def __str__(self) -> str:
        return (
            f"lemma {self.lemma}: form frequencies sum to "
            f"{self.observed}, declared {self.expected}"
        )


class LemmaTable:
    """Immutable mapping from surface keys to (lemma, POS).

    Lookup keys are case-folded and homoglyph-folded, with the homograph
    marker run appended, so "Що" + one mark finds the "ЩО#" row however
    either side spelled its lookalike letters.
    """

    def __init__(self, entries: list[LemmaEntry],
                 groups: dict[str, LemmaGroup] | None = None,
                 mismatches: list[FrequencyMismatch] | None = None):
        self._by_key: dict[str, LemmaEntry] = {}
        for e in entries:
            key = match_key(e.surface_key)
            if key in self._by_key:
                raise DuplicateSurfaceError(e.surface_key)
            self._by_key[key] = e
        self.groups = groups or self._groups_from_entries(entries)
        self.mismatches = list(mismatches or [])

    @staticmethod
    def _groups_from_entries(entries: list[LemmaEntry]) -> dict[str, LemmaGroup]:
        groups: dict[str, LemmaGroup] = {}
        for e in entries:
            g = groups.get(match_key(e.lemma))
            if g is None:
                g = LemmaGroup(lemma=e.lemma, pos=e.pos)
                groups[match_key(e.lemma)] = g
            g.surface_keys.append(e.surface_key)
        return groups

    def __len__(self) -> int:
        return len(self._by_key)

    def __iter__(self):
        return iter(self._by_key.values())

    def entries(self) -> list[LemmaEntry]:
        return sorted(self._by_key.values(),
                      key=lambda e: collation_key(e.surface_key))

    def lookup(self, surface: str, marker: int = 0) -> LemmaEntry | None:
        return self._by_key.get(match_key(surface) + "#" * marker)

    def group(self, lemma: str) -> LemmaGroup | None:
        return self.groups.get(match_key(lemma))

    def same_entries(self, other: "LemmaTable") -> bool:
        return self.entries() == other.entries()

    @property
    def checksum(self) -> str:
        digest = hashlib.sha256(serialize_lemma_file(self).encode("utf-8"))
        return digest.hexdigest()


def _split_line(line: str, line_no: int, n_min: int, n_max: int) -> list[str]:
    fields = line.split("\t")
    if not n_min <= len(fields) <= n_max:
        raise MalformedLineError(
            f"expected {n_min}–{n_max} tab-separated fields, got {len(fields)}",
            line_no, line)
    return fields


def _parse_count(text: str, line_no: int, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise MalformedLineError(f"{what} {text!r} is not an integer", line_no)
    if value < 1:
        raise MalformedLineError(f"{what} must be positive, got {value}", line_no)
    return value


def parse_frequency_list(text: str) -> list[FrequencyRecord]:
    """Parse the 3-column frequency list (frequency, lemma, POS)."""
    records = []
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        freq_s, lemma, pos_s = _split_line(line, line_no, 3, 3)
        freq = _parse_count(freq_s, line_no, "frequency")
        lemma = lemma.strip()
        if not lemma:
            raise MalformedLineError("empty lemma", line_no, line)
        records.append(FrequencyRecord(freq, lemma, parse_pos(pos_s, line_no)))
    return records


def parse_wordform_list(text: str,
                        diagnostics: list[str] | None = None) -> list[WordformRecord]:
    """Parse the 4–5 column wordform alignment list.

    The 5th column, present only on a group's first row, declares the
    lemma frequency; declaring two different values for one lemma raises
    InconsistentGroupError.  The redundant 2nd column is checked against
    columns 1 and 4 and reported to ``diagnostics`` when it disagrees.
    """
    records = []
    declared: dict[str, int] = {}
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        fields = _split_line(line, line_no, 4, 5)
        surface_key, disamb, freq_s, lemma = (f.strip() for f in fields[:4])
        if not surface_key or not lemma:
            raise MalformedLineError("empty wordform or lemma", line_no, line)
        freq = _parse_count(freq_s, line_no, "form frequency")
        lemma_freq = None
        if len(fields) == 5 and fields[4].strip():
            lemma_freq = _parse_count(fields[4].strip(), line_no, "lemma frequency")
            prior = declared.get(match_key(lemma))
            if prior is not None and prior != lemma_freq:
                raise InconsistentGroupError(lemma, prior, lemma_freq, line_no)
            declared[match_key(lemma)] = lemma_freq
        if diagnostics is not None:
            base = surface_key.rstrip("#")
            if match_key(disamb.split("(", 1)[0]) != match_key(base):
                diagnostics.append(
                    f"line {line_no}: disambiguated form {disamb!r} does not "
                    f"match wordform {surface_key!r}")
        records.append(WordformRecord(surface_key, disamb, freq, lemma, lemma_freq))
    return records


def build_lemma_table(freq: list[FrequencyRecord],
                      forms: list[WordformRecord]) -> LemmaTable:
    """Join the two lists into a validated wordform→lemma table.

    POS comes from the lemma's frequency-list entry; the expected lemma
    frequency comes from the frequency list, falling back to the group's
    declared 5th-column value.  Frequency disagreements are flagged on
    the returned table, not raised.
    """
    by_lemma: dict[str, FrequencyRecord] = {}
    for rec in freq:
        by_lemma[match_key(rec.lemma)] = rec

    entries: list[LemmaEntry] = []
    groups: dict[str, LemmaGroup] = {}
    seen_keys: set[str] = set()
    for form in forms:
        lemma_key = match_key(form.lemma)
        freq_rec = by_lemma.get(lemma_key)
        if freq_rec is None:
            raise LemmaWithoutPosError(form.lemma, form.surface_key)
        key = match_key(form.surface_key)
        if key in seen_keys:
            raise DuplicateSurfaceError(form.surface_key)
        seen_keys.add(key)
        group = groups.get(lemma_key)
        if group is None:
            group = LemmaGroup(lemma=freq_rec.lemma, pos=freq_rec.pos,
                               expected_frequency=freq_rec.frequency)
            groups[lemma_key] = group
        if group.expected_frequency is None:
            group.expected_frequency = form.lemma_frequency
        group.surface_keys.append(form.surface_key)
        group.observed_frequency += form.form_frequency
        entries.append(LemmaEntry(form.surface_key, freq_rec.lemma, freq_rec.pos))

    mismatches = [
        FrequencyMismatch(g.lemma, g.expected_frequency, g.observed_frequency)
        for g in groups.values()
        if g.expected_frequency is not None
        and g.observed_frequency != g.expected_frequency
    ]
    return LemmaTable(entries, groups, mismatches)


def parse_lemma_file(text: str) -> LemmaTable:
    """Parse a 3-column .lemma file (surface key, lemma, POS)."""
    entries = []
    seen: set[str] = set()
    for line_no, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        surface_key, lemma, pos_s = (f.strip() for f in _split_line(line, line_no, 3, 3))
        if not surface_key or not lemma:
            raise MalformedLineError("empty wordform or lemma", line_no, line)
        key = match_key(surface_key)
        if key in seen:
            raise DuplicateSurfaceError(surface_key, line_no)
        seen.add(key)
        entries.append(LemmaEntry(surface_key, lemma, parse_pos(pos_s, line_no)))
    return LemmaTable(entries)


def serialize_lemma_file(table: LemmaTable) -> str:
    """Render a table to .lemma text, rows in collation order of the key."""
    lines = [
        f"{e.surface_key}\t{e.lemma}\t{e.pos.value}"
        for e in table.entries()
    ]
    return "\n".join(lines) + ("\n" if lines else "")
