import pathlib

import pytest

from concordia.annotator import annotate
from concordia.concordance import build_index
from concordia.lexicon import parse_lemma_file
from concordia.text_model import segment_paragraphs

DATA = pathlib.Path(__file__).parent / "data"


def norm_ws(s: str) -> str:
    """Whitespace normalization used by the golden comparisons."""
    return " ".join(s.split())


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA


@pytest.fixture(scope="session")
def dialogue_text() -> str:
    return (DATA / "dialogue.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def dialogue_table():
    return parse_lemma_file((DATA / "dialogue.lemma").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def dialogue_result(dialogue_text, dialogue_table):
    raw = segment_paragraphs(dialogue_text)
    return annotate(raw, dialogue_table, "dialogue.txt")


@pytest.fixture(scope="session")
def dialogue_doc(dialogue_result):
    return dialogue_result.document


@pytest.fixture(scope="session")
def dialogue_index(dialogue_doc):
    return build_index(dialogue_doc)


@pytest.fixture(scope="session")
def marked_golden() -> str:
    return (DATA / "dialogue_marked.txt").read_text(encoding="utf-8")
