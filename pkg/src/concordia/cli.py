"""Command-line pipeline driver.

One binary with subcommands mirroring the workflow: build-lemmas merges
the two source lists into a .lemma table, annotate tags a raw text,
index/stats work over the tagged corpus, serve starts the HTTP service,
export-site writes the static letter pages.

Exit codes: 0 on success (also with non-fatal validation warnings),
1 on fatal parse or I/O errors.  Diagnostics go to stderr, data to the
named output files or stdout.
"""

from __future__ import annotations

from pathlib import Path

import click

from .alphabet import collation_key
from .annotator import annotate as annotate_doc
from .annotator import parse_tagged, render_tagged
from .concordance import build_index, write_snapshot
from .errors import ConcordiaError
from .lexicon import (
    build_lemma_table,
    parse_frequency_list,
    parse_lemma_file,
    parse_wordform_list,
    serialize_lemma_file,
)
from .service import create_app, load_config, load_index
from .site_export import export_site
from .text_model import segment_paragraphs


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise click.ClickException(str(exc))


def _write(path: str, content: str) -> None:
    try:
        Path(path).write_text(content, encoding="utf-8")
    except OSError as exc:
        raise click.ClickException(str(exc))


def _fail(path: str, exc: ConcordiaError) -> None:
    raise click.ClickException(f"{path}: {exc}")


@click.group()
def main() -> None:
    """Concordance pipeline: lemma tables, tagging, indexing, serving."""


@main.command("build-lemmas")
@click.option("--freq", "freq_path", required=True, type=click.Path(exists=True),
              help="Frequency list (frequency, lemma, POS).")
@click.option("--forms", "forms_paths", required=True, multiple=True,
              type=click.Path(exists=True),
              help="Wordform alignment list; repeatable per letter file.")
@click.option("--out", "out_path", required=True, type=click.Path(),
              help="Merged .lemma output.")
def build_lemmas(freq_path: str, forms_paths: tuple[str, ...], out_path: str) -> None:
    """Merge the frequency and wordform lists into a .lemma table."""
    try:
        freq = parse_frequency_list(_read(freq_path))
    except ConcordiaError as exc:
        _fail(freq_path, exc)
    forms = []
    diagnostics: list[str] = []
    for path in forms_paths:
        try:
            forms.extend(parse_wordform_list(_read(path), diagnostics))
        except ConcordiaError as exc:
            _fail(path, exc)
    try:
        table = build_lemma_table(freq, forms)
    except ConcordiaError as exc:
        _fail("merge", exc)
    _write(out_path, serialize_lemma_file(table))
    click.echo(
        "note: POS convention AP=preposition, AR=particle; "
        "Cyrillic-typed АР reads as AP",
        err=True,
    )
    for note in diagnostics:
        click.echo(f"warning: {note}", err=True)
    for mismatch in table.mismatches:
        click.echo(f"warning: {mismatch}", err=True)
    click.echo(
        f"lemmas: {len(table.groups)}  wordforms: {len(table)}  "
        f"mismatches: {len(table.mismatches)}",
        err=True,
    )
    if not forms:
        click.echo("warning: no wordform rows, wrote an empty table", err=True)


@main.command("annotate")
@click.option("--text", "text_path", required=True, type=click.Path(exists=True))
@click.option("--lemmas", "lemmas_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--report", "report_path", type=click.Path(),
              help="Unknown-wordform report TSV (surface, paragraph, sentence, count).")
@click.option("--paragraph-mode", type=click.Choice(["line", "blank"]),
              default="line", show_default=True)
def annotate(text_path: str, lemmas_path: str, out_path: str,
             report_path: str | None, paragraph_mode: str) -> None:
    """Tag a raw text with its lemma table."""
    try:
        table = parse_lemma_file(_read(lemmas_path))
    except ConcordiaError as exc:
        _fail(lemmas_path, exc)
    try:
        doc = segment_paragraphs(_read(text_path), paragraph_mode)
        result = annotate_doc(doc, table, Path(text_path).name)
    except ConcordiaError as exc:
        _fail(text_path, exc)
    _write(out_path, render_tagged(result.document) + "\n")
    if report_path:
        _write(report_path, result.report_tsv())
    document = result.document
    click.echo(
        f"tokens: {document.word_count()}  tagged: {document.tagged_count()}  "
        f"unknown: {sum(u.count for u in result.unknown)}",
        err=True,
    )


@main.command("index")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--paragraph-mode", type=click.Choice(["line", "blank"]),
              default="line", show_default=True)
def index_cmd(corpus_path: str, out_path: str, paragraph_mode: str) -> None:
    """Build the concordance index snapshot from a tagged corpus."""
    try:
        document = parse_tagged(_read(corpus_path), paragraph_mode,
                                Path(corpus_path).name)
    except ConcordiaError as exc:
        _fail(corpus_path, exc)
    index = build_index(document)
    _write(out_path, write_snapshot(index))
    click.echo(
        f"lemmas: {len(index.by_lemma)}  wordforms: {len(index.by_form)}  "
        f"occurrences: {sum(len(v) for v in index.by_lemma.values())}",
        err=True,
    )


@main.command("stats")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--paragraph-mode", type=click.Choice(["line", "blank"]),
              default="line", show_default=True)
def stats(corpus_path: str, paragraph_mode: str) -> None:
    """Frequency table of the tagged corpus (lemma, POS, frequency)."""
    try:
        document = parse_tagged(_read(corpus_path), paragraph_mode,
                                Path(corpus_path).name)
    except ConcordiaError as exc:
        _fail(corpus_path, exc)
    index = build_index(document)
    click.echo(
        f"lemmas: {len(index.by_lemma)}  wordforms: {len(index.by_form)}  "
        f"tokens: {document.word_count()}",
        err=True,
    )
    rows = sorted(
        ((lemma, occs[0].pos.value, len(occs))
         for lemma, occs in index.by_lemma.items()),
        key=lambda row: (-row[2], collation_key(row[0])),
    )
    for lemma, pos, freq in rows:
        click.echo(f"{lemma}\t{pos}\t{freq}")


@main.command("serve")
@click.option("--corpus", "corpus_path", type=click.Path(exists=True))
@click.option("--lemmas", "lemmas_path", type=click.Path(exists=True),
              help="Optional .lemma table; logged for provenance only.")
@click.option("--config", "config_path", type=click.Path(exists=True))
@click.option("--host", default=None)
@click.option("--port", type=int, default=None)
def serve(corpus_path: str | None, lemmas_path: str | None,
          config_path: str | None, host: str | None, port: int | None) -> None:
    """Start the query service over a tagged corpus."""
    import uvicorn

    try:
        config = load_config(config_path)
    except ConcordiaError as exc:
        raise click.ClickException(str(exc))
    if corpus_path:
        config.corpus = corpus_path
    if lemmas_path:
        config.lemmas = lemmas_path
    if host:
        config.host = host
    if port:
        config.port = port
    try:
        index = load_index(config)
    except ConcordiaError as exc:
        raise click.ClickException(str(exc))
    if config.lemmas:
        table = parse_lemma_file(_read(config.lemmas))
        click.echo(f"lemma table: {len(table)} wordforms "
                   f"(checksum {table.checksum[:12]})", err=True)
    app = create_app(index, config)
    click.echo(f"serving {config.corpus} on http://{config.host}:{config.port}",
               err=True)
    try:
        uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    except OSError as exc:
        raise click.ClickException(f"cannot bind {config.host}:{config.port}: {exc}")


@main.command("export-site")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--paragraph-mode", type=click.Choice(["line", "blank"]),
              default="line", show_default=True)
def export_site_cmd(corpus_path: str, out_dir: str, paragraph_mode: str) -> None:
    """Write the static per-letter lemma pages and the entry page."""
    try:
        document = parse_tagged(_read(corpus_path), paragraph_mode,
                                Path(corpus_path).name)
    except ConcordiaError as exc:
        _fail(corpus_path, exc)
    index = build_index(document)
    try:
        written = export_site(index, out_dir)
    except OSError as exc:
        raise click.ClickException(f"{out_dir}: {exc}")
    click.echo(f"wrote {len(written)} pages to {out_dir}", err=True)


if __name__ == "__main__":
    main()
