import json
import socket
import subprocess
import sys
import time
import urllib.request
from pathlib import Path

import pytest
from click.testing import CliRunner

from concordia.cli import main

DATA = Path(__file__).parent / "data"


@pytest.fixture()
def runner():
    return CliRunner(mix_stderr=False) if _click_supports_split() else CliRunner()


def _click_supports_split() -> bool:
    import inspect

    return "mix_stderr" in inspect.signature(CliRunner.__init__).parameters


def run(runner, args):
    return runner.invoke(main, args, catch_exceptions=False)


class TestBuildLemmas:
    def test_merges_excerpts(self, runner, tmp_path):
        out = tmp_path / "b.lemma"
        result = run(runner, [
            "build-lemmas",
            "--freq", str(DATA / "b_frequencies.tsv"),
            "--forms", str(DATA / "b_wordforms.tsv"),
            "--out", str(out),
        ])
        assert result.exit_code == 0
        rows = out.read_text(encoding="utf-8").splitlines()
        assert "БАБА\tБАБА\tN" in rows
        assert "БАРАНОВІ#\tБАРАНІВ(прикм.)\tJ" in rows

    def test_aby_row_shape(self, runner, tmp_path):
        freq = tmp_path / "freq.tsv"
        forms = tmp_path / "forms.tsv"
        freq.write_text("12\tАБИ\tAC\n", "utf-8")
        forms.write_text("АБИ\tАБИ\t12\tАБИ\t12\n", "utf-8")
        out = tmp_path / "out.lemma"
        result = run(runner, ["build-lemmas", "--freq", str(freq),
                              "--forms", str(forms), "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text("utf-8") == "АБИ\tАБИ\tAC\n"

    def test_empty_inputs_warn_exit_zero(self, runner, tmp_path):
        freq = tmp_path / "freq.tsv"
        forms = tmp_path / "forms.tsv"
        freq.write_text("", "utf-8")
        forms.write_text("", "utf-8")
        out = tmp_path / "out.lemma"
        result = run(runner, ["build-lemmas", "--freq", str(freq),
                              "--forms", str(forms), "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text("utf-8") == ""
        assert "warning" in (result.stderr or result.output)

    def test_mismatch_warns_exit_zero(self, runner, tmp_path):
        freq = tmp_path / "freq.tsv"
        forms = tmp_path / "forms.tsv"
        freq.write_text("10\tБАБА\tN\n", "utf-8")
        forms.write_text("БАБА\tБАБА\t5\tБАБА\t\nБАБУ\tБАБУ\t2\tБАБА\t\n", "utf-8")
        out = tmp_path / "out.lemma"
        result = run(runner, ["build-lemmas", "--freq", str(freq),
                              "--forms", str(forms), "--out", str(out)])
        assert result.exit_code == 0
        err = result.stderr or result.output
        assert "БАБА" in err and "mismatch" in err.lower() or "10" in err

    def test_broken_line_exit_one_with_line_number(self, runner, tmp_path):
        freq = tmp_path / "freq.tsv"
        freq.write_text("5\tДІМ\tN\nx\tФОО\tN\n", "utf-8")
        forms = tmp_path / "forms.tsv"
        forms.write_text("", "utf-8")
        out = tmp_path / "out.lemma"
        result = runner.invoke(main, ["build-lemmas", "--freq", str(freq),
                                      "--forms", str(forms), "--out", str(out)])
        assert result.exit_code == 1
        assert "line 2" in (result.stderr or result.output)


class TestAnnotateCommand:
    def test_reproduces_marked_excerpt(self, runner, tmp_path, marked_golden):
        out = tmp_path / "tagged.txt"
        report = tmp_path / "report.tsv"
        result = run(runner, [
            "annotate", "--text", str(DATA / "dialogue.txt"),
            "--lemmas", str(DATA / "dialogue.lemma"),
            "--out", str(out), "--report", str(report),
        ])
        assert result.exit_code == 0
        tagged = out.read_text("utf-8")
        assert tagged.startswith(marked_golden.rstrip("\n"))
        assert report.read_text("utf-8") == ""
        err = result.stderr or result.output
        assert "unknown: 0" in err

    def test_unknown_word_reported_exit_zero(self, runner, tmp_path):
        text = tmp_path / "text.txt"
        text.write_text("пан незнайомко\n", "utf-8")
        lemmas = tmp_path / "t.lemma"
        lemmas.write_text("ПАН\tПАН\tN\n", "utf-8")
        out = tmp_path / "tagged.txt"
        report = tmp_path / "report.tsv"
        result = run(runner, ["annotate", "--text", str(text),
                              "--lemmas", str(lemmas), "--out", str(out),
                              "--report", str(report)])
        assert result.exit_code == 0
        assert report.read_text("utf-8") == "незнайомко\t0\t0\t1\n"

    def test_strip_tags_round_trip(self, runner, tmp_path):
        import re

        from concordia.annotator import parse_tagged, strip_tags

        out = tmp_path / "tagged.txt"
        run(runner, ["annotate", "--text", str(DATA / "dialogue.txt"),
                     "--lemmas", str(DATA / "dialogue.lemma"), "--out", str(out)])
        source = (DATA / "dialogue.txt").read_text("utf-8")
        expected = re.sub(r"(?<=\w)#+", "", source.rstrip("\n"))
        doc = parse_tagged(out.read_text("utf-8"))
        assert strip_tags(doc) == expected


@pytest.fixture()
def tagged_corpus(runner, tmp_path):
    out = tmp_path / "tagged.txt"
    run(runner, ["annotate", "--text", str(DATA / "dialogue.txt"),
                 "--lemmas", str(DATA / "dialogue.lemma"), "--out", str(out)])
    return out


class TestIndexAndStats:
    def test_snapshot_reload_identity(self, runner, tmp_path, tagged_corpus):
        snap1 = tmp_path / "one.snap"
        snap2 = tmp_path / "two.snap"
        assert run(runner, ["index", "--corpus", str(tagged_corpus),
                            "--out", str(snap1)]).exit_code == 0
        assert run(runner, ["index", "--corpus", str(tagged_corpus),
                            "--out", str(snap2)]).exit_code == 0
        assert snap1.read_bytes() == snap2.read_bytes()

    def test_stats_frequency_table(self, runner, tagged_corpus):
        result = run(runner, ["stats", "--corpus", str(tagged_corpus)])
        assert result.exit_code == 0
        rows = [line.split("\t") for line in result.output.splitlines()
                if "\t" in line]
        assert rows[0] == ["Я", "P", "12"]
        freqs = [int(r[2]) for r in rows]
        assert freqs == sorted(freqs, reverse=True)

    def test_empty_corpus(self, runner, tmp_path):
        empty = tmp_path / "empty.txt"
        empty.write_text("", "utf-8")
        result = run(runner, ["stats", "--corpus", str(empty)])
        assert result.exit_code == 0
        assert "lemmas: 0" in (result.stderr or result.output)

    def test_malformed_tag_exit_one(self, runner, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("пан<N|ПАН\n", "utf-8")
        result = runner.invoke(main, ["stats", "--corpus", str(bad)])
        assert result.exit_code == 1
        assert "offset" in (result.stderr or result.output)


class TestExportSiteCommand:
    def test_writes_tree(self, runner, tmp_path, tagged_corpus):
        out = tmp_path / "site"
        result = run(runner, ["export-site", "--corpus", str(tagged_corpus),
                              "--out", str(out)])
        assert result.exit_code == 0
        assert (out / "index.html").is_file()


class TestServeCommand:
    def test_bad_config_key_names_it(self, runner, tmp_path, tagged_corpus):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"porte": 1}), "utf-8")
        result = runner.invoke(main, ["serve", "--corpus", str(tagged_corpus),
                                      "--config", str(config)])
        assert result.exit_code == 1
        assert "porte" in (result.stderr or result.output)

    def test_liveness(self, tmp_path, tagged_corpus):
        """Real server process answers /api/letters with 200."""
        with socket.socket() as s:
            s.bind(("127.0.0.1", 0))
            port = s.getsockname()[1]
        proc = subprocess.Popen(
            [sys.executable, "-m", "concordia.cli", "serve",
             "--corpus", str(tagged_corpus), "--port", str(port)],
            stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL,
        )
        try:
            url = f"http://127.0.0.1:{port}/api/letters"
            deadline = time.time() + 15
            last_err = None
            while time.time() < deadline:
                try:
                    with urllib.request.urlopen(url, timeout=2) as resp:
                        assert resp.status == 200
                        assert b"letters" in resp.read()
                        return
                except (OSError, AssertionError) as exc:
                    last_err = exc
                    time.sleep(0.25)
            pytest.fail(f"server never came up: {last_err}")
        finally:
            proc.terminate()
            proc.wait(timeout=10)
