"""Read-only HTTP service over a concordance index.

Four GET endpoints expose the alphabet bar, per-letter lemma lists,
lemma concordances, and wordform search, each as JSON (default) or
server-rendered HTML (``format=html`` or an Accept header preferring
text/html).  The index is immutable, so any number of concurrent
requests see identical state and identical bodies.

Configuration comes from an optional JSON file plus environment
overrides (CONCORDIA_HOST, CONCORDIA_PORT, CONCORDIA_CORPUS,
CONCORDIA_LEMMAS, CONCORDIA_DEFAULT_K, CONCORDIA_PARAGRAPH_MODE,
CONCORDIA_CORS_ORIGINS, CONCORDIA_UI_DIR).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, Response

from . import pages
from .concordance import (
    ConcordanceIndex,
    ContextWindow,
    concordance_for_lemma,
    kwic_context,
    search_forms,
    sentence_context,
)
from .errors import ConfigError, EmptyQueryError, UnknownLetterError

_ENV_PREFIX = "CONCORDIA_"


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8356
    corpus: str = ""
    lemmas: str = ""
    default_k: int = 7
    paragraph_mode: str = "line"
    cors_origins: list[str] = field(default_factory=lambda: ["*"])
    ui_dir: str = ""


_INT_KEYS = {"port", "default_k"}
_LIST_KEYS = {"cors_origins"}


def load_config(path: str | None = None,
                env: dict[str, str] | None = None) -> ServiceConfig:
    """Config file merged with CONCORDIA_* environment overrides.

    Unknown file keys and malformed values raise ConfigError naming the
    offending key.
    """
    known = {f.name for f in fields(ServiceConfig)}
    config = ServiceConfig()
    if path:
        try:
            data = json.loads(open(path, encoding="utf-8").read())
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}")
        if not isinstance(data, dict):
            raise ConfigError(f"config {path} must hold a JSON object")
        for key, value in data.items():
            if key not in known:
                raise ConfigError(f"unknown config key {key!r} in {path}")
            config = replace(config, **{key: _coerce(key, value)})
    env = os.environ if env is None else env
    for key in known:
        raw = env.get(_ENV_PREFIX + key.upper())
        if raw is not None:
            config = replace(config, **{key: _coerce(key, raw)})
    if config.paragraph_mode not in ("line", "blank"):
        raise ConfigError(
            f"config key 'paragraph_mode' must be 'line' or 'blank', "
            f"got {config.paragraph_mode!r}")
    if config.default_k < 1:
        raise ConfigError("config key 'default_k' must be >= 1")
    return config


def _coerce(key: str, value):
    if key in _INT_KEYS:
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"config key {key!r} must be an integer, "
                              f"got {value!r}")
    if key in _LIST_KEYS:
        if isinstance(value, str):
            return [v.strip() for v in value.split(",") if v.strip()]
        if isinstance(value, list):
            return [str(v) for v in value]
        raise ConfigError(f"config key {key!r} must be a list or "
                          f"comma-separated string")
    if not isinstance(value, (str, int)):
        raise ConfigError(f"config key {key!r} must be a string")
    return str(value)


def _json(payload: dict) -> Response:
    body = json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
    return Response(content=body, media_type="application/json")


def _wants_html(request: Request) -> bool:
    fmt = request.query_params.get("format")
    if fmt == "html":
        return True
    if fmt == "json":
        return False
    accept = request.headers.get("accept", "")
    return "text/html" in accept and "application/json" not in accept.split(";")[0]


def _bad_request(message: str) -> Response:
    return _error(400, message)


def _error(status: int, message: str) -> Response:
    body = json.dumps({"detail": message}, ensure_ascii=False,
                      separators=(",", ":"))
    return Response(content=body, media_type="application/json",
                    status_code=status)


def _window_payload(w: ContextWindow) -> dict:
    occ = w.occurrence
    return {
        "number": w.number,
        "left": w.left,
        "gap": w.keyword_gap if w.left else "",
        "keyword": w.keyword,
        "right": w.right,
        "occurrence": {
            "paragraph": occ.paragraph,
            "sentence": occ.sentence,
            "token": occ.token,
            "surface": occ.surface,
            "lemma": occ.lemma,
            "pos": occ.pos.value,
        },
    }


def create_app(index: ConcordanceIndex,
               config: ServiceConfig | None = None) -> FastAPI:
    """Assemble the FastAPI application over an already built index."""
    config = config or ServiceConfig()
    app = FastAPI(title="concordia", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.cors_origins,
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.get("/")
    def entry() -> HTMLResponse:
        return HTMLResponse(pages.entry_page())

    @app.get("/api/letters")
    def letters(request: Request) -> Response:
        counts = index.letter_counts()
        if _wants_html(request):
            return HTMLResponse(pages.entry_page())
        return _json({
            "letters": [{"letter": l, "lemmas": n} for l, n in counts],
            "total_lemmas": sum(n for _, n in counts),
        })

    @app.get("/api/lemmas/{letter}")
    def lemmas(letter: str, request: Request) -> Response:
        try:
            lemma_list = index.lemmas_for_letter(letter)
        except UnknownLetterError as exc:
            return _error(404, str(exc))
        freqs = [(lemma, index.frequency(lemma)) for lemma in lemma_list]
        if _wants_html(request):
            return HTMLResponse(pages.letter_page(letter, freqs))
        return _json({
            "letter": letter,
            "lemmas": [
                {
                    "lemma": lemma,
                    "frequency": freq,
                    "concordance": pages.concordance_url(lemma, html=False),
                }
                for lemma, freq in freqs
            ],
        })

    @app.get("/api/concordance")
    def concordance(request: Request, lemma: str = "",
                    context: str = "kwic", k: int | None = None) -> Response:
        if context not in ("kwic", "sentence"):
            return _bad_request(
                f"context must be 'kwic' or 'sentence', got {context!r}")
        size = config.default_k if k is None else k
        if size < 1:
            return _bad_request("k must be >= 1")
        if not lemma.strip():
            return _bad_request("missing lemma parameter")
        windows = concordance_for_lemma(index, lemma, context, size)
        if _wants_html(request):
            return HTMLResponse(pages.concordance_page(lemma, context, windows))
        return _json({
            "query": {"kind": "lemma", "text": lemma,
                      "context": context, "k": size},
            "total": len(windows),
            "windows": [_window_payload(w) for w in windows],
        })

    @app.get("/api/search")
    def search(request: Request, q: str = "", match: str = "exact",
               context: str = "kwic", k: int | None = None) -> Response:
        if match not in ("exact", "prefix", "substring"):
            return _bad_request(
                f"match must be exact, prefix or substring, got {match!r}")
        if context not in ("kwic", "sentence"):
            return _bad_request(
                f"context must be 'kwic' or 'sentence', got {context!r}")
        size = config.default_k if k is None else k
        if size < 1:
            return _bad_request("k must be >= 1")
        try:
            hits = search_forms(index, q, match)
        except EmptyQueryError:
            return _bad_request("empty search query")
        groups = []
        for surface, occs in hits.items():
            windows = []
            for n, occ in enumerate(occs, start=1):
                if context == "kwic":
                    windows.append(kwic_context(index, occ, size, n))
                else:
                    windows.append(sentence_context(index, occ, n))
            groups.append((surface, windows))
        if _wants_html(request):
            return HTMLResponse(pages.search_page(q, match, context, groups))
        return _json({
            "query": {"kind": "form", "text": q, "match": match,
                      "context": context, "k": size},
            "total": sum(len(ws) for _, ws in groups),
            "groups": [
                {
                    "surface": surface,
                    "total": len(windows),
                    "windows": [_window_payload(w) for w in windows],
                }
                for surface, windows in groups
            ],
        })

    if config.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=config.ui_dir, html=True),
                  name="ui")
    return app


def load_index(config: ServiceConfig) -> ConcordanceIndex:
    """Build the index from the configured tagged corpus file."""
    from .annotator import parse_tagged
    from .concordance import build_index

    if not config.corpus:
        raise ConfigError("config key 'corpus' is required to serve")
    text = open(config.corpus, encoding="utf-8").read()
    document = parse_tagged(text, config.paragraph_mode,
                            os.path.basename(config.corpus))
    return build_index(document)
