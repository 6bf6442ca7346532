"""HTTP face of the library.

Every endpoint wraps exactly one library call; the service layer only does
serialization and error mapping, never analysis of its own. All served data
(analyzed corpora, KB, embeddings) is loaded before startup and immutable, so
a response is a deterministic function of the loaded data and the request.
"""

from __future__ import annotations

import datetime
import logging

from fastapi import Body, FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__, export
from .annotations import instance_from_record, validate_instance
from .conllu import sentence_from_record
from .corpus import DOCUMENT_FIELDS
from .discovery import keyword_search, suggestion_payload
from .errors import (
    AnalysisError,
    AnnotationError,
    ConlluError,
    FramelensError,
    KBError,
    LoadError,
    QueryError,
)
from .stats import (
    CorpusFilter,
    FeatureQuery,
    construction_by_frame,
    document_view,
    foregrounding_share,
    frame_frequencies,
    role_link_frequencies,
    sample_sentences,
    time_lag_histogram,
)
from .syntax import analyze_instance, annotation_to_record

log = logging.getLogger(__name__)

# Machine-readable codes for the error payload, one per exception type.
ERROR_CODES = {
    ConlluError: "conllu_error",
    AnnotationError: "annotation_error",
    KBError: "kb_error",
    LoadError: "load_error",
    QueryError: "query_error",
    AnalysisError: "analysis_error",
    FramelensError: "error",
}


class ServiceError(Exception):
    """Request-level failure carrying an HTTP status and error code."""

    def __init__(self, status, code, message):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def error_response(status, code, message):
    return JSONResponse(
        status_code=status, content={"error": {"code": code, "message": message}}
    )


def _error_code(exc):
    for cls in type(exc).__mro__:
        if cls in ERROR_CODES:
            return ERROR_CODES[cls]
    return "error"


def _jsonable(value):
    if isinstance(value, datetime.date):
        return value.isoformat()
    return value


def _require(payload, key):
    value = payload.get(key)
    if value is None:
        raise QueryError(f"request body must set {key!r}")
    return value


def _annotation_or_none(annotation):
    return None if annotation is None else annotation_to_record(annotation)


def corpus_summary(corpus_id, analyzed):
    corpus = analyzed.corpus
    return {
        "corpus_id": corpus_id,
        "documents": len(corpus.documents),
        "sentences": corpus.n_sentences,
        "instances": corpus.n_instances,
        "events": len(corpus.events),
        "frames": corpus.frame_names,
        "analysis_failures": len(analyzed.failures),
    }


def document_payload(analyzed, doc_id):
    corpus = analyzed.corpus
    doc = corpus.document(doc_id)
    sentences = []
    for sentence, instances, annotations in document_view(analyzed, doc_id):
        bundled = [
            dict(export.instance_record(inst), annotation=_annotation_or_none(ann))
            for inst, ann in zip(instances, annotations)
        ]
        sentences.append(
            {
                "sent_id": sentence.sent_id,
                "text": sentence.text,
                "tokens": [t.form for t in sentence.tokens],
                "instances": bundled,
            }
        )
    return {
        "doc_id": doc.doc_id,
        "metadata": {key: _jsonable(doc.field(key)) for key in DOCUMENT_FIELDS},
        "sentences": sentences,
    }


def analyze_payload(payload, kb):
    """Validate and analyze pre-parsed sentences exactly as ingestion would."""
    config = payload.get("config") or {}
    max_steps = config.get("max_steps", 3)
    if not isinstance(max_steps, int) or max_steps < 1:
        raise QueryError("config.max_steps must be a positive integer")
    whitelist = config.get("relation_whitelist")
    records = _require(payload, "sentences")
    out = []
    frames_seen = set()
    for rec in records:
        where = f"sentence {rec.get('sent_id', '?')!r}" if isinstance(rec, dict) else "sentence"
        sentence = sentence_from_record(rec, where=where)
        bundled = []
        for k, inst_rec in enumerate(rec.get("instances", [])):
            instance_id = f"adhoc:{sentence.sent_id}:{k}"
            instance = instance_from_record(inst_rec, instance_id, where=where)
            validate_instance(instance, sentence, kb, where=where)
            annotation = analyze_instance(sentence, instance, kb, max_steps=max_steps)
            frames_seen.add(instance.frame)
            bundled.append(
                dict(export.instance_record(instance), annotation=annotation_to_record(annotation))
            )
        out.append(
            {
                "sent_id": sentence.sent_id,
                "text": sentence.text,
                "tokens": [t.form for t in sentence.tokens],
                "instances": bundled,
            }
        )
    if whitelist is None:
        alternatives = {f: kb.alternatives([f]) for f in sorted(frames_seen)}
    else:
        alternatives = {f: kb.alternatives([f], frozenset(whitelist)) for f in sorted(frames_seen)}
    return {
        "config": {"max_steps": max_steps, "relation_whitelist": whitelist},
        "sentences": out,
        "alternatives": alternatives,
    }


def build_app(corpora, kb, embeddings=None, store=None):
    """Assemble the application over an immutable corpus set.

    ``corpora`` maps corpus id -> AnalyzedCorpus. ``embeddings`` and ``store``
    (frame embeddings plus the word-vector store they came from) enable
    /frames/search; without them that endpoint reports search_unavailable.
    """
    app = FastAPI(title="framelens", version=__version__, docs_url=None, redoc_url=None)

    # Read-only analysis API; browser clients may live on another origin.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["content-type"],
    )

    @app.exception_handler(ServiceError)
    async def _service_error(request, exc):
        return error_response(exc.status, exc.code, exc.message)

    @app.exception_handler(FramelensError)
    async def _framelens_error(request, exc):
        return error_response(400, _error_code(exc), str(exc))

    @app.exception_handler(ValueError)
    async def _value_error(request, exc):
        return error_response(400, "bad_request", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request, exc):
        return error_response(400, "bad_request", str(exc))

    def corpus(corpus_id):
        try:
            return corpora[corpus_id]
        except KeyError:
            raise ServiceError(404, "not_found", f"unknown corpus {corpus_id!r}")

    @app.get("/")
    def root():
        return {"service": "framelens", "version": __version__, "corpora": sorted(corpora)}

    @app.get("/corpora")
    def list_corpora():
        return {"corpora": [corpus_summary(cid, corpora[cid]) for cid in sorted(corpora)]}

    @app.get("/corpora/{corpus_id}/schema")
    def corpus_schema(corpus_id):
        analyzed = corpus(corpus_id)
        schema = analyzed.corpus.metadata_schema()
        return {
            "corpus_id": corpus_id,
            "document": schema["document"],
            "event": schema["event"],
            "frames": analyzed.corpus.frame_names,
        }

    @app.get("/corpora/{corpus_id}/documents/{doc_id}")
    def get_document(corpus_id, doc_id):
        analyzed = corpus(corpus_id)
        try:
            return document_payload(analyzed, doc_id)
        except QueryError as exc:
            raise ServiceError(404, "not_found", str(exc))

    # Each stats route exists twice: GET with query-string knobs for the
    # simple cases, POST with a structured body once filters come into play.

    def stat_frames(analyzed, corpus_id, corpus_filter):
        records = export.frame_frequency_records(frame_frequencies(analyzed, corpus_filter))
        return {"corpus_id": corpus_id, "stat": "frames", "records": records}

    def stat_constructions(analyzed, corpus_id, corpus_filter):
        records = export.construction_records(construction_by_frame(analyzed, corpus_filter))
        return {"corpus_id": corpus_id, "stat": "constructions", "records": records}

    def stat_role_links(analyzed, corpus_id, frame, corpus_filter):
        links = role_link_frequencies(analyzed, frame, corpus_filter)
        records = export.role_link_records(frame, links)
        return {"corpus_id": corpus_id, "stat": "role-links", "frame": frame, "records": records}

    def stat_time_lag(analyzed, corpus_id, frames, bucket_days, corpus_filter):
        histogram = time_lag_histogram(analyzed, frames, corpus_filter, bucket_days=bucket_days)
        payload = export.time_lag_payload(histogram)
        return dict({"corpus_id": corpus_id, "stat": "time-lag", "frames": sorted(frames)}, **payload)

    def stat_foregrounding(analyzed, corpus_id, frame, corpus_filter):
        share, total = foregrounding_share(analyzed, frame, kb, corpus_filter)
        record = export.foregrounding_record(frame, share, total)
        return dict({"corpus_id": corpus_id, "stat": "foregrounding"}, **record)

    @app.get("/corpora/{corpus_id}/stats/frames")
    def get_frames_stat(corpus_id):
        return stat_frames(corpus(corpus_id), corpus_id, CorpusFilter())

    @app.post("/corpora/{corpus_id}/stats/frames")
    def post_frames_stat(corpus_id, payload: dict = Body(default={})):
        corpus_filter = CorpusFilter.from_payload(payload.get("filter"))
        return stat_frames(corpus(corpus_id), corpus_id, corpus_filter)

    @app.get("/corpora/{corpus_id}/stats/constructions")
    def get_constructions_stat(corpus_id):
        return stat_constructions(corpus(corpus_id), corpus_id, CorpusFilter())

    @app.post("/corpora/{corpus_id}/stats/constructions")
    def post_constructions_stat(corpus_id, payload: dict = Body(default={})):
        corpus_filter = CorpusFilter.from_payload(payload.get("filter"))
        return stat_constructions(corpus(corpus_id), corpus_id, corpus_filter)

    @app.get("/corpora/{corpus_id}/stats/role-links")
    def get_role_links_stat(corpus_id, frame: str):
        return stat_role_links(corpus(corpus_id), corpus_id, frame, CorpusFilter())

    @app.post("/corpora/{corpus_id}/stats/role-links")
    def post_role_links_stat(corpus_id, payload: dict = Body(default={})):
        frame = _require(payload, "frame")
        corpus_filter = CorpusFilter.from_payload(payload.get("filter"))
        return stat_role_links(corpus(corpus_id), corpus_id, frame, corpus_filter)

    @app.get("/corpora/{corpus_id}/stats/time-lag")
    def get_time_lag_stat(corpus_id, frames: list[str] = Query(...), bucket_days: int = 1):
        return stat_time_lag(corpus(corpus_id), corpus_id, frames, bucket_days, CorpusFilter())

    @app.post("/corpora/{corpus_id}/stats/time-lag")
    def post_time_lag_stat(corpus_id, payload: dict = Body(default={})):
        frames = _require(payload, "frames")
        bucket_days = payload.get("bucket_days", 1)
        corpus_filter = CorpusFilter.from_payload(payload.get("filter"))
        return stat_time_lag(corpus(corpus_id), corpus_id, frames, bucket_days, corpus_filter)

    @app.get("/corpora/{corpus_id}/stats/foregrounding")
    def get_foregrounding_stat(corpus_id, frame: str):
        return stat_foregrounding(corpus(corpus_id), corpus_id, frame, CorpusFilter())

    @app.post("/corpora/{corpus_id}/stats/foregrounding")
    def post_foregrounding_stat(corpus_id, payload: dict = Body(default={})):
        frame = _require(payload, "frame")
        corpus_filter = CorpusFilter.from_payload(payload.get("filter"))
        return stat_foregrounding(corpus(corpus_id), corpus_id, frame, corpus_filter)

    @app.post("/corpora/{corpus_id}/sample")
    def post_sample(corpus_id, payload: dict = Body(default={})):
        analyzed = corpus(corpus_id)
        query = FeatureQuery.from_payload(_require(payload, "query"))
        n = payload.get("n", 10)
        seed = payload.get("seed", 0)
        corpus_filter = CorpusFilter.from_payload(payload.get("filter"))
        matches = sample_sentences(analyzed, query, n, seed, corpus_filter)
        return {
            "corpus_id": corpus_id,
            "query": query.to_payload(),
            "n": n,
            "seed": seed,
            "sentences": export.sample_records(matches),
        }

    @app.post("/frames/search")
    def post_search(payload: dict = Body(default={})):
        if embeddings is None or store is None:
            raise ServiceError(
                400, "search_unavailable", "service started without word vectors"
            )
        keywords = _require(payload, "keywords")
        top_n = payload.get("top_n", 10)
        ranked = keyword_search(keywords, store, embeddings, top_n=top_n)
        details = suggestion_payload(ranked, kb)
        results = [
            dict(detail, distance=distance)
            for (frame, distance), detail in zip(ranked, details)
        ]
        return {"keywords": list(keywords), "top_n": top_n, "results": results}

    @app.post("/frames/alternatives")
    def post_alternatives(payload: dict = Body(default={})):
        frames = _require(payload, "frames")
        hops = payload.get("hops", 1)
        relations = payload.get("relations")
        if relations is None:
            expanded = kb.alternatives(frames, hops=hops)
        else:
            expanded = kb.alternatives(frames, frozenset(relations), hops=hops)
        return {
            "frames": sorted(frames),
            "alternatives": expanded,
            "added": sorted(set(expanded) - set(frames)),
        }

    @app.post("/analyze")
    def post_analyze(payload: dict = Body(default={})):
        return analyze_payload(payload, kb)

    return app


def serve(corpora, kb, embeddings=None, store=None, host="127.0.0.1", port=8000):
    """Build the app and run it under uvicorn (blocking)."""
    import uvicorn

    app = build_app(corpora, kb, embeddings=embeddings, store=store)
    log.info("serving %d corpora on %s:%d", len(corpora), host, port)
    uvicorn.run(app, host=host, port=port, log_level="warning")
