"""Command-line interface.

Subcommands: ingest, analyze, stats, sample, search-frames, alternatives,
serve. Machine-readable output goes to stdout, diagnostics to stderr. Exit
codes: 0 success, 2 bad input (files, flags, queries), 1 internal error.
All JSON output is canonical (sorted keys, no whitespace) so identical
invocations produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import export
from .corpus import canonical_json, load_corpus, save_corpus
from .data import bundled_kb, bundled_vectors_path
from .discovery import embed_frames, keyword_search, load_word_vectors, suggestion_payload
from .errors import FramelensError, QueryError
from .kb import load_kb
from .stats import (
    CorpusFilter,
    FeatureQuery,
    construction_by_frame,
    foregrounding_share,
    frame_frequencies,
    role_link_frequencies,
    sample_sentences,
    time_lag_histogram,
)
from .syntax import analysis_to_payload, analyze_corpus, open_analyzed

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2


def _emit(payload):
    sys.stdout.write(canonical_json(payload))
    sys.stdout.write("\n")


def _load_kb(args):
    if args.kb:
        if not args.agentivity:
            raise QueryError("--kb requires --agentivity")
        return load_kb(args.kb, args.agentivity, args.role_mappings)
    return bundled_kb()


def _kb_flags(parser):
    group = parser.add_argument_group("knowledge base (bundled KB when omitted)")
    group.add_argument("--kb", help="frame KB in JSON-lines form")
    group.add_argument("--agentivity", help="tab-separated frame agentivity table")
    group.add_argument("--role-mappings", help="tab-separated role-mapping table")


def _corpus_flags(parser, with_index=True):
    if with_index:
        parser.add_argument("--index", help="saved corpus index file")
    parser.add_argument("--conllu", help="dependency-parsed sentences (CoNLL-U)")
    parser.add_argument("--annotations", help="frame annotations (JSON lines)")
    parser.add_argument("--docs", help="document metadata (JSON lines)")
    parser.add_argument("--events", help="event metadata (JSON lines)")


def _open_analyzed(args, kb):
    if getattr(args, "index", None):
        return open_analyzed(args.index, kb, max_steps=args.max_steps)
    if not (args.conllu and args.annotations and args.docs):
        raise QueryError("provide --index or all of --conllu/--annotations/--docs")
    corpus = load_corpus(args.conllu, args.annotations, args.docs, args.events, kb=kb)
    return analyze_corpus(corpus, kb, max_steps=args.max_steps)


def _parse_filter(raw):
    if raw is None:
        return CorpusFilter()
    try:
        payload = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise QueryError(f"--filter is not valid JSON: {exc}")
    return CorpusFilter.from_payload(payload)


def _report_failures(analyzed):
    for instance_id, message in analyzed.failures:
        log.warning("instance %s not analyzed: %s", instance_id, message)


def cmd_ingest(args):
    kb = _load_kb(args)
    corpus = load_corpus(args.conllu, args.annotations, args.docs, args.events, kb=kb)
    analyzed = analyze_corpus(corpus, kb, max_steps=args.max_steps)
    _report_failures(analyzed)
    save_corpus(corpus, args.out, annotations_payload=analysis_to_payload(analyzed))
    _emit(
        {
            "index": args.out,
            "documents": len(corpus.documents),
            "sentences": corpus.n_sentences,
            "instances": corpus.n_instances,
            "events": len(corpus.events),
            "analysis_failures": len(analyzed.failures),
        }
    )
    return EXIT_OK


def cmd_analyze(args):
    kb = _load_kb(args)
    analyzed = _open_analyzed(args, kb)
    _report_failures(analyzed)
    for record in export.annotation_records(analyzed):
        _emit(record)
    return EXIT_OK


def cmd_stats(args):
    kb = _load_kb(args)
    analyzed = _open_analyzed(args, kb)
    corpus_filter = _parse_filter(args.filter)
    if args.stat == "frames":
        records = export.frame_frequency_records(frame_frequencies(analyzed, corpus_filter))
        payload = {"stat": "frames", "records": records}
    elif args.stat == "constructions":
        records = export.construction_records(construction_by_frame(analyzed, corpus_filter))
        payload = {"stat": "constructions", "records": records}
    elif args.stat == "role-links":
        if not args.frame:
            raise QueryError("stats role-links requires --frame")
        links = role_link_frequencies(analyzed, args.frame, corpus_filter)
        records = export.role_link_records(args.frame, links)
        payload = {"stat": "role-links", "frame": args.frame, "records": records}
    elif args.stat == "time-lag":
        if not args.frames:
            raise QueryError("stats time-lag requires --frames")
        histogram = time_lag_histogram(
            analyzed, args.frames, corpus_filter, bucket_days=args.bucket_days
        )
        records = export.time_lag_records(histogram)
        payload = dict({"stat": "time-lag"}, **export.time_lag_payload(histogram))
    else:
        if not args.frame:
            raise QueryError("stats foregrounding requires --frame")
        share, total = foregrounding_share(analyzed, args.frame, kb, corpus_filter)
        record = export.foregrounding_record(args.frame, share, total)
        records = [record]
        payload = dict({"stat": "foregrounding"}, **record)
    if args.format == "csv":
        sys.stdout.write(export.write_csv(records))
    else:
        _emit(payload)
    return EXIT_OK


def cmd_sample(args):
    kb = _load_kb(args)
    analyzed = _open_analyzed(args, kb)
    role_link = None
    if args.role or args.path:
        if not (args.role and args.path):
            raise QueryError("--role and --path must be given together")
        role_link = (args.role, args.path)
    query = FeatureQuery(
        frame=args.frame,
        construction=FeatureQuery.from_payload({"construction": args.construction}).construction
        if args.construction
        else None,
        role_link=role_link,
        is_root={"true": True, "false": False}[args.is_root] if args.is_root else None,
    )
    matches = sample_sentences(analyzed, query, args.n, args.seed, _parse_filter(args.filter))
    _emit(
        {
            "query": query.to_payload(),
            "n": args.n,
            "seed": args.seed,
            "sentences": export.sample_records(matches),
        }
    )
    return EXIT_OK


def cmd_search_frames(args):
    kb = _load_kb(args)
    store = load_word_vectors(args.vectors)
    embeddings = embed_frames(kb, store)
    ranked = keyword_search(args.keywords, store, embeddings, top_n=args.top_n)
    details = suggestion_payload(ranked, kb)
    results = [
        dict(detail, distance=distance)
        for (frame, distance), detail in zip(ranked, details)
    ]
    _emit({"keywords": args.keywords, "top_n": args.top_n, "results": results})
    return EXIT_OK


def cmd_alternatives(args):
    kb = _load_kb(args)
    if args.relations:
        expanded = kb.alternatives(args.frames, frozenset(args.relations), hops=args.hops)
    else:
        expanded = kb.alternatives(args.frames, hops=args.hops)
    _emit(
        {
            "frames": sorted(args.frames),
            "alternatives": expanded,
            "added": sorted(set(expanded) - set(args.frames)),
        }
    )
    return EXIT_OK


def cmd_serve(args):
    from .service import serve

    kb = _load_kb(args)
    corpora = {}
    for spec in args.index or []:
        name, eq, path = spec.partition("=")
        if not eq:
            name, path = _stem(spec), spec
        if name in corpora:
            raise QueryError(f"duplicate corpus id {name!r}")
        corpora[name] = open_analyzed(path, kb, max_steps=args.max_steps)
        _report_failures(corpora[name])
    store = load_word_vectors(args.vectors)
    embeddings = embed_frames(kb, store)
    serve(corpora, kb, embeddings=embeddings, store=store, host=args.host, port=args.port)
    return EXIT_OK


def _stem(path):
    name = path.replace("\\", "/").rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[0] if "." in name else name


def build_parser():
    parser = argparse.ArgumentParser(
        prog="framelens",
        description="Corpus perspective analysis with frame semantics.",
    )
    parser.add_argument("--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate a corpus and write its index file")
    _corpus_flags(p, with_index=False)
    p.add_argument("--out", required=True, help="index file to write")
    p.add_argument("--max-steps", type=int, default=3)
    _kb_flags(p)
    p.set_defaults(func=cmd_ingest, required_inputs=("conllu", "annotations", "docs"))

    p = sub.add_parser("analyze", help="print one annotation record per frame instance")
    _corpus_flags(p)
    p.add_argument("--max-steps", type=int, default=3)
    _kb_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("stats", help="corpus statistics over the analyzed corpus")
    _corpus_flags(p)
    p.add_argument(
        "--stat",
        required=True,
        choices=["frames", "constructions", "role-links", "time-lag", "foregrounding"],
    )
    p.add_argument("--frame", help="frame for role-links / foregrounding")
    p.add_argument("--frames", nargs="+", help="frames for time-lag")
    p.add_argument("--bucket-days", type=int, default=1)
    p.add_argument("--filter", help="corpus filter as a JSON object")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--max-steps", type=int, default=3)
    _kb_flags(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sample", help="reproducible sample of matching sentences")
    _corpus_flags(p)
    p.add_argument("--frame")
    p.add_argument("--construction")
    p.add_argument("--role", help="role name for a role-link condition")
    p.add_argument("--path", help="path pattern for a role-link condition ('*' wildcard)")
    p.add_argument("--is-root", choices=["true", "false"])
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", help="corpus filter as a JSON object")
    p.add_argument("--max-steps", type=int, default=3)
    _kb_flags(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("search-frames", help="rank frames against keywords")
    p.add_argument("--keywords", nargs="+", required=True)
    p.add_argument("--top-n", type=int, default=10)
    p.add_argument("--vectors", default=bundled_vectors_path(), help="word-vector text file")
    _kb_flags(p)
    p.set_defaults(func=cmd_search_frames)

    p = sub.add_parser("alternatives", help="expand frames along perspective relations")
    p.add_argument("--frames", nargs="+", required=True)
    p.add_argument("--relations", nargs="+", help="relation-type whitelist")
    p.add_argument("--hops", type=int, default=1)
    _kb_flags(p)
    p.set_defaults(func=cmd_alternatives)

    p = sub.add_parser("serve", help="serve loaded corpora over HTTP")
    p.add_argument(
        "--index",
        action="append",
        metavar="[NAME=]PATH",
        help="index file to serve, repeatable; NAME defaults to the file stem",
    )
    p.add_argument("--vectors", default=bundled_vectors_path())
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--max-steps", type=int, default=3)
    _kb_flags(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    required = getattr(args, "required_inputs", ())
    missing = [f"--{name}" for name in required if not getattr(args, name)]
    if missing:
        parser.error(f"missing required arguments: {', '.join(missing)}")
    try:
        return args.func(args)
    except (FramelensError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception:  # pragma: no cover - internal faults only
        log.exception("internal error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
