#!/usr/bin/env python3
"""Convert an external frame parser's JSONL output into framelens input.

The engine never invokes a parser itself; it consumes pre-parsed sentences.
This adapter shows the expected plumbing for one common output shape, where
the parser emits one JSON object per sentence:

    {
      "sentence_id": "s12",            optional, generated when absent
      "document_id": "doc3",           optional, default "doc0"
      "text": "She was killed",        optional, joined from tokens when absent
      "tokens": [
        {"text": "She", "lemma": "she", "upos": "PRON",
         "head": 3, "deprel": "nsubj:pass", "feats": "Case=Nom|Gender=Fem"},
        ...
      ],
      "frames": [
        {"frame": "Killing", "target": [2, 3],
         "elements": [{"role": "Victim", "span": [0, 1]}]}
      ]
    }

Token heads are 1-based with 0 for the root, the CoNLL-U convention most
parsers keep. Target and element spans are 0-based half-open token ranges.
"feats" may be a CoNLL-U style string, a mapping, or absent.

Two output modes:

    request   one /analyze request body on stdout (default):
                  parser out.jsonl | this script | curl -d @- \\
                      -H 'content-type: application/json' \\
                      http://127.0.0.1:8000/analyze
    corpus    PREFIX.conllu + PREFIX.frames.jsonl + PREFIX.docs.jsonl,
              ready for `framelens ingest` (document metadata is stubbed
              and usually needs enrichment before real use).

Adapting a different parser means rewriting convert_sentence only.
"""

import argparse
import json
import sys


def _feats_string(feats):
    if not feats:
        return "_"
    if isinstance(feats, str):
        return feats
    return "|".join(f"{k}={v}" for k, v in sorted(feats.items()))


def _feats_map(feats):
    if not feats:
        return {}
    if isinstance(feats, dict):
        return {str(k): str(v) for k, v in feats.items()}
    return dict(pair.split("=", 1) for pair in feats.split("|"))


def convert_sentence(raw, fallback_id):
    """One parser record -> (doc_id, sentence record, instance records)."""
    sent_id = raw.get("sentence_id", fallback_id)
    doc_id = raw.get("document_id", "doc0")
    tokens = []
    for k, tok in enumerate(raw["tokens"], start=1):
        tokens.append(
            {
                "index": k,
                "form": tok["text"],
                "lemma": tok.get("lemma", "_"),
                "upos": tok["upos"],
                "feats": _feats_map(tok.get("feats")),
                "head": int(tok["head"]),
                "deprel": tok["deprel"],
            }
        )
    text = raw.get("text") or " ".join(t["form"] for t in tokens)
    instances = []
    for fr in raw.get("frames", []):
        start, end = fr["target"]
        instances.append(
            {
                "sent_id": sent_id,
                "frame": fr["frame"],
                "trigger": {"start": start, "end": end},
                "roles": [
                    {"name": el["role"], "start": el["span"][0], "end": el["span"][1]}
                    for el in fr.get("elements", [])
                ],
            }
        )
    sentence = {"sent_id": sent_id, "text": text, "tokens": tokens}
    return doc_id, sentence, instances


def read_parser_output(stream):
    converted = []
    for line_no, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            sys.exit(f"line {line_no}: not valid JSON ({exc})")
        try:
            converted.append(convert_sentence(raw, fallback_id=f"s{line_no}"))
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            sys.exit(f"line {line_no}: malformed parser record ({exc})")
    return converted


def emit_request(converted, max_steps):
    sentences = [
        dict(sentence, instances=instances) for _, sentence, instances in converted
    ]
    body = {"sentences": sentences, "config": {"max_steps": max_steps}}
    json.dump(body, sys.stdout, sort_keys=True, ensure_ascii=False)
    sys.stdout.write("\n")


def _conllu_block(doc_id, sentence, new_doc):
    lines = []
    if new_doc:
        lines.append(f"# newdoc id = {doc_id}")
    lines.append(f"# sent_id = {sentence['sent_id']}")
    lines.append(f"# text = {sentence['text']}")
    for tok in sentence["tokens"]:
        lines.append(
            "\t".join(
                [
                    str(tok["index"]), tok["form"], tok["lemma"], tok["upos"], "_",
                    _feats_string(tok["feats"]), str(tok["head"]), tok["deprel"],
                    "_", "_",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def emit_corpus(converted, prefix, pub_date):
    doc_ids = []
    with open(f"{prefix}.conllu", "w", encoding="utf-8") as conllu:
        for doc_id, sentence, _ in converted:
            new_doc = doc_id not in doc_ids
            if new_doc:
                doc_ids.append(doc_id)
            conllu.write(_conllu_block(doc_id, sentence, new_doc))
            conllu.write("\n")
    with open(f"{prefix}.frames.jsonl", "w", encoding="utf-8") as frames:
        for doc_id, _, instances in converted:
            for inst in instances:
                record = dict(inst, doc_id=doc_id)
                frames.write(json.dumps(record, sort_keys=True, ensure_ascii=False))
                frames.write("\n")
    # placeholder metadata: one record per document, enrich before real use
    with open(f"{prefix}.docs.jsonl", "w", encoding="utf-8") as docs:
        for doc_id in doc_ids:
            record = {"doc_id": doc_id, "pub_date": pub_date, "source": "unknown"}
            docs.write(json.dumps(record, sort_keys=True, ensure_ascii=False))
            docs.write("\n")
    print(
        f"wrote {prefix}.conllu, {prefix}.frames.jsonl, {prefix}.docs.jsonl "
        f"({len(doc_ids)} documents, {len(converted)} sentences)",
        file=sys.stderr,
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("input", nargs="?", default="-",
                        help="parser output JSONL (default: stdin)")
    parser.add_argument("--mode", choices=["request", "corpus"], default="request")
    parser.add_argument("--prefix", default="adapted",
                        help="output path prefix for --mode corpus")
    parser.add_argument("--max-steps", type=int, default=3,
                        help="role-path traversal budget for --mode request")
    parser.add_argument("--pub-date", default="1970-01-01",
                        help="placeholder publication date for stub metadata")
    args = parser.parse_args()

    if args.input == "-":
        converted = read_parser_output(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as stream:
            converted = read_parser_output(stream)
    if not converted:
        sys.exit("no sentences in input")

    if args.mode == "request":
        emit_request(converted, args.max_steps)
    else:
        emit_corpus(converted, args.prefix, args.pub_date)


if __name__ == "__main__":
    main()
