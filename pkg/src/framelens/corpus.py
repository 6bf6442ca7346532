"""The corpus store: documents, events, secondary indexes, and persistence.

A corpus is write-once. ``load_corpus`` cross-validates all input files and
returns an immutable store; any change requires a re-ingest. The store
round-trips through a single canonical JSON index file whose bytes are a
deterministic function of the inputs.
"""

from __future__ import annotations

import datetime
import json
from dataclasses import dataclass, field

from .annotations import FrameInstance, instance_from_record, parse_frame_annotations
from .conllu import Sentence, parse_conllu, sentence_from_record, sentence_to_record
from .errors import LoadError, QueryError

INDEX_FORMAT = "framelens-corpus-v1"

DOCUMENT_FIELDS = ("doc_id", "event_id", "pub_date", "source", "title", "url")
EVENT_FIELDS = ("event_id", "event_date")


def parse_date(value, where=""):
    if isinstance(value, datetime.date):
        return value
    try:
        return datetime.date.fromisoformat(value)
    except (TypeError, ValueError):
        ctx = f"{where}: " if where else ""
        raise LoadError(f"{ctx}expected YYYY-MM-DD date, got {value!r}")


@dataclass(frozen=True)
class EventRecord:
    event_id: str
    event_date: datetime.date
    attributes: tuple[tuple[str, str], ...]

    def attribute(self, key):
        for k, v in self.attributes:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class CorpusDocument:
    doc_id: str
    pub_date: datetime.date
    source: str
    sentences: tuple[Sentence, ...]
    frame_instances: tuple[FrameInstance, ...]
    event_id: str | None = None
    title: str | None = None
    url: str | None = None

    def sentence(self, sent_id):
        for sentence in self.sentences:
            if sentence.sent_id == sent_id:
                return sentence
        raise QueryError(f"unknown sentence {sent_id!r} in document {self.doc_id!r}")

    def instances_for(self, sent_id):
        return [i for i in self.frame_instances if i.sent_id == sent_id]

    def field(self, key):
        if key not in DOCUMENT_FIELDS:
            raise QueryError(f"unknown document field {key!r}")
        return getattr(self, key)


@dataclass(frozen=True)
class Corpus:
    """Immutable document/event store with the derived lookup indexes."""

    documents: tuple[CorpusDocument, ...]
    events: tuple[EventRecord, ...]
    _by_doc_id: dict = field(default=None, repr=False, compare=False)
    _by_event_id: dict = field(default=None, repr=False, compare=False)
    _frame_index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_doc_id", {d.doc_id: d for d in self.documents})
        object.__setattr__(self, "_by_event_id", {e.event_id: e for e in self.events})
        frame_index = {}
        for doc in self.documents:
            for instance in doc.frame_instances:
                frame_index.setdefault(instance.frame, []).append((doc.doc_id, instance))
        object.__setattr__(self, "_frame_index", frame_index)

    def document(self, doc_id):
        try:
            return self._by_doc_id[doc_id]
        except KeyError:
            raise QueryError(f"unknown document {doc_id!r}")

    def event(self, event_id):
        return self._by_event_id.get(event_id)

    def event_for(self, doc):
        return self._by_event_id.get(doc.event_id) if doc.event_id else None

    @property
    def frame_names(self):
        return sorted(self._frame_index)

    def instances_of(self, frame):
        """All (doc_id, FrameInstance) pairs for a frame name, document order."""
        return list(self._frame_index.get(frame, []))

    def iter_instances(self):
        for doc in self.documents:
            for instance in doc.frame_instances:
                yield doc, instance

    @property
    def n_sentences(self):
        return sum(len(d.sentences) for d in self.documents)

    @property
    def n_instances(self):
        return sum(len(d.frame_instances) for d in self.documents)

    def by_source(self, source):
        return [d for d in self.documents if d.source == source]

    def by_event(self, event_id):
        return [d for d in self.documents if d.event_id == event_id]

    def metadata_schema(self):
        """Field inventory for filter validation and UI widget generation."""
        attr_keys = sorted({k for e in self.events for k, _ in e.attributes})
        return {
            "document": list(DOCUMENT_FIELDS),
            "event": list(EVENT_FIELDS) + attr_keys,
        }


def _parse_doc_meta(path):
    metas = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            where = f"{path}:{line_no}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LoadError(f"{where}: invalid record ({exc})")
            doc_id = record.get("doc_id")
            if not doc_id:
                raise LoadError(f"{where}: document record without doc_id")
            if doc_id in metas:
                raise LoadError(f"{where}: duplicate doc_id {doc_id!r}")
            for key in ("pub_date", "source"):
                if key not in record:
                    raise LoadError(f"{where}: document {doc_id!r} missing {key!r}")
            metas[doc_id] = {
                "doc_id": doc_id,
                "event_id": record.get("event_id"),
                "pub_date": parse_date(record["pub_date"], where),
                "source": record["source"],
                "title": record.get("title"),
                "url": record.get("url"),
            }
    return metas


def _parse_events(path):
    events = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            where = f"{path}:{line_no}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LoadError(f"{where}: invalid record ({exc})")
            event_id = record.get("event_id")
            if not event_id:
                raise LoadError(f"{where}: event record without event_id")
            if event_id in events:
                raise LoadError(f"{where}: duplicate event_id {event_id!r}")
            attributes = record.get("attributes", {})
            events[event_id] = EventRecord(
                event_id=event_id,
                event_date=parse_date(record.get("event_date"), where),
                attributes=tuple(sorted((str(k), str(v)) for k, v in attributes.items())),
            )
    return events


def load_corpus(conllu_path, annotations_path, doc_meta_path, events_path=None, kb=None):
    """Parse, cross-validate, and index all corpus inputs.

    Every document in the treebank needs a metadata record and vice versa;
    event references must resolve when an events file is given. Dangling
    references are collected and reported together.
    """
    if kb is None:
        raise LoadError("a FrameKB is required to validate frame annotations")
    with open(conllu_path, encoding="utf-8") as handle:
        parsed = parse_conllu(handle, source=str(conllu_path))

    sentences_by_doc = {}
    doc_order = []
    for doc_id, sentence in parsed:
        if doc_id not in sentences_by_doc:
            sentences_by_doc[doc_id] = {}
            doc_order.append(doc_id)
        sentences_by_doc[doc_id][sentence.sent_id] = sentence

    with open(annotations_path, encoding="utf-8") as handle:
        instances_by_doc = parse_frame_annotations(
            handle, sentences_by_doc, kb, source=str(annotations_path)
        )

    metas = _parse_doc_meta(doc_meta_path)
    events = _parse_events(events_path) if events_path else {}

    dangling = []
    for doc_id in doc_order:
        if doc_id not in metas:
            dangling.append(f"document without metadata record: {doc_id}")
    for doc_id in metas:
        if doc_id not in sentences_by_doc:
            dangling.append(f"metadata record without document: {doc_id}")
    for doc_id, meta in sorted(metas.items()):
        if meta["event_id"] and meta["event_id"] not in events:
            dangling.append(f"document {doc_id} references unknown event: {meta['event_id']}")
    if dangling:
        raise LoadError("dangling cross-file references:\n  " + "\n  ".join(sorted(dangling)))

    documents = []
    for doc_id in doc_order:
        meta = metas[doc_id]
        sentences = tuple(sentences_by_doc[doc_id].values())
        documents.append(
            CorpusDocument(
                doc_id=doc_id,
                event_id=meta["event_id"],
                pub_date=meta["pub_date"],
                source=meta["source"],
                title=meta["title"],
                url=meta["url"],
                sentences=sentences,
                frame_instances=tuple(instances_by_doc.get(doc_id, [])),
            )
        )
    ordered_events = tuple(events[eid] for eid in sorted(events))
    return Corpus(documents=tuple(documents), events=ordered_events)


# --- persistence -----------------------------------------------------------

def _document_to_record(doc):
    return {
        "doc_id": doc.doc_id,
        "event_id": doc.event_id,
        "pub_date": doc.pub_date.isoformat(),
        "source": doc.source,
        "title": doc.title,
        "url": doc.url,
        "sentences": [sentence_to_record(s) for s in doc.sentences],
        "frame_instances": [
            {
                "instance_id": i.instance_id,
                "sent_id": i.sent_id,
                "frame": i.frame,
                "trigger": {"start": i.trigger.start, "end": i.trigger.end},
                "roles": [
                    {"name": r.name, "start": r.span.start, "end": r.span.end}
                    for r in i.roles
                ],
            }
            for i in doc.frame_instances
        ],
    }


def _document_from_record(record, where=""):
    sentences = tuple(
        sentence_from_record(s, where=where) for s in record["sentences"]
    )
    by_sent_id = {s.sent_id: s for s in sentences}
    instances = []
    for raw in record["frame_instances"]:
        instance = instance_from_record(raw, raw["instance_id"], where=where)
        sentence = by_sent_id.get(instance.sent_id)
        if sentence is None:
            raise LoadError(
                f"{where}: instance {instance.instance_id!r} points at unknown "
                f"sentence {instance.sent_id!r}"
            )
        if not instance.trigger.within(len(sentence)) or any(
            not r.span.within(len(sentence)) for r in instance.roles
        ):
            raise LoadError(
                f"{where}: instance {instance.instance_id!r} has spans out of "
                f"bounds for sentence {instance.sent_id!r}"
            )
        instances.append(instance)
    return CorpusDocument(
        doc_id=record["doc_id"],
        event_id=record.get("event_id"),
        pub_date=parse_date(record["pub_date"], where),
        source=record["source"],
        title=record.get("title"),
        url=record.get("url"),
        sentences=sentences,
        frame_instances=tuple(instances),
    )


def canonical_json(payload):
    """Stable, compact JSON used for every persisted artifact."""
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def corpus_to_payload(corpus):
    return {
        "format": INDEX_FORMAT,
        "documents": [_document_to_record(d) for d in corpus.documents],
        "events": [
            {
                "event_id": e.event_id,
                "event_date": e.event_date.isoformat(),
                "attributes": {k: v for k, v in e.attributes},
            }
            for e in corpus.events
        ],
    }


def save_corpus(corpus, path, annotations_payload=None):
    """Write the single index file; bytes are deterministic in the corpus content."""
    payload = corpus_to_payload(corpus)
    if annotations_payload is not None:
        payload["analysis"] = annotations_payload
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(canonical_json(payload))
        handle.write("\n")


def read_corpus_payload(path):
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise LoadError(f"{path}: not a corpus index file ({exc})")
    if payload.get("format") != INDEX_FORMAT:
        raise LoadError(f"{path}: unsupported index format {payload.get('format')!r}")
    return payload


def corpus_from_payload(payload, where="<index>"):
    documents = tuple(
        _document_from_record(rec, where=where) for rec in payload["documents"]
    )
    events = tuple(
        EventRecord(
            event_id=rec["event_id"],
            event_date=parse_date(rec["event_date"], where),
            attributes=tuple(sorted((str(k), str(v)) for k, v in rec.get("attributes", {}).items())),
        )
        for rec in payload["events"]
    )
    return Corpus(documents=documents, events=events)


def open_corpus(path):
    """Load a previously saved index file (ignoring any analysis section)."""
    return corpus_from_payload(read_corpus_payload(path), where=str(path))
