"""Filtered aggregation, sampling, and reference scores over analyzed corpora.

All statistics count frame instances, not sentences: a sentence carrying two
triggers of the same frame contributes 2. Every function here is a pure,
read-only query over an AnalyzedCorpus.
"""

from __future__ import annotations

import datetime
import json
import random
import re
from dataclasses import dataclass

from .corpus import parse_date
from .errors import QueryError
from .syntax import Construction

COMPARATORS = ("eq", "in", "range")

# Role-path shapes that place a participant in subject-or-self position; used
# by the victim-foregrounding rule below.
FOREGROUNDING_PATHS = frozenset(["*", "nsubj↓"])
FOREGROUNDING_CONSTRUCTIONS = frozenset(
    [Construction.VRB_PASSIVE, Construction.VRB_UNACCUSATIVE]
)


@dataclass(frozen=True)
class Predicate:
    """One metadata condition: key (eq|in|range) value(s)."""

    key: str
    op: str
    value: object

    def __post_init__(self):
        if self.op not in COMPARATORS:
            raise QueryError(f"unknown comparator {self.op!r}, expected one of {COMPARATORS}")


@dataclass(frozen=True)
class CorpusFilter:
    """Document- and event-level predicates plus an optional frame whitelist.

    Date ranges are closed intervals; the empty filter matches every document.
    """

    doc_predicates: tuple[Predicate, ...] = ()
    event_predicates: tuple[Predicate, ...] = ()
    frame_whitelist: frozenset | None = None

    @staticmethod
    def from_payload(payload):
        """Build from the structured-record form used by the API and CLI."""
        if payload is None:
            return CorpusFilter()
        if not isinstance(payload, dict):
            raise QueryError("filter must be an object")

        def preds(raw):
            if raw is not None and not isinstance(raw, list):
                raise QueryError("filter predicates must be a list of objects")
            out = []
            for item in raw or []:
                if not isinstance(item, dict):
                    raise QueryError("filter predicates must be objects with key/op/value fields")
                try:
                    out.append(Predicate(key=item["key"], op=item["op"], value=item["value"]))
                except KeyError as exc:
                    raise QueryError(f"filter predicate missing field {exc}")
            return tuple(out)

        whitelist = payload.get("frame_whitelist")
        if whitelist is not None and not isinstance(whitelist, list):
            raise QueryError("frame_whitelist must be a list of frame names")
        return CorpusFilter(
            doc_predicates=preds(payload.get("doc_predicates")),
            event_predicates=preds(payload.get("event_predicates")),
            frame_whitelist=None if whitelist is None else frozenset(whitelist),
        )

    def to_payload(self):
        return {
            "doc_predicates": [
                {"key": p.key, "op": p.op, "value": p.value} for p in self.doc_predicates
            ],
            "event_predicates": [
                {"key": p.key, "op": p.op, "value": p.value} for p in self.event_predicates
            ],
            "frame_whitelist": sorted(self.frame_whitelist)
            if self.frame_whitelist is not None
            else None,
        }


def _as_comparable(value, reference):
    """Coerce a filter value to the type of the metadata field it compares to."""
    if isinstance(reference, datetime.date):
        return parse_date(value)
    return value


def _check_predicate(pred, actual):
    if pred.op == "eq":
        return actual == _as_comparable(pred.value, actual)
    if pred.op == "in":
        return any(actual == _as_comparable(v, actual) for v in pred.value)
    lo, hi = pred.value
    return _as_comparable(lo, actual) <= actual <= _as_comparable(hi, actual)


def _doc_value(doc, key, schema):
    if key not in schema["document"]:
        raise QueryError(
            f"unknown document filter key {key!r}; known keys: {schema['document']}"
        )
    return doc.field(key)


def _event_value(event, key, schema):
    if key not in schema["event"]:
        raise QueryError(
            f"unknown event filter key {key!r}; known keys: {schema['event']}"
        )
    if key == "event_id":
        return event.event_id
    if key == "event_date":
        return event.event_date
    return event.attribute(key)


def document_passes(corpus, doc, corpus_filter):
    """Whether a document satisfies all predicates of the filter."""
    schema = corpus.metadata_schema()
    for pred in corpus_filter.doc_predicates:
        actual = _doc_value(doc, pred.key, schema)
        if actual is None or not _check_predicate(pred, actual):
            return False
    if corpus_filter.event_predicates:
        event = corpus.event_for(doc)
        if event is None:
            return False
        for pred in corpus_filter.event_predicates:
            actual = _event_value(event, pred.key, schema)
            if actual is None or not _check_predicate(pred, actual):
                return False
    return True


def _matching_instances(analyzed, corpus_filter):
    corpus = analyzed.corpus
    for doc in corpus.documents:
        if not document_passes(corpus, doc, corpus_filter):
            continue
        for instance in doc.frame_instances:
            if (
                corpus_filter.frame_whitelist is not None
                and instance.frame not in corpus_filter.frame_whitelist
            ):
                continue
            yield doc, instance


EMPTY_FILTER = CorpusFilter()


def frame_frequencies(analyzed, corpus_filter=EMPTY_FILTER):
    """Instance counts per frame under the filter."""
    counts = {}
    for _, instance in _matching_instances(analyzed, corpus_filter):
        counts[instance.frame] = counts.get(instance.frame, 0) + 1
    return dict(sorted(counts.items()))


def construction_by_frame(analyzed, corpus_filter=EMPTY_FILTER):
    """Nested counts frame -> construction -> instances; rows sum to frame_frequencies."""
    table = {}
    for _, instance in _matching_instances(analyzed, corpus_filter):
        annotation = analyzed.annotations.get(instance.instance_id)
        if annotation is None:
            continue
        row = table.setdefault(instance.frame, {})
        label = annotation.construction.value
        row[label] = row.get(label, 0) + 1
    return {frame: dict(sorted(row.items())) for frame, row in sorted(table.items())}


def role_link_frequencies(analyzed, frame, corpus_filter=EMPTY_FILTER):
    """Per role of the given frame: rendered-path counts."""
    table = {}
    for _, instance in _matching_instances(analyzed, corpus_filter):
        if instance.frame != frame:
            continue
        annotation = analyzed.annotations.get(instance.instance_id)
        if annotation is None:
            continue
        for link in annotation.role_links:
            row = table.setdefault(link.role, {})
            row[link.path] = row.get(link.path, 0) + 1
    return {role: dict(sorted(row.items())) for role, row in sorted(table.items())}


@dataclass(frozen=True)
class TimeLagHistogram:
    """Instance counts bucketed by days between event and publication."""

    bucket_days: int
    buckets: tuple  # ((bucket_start_day, {frame: count}), ...) sorted by start
    negative_lags: int  # instances whose document predates its event (clamped to bucket 0)
    unlinked_documents: int  # matched documents without an event link, excluded


def time_lag_histogram(analyzed, frames, corpus_filter=EMPTY_FILTER, bucket_days=1):
    """Histogram of publication lag for instances of the given frames.

    Lag is pub_date - event_date in whole days; buckets cover
    [k*bucket_days, (k+1)*bucket_days). Negative lags clamp into bucket 0 and
    are tallied as anomalies; documents without an event link are skipped and
    tallied, not fatal.
    """
    if bucket_days < 1:
        raise QueryError("bucket_days must be >= 1")
    frames = set(frames)
    corpus = analyzed.corpus
    buckets = {}
    negative = 0
    unlinked_docs = set()
    for doc, instance in _matching_instances(analyzed, corpus_filter):
        if instance.frame not in frames:
            continue
        event = corpus.event_for(doc)
        if event is None:
            unlinked_docs.add(doc.doc_id)
            continue
        lag = (doc.pub_date - event.event_date).days
        if lag < 0:
            negative += 1
            lag = 0
        start = (lag // bucket_days) * bucket_days
        row = buckets.setdefault(start, {})
        row[instance.frame] = row.get(instance.frame, 0) + 1
    ordered = tuple(
        (start, dict(sorted(buckets[start].items()))) for start in sorted(buckets)
    )
    return TimeLagHistogram(
        bucket_days=bucket_days,
        buckets=ordered,
        negative_lags=negative,
        unlinked_documents=len(unlinked_docs),
    )


def is_victim_foregrounding(
    annotation,
    kb,
    constructions=FOREGROUNDING_CONSTRUCTIONS,
    paths=FOREGROUNDING_PATHS,
):
    """Whether one analyzed instance foregrounds the victim.

    Either the construction itself suppresses the agent (passive or
    unaccusative), or a victim-like role sits in subject-or-self position
    while no perpetrator-like role does. Both the construction set and the
    path set are configurable.
    """
    if annotation.construction in constructions:
        return True
    victim_fore = False
    perpetrator_fore = False
    for link in annotation.role_links:
        if link.path not in paths:
            continue
        role_class = kb.role_class(annotation.frame, link.role)
        if role_class == "victim_like":
            victim_fore = True
        elif role_class == "perpetrator_like":
            perpetrator_fore = True
    return victim_fore and not perpetrator_fore


def foregrounding_share(
    analyzed,
    frame,
    kb,
    corpus_filter=EMPTY_FILTER,
    constructions=FOREGROUNDING_CONSTRUCTIONS,
    paths=FOREGROUNDING_PATHS,
):
    """(share, denominator) of victim-foregrounding instances of a frame.

    The denominator equals frame_frequencies[frame] under the same filter.
    Requires a role mapping for the frame.
    """
    if frame not in kb.role_mappings:
        raise QueryError(f"frame {frame!r} has no role mapping loaded")
    total = 0
    foregrounding = 0
    for _, instance in _matching_instances(analyzed, corpus_filter):
        if instance.frame != frame:
            continue
        total += 1
        annotation = analyzed.annotations.get(instance.instance_id)
        if annotation is not None and is_victim_foregrounding(
            annotation, kb, constructions=constructions, paths=paths
        ):
            foregrounding += 1
    if total == 0:
        return 0.0, 0
    return foregrounding / total, total


@dataclass(frozen=True)
class FeatureQuery:
    """Linguistic features a sentence's instances must match; all set fields must hold.

    ``role_link`` is (role name, path pattern); the only pattern wildcard is
    "*", matching any run of characters.
    """

    frame: str | None = None
    construction: Construction | None = None
    role_link: tuple[str, str] | None = None
    is_root: bool | None = None

    def __post_init__(self):
        if (
            self.frame is None
            and self.construction is None
            and self.role_link is None
            and self.is_root is None
        ):
            raise QueryError("feature query must set at least one field")

    @staticmethod
    def from_payload(payload):
        construction = payload.get("construction")
        if construction is not None:
            try:
                construction = Construction(construction)
            except ValueError:
                raise QueryError(f"unknown construction {construction!r}")
        role_link = payload.get("role_link")
        if role_link is not None:
            try:
                role_link = (role_link["role"], role_link["path"])
            except (TypeError, KeyError):
                raise QueryError("role_link must be {role, path}")
        return FeatureQuery(
            frame=payload.get("frame"),
            construction=construction,
            role_link=role_link,
            is_root=payload.get("is_root"),
        )

    def to_payload(self):
        return {
            "frame": self.frame,
            "construction": self.construction.value if self.construction else None,
            "role_link": None
            if self.role_link is None
            else {"role": self.role_link[0], "path": self.role_link[1]},
            "is_root": self.is_root,
        }


def _path_pattern_matches(pattern, path):
    regex = ".*".join(re.escape(part) for part in pattern.split("*"))
    return re.fullmatch(regex, path) is not None


def instance_matches(instance, annotation, query):
    if query.frame is not None and instance.frame != query.frame:
        return False
    if annotation is None:
        return query.construction is None and query.role_link is None and query.is_root is None
    if query.construction is not None and annotation.construction is not query.construction:
        return False
    if query.is_root is not None and annotation.is_root != query.is_root:
        return False
    if query.role_link is not None:
        role, pattern = query.role_link
        if not any(
            link.role == role and _path_pattern_matches(pattern, link.path)
            for link in annotation.role_links
        ):
            return False
    return True


@dataclass(frozen=True)
class SentenceMatch:
    doc_id: str
    sent_id: str
    text: str
    tokens: tuple  # surface forms, so clients never re-tokenize text
    instances: tuple  # FrameInstance objects that matched the query


def matching_sentences(analyzed, query, corpus_filter=EMPTY_FILTER):
    """All sentences with at least one instance matching the query, stable order."""
    matches = {}
    for doc, instance in _matching_instances(analyzed, corpus_filter):
        annotation = analyzed.annotations.get(instance.instance_id)
        if not instance_matches(instance, annotation, query):
            continue
        key = (doc.doc_id, instance.sent_id)
        if key not in matches:
            sentence = doc.sentence(instance.sent_id)
            matches[key] = SentenceMatch(
                doc_id=doc.doc_id,
                sent_id=instance.sent_id,
                text=sentence.text,
                tokens=tuple(t.form for t in sentence.tokens),
                instances=(instance,),
            )
        else:
            prev = matches[key]
            matches[key] = SentenceMatch(
                doc_id=prev.doc_id,
                sent_id=prev.sent_id,
                text=prev.text,
                tokens=prev.tokens,
                instances=prev.instances + (instance,),
            )
    return [matches[key] for key in sorted(matches)]


def sample_sentences(analyzed, query, n, seed, corpus_filter=EMPTY_FILTER):
    """Uniform sample without replacement over matching sentences.

    The generator is keyed by (seed, canonical query payload) so equal
    requests reproduce the same sample; results come back in stable
    (doc_id, sent_id) order.
    """
    if n <= 0:
        raise QueryError("sample size must be positive")
    matches = matching_sentences(analyzed, query, corpus_filter)
    if len(matches) <= n:
        return matches
    key = f"{seed}:{json.dumps(query.to_payload(), sort_keys=True)}"
    rng = random.Random(key)
    picked = rng.sample(range(len(matches)), n)
    return [matches[i] for i in sorted(picked)]


# --- focus-score reference table -------------------------------------------

FOCUS_DIMENSIONS = ("murderer", "victim", "object", "concept_emotion")


@dataclass(frozen=True)
class FocusScoreTable:
    """Mean perceived-focus ratings (0-5 Likert) per surveyed frame/construction pair."""

    rows: tuple  # ((frame, construction_value), {dimension: score})

    def lookup(self, frame, construction):
        label = construction.value if isinstance(construction, Construction) else construction
        for (row_frame, row_construction), scores in self.rows:
            if row_frame == frame and row_construction == label:
                return dict(scores)
        return None

    def __len__(self):
        return len(self.rows)

    def argmax(self, dimension):
        if dimension not in FOCUS_DIMENSIONS:
            raise QueryError(f"unknown focus dimension {dimension!r}")
        best = max(self.rows, key=lambda row: row[1][dimension])
        return best[0]


def load_focus_table(path):
    """Read the tab-separated focus-score table (frame, construction, 4 scores)."""
    rows = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 6:
                raise QueryError(f"{path}:{line_no}: expected 6 tab-separated columns")
            frame, construction = cols[0], cols[1]
            scores = {}
            for dim, raw in zip(FOCUS_DIMENSIONS, cols[2:]):
                value = float(raw)
                if not 0.0 <= value <= 5.0:
                    raise QueryError(f"{path}:{line_no}: score {value} outside [0, 5]")
                scores[dim] = value
            rows.append(((frame, construction), scores))
    return FocusScoreTable(rows=tuple(rows))


def focus_scores(frame, construction, table=None):
    """Survey scores for a frame/construction pair; None when the pair was not surveyed."""
    if table is None:
        from .data import bundled_focus_table

        table = bundled_focus_table()
    return table.lookup(frame, construction)


def document_view(analyzed, doc_id):
    """Sentence-by-sentence bundle of (sentence, instances, annotations) for one document."""
    doc = analyzed.corpus.document(doc_id)
    view = []
    for sentence in doc.sentences:
        instances = doc.instances_for(sentence.sent_id)
        annotations = [analyzed.annotations.get(i.instance_id) for i in instances]
        view.append((sentence, instances, annotations))
    return view
