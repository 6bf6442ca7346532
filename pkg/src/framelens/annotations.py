"""Frame-annotation records: the sidecar output of an end-to-end frame parser.

One JSON object per line: {doc_id, sent_id, frame, trigger: {start, end},
roles: [{name, start, end}]}. All spans are 0-based, end-exclusive token
ranges over the sentence the record points at.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import AnnotationError


@dataclass(frozen=True)
class Span:
    """Half-open token range [start, end) over 0-based sentence positions."""

    start: int
    end: int

    def __post_init__(self):
        if self.start < 0 or self.end <= self.start:
            raise ValueError(f"empty or negative span [{self.start}, {self.end})")

    def __contains__(self, position):
        return self.start <= position < self.end

    def within(self, n_tokens):
        return self.end <= n_tokens


@dataclass(frozen=True)
class RoleSpan:
    name: str
    span: Span


@dataclass(frozen=True)
class FrameInstance:
    instance_id: str
    sent_id: str
    frame: str
    trigger: Span
    roles: tuple[RoleSpan, ...]


def _span_from(obj, what, where):
    try:
        return Span(int(obj["start"]), int(obj["end"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise AnnotationError(f"{where}: bad {what} span ({exc})")


def instance_from_record(record, instance_id, where=""):
    """Build a FrameInstance from a parsed record dict (no corpus validation yet)."""
    try:
        sent_id = record["sent_id"]
        frame = record["frame"]
    except KeyError as exc:
        raise AnnotationError(f"{where}: record missing field {exc}")
    trigger = _span_from(record["trigger"], "trigger", where) if "trigger" in record else None
    if trigger is None:
        raise AnnotationError(f"{where}: record missing trigger span")
    roles = []
    for role in record.get("roles", []):
        name = role.get("name")
        if not name:
            raise AnnotationError(f"{where}: role without a name")
        roles.append(RoleSpan(name=name, span=_span_from(role, f"role {name!r}", where)))
    return FrameInstance(
        instance_id=instance_id,
        sent_id=sent_id,
        frame=frame,
        trigger=trigger,
        roles=tuple(roles),
    )


def validate_instance(instance, sentence, kb, where=""):
    """Check spans against the sentence and the frame name against the KB.

    Role names are accepted as-is (parser output may use roles the KB does
    not list for the frame), but the frame itself must resolve.
    """
    ctx = f"{where}: " if where else ""
    if instance.frame not in kb:
        raise AnnotationError(f"{ctx}unknown frame {instance.frame!r}")
    n = len(sentence)
    if not instance.trigger.within(n):
        raise AnnotationError(
            f"{ctx}trigger span [{instance.trigger.start}, {instance.trigger.end}) "
            f"out of bounds for sentence {instance.sent_id!r} ({n} tokens)"
        )
    for role in instance.roles:
        if not role.span.within(n):
            raise AnnotationError(
                f"{ctx}role {role.name!r} span [{role.span.start}, {role.span.end}) "
                f"out of bounds for sentence {instance.sent_id!r} ({n} tokens)"
            )
    return instance


def parse_frame_annotations(stream, sentences_by_doc, kb, source="<annotations>"):
    """Parse line-delimited annotation records, validated against loaded sentences.

    ``sentences_by_doc`` maps doc_id -> {sent_id: Sentence}. Returns a mapping
    doc_id -> list of FrameInstance. Instance ids are assigned
    deterministically as "<doc_id>:<sent_id>:<k>" with k counting records for
    that sentence in file order.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [line.rstrip("\n") for line in stream]

    by_doc = {doc_id: [] for doc_id in sentences_by_doc}
    counters = {}
    dangling = []
    for line_no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        where = f"{source}:{line_no}"
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise AnnotationError(f"{where}: invalid record ({exc})")
        doc_id = record.get("doc_id")
        sent_id = record.get("sent_id")
        if doc_id not in sentences_by_doc or sent_id not in sentences_by_doc.get(doc_id, {}):
            dangling.append(f"{doc_id}/{sent_id}")
            continue
        key = (doc_id, sent_id)
        counters[key] = counters.get(key, 0) + 1
        instance_id = f"{doc_id}:{sent_id}:{counters[key] - 1}"
        instance = instance_from_record(record, instance_id, where=where)
        validate_instance(instance, sentences_by_doc[doc_id][sent_id], kb, where=where)
        by_doc[doc_id].append(instance)
    if dangling:
        raise AnnotationError(
            f"{source}: annotations reference unknown sentences: {sorted(set(dangling))}"
        )
    return by_doc


def instance_to_record(instance, doc_id):
    return {
        "doc_id": doc_id,
        "sent_id": instance.sent_id,
        "frame": instance.frame,
        "trigger": {"start": instance.trigger.start, "end": instance.trigger.end},
        "roles": [
            {"name": r.name, "start": r.span.start, "end": r.span.end}
            for r in instance.roles
        ],
    }
