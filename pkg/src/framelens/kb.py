"""Frame knowledge base: frame entries, relations, agentivity, role mappings.

The KB is loaded from a compiled line-delimited record file (one JSON object
per line, ``type`` either "frame" or "relation"; see docs/formats.md), plus a
tab-separated agentivity table and an optional role-mapping table. A bundled
importer (framelens.fnimport) compiles this format from a FrameNet XML
release.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .errors import KBError

RELATION_TYPES = frozenset(
    [
        "Inheritance",
        "Perspective_on",
        "Causative_of",
        "Inchoative_of",
        "Uses",
        "Subframe",
        "Precedes",
        "See_also",
    ]
)

# Relations that link alternative framings of the same situation; used as the
# default traversal set when suggesting perspective alternatives.
DEFAULT_ALTERNATIVE_RELATIONS = frozenset(
    ["Perspective_on", "Causative_of", "Inchoative_of"]
)

ROLE_CLASSES = ("perpetrator_like", "victim_like", "cause_like", "other")


class Agentivity(str, Enum):
    """Whether a frame's definition requires an Agent-like participant."""

    ACTIVE = "active"
    NON_ACTIVE = "non_active"
    NO_PARTICIPANT = "no_participant"


@dataclass(frozen=True)
class FrameEntry:
    name: str
    definition: str
    core_roles: tuple[str, ...]
    non_core_roles: tuple[str, ...]
    lexical_units: tuple[tuple[str, str], ...]  # (name, pos), e.g. ("murder.v", "V")
    example_sentences: tuple[str, ...]
    agentivity: Agentivity

    @property
    def all_roles(self):
        return self.core_roles + self.non_core_roles


@dataclass(frozen=True)
class FrameRelation:
    type: str
    parent: str
    child: str


@dataclass(frozen=True)
class RoleMapping:
    """Which of a frame's roles express the perpetrator, victim, and cause."""

    frame: str
    perpetrator_like: tuple[str, ...]
    victim_like: str | None
    cause_like: str | None


@dataclass
class FrameKB:
    frames: dict[str, FrameEntry]
    relations: tuple[FrameRelation, ...]
    role_mappings: dict[str, RoleMapping] = field(default_factory=dict)

    def __contains__(self, name):
        return name in self.frames

    def frame(self, name):
        try:
            return self.frames[name]
        except KeyError:
            raise KBError(f"unknown frame {name!r}")

    def agentivity(self, name):
        return self.frame(name).agentivity

    def role_class(self, frame, role):
        """Classify a role of a frame per the loaded role-mapping table.

        Roles missing from the mapping (or frames without a mapping row)
        classify as "other"; an unknown frame is an error.
        """
        self.frame(frame)
        mapping = self.role_mappings.get(frame)
        if mapping is None:
            return "other"
        if role in mapping.perpetrator_like:
            return "perpetrator_like"
        if role == mapping.victim_like:
            return "victim_like"
        if role == mapping.cause_like:
            return "cause_like"
        return "other"

    def neighbors(self, name, relation_whitelist):
        """Frames one whitelisted relation away from ``name``, in either direction."""
        out = set()
        for rel in self.relations:
            if rel.type not in relation_whitelist:
                continue
            if rel.parent == name:
                out.add(rel.child)
            elif rel.child == name:
                out.add(rel.parent)
        return out

    def alternatives(self, frames, relation_whitelist=DEFAULT_ALTERNATIVE_RELATIONS, hops=1):
        """Expand a frame set with alternative-perspective frames.

        Walks whitelisted frame-to-frame relations in both directions for up
        to ``hops`` steps and returns the union of the input set and every
        frame reached, sorted by name. Frames already in the input never count
        as newly found.
        """
        if hops < 1:
            raise ValueError("hops must be >= 1")
        if not relation_whitelist:
            raise ValueError("relation whitelist must be non-empty")
        unknown_rel = set(relation_whitelist) - RELATION_TYPES
        if unknown_rel:
            raise KBError(f"unknown relation types: {sorted(unknown_rel)}")
        for name in frames:
            self.frame(name)
        frontier = set(frames)
        reached = set(frames)
        for _ in range(hops):
            frontier = {
                nb
                for name in frontier
                for nb in self.neighbors(name, relation_whitelist)
            } - reached
            if not frontier:
                break
            reached |= frontier
        return sorted(reached)


def _parse_lu(raw):
    if isinstance(raw, str):
        name, _, pos = raw.rpartition(".")
        return (raw, pos.upper()) if name else (raw, "")
    return (raw["name"], raw.get("pos", ""))


def load_kb_records(kb_path):
    """Read the compiled KB file into (frame record dicts, relations)."""
    frame_records = {}
    relations = []
    with open(kb_path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise KBError(f"{kb_path}:{line_no}: invalid record ({exc})")
            kind = record.get("type")
            if kind == "frame":
                name = record.get("name")
                if not name:
                    raise KBError(f"{kb_path}:{line_no}: frame record without a name")
                if name in frame_records:
                    raise KBError(f"{kb_path}:{line_no}: duplicate frame {name!r}")
                frame_records[name] = record
            elif kind == "relation":
                rel_type = record.get("relation")
                if rel_type not in RELATION_TYPES:
                    raise KBError(
                        f"{kb_path}:{line_no}: unknown relation type {rel_type!r}"
                    )
                relations.append(
                    FrameRelation(type=rel_type, parent=record["parent"], child=record["child"])
                )
            else:
                raise KBError(f"{kb_path}:{line_no}: unknown record type {kind!r}")
    return frame_records, relations


def load_agentivity_table(path):
    """Two tab-separated columns (frame, class), '#' comments."""
    table = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise KBError(f"{path}:{line_no}: expected 2 tab-separated columns")
            frame, cls = cols
            try:
                table[frame] = Agentivity(cls)
            except ValueError:
                raise KBError(f"{path}:{line_no}: unknown agentivity class {cls!r}")
    return table


def load_role_mapping_table(path):
    """Four tab-separated columns: frame, perpetrator, victim, cause ('-' = absent).

    The perpetrator column may list several roles separated by '|'.
    """
    mappings = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 4:
                raise KBError(f"{path}:{line_no}: expected 4 tab-separated columns")
            frame, perp, victim, cause = (c.strip() for c in cols)
            if frame in mappings:
                raise KBError(f"{path}:{line_no}: duplicate role mapping for {frame!r}")
            mappings[frame] = RoleMapping(
                frame=frame,
                perpetrator_like=tuple(p for p in perp.split("|") if p != "-" and p),
                victim_like=None if victim == "-" else victim,
                cause_like=None if cause == "-" else cause,
            )
    return mappings


def load_kb(kb_path, agentivity_path, role_map_path=None):
    """Load the compiled KB plus agentivity classes and optional role mappings.

    Frames named in the agentivity or role-mapping tables must exist in the
    KB. Frames missing from the agentivity table default to "non_active",
    which never invents an Agent requirement.
    """
    frame_records, relations = load_kb_records(kb_path)
    agentivity = load_agentivity_table(agentivity_path)
    missing = sorted(set(agentivity) - set(frame_records))
    if missing:
        raise KBError(f"agentivity table names frames absent from the KB: {missing}")

    frames = {}
    for name, record in frame_records.items():
        frames[name] = FrameEntry(
            name=name,
            definition=record.get("definition", ""),
            core_roles=tuple(record.get("core_roles", [])),
            non_core_roles=tuple(record.get("non_core_roles", [])),
            lexical_units=tuple(_parse_lu(lu) for lu in record.get("lexical_units", [])),
            example_sentences=tuple(record.get("examples", [])),
            agentivity=agentivity.get(name, Agentivity.NON_ACTIVE),
        )

    for rel in relations:
        for endpoint in (rel.parent, rel.child):
            if endpoint not in frames:
                raise KBError(
                    f"relation {rel.type} ({rel.parent} -> {rel.child}) references "
                    f"unknown frame {endpoint!r}"
                )

    role_mappings = {}
    if role_map_path is not None:
        role_mappings = load_role_mapping_table(role_map_path)
        for frame, mapping in role_mappings.items():
            if frame not in frames:
                raise KBError(f"role mapping names unknown frame {frame!r}")
            entry = frames[frame]
            named = set(mapping.perpetrator_like)
            named.update(r for r in (mapping.victim_like, mapping.cause_like) if r)
            bad = sorted(named - set(entry.all_roles))
            if bad:
                raise KBError(
                    f"role mapping for {frame!r} names roles not in the frame: {bad}"
                )

    return FrameKB(frames=frames, relations=tuple(relations), role_mappings=role_mappings)
