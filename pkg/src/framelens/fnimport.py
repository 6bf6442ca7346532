"""Compile a FrameNet XML release into the runtime KB record format.

A release directory (e.g. fndata-1.7) holds one XML file per frame under
frame/ and the frame-to-frame relations in frRelation.xml. This module
flattens both into the line-delimited record file that load_kb consumes:
frame records carry name, plain-text definition, core and non-core roles,
lexical units, and the example sentences marked up inside the definition;
relation records carry the supported relation types (FrameNet's "Using" is
normalized to "Uses", unsupported types such as Metaphor are skipped).

Agentivity classes and role mappings are analytical annotations, not release
content, so they stay in their hand-maintained tables.
"""

from __future__ import annotations

import json
import pathlib
import re
import xml.etree.ElementTree as ET

from .errors import KBError
from .kb import RELATION_TYPES

FN_NS = "http://framenet.icsi.berkeley.edu"

# FrameNet relation-type names -> runtime names; None marks types we drop.
RELATION_NAME_MAP = {
    "Inheritance": "Inheritance",
    "Perspective_on": "Perspective_on",
    "Causative_of": "Causative_of",
    "Inchoative_of": "Inchoative_of",
    "Using": "Uses",
    "Subframe": "Subframe",
    "Precedes": "Precedes",
    "See_also": "See_also",
    "ReFraming_Mapping": None,
    "Metaphor": None,
}

CORE_TYPES = frozenset(["Core", "Core-Unexpressed"])

_TAG_RE = re.compile(r"<[^>]+>")
_EX_RE = re.compile(r"<ex>(.*?)</ex>", re.DOTALL)


def _q(tag):
    return f"{{{FN_NS}}}{tag}"


def _plain_text(markup):
    """Strip the def-root style markup FrameNet embeds in definitions."""
    text = _TAG_RE.sub("", markup)
    return " ".join(text.split())


def _definition_parts(markup):
    """(definition text, example sentences) from a definition's inner markup."""
    examples = [
        _plain_text(ex)
        for ex in _EX_RE.findall(markup)
        if _plain_text(ex)
    ]
    without_examples = _EX_RE.sub("", markup)
    return _plain_text(without_examples), examples


def parse_frame_xml(path):
    """One frame/<name>.xml file -> a KB frame record dict."""
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise KBError(f"{path}: invalid frame XML ({exc})")
    name = root.get("name")
    if not name:
        raise KBError(f"{path}: frame element without a name attribute")

    definition_el = root.find(_q("definition"))
    definition, examples = _definition_parts(
        definition_el.text if definition_el is not None and definition_el.text else ""
    )

    core_roles = []
    non_core_roles = []
    for fe in root.findall(_q("FE")):
        role = fe.get("name")
        if not role:
            continue
        target = core_roles if fe.get("coreType") in CORE_TYPES else non_core_roles
        target.append(role)

    lexical_units = [
        lu.get("name")
        for lu in root.findall(_q("lexUnit"))
        if lu.get("name")
    ]

    return {
        "type": "frame",
        "name": name,
        "definition": definition,
        "core_roles": core_roles,
        "non_core_roles": non_core_roles,
        "lexical_units": lexical_units,
        "examples": examples,
    }


def parse_relations_xml(path):
    """frRelation.xml -> list of (relation type, parent frame, child frame).

    Relation types without a runtime counterpart are skipped; an unknown type
    name is an error (it signals a release-format change worth inspecting).
    """
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        raise KBError(f"{path}: invalid relation XML ({exc})")
    relations = []
    for rel_type in root.findall(_q("frameRelationType")):
        fn_name = rel_type.get("name")
        if fn_name not in RELATION_NAME_MAP:
            raise KBError(f"{path}: unrecognized relation type {fn_name!r}")
        mapped = RELATION_NAME_MAP[fn_name]
        if mapped is None:
            continue
        assert mapped in RELATION_TYPES
        for rel in rel_type.findall(_q("frameRelation")):
            parent = rel.get("superFrameName")
            child = rel.get("subFrameName")
            if parent and child:
                relations.append((mapped, parent, child))
    return relations


def compile_framenet(release_dir, out_path):
    """Compile a release directory into one KB record file.

    Returns (frame count, relation count). Relations pointing at frames
    missing from the release (possible in partial exports) are dropped so the
    compiled KB always satisfies the loader's endpoint checks.
    """
    release_dir = pathlib.Path(release_dir)
    frame_dir = release_dir / "frame"
    if not frame_dir.is_dir():
        raise KBError(f"{release_dir}: no frame/ directory (not a FrameNet release?)")

    records = []
    names = set()
    for frame_path in sorted(frame_dir.glob("*.xml")):
        record = parse_frame_xml(frame_path)
        if record["name"] in names:
            raise KBError(f"{frame_path}: duplicate frame {record['name']!r}")
        names.add(record["name"])
        records.append(record)

    relations = []
    relation_path = release_dir / "frRelation.xml"
    if relation_path.is_file():
        relations = [
            (rel_type, parent, child)
            for rel_type, parent, child in parse_relations_xml(relation_path)
            if parent in names and child in names
        ]

    out_path = pathlib.Path(out_path)
    with open(out_path, "w", encoding="utf-8") as out:
        for record in sorted(records, key=lambda r: r["name"]):
            out.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
        for rel_type, parent, child in relations:
            out.write(
                json.dumps(
                    {"type": "relation", "relation": rel_type, "parent": parent, "child": child},
                    sort_keys=True,
                    ensure_ascii=False,
                )
                + "\n"
            )
    return len(records), len(relations)
