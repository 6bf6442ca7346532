"""Access to the data files shipped inside the package.

Bundled: a curated frame KB covering the femicide/crash frame sets with their
agentivity classes and role mappings, the survey-derived focus-score table,
two hand-annotated fixtures (the construction-type examples and the
collision/hit contrast pair), a 100-document synthetic mini corpus, and a
synthetic word-vector file for demos. Real deployments swap in a full KB
compiled with framelens.fnimport and pretrained vectors.
"""

from __future__ import annotations

from importlib import resources

from .kb import load_kb
from .stats import load_focus_table

_DATA = resources.files(__package__) / "data"


def data_path(*parts):
    """Filesystem path of a bundled data file."""
    target = _DATA
    for part in parts:
        target = target / part
    return str(target)


def bundled_kb():
    """The curated KB with agentivity classes and role mappings loaded."""
    return load_kb(
        data_path("kb.jsonl"),
        data_path("agentivity.tsv"),
        data_path("role_mappings.tsv"),
    )


def bundled_focus_table():
    return load_focus_table(data_path("focus_scores.tsv"))


def fixture_paths(name):
    """(conllu, annotations, docs, events-or-None) paths for a bundled fixture."""
    base = ("fixtures", name)
    events = _DATA / "fixtures" / name / "events.jsonl"
    return (
        data_path(*base, "sentences.conllu"),
        data_path(*base, "frames.jsonl"),
        data_path(*base, "docs.jsonl"),
        data_path(*base, "events.jsonl") if events.is_file() else None,
    )


def mini_corpus_paths():
    """(conllu, annotations, docs, events) paths for the synthetic mini corpus."""
    return (
        data_path("mini", "sentences.conllu"),
        data_path("mini", "frames.jsonl"),
        data_path("mini", "docs.jsonl"),
        data_path("mini", "events.jsonl"),
    )


def mini_corpus_manifest_path():
    return data_path("mini", "manifest.json")


def bundled_vectors_path():
    return data_path("vectors_toy.txt")
