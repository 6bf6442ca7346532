import filecmp
import json

from framelens.data import data_path, mini_corpus_manifest_path
from framelens.synth import DEFAULT_SEED, generate_mini_corpus

FILES = ["sentences.conllu", "frames.jsonl", "docs.jsonl", "events.jsonl", "manifest.json"]


def test_regeneration_is_byte_identical(tmp_path):
    generate_mini_corpus(tmp_path, seed=DEFAULT_SEED)
    for name in FILES:
        assert filecmp.cmp(tmp_path / name, data_path("mini", name), shallow=False), name


def test_different_seed_changes_corpus(tmp_path):
    generate_mini_corpus(tmp_path, seed=DEFAULT_SEED + 1)
    assert not filecmp.cmp(
        tmp_path / "sentences.conllu", data_path("mini", "sentences.conllu"), shallow=False
    )


def test_manifest_counts_match_files():
    manifest = json.loads(open(mini_corpus_manifest_path(), encoding="utf-8").read())
    counts = manifest["counts"]

    docs = [json.loads(l) for l in open(data_path("mini", "docs.jsonl"), encoding="utf-8")]
    events = [json.loads(l) for l in open(data_path("mini", "events.jsonl"), encoding="utf-8")]
    frames = [json.loads(l) for l in open(data_path("mini", "frames.jsonl"), encoding="utf-8")]
    conllu = open(data_path("mini", "sentences.conllu"), encoding="utf-8").read()

    assert counts["documents"] == len(docs) == 100
    assert counts["events"] == len(events) == 30
    assert counts["instances"] == len(frames)
    assert counts["sentences"] == conllu.count("# sent_id =")

    by_frame = {}
    for record in frames:
        by_frame[record["frame"]] = by_frame.get(record["frame"], 0) + 1
    assert by_frame == manifest["frame_frequencies"]

    linked = {d["doc_id"]: d.get("event_id") for d in docs}
    for doc_id in manifest["unlinked_documents"]:
        assert linked[doc_id] is None
    for doc_id, meta in manifest["documents"].items():
        if doc_id not in manifest["unlinked_documents"]:
            assert linked[doc_id] == meta["event_id"]


def test_manifest_foregrounding_targets():
    manifest = json.loads(open(mini_corpus_manifest_path(), encoding="utf-8").read())
    fg = manifest["foregrounding"]
    assert (fg["Killing"]["foregrounding"], fg["Killing"]["total"]) == (60, 100)
    assert (fg["Death"]["foregrounding"], fg["Death"]["total"]) == (79, 100)
