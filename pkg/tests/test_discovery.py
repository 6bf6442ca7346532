import logging
import math
import random

import numpy as np
import pytest

from framelens.data import bundled_kb, bundled_vectors_path
from framelens.discovery import (
    cosine_distance,
    embed_frames,
    keyword_search,
    load_word_vectors,
    lu_words,
    suggestion_payload,
    WordVectorStore,
)
from framelens.errors import KBError, LoadError, QueryError

from gen import toy_discovery_kb
from oracles import brute_frame_vector, brute_keyword_ranking


@pytest.mark.parametrize(
    "lu, words",
    [
        ("murder.v", ["murder"]),
        ("take_place.v", ["take", "place"]),
        ("Deadly Accident.n", ["deadly", "accident"]),
        ("shoot.idio", ["shoot"]),
        ("noextension", ["noextension"]),
        ("trailing.dot.", ["trailing.dot."]),  # unknown suffix stays intact
    ],
)
def test_lu_words(lu, words):
    assert lu_words(lu) == words


def test_load_word_vectors(tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("Alpha 1.0 0.0\nbeta 0.0 2.0\nALPHA 9.0 9.0\n", encoding="utf-8")
    store = load_word_vectors(path)
    assert store.dimension == 2
    assert len(store) == 2  # first occurrence of alpha wins
    assert np.allclose(store.lookup("ALPHA"), [1.0, 0.0])
    assert "beta" in store and "gamma" not in store


def test_load_word_vectors_errors(tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("alpha 1.0\nbeta 1.0 2.0\n", encoding="utf-8")
    with pytest.raises(LoadError, match="expected 1"):
        load_word_vectors(path)
    path.write_text("alpha one two\n", encoding="utf-8")
    with pytest.raises(LoadError, match="non-numeric"):
        load_word_vectors(path)
    path.write_text("", encoding="utf-8")
    with pytest.raises(LoadError, match="no vectors"):
        load_word_vectors(path)


def test_embeddings_are_unweighted_word_means():
    rng = random.Random(60902)
    kb, store = toy_discovery_kb(rng, n_frames=20)
    embeddings = embed_frames(kb, store)
    for name, emb in embeddings.items():
        want = brute_frame_vector(kb, store, name, lu_words)
        assert np.allclose(emb.vector, want, atol=1e-12)
        assert emb.coverage == 1.0


def test_embedding_skips_out_of_vocabulary_frames(caplog):
    store = WordVectorStore(dimension=2, vectors={"known": np.array([1.0, 0.0])})
    kb = bundled_kb()
    with caplog.at_level(logging.INFO, logger="framelens.discovery"):
        embeddings = embed_frames(kb, store)
    assert embeddings == {}
    assert "no embedding" in caplog.text


def test_partial_coverage_counted():
    store = WordVectorStore(
        dimension=2, vectors={"murder": np.array([1.0, 0.0]), "kill": np.array([0.0, 1.0])}
    )
    kb = bundled_kb()
    emb = embed_frames(kb, store)["Killing"]
    words = [w for name, _ in kb.frame("Killing").lexical_units for w in lu_words(name)]
    hits = [store.lookup(w) for w in words if w in store]
    assert emb.coverage == len(hits) / len(words) < 1.0
    assert np.allclose(emb.vector, np.mean(hits, axis=0))


def test_cosine_distance_basics():
    assert cosine_distance(np.array([1.0, 0.0]), np.array([2.0, 0.0])) == pytest.approx(0.0)
    assert cosine_distance(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == pytest.approx(1.0)
    assert cosine_distance(np.array([1.0, 0.0]), np.array([-1.0, 0.0])) == pytest.approx(2.0)
    with pytest.raises(ValueError, match="zero-norm"):
        cosine_distance(np.zeros(2), np.array([1.0, 0.0]))


def test_ranking_matches_brute_force_oracle():
    rng = random.Random(777)
    kb, store = toy_discovery_kb(rng, n_frames=30)
    embeddings = embed_frames(kb, store)
    words = sorted(store.vectors)
    for _ in range(25):
        keywords = rng.sample(words, k=rng.randint(1, 4))
        top_n = rng.randint(1, 12)
        got = keyword_search(keywords, store, embeddings, top_n=top_n)
        want = brute_keyword_ranking(keywords, store, kb, lu_words, top_n)
        assert [f for f, _ in got] == [f for f, _ in want]
        for (_, d_got), (_, d_want) in zip(got, want):
            assert d_got == pytest.approx(d_want, abs=1e-9)


def test_missing_keywords_skipped_with_warning(caplog):
    rng = random.Random(31)
    kb, store = toy_discovery_kb(rng, n_frames=5)
    embeddings = embed_frames(kb, store)
    word = sorted(store.vectors)[0]
    with caplog.at_level(logging.WARNING, logger="framelens.discovery"):
        ranked = keyword_search([word, "zzz_not_there"], store, embeddings)
    assert ranked == keyword_search([word], store, embeddings)
    assert "skipped" in caplog.text


def test_search_input_validation():
    rng = random.Random(32)
    kb, store = toy_discovery_kb(rng, n_frames=5)
    embeddings = embed_frames(kb, store)
    with pytest.raises(QueryError, match="top_n"):
        keyword_search(["x"], store, embeddings, top_n=0)
    with pytest.raises(QueryError, match="at least one keyword"):
        keyword_search([], store, embeddings)
    with pytest.raises(QueryError, match="no keyword found"):
        keyword_search(["zzz_not_there"], store, embeddings)


def test_ties_break_by_frame_name():
    # two frames share the exact same single-LU vector
    store = WordVectorStore(dimension=2, vectors={"same": np.array([1.0, 1.0])})
    from framelens.kb import Agentivity, FrameEntry, FrameKB

    def entry(name):
        return FrameEntry(
            name=name, definition="", core_roles=(), non_core_roles=(),
            lexical_units=(("same.v", "V"),), example_sentences=(),
            agentivity=Agentivity.ACTIVE,
        )

    kb = FrameKB(frames={"Zeta": entry("Zeta"), "Alpha": entry("Alpha")}, relations=())
    embeddings = embed_frames(kb, store)
    ranked = keyword_search(["same"], store, embeddings, top_n=2)
    assert [f for f, _ in ranked] == ["Alpha", "Zeta"]


def test_suggestion_payload_carries_definitions(kb):
    payload = suggestion_payload([("Killing", 0.1)], kb)
    assert payload[0]["frame"] == "Killing"
    assert payload[0]["definition"]
    assert isinstance(payload[0]["examples"], list)
    with pytest.raises(KBError, match="unknown frame"):
        suggestion_payload(["Not_a_frame"], kb)


def test_bundled_toy_vectors_cover_bundled_kb(kb):
    store = load_word_vectors(bundled_vectors_path())
    embeddings = embed_frames(kb, store)
    # Transitive_action is a non-lexical abstract frame; everything else embeds.
    assert set(kb.frames) - set(embeddings) == {"Transitive_action"}
    assert all(e.coverage == 1.0 for e in embeddings.values())
