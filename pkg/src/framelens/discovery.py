"""Keyword-driven frame discovery via bag-of-lexical-unit embeddings.

A frame's vector is the unweighted mean of the pretrained word vectors of the
words in its lexical-unit names. Keyword searches rank frames by cosine
distance between the frame vectors and the centroid of the keyword vectors.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import LoadError, QueryError

log = logging.getLogger(__name__)

# Part-of-speech suffixes FrameNet attaches to lexical-unit names.
LU_POS_SUFFIXES = frozenset(
    ["v", "n", "a", "adv", "prep", "num", "art", "c", "idio", "intj", "pron", "scon", "avp"]
)


@dataclass
class WordVectorStore:
    """Case-insensitive word -> vector lookup over a fixed dimension."""

    dimension: int
    vectors: dict  # lowercase word -> np.ndarray

    def lookup(self, word):
        return self.vectors.get(word.lower())

    def __contains__(self, word):
        return word.lower() in self.vectors

    def __len__(self):
        return len(self.vectors)


def load_word_vectors(path):
    """Read a text vector file: one "word v1 ... vd" line per word.

    The first line fixes the dimension; words are lowercased, first
    occurrence wins.
    """
    vectors = {}
    dimension = None
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2:
                continue
            word = parts[0].lower()
            try:
                values = np.array([float(v) for v in parts[1:]], dtype=np.float64)
            except ValueError:
                raise LoadError(f"{path}:{line_no}: non-numeric vector component")
            if dimension is None:
                dimension = values.shape[0]
            elif values.shape[0] != dimension:
                raise LoadError(
                    f"{path}:{line_no}: vector of length {values.shape[0]}, expected {dimension}"
                )
            vectors.setdefault(word, values)
    if dimension is None:
        raise LoadError(f"{path}: no vectors found")
    return WordVectorStore(dimension=dimension, vectors=vectors)


@dataclass(frozen=True)
class FrameEmbedding:
    frame: str
    vector: np.ndarray
    coverage: float  # fraction of lexical-unit words found in the store


def lu_words(lu_name):
    """Words of a lexical-unit name: POS suffix stripped, multiwords split.

    "take_place.v" -> ["take", "place"].
    """
    base, dot, suffix = lu_name.rpartition(".")
    if dot and suffix.lower() in LU_POS_SUFFIXES:
        name = base
    else:
        name = lu_name
    return [w.lower() for w in name.replace("_", " ").split(" ") if w]


def embed_frames(kb, store):
    """FrameEmbedding per frame; frames with no in-vocabulary words are skipped."""
    embeddings = {}
    skipped = []
    for name in sorted(kb.frames):
        entry = kb.frames[name]
        words = []
        for lu_name, _ in entry.lexical_units:
            words.extend(lu_words(lu_name))
        found = [store.lookup(w) for w in words]
        found = [v for v in found if v is not None]
        if not words or not found:
            skipped.append(name)
            continue
        vector = np.mean(found, axis=0)
        embeddings[name] = FrameEmbedding(
            frame=name, vector=vector, coverage=len(found) / len(words)
        )
    if skipped:
        log.info("no embedding for %d frame(s) without in-vocabulary words", len(skipped))
    return embeddings


def cosine_distance(u, v):
    """1 - cosine similarity; raises on zero-norm input."""
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise ValueError("cosine distance undefined for zero-norm vector")
    return 1.0 - float(np.dot(u, v)) / (nu * nv)


def keyword_search(keywords, store, embeddings, top_n=10):
    """Rank frames by cosine distance to the centroid of the keyword vectors.

    Keywords are lowercased before lookup; missing ones are skipped with a
    warning as long as at least one resolves. Zero-norm frame embeddings are
    excluded with a warning. Ties break by frame name.
    """
    if top_n < 1:
        raise QueryError("top_n must be >= 1")
    if not keywords:
        raise QueryError("at least one keyword is required")
    found = []
    misses = []
    for keyword in keywords:
        vector = store.lookup(keyword)
        if vector is None:
            misses.append(keyword)
        else:
            found.append(vector)
    if not found:
        raise QueryError(f"no keyword found in the vector store: {misses}")
    if misses:
        log.warning("keywords not in the vector store, skipped: %s", misses)
    centroid = np.mean(found, axis=0)
    if float(np.linalg.norm(centroid)) == 0.0:
        raise QueryError("keyword centroid has zero norm; cannot rank by cosine")
    ranked = []
    for name in sorted(embeddings):
        emb = embeddings[name]
        if float(np.linalg.norm(emb.vector)) == 0.0:
            log.warning("frame %s has a zero-norm embedding, excluded", name)
            continue
        ranked.append((name, cosine_distance(centroid, emb.vector)))
    ranked.sort(key=lambda item: (item[1], item[0]))
    return ranked[:top_n]


def suggestion_payload(frames, kb):
    """Presentation bundles (frame, definition, examples) for ranked frames."""
    payload = []
    for item in frames:
        name = item[0] if isinstance(item, tuple) else item
        entry = kb.frame(name)  # raises on unknown frame
        payload.append(
            {
                "frame": name,
                "definition": entry.definition,
                "examples": list(entry.example_sentences),
            }
        )
    return payload
