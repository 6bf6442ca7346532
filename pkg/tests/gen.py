"""Random linguistic structures for property tests.

Every generator takes an explicit random.Random so a failing case reproduces
from the seed printed by the test.
"""

from __future__ import annotations

import datetime

import numpy as np

from framelens.annotations import FrameInstance, RoleSpan, Span
from framelens.conllu import Sentence, Token, validate_sentence
from framelens.corpus import Corpus, CorpusDocument, EventRecord
from framelens.discovery import WordVectorStore
from framelens.kb import Agentivity, FrameEntry, FrameKB, FrameRelation, RoleMapping

UPOS_POOL = ("NOUN", "VERB", "ADJ", "PROPN", "ADV", "AUX")
DEPREL_POOL = (
    "nsubj",
    "nsubj:pass",
    "obj",
    "obl",
    "obl:agent",
    "nmod",
    "nmod:poss",
    "advmod",
    "amod",
    "xcomp",
    "conj",
)


def random_tree(rng, n, sent_id="s1"):
    """Uniform-ish random dependency tree: attach-to-earlier, then relabel.

    Relabeling spreads the root over all positions, so span/path tests see
    every topology, not just left-rooted ones.
    """
    parent = {1: 0}
    for node in range(2, n + 1):
        parent[node] = rng.randrange(1, node)
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    relabel = dict(zip(range(1, n + 1), labels))
    tokens = []
    for old in range(1, n + 1):
        head = 0 if parent[old] == 0 else relabel[parent[old]]
        index = relabel[old]
        feats = []
        upos = rng.choice(UPOS_POOL)
        if upos in ("VERB", "AUX") and rng.random() < 0.5:
            feats.append(("VerbForm", "Fin"))
        if upos == "VERB" and rng.random() < 0.2:
            feats.append(("Voice", "Pass"))
        tokens.append(
            Token(
                index=index,
                form=f"w{index}",
                lemma=f"w{index}",
                upos=upos,
                feats=tuple(sorted(feats)),
                head=head,
                deprel="root" if head == 0 else rng.choice(DEPREL_POOL),
            )
        )
    tokens.sort(key=lambda t: t.index)
    sentence = Sentence(
        sent_id=sent_id,
        text=" ".join(t.form for t in tokens),
        tokens=tuple(tokens),
    )
    return validate_sentence(sentence)


def random_span(rng, n, max_len=3):
    start = rng.randrange(0, n)
    end = min(n, start + rng.randint(1, max_len))
    return Span(start, end)


def random_corpus(rng, kb, tag="r"):
    """A small fully analyzable corpus with events, links, and gaps.

    Frames come from the given KB so agentivity and role mappings resolve;
    role names come from the frame's own inventory when it has one.
    """
    frame_names = sorted(kb.frames)
    n_events = rng.randint(2, 4)
    base = datetime.date(2021, 3, 1)
    events = tuple(
        EventRecord(
            event_id=f"{tag}-ev{k}",
            event_date=base + datetime.timedelta(days=rng.randint(0, 30)),
            attributes=(("region", rng.choice(["north", "south"])),),
        )
        for k in range(n_events)
    )
    documents = []
    for d in range(rng.randint(6, 12)):
        doc_id = f"{tag}-d{d:03d}"
        sentences = []
        instances = []
        for s in range(rng.randint(1, 3)):
            sent_id = f"s{s + 1}"
            n = rng.randint(3, 9)
            sentence = random_tree(rng, n, sent_id=sent_id)
            sentences.append(sentence)
            for k in range(rng.randint(0, 2)):
                frame = rng.choice(frame_names)
                roles = []
                pool = list(kb.frames[frame].all_roles) or ["Theme"]
                for name in rng.sample(pool, k=min(len(pool), rng.randint(0, 2))):
                    roles.append(RoleSpan(name=name, span=random_span(rng, n)))
                instances.append(
                    FrameInstance(
                        instance_id=f"{doc_id}:{sent_id}:{k}",
                        sent_id=sent_id,
                        frame=frame,
                        trigger=random_span(rng, n, max_len=2),
                        roles=tuple(roles),
                    )
                )
        linked = rng.random() < 0.8
        documents.append(
            CorpusDocument(
                doc_id=doc_id,
                pub_date=base + datetime.timedelta(days=rng.randint(-2, 40)),
                source=rng.choice(["outlet-a", "outlet-b", "outlet-c"]),
                sentences=tuple(sentences),
                frame_instances=tuple(instances),
                event_id=rng.choice(events).event_id if linked else None,
            )
        )
    return Corpus(documents=tuple(documents), events=tuple(events))


def random_filter_payload(rng):
    """A structured filter drawn from the shapes the API accepts."""
    choices = []
    if rng.random() < 0.6:
        choices.append(
            {"key": "source", "op": "in", "value": ["outlet-a", "outlet-b"]}
            if rng.random() < 0.5
            else {"key": "source", "op": "eq", "value": rng.choice(["outlet-a", "outlet-b"])}
        )
    if rng.random() < 0.4:
        choices.append({"key": "pub_date", "op": "range", "value": ["2021-03-01", "2021-03-25"]})
    payload = {"doc_predicates": choices, "event_predicates": [], "frame_whitelist": None}
    if rng.random() < 0.3:
        payload["event_predicates"] = [
            {"key": "region", "op": "eq", "value": rng.choice(["north", "south"])}
        ]
    return payload


def toy_discovery_kb(rng, n_frames=50, vocab=60, dim=8):
    """(FrameKB, WordVectorStore) pair for search-ranking tests.

    Every lexical unit draws from a shared synthetic vocabulary; each frame
    gets a distinct LU set so no two frame vectors collide.
    """
    words = [f"word{w:02d}" for w in range(vocab)]
    state = np.random.default_rng(rng.randrange(2**32))
    store = WordVectorStore(
        dimension=dim,
        vectors={w: state.standard_normal(dim) for w in words},
    )
    frames = {}
    seen = set()
    for f in range(n_frames):
        while True:
            lus = tuple(sorted(rng.sample(words, k=rng.randint(1, 3))))
            if lus not in seen:
                seen.add(lus)
                break
        name = f"Frame_{f:02d}"
        frames[name] = FrameEntry(
            name=name,
            definition=f"synthetic frame {f}",
            core_roles=("Theme",),
            non_core_roles=(),
            lexical_units=tuple((f"{w}.v", "V") for w in lus),
            example_sentences=(),
            agentivity=Agentivity.ACTIVE,
        )
    return FrameKB(frames=frames, relations=()), store


def random_relation_kb(rng, n_frames=12, n_relations=14):
    """A KB whose relation graph is random, for alternatives-oracle tests."""
    from framelens.kb import RELATION_TYPES

    names = [f"G{k:02d}" for k in range(n_frames)]
    frames = {
        name: FrameEntry(
            name=name,
            definition="",
            core_roles=(),
            non_core_roles=(),
            lexical_units=((f"lu{k}.v", "V"),),
            example_sentences=(),
            agentivity=Agentivity.ACTIVE,
        )
        for k, name in enumerate(names)
    }
    types = sorted(RELATION_TYPES)
    relations = tuple(
        FrameRelation(type=rng.choice(types), parent=rng.choice(names), child=rng.choice(names))
        for _ in range(n_relations)
    )
    return FrameKB(frames=frames, relations=relations)


def mapped_kb(kb):
    """Frames of the KB that have a role mapping (foregrounding is defined)."""
    return sorted(kb.role_mappings)
