"""Synthetic event-linked news mini corpus with planted ground truth.

The generator assembles documents from hand-built sentence templates. Every
template carries its dependency tree, its frame instances, and the expected
analysis (construction, root status, role paths, foregrounding flag) derived
by hand from that tree. Planted template counts are exact, so the emitted
manifest states the true aggregate statistics without ever running the
analyzer: 60% of Killing instances and 79% of Death instances use
victim-foregrounding constructions, time lags between event and publication
are recorded per document, and a handful of documents stay unlinked.

Regeneration with the same seed is byte-identical, which the test suite uses
to guard the checked-in corpus against drift.
"""

from __future__ import annotations

import datetime
import json
import pathlib
import random
from dataclasses import dataclass

DEFAULT_SEED = 7

GIVEN_NAMES = [
    "Anna", "Maria", "Lucia", "Elena", "Sara", "Giulia", "Francesca", "Laura",
    "Martina", "Chiara", "Paola", "Silvia", "Federica", "Alessia", "Roberta",
    "Valentina", "Irene", "Claudia", "Marta", "Serena",
]
PLACES = [
    "Northfield", "Easton", "Graysbury", "Westbrook", "Millbrook",
    "Harrowgate", "Fairview", "Redport",
]
WEEKDAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
PARTNERS = ["husband", "partner", "ex-partner", "boyfriend"]
WEAPONS = ["knife", "gun", "hammer"]
SOURCES = ["Morning Courier", "Evening Post", "Regional Tribune", "City Wire"]
REGIONS = ["north", "central", "south"]
SETTINGS = ["domestic", "public"]

FIN = "Mood=Ind|Number=Sing|Person=3|Tense=Past|VerbForm=Fin"
FIN_PLUR = "Mood=Ind|Number=Plur|Person=3|Tense=Past|VerbForm=Fin"
PART_PASS = "Tense=Past|VerbForm=Part|Voice=Pass"
DEF_ART = "Definite=Def|PronType=Art"
IND_ART = "Definite=Ind|PronType=Art"
POSS_HER = "Gender=Fem|Number=Sing|Person=3|Poss=Yes|PronType=Prs"
SING = "Number=Sing"
PLUR = "Number=Plur"


@dataclass(frozen=True)
class TemplateInstance:
    """One frame instance of a template, with its hand-derived analysis."""

    frame: str
    trigger: tuple[int, int]
    roles: tuple  # ((name, start, end), ...)
    construction: str
    is_root: bool
    paths: tuple  # ((role, path), ...), parallel to roles
    foregrounding: bool


@dataclass(frozen=True)
class SentenceTemplate:
    tag: str
    # (form, lemma, upos, feats, head, deprel); form/lemma may hold {slot}s
    tokens: tuple
    instances: tuple[TemplateInstance, ...]
    slots: tuple[str, ...] = ()


def _t(form, lemma, upos, feats, head, deprel):
    return (form, lemma, upos, feats, head, deprel)


TEMPLATES = {}


def _define(template):
    TEMPLATES[template.tag] = template


# Killing, passive with expressed agent: clause (a) foregrounding.
_define(SentenceTemplate(
    tag="k_pass_agent",
    tokens=(
        _t("{name}", "{name}", "PROPN", SING, 3, "nsubj:pass"),
        _t("was", "be", "AUX", FIN, 3, "aux:pass"),
        _t("killed", "kill", "VERB", PART_PASS, 0, "root"),
        _t("by", "by", "ADP", "", 6, "case"),
        _t("her", "her", "PRON", POSS_HER, 6, "nmod:poss"),
        _t("{partner}", "{partner}", "NOUN", SING, 3, "obl:agent"),
        _t("in", "in", "ADP", "", 8, "case"),
        _t("{place}", "{place}", "PROPN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Killing",
            trigger=(2, 3),
            roles=(("Victim", 0, 1), ("Killer", 3, 6), ("Place", 6, 8)),
            construction="vrb_passive",
            is_root=True,
            paths=(("Victim", "nsubj:pass↓"), ("Killer", "obl:agent↓"), ("Place", "obl↓")),
            foregrounding=True,
        ),
    ),
    slots=("name", "partner", "place"),
))

# Killing, short passive without agent: clause (a) foregrounding.
_define(SentenceTemplate(
    tag="k_pass_short",
    tokens=(
        _t("{name}", "{name}", "PROPN", SING, 3, "nsubj:pass"),
        _t("was", "be", "AUX", FIN, 3, "aux:pass"),
        _t("murdered", "murder", "VERB", PART_PASS, 0, "root"),
        _t("on", "on", "ADP", "", 6, "case"),
        _t("{weekday}", "{weekday}", "PROPN", SING, 6, "compound"),
        _t("night", "night", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Killing",
            trigger=(2, 3),
            roles=(("Victim", 0, 1), ("Time", 3, 6)),
            construction="vrb_passive",
            is_root=True,
            paths=(("Victim", "nsubj:pass↓"), ("Time", "obl↓")),
            foregrounding=True,
        ),
    ),
    slots=("name", "weekday"),
))

# Killing, active with overt perpetrator subject: not foregrounding.
_define(SentenceTemplate(
    tag="k_active",
    tokens=(
        _t("Her", "her", "PRON", POSS_HER, 2, "nmod:poss"),
        _t("{partner}", "{partner}", "NOUN", SING, 3, "nsubj"),
        _t("killed", "kill", "VERB", FIN, 0, "root"),
        _t("{name}", "{name}", "PROPN", SING, 3, "obj"),
        _t("with", "with", "ADP", "", 7, "case"),
        _t("a", "a", "DET", IND_ART, 7, "det"),
        _t("{weapon}", "{weapon}", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Killing",
            trigger=(2, 3),
            roles=(("Killer", 0, 2), ("Victim", 3, 4), ("Instrument", 4, 7)),
            construction="vrb_active",
            is_root=True,
            paths=(("Killer", "nsubj↓"), ("Victim", "obj↓"), ("Instrument", "obl↓")),
            foregrounding=False,
        ),
    ),
    slots=("partner", "name", "weapon"),
))

# Killing, event nominal: not foregrounding (victim is an oblique nmod).
_define(SentenceTemplate(
    tag="k_nominal",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("murder", "murder", "NOUN", SING, 5, "nsubj"),
        _t("of", "of", "ADP", "", 4, "case"),
        _t("{name}", "{name}", "PROPN", SING, 2, "nmod"),
        _t("shocked", "shock", "VERB", FIN, 0, "root"),
        _t("{place}", "{place}", "PROPN", SING, 5, "obj"),
    ),
    instances=(
        TemplateInstance(
            frame="Killing",
            trigger=(1, 2),
            roles=(("Victim", 2, 4),),
            construction="nonverbal",
            is_root=True,
            paths=(("Victim", "nmod↓"),),
            foregrounding=False,
        ),
    ),
    slots=("name", "place"),
))

# Death, unaccusative with a place: clause (a) foregrounding.
_define(SentenceTemplate(
    tag="d_unacc_place",
    tokens=(
        _t("{name}", "{name}", "PROPN", SING, 2, "nsubj"),
        _t("died", "die", "VERB", FIN, 0, "root"),
        _t("at", "at", "ADP", "", 5, "case"),
        _t("her", "her", "PRON", POSS_HER, 5, "nmod:poss"),
        _t("home", "home", "NOUN", SING, 2, "obl"),
        _t("in", "in", "ADP", "", 7, "case"),
        _t("{place}", "{place}", "PROPN", SING, 5, "nmod"),
    ),
    instances=(
        TemplateInstance(
            frame="Death",
            trigger=(1, 2),
            roles=(("Protagonist", 0, 1), ("Place", 2, 7)),
            construction="vrb_unaccusative",
            is_root=True,
            paths=(("Protagonist", "nsubj↓"), ("Place", "obl↓")),
            foregrounding=True,
        ),
    ),
    slots=("name", "place"),
))

# Death, unaccusative with an explanation: clause (a) foregrounding.
_define(SentenceTemplate(
    tag="d_unacc_cause",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("woman", "woman", "NOUN", SING, 3, "nsubj"),
        _t("died", "die", "VERB", FIN, 0, "root"),
        _t("after", "after", "ADP", "", 6, "case"),
        _t("the", "the", "DET", DEF_ART, 6, "det"),
        _t("assault", "assault", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Death",
            trigger=(2, 3),
            roles=(("Protagonist", 0, 2), ("Explanation", 3, 6)),
            construction="vrb_unaccusative",
            is_root=True,
            paths=(("Protagonist", "nsubj↓"), ("Explanation", "obl↓")),
            foregrounding=True,
        ),
    ),
))

# Death, event nominal: not foregrounding.
_define(SentenceTemplate(
    tag="d_nominal",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("death", "death", "NOUN", SING, 5, "nsubj"),
        _t("of", "of", "ADP", "", 4, "case"),
        _t("{name}", "{name}", "PROPN", SING, 2, "nmod"),
        _t("stunned", "stun", "VERB", FIN, 0, "root"),
        _t("the", "the", "DET", DEF_ART, 7, "det"),
        _t("town", "town", "NOUN", SING, 5, "obj"),
    ),
    instances=(
        TemplateInstance(
            frame="Death",
            trigger=(1, 2),
            roles=(("Protagonist", 2, 4),),
            construction="nonverbal",
            is_root=True,
            paths=(("Protagonist", "nmod↓"),),
            foregrounding=False,
        ),
    ),
    slots=("name",),
))

# Event, impersonal verbal.
_define(SentenceTemplate(
    tag="ev_occurred",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("incident", "incident", "NOUN", SING, 3, "nsubj"),
        _t("occurred", "occur", "VERB", FIN, 0, "root"),
        _t("around", "around", "ADP", "", 5, "case"),
        _t("midnight", "midnight", "NOUN", SING, 3, "obl"),
        _t("in", "in", "ADP", "", 7, "case"),
        _t("{place}", "{place}", "PROPN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Event",
            trigger=(2, 3),
            roles=(("Event", 0, 2), ("Time", 3, 5), ("Place", 5, 7)),
            construction="vrb_impersonal",
            is_root=True,
            paths=(("Event", "nsubj↓"), ("Time", "obl↓"), ("Place", "obl↓")),
            foregrounding=False,
        ),
    ),
    slots=("place",),
))

# Catastrophe nominal subject + Event verb in one sentence (two instances).
_define(SentenceTemplate(
    tag="cat_happened",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("tragedy", "tragedy", "NOUN", SING, 3, "nsubj"),
        _t("happened", "happen", "VERB", FIN, 0, "root"),
        _t("before", "before", "ADP", "", 5, "case"),
        _t("dawn", "dawn", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Catastrophe",
            trigger=(1, 2),
            roles=(("Time", 3, 5),),
            construction="nonverbal",
            is_root=True,
            paths=(("Time", "↑--obl↓"),),
            foregrounding=False,
        ),
        TemplateInstance(
            frame="Event",
            trigger=(2, 3),
            roles=(("Event", 0, 2),),
            construction="vrb_impersonal",
            is_root=True,
            paths=(("Event", "nsubj↓"),),
            foregrounding=False,
        ),
    ),
))

# Attack, active.
_define(SentenceTemplate(
    tag="att_active",
    tokens=(
        _t("A", "a", "DET", IND_ART, 2, "det"),
        _t("man", "man", "NOUN", SING, 3, "nsubj"),
        _t("attacked", "attack", "VERB", FIN, 0, "root"),
        _t("{name}", "{name}", "PROPN", SING, 3, "obj"),
        _t("near", "near", "ADP", "", 7, "case"),
        _t("her", "her", "PRON", POSS_HER, 7, "nmod:poss"),
        _t("office", "office", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Attack",
            trigger=(2, 3),
            roles=(("Assailant", 0, 2), ("Victim", 3, 4), ("Place", 4, 7)),
            construction="vrb_active",
            is_root=True,
            paths=(("Assailant", "nsubj↓"), ("Victim", "obj↓"), ("Place", "obl↓")),
            foregrounding=False,
        ),
    ),
    slots=("name",),
))

# Attack, event nominal.
_define(SentenceTemplate(
    tag="att_nominal",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("attack", "attack", "NOUN", SING, 5, "nsubj"),
        _t("on", "on", "ADP", "", 4, "case"),
        _t("{name}", "{name}", "PROPN", SING, 2, "nmod"),
        _t("lasted", "last", "VERB", FIN, 0, "root"),
        _t("minutes", "minute", "NOUN", PLUR, 5, "obl:tmod"),
    ),
    instances=(
        TemplateInstance(
            frame="Attack",
            trigger=(1, 2),
            roles=(("Victim", 2, 4),),
            construction="nonverbal",
            is_root=True,
            paths=(("Victim", "nmod↓"),),
            foregrounding=False,
        ),
    ),
    slots=("name",),
))

# Arrest, passive.
_define(SentenceTemplate(
    tag="arr_passive",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("suspect", "suspect", "NOUN", SING, 4, "nsubj:pass"),
        _t("was", "be", "AUX", FIN, 4, "aux:pass"),
        _t("arrested", "arrest", "VERB", PART_PASS, 0, "root"),
        _t("shortly", "shortly", "ADV", "", 6, "advmod"),
        _t("afterwards", "afterwards", "ADV", "", 4, "advmod"),
    ),
    instances=(
        TemplateInstance(
            frame="Arrest",
            trigger=(3, 4),
            roles=(("Suspect", 0, 2),),
            construction="vrb_passive",
            is_root=True,
            paths=(("Suspect", "nsubj:pass↓"),),
            foregrounding=False,
        ),
    ),
))

# Quarreling, active.
_define(SentenceTemplate(
    tag="qua_active",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("couple", "couple", "NOUN", SING, 3, "nsubj"),
        _t("argued", "argue", "VERB", FIN, 0, "root"),
        _t("violently", "violently", "ADV", "", 3, "advmod"),
        _t("that", "that", "DET", "Number=Sing|PronType=Dem", 6, "det"),
        _t("evening", "evening", "NOUN", SING, 3, "obl:tmod"),
    ),
    instances=(
        TemplateInstance(
            frame="Quarreling",
            trigger=(2, 3),
            roles=(("Arguers", 0, 2),),
            construction="vrb_active",
            is_root=True,
            paths=(("Arguers", "nsubj↓"),),
            foregrounding=False,
        ),
    ),
))

# Quarreling, nominal and backgrounded (non-root).
_define(SentenceTemplate(
    tag="qua_nominal",
    tokens=(
        _t("Neighbours", "neighbour", "NOUN", PLUR, 2, "nsubj"),
        _t("reported", "report", "VERB", FIN_PLUR, 0, "root"),
        _t("a", "a", "DET", IND_ART, 5, "det"),
        _t("loud", "loud", "ADJ", "Degree=Pos", 5, "amod"),
        _t("argument", "argument", "NOUN", SING, 2, "obj"),
    ),
    instances=(
        TemplateInstance(
            frame="Quarreling",
            trigger=(4, 5),
            roles=(),
            construction="nonverbal",
            is_root=False,
            paths=(),
            foregrounding=False,
        ),
    ),
))

# Emotion_directed, copular adjective as sentence root.
_define(SentenceTemplate(
    tag="emo_copular",
    tokens=(
        _t("Neighbours", "neighbour", "NOUN", PLUR, 3, "nsubj"),
        _t("were", "be", "AUX", FIN_PLUR, 3, "cop"),
        _t("shocked", "shocked", "ADJ", "Degree=Pos", 0, "root"),
        _t("by", "by", "ADP", "", 6, "case"),
        _t("the", "the", "DET", DEF_ART, 6, "det"),
        _t("news", "news", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Emotion_directed",
            trigger=(2, 3),
            roles=(("Experiencer", 0, 1), ("Stimulus", 3, 6)),
            construction="nonverbal",
            is_root=True,
            paths=(("Experiencer", "nsubj↓"), ("Stimulus", "obl↓")),
            foregrounding=False,
        ),
    ),
))

# Emotion_directed, object nominal (backgrounded).
_define(SentenceTemplate(
    tag="emo_nominal",
    tokens=(
        _t("Friends", "friend", "NOUN", PLUR, 2, "nsubj"),
        _t("described", "describe", "VERB", FIN_PLUR, 0, "root"),
        _t("her", "her", "PRON", POSS_HER, 4, "nmod:poss"),
        _t("anguish", "anguish", "NOUN", SING, 2, "obj"),
    ),
    instances=(
        TemplateInstance(
            frame="Emotion_directed",
            trigger=(3, 4),
            roles=(("Experiencer", 2, 3),),
            construction="nonverbal",
            is_root=False,
            paths=(("Experiencer", "nmod:poss↓"),),
            foregrounding=False,
        ),
    ),
))

# "found dead": passive Locating plus a nonverbal Dead_or_alive instance.
_define(SentenceTemplate(
    tag="loc_found_dead",
    tokens=(
        _t("{name}", "{name}", "PROPN", SING, 3, "nsubj:pass"),
        _t("was", "be", "AUX", FIN, 3, "aux:pass"),
        _t("found", "find", "VERB", PART_PASS, 0, "root"),
        _t("dead", "dead", "ADJ", "Degree=Pos", 3, "xcomp"),
        _t("in", "in", "ADP", "", 7, "case"),
        _t("her", "her", "PRON", POSS_HER, 7, "nmod:poss"),
        _t("flat", "flat", "NOUN", SING, 3, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Locating",
            trigger=(2, 3),
            roles=(("Sought_entity", 0, 1), ("Ground", 4, 7)),
            construction="vrb_passive",
            is_root=True,
            paths=(("Sought_entity", "nsubj:pass↓"), ("Ground", "obl↓")),
            foregrounding=False,
        ),
        TemplateInstance(
            frame="Dead_or_alive",
            trigger=(3, 4),
            roles=(("Protagonist", 0, 1),),
            construction="nonverbal",
            is_root=False,
            paths=(("Protagonist", "↑--nsubj:pass↓"),),
            foregrounding=False,
        ),
    ),
    slots=("name",),
))

# Locating, active.
_define(SentenceTemplate(
    tag="loc_active",
    tokens=(
        _t("Officers", "officer", "NOUN", PLUR, 2, "nsubj"),
        _t("found", "find", "VERB", FIN_PLUR, 0, "root"),
        _t("the", "the", "DET", DEF_ART, 4, "det"),
        _t("body", "body", "NOUN", SING, 2, "obj"),
        _t("in", "in", "ADP", "", 7, "case"),
        _t("the", "the", "DET", DEF_ART, 7, "det"),
        _t("river", "river", "NOUN", SING, 2, "obl"),
    ),
    instances=(
        TemplateInstance(
            frame="Locating",
            trigger=(1, 2),
            roles=(("Cognizer", 0, 1), ("Sought_entity", 2, 4)),
            construction="vrb_active",
            is_root=True,
            paths=(("Cognizer", "nsubj↓"), ("Sought_entity", "obj↓")),
            foregrounding=False,
        ),
    ),
))

# Dead_or_alive, copular: clause (b) foregrounding (Protagonist:nsubj).
_define(SentenceTemplate(
    tag="doa_copular",
    tokens=(
        _t("{name}", "{name}", "PROPN", SING, 4, "nsubj"),
        _t("was", "be", "AUX", FIN, 4, "cop"),
        _t("already", "already", "ADV", "", 4, "advmod"),
        _t("dead", "dead", "ADJ", "Degree=Pos", 0, "root"),
    ),
    instances=(
        TemplateInstance(
            frame="Dead_or_alive",
            trigger=(3, 4),
            roles=(("Protagonist", 0, 1),),
            construction="nonverbal",
            is_root=True,
            paths=(("Protagonist", "nsubj↓"),),
            foregrounding=True,
        ),
    ),
    slots=("name",),
))

# Dead_or_alive, role span covering the trigger: clause (b) via "*".
_define(SentenceTemplate(
    tag="doa_deceased",
    tokens=(
        _t("The", "the", "DET", DEF_ART, 2, "det"),
        _t("deceased", "deceased", "NOUN", SING, 5, "nsubj"),
        _t("was", "be", "AUX", FIN, 5, "cop"),
        _t("a", "a", "DET", IND_ART, 5, "det"),
        _t("nurse", "nurse", "NOUN", SING, 0, "root"),
    ),
    instances=(
        TemplateInstance(
            frame="Dead_or_alive",
            trigger=(1, 2),
            roles=(("Protagonist", 0, 2),),
            construction="nonverbal",
            is_root=True,
            paths=(("Protagonist", "*"),),
            foregrounding=True,
        ),
    ),
))

# Planted template counts. Killing: 60 of 100 foregrounding; Death: 79 of 100.
PLAN = {
    "k_pass_agent": 35,
    "k_pass_short": 25,
    "k_active": 25,
    "k_nominal": 15,
    "d_unacc_place": 40,
    "d_unacc_cause": 39,
    "d_nominal": 21,
    "ev_occurred": 10,
    "cat_happened": 10,
    "att_active": 8,
    "att_nominal": 7,
    "arr_passive": 8,
    "qua_active": 6,
    "qua_nominal": 4,
    "emo_copular": 14,
    "emo_nominal": 12,
    "loc_found_dead": 6,
    "loc_active": 6,
    "doa_copular": 3,
    "doa_deceased": 3,
}

KILLING_TAGS = ("k_pass_agent", "k_pass_short", "k_active", "k_nominal")
DEATH_TAGS = ("d_unacc_place", "d_unacc_cause", "d_nominal")

# Frames with a row in the bundled role-mapping table; the manifest states
# foregrounding ground truth only for these (the metric is undefined elsewhere).
MAPPED_FRAMES = frozenset(
    ["Attack", "Dead_or_alive", "Death", "Emotion_directed", "Event", "Killing", "Quarreling"]
)

N_DOCUMENTS = 100
N_EVENTS = 30
UNLINKED_DOCS = ("d020", "d040", "d060", "d080", "d099")
NEGATIVE_LAGS = {"d010": -1, "d030": -3}
MAX_LAG_DAYS = 45


def _fill_slots(template, rng):
    slots = {}
    for slot in template.slots:
        pool = {
            "name": GIVEN_NAMES,
            "place": PLACES,
            "weekday": WEEKDAYS,
            "partner": PARTNERS,
            "weapon": WEAPONS,
        }[slot]
        slots[slot] = rng.choice(pool)
    return slots


def _realize(template, rng):
    """Instantiate a template's slots; returns (token rows, text)."""
    slots = _fill_slots(template, rng)
    tokens = [
        (form.format(**slots), lemma.format(**slots), upos, feats, head, deprel)
        for form, lemma, upos, feats, head, deprel in template.tokens
    ]
    text = " ".join(t[0] for t in tokens)
    return tokens, text


def _conllu_block(doc_sent_id, tokens, text):
    lines = [f"# sent_id = {doc_sent_id}", f"# text = {text}"]
    for index, (form, lemma, upos, feats, head, deprel) in enumerate(tokens, start=1):
        feats_col = feats if feats else "_"
        lines.append(
            f"{index}\t{form}\t{lemma}\t{upos}\t_\t{feats_col}\t{head}\t{deprel}\t_\t_"
        )
    return "\n".join(lines) + "\n"


def _plan_sentences(rng):
    """Assign one Killing, one Death, and a shuffled extra per document."""
    killing = [tag for tag in KILLING_TAGS for _ in range(PLAN[tag])]
    death = [tag for tag in DEATH_TAGS for _ in range(PLAN[tag])]
    extras = [
        tag
        for tag in PLAN
        if tag not in KILLING_TAGS + DEATH_TAGS
        for _ in range(PLAN[tag])
    ]
    rng.shuffle(killing)
    rng.shuffle(death)
    rng.shuffle(extras)
    assert len(killing) == N_DOCUMENTS and len(death) == N_DOCUMENTS

    per_doc = [[killing[i], death[i]] for i in range(N_DOCUMENTS)]
    recipients = list(range(N_DOCUMENTS))
    rng.shuffle(recipients)
    for i, tag in enumerate(extras):
        per_doc[recipients[i % N_DOCUMENTS]].append(tag)
    for sentences in per_doc:
        rng.shuffle(sentences)
    return per_doc


def generate_mini_corpus(out_dir, seed=DEFAULT_SEED):
    """Write sentences.conllu, frames.jsonl, docs.jsonl, events.jsonl, manifest.json.

    Returns the manifest dict. Same seed, same bytes.
    """
    rng = random.Random(seed)
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    events = []
    for k in range(N_EVENTS):
        event_date = datetime.date(2020, 1, 1) + datetime.timedelta(days=rng.randint(0, 500))
        events.append(
            {
                "event_id": f"ev{k + 1:03d}",
                "event_date": event_date.isoformat(),
                "attributes": {
                    "region": rng.choice(REGIONS),
                    "setting": rng.choice(SETTINGS),
                },
            }
        )
    event_dates = {e["event_id"]: datetime.date.fromisoformat(e["event_date"]) for e in events}

    per_doc = _plan_sentences(rng)

    conllu_parts = []  # one string per document
    annotation_lines = []
    doc_lines = []
    manifest_docs = {}
    aggregates = {
        "frame_frequencies": {},
        "construction_by_frame": {},
        "is_root_by_frame": {},
        "role_link_frequencies": {},
        "foregrounding": {},
    }
    n_sentences = 0
    n_instances = 0

    for doc_index in range(N_DOCUMENTS):
        doc_id = f"d{doc_index:03d}"
        blocks = [f"# newdoc id = {doc_id}\n"]
        first_text = None
        for sent_index, tag in enumerate(per_doc[doc_index]):
            template = TEMPLATES[tag]
            tokens, text = _realize(template, rng)
            sent_id = f"s{sent_index}"
            blocks.append(_conllu_block(sent_id, tokens, text))
            if first_text is None:
                first_text = text
            n_sentences += 1
            for inst in template.instances:
                n_instances += 1
                annotation_lines.append(
                    json.dumps(
                        {
                            "doc_id": doc_id,
                            "sent_id": sent_id,
                            "frame": inst.frame,
                            "trigger": {"start": inst.trigger[0], "end": inst.trigger[1]},
                            "roles": [
                                {"name": name, "start": start, "end": end}
                                for name, start, end in inst.roles
                            ],
                        },
                        sort_keys=True,
                        ensure_ascii=False,
                    )
                )
                _aggregate(aggregates, inst)
        conllu_parts.append("\n".join(blocks))

        if doc_id in UNLINKED_DOCS:
            event_id = None
            lag = None
            pub_date = datetime.date(2021, 1, 1) + datetime.timedelta(days=rng.randint(0, 180))
        else:
            linked_index = doc_index % N_EVENTS  # every event gets coverage
            event_id = events[linked_index]["event_id"]
            lag = NEGATIVE_LAGS.get(doc_id, rng.randint(0, MAX_LAG_DAYS))
            pub_date = event_dates[event_id] + datetime.timedelta(days=lag)
        source = rng.choice(SOURCES)
        doc_lines.append(
            json.dumps(
                {
                    "doc_id": doc_id,
                    "event_id": event_id,
                    "pub_date": pub_date.isoformat(),
                    "source": source,
                    "title": first_text,
                    "url": f"https://news.example/{doc_id}",
                },
                sort_keys=True,
                ensure_ascii=False,
            )
        )
        manifest_docs[doc_id] = {"event_id": event_id, "lag_days": lag}

    manifest = {
        "format": "framelens-mini-manifest-v1",
        "seed": seed,
        "counts": {
            "documents": N_DOCUMENTS,
            "events": N_EVENTS,
            "sentences": n_sentences,
            "instances": n_instances,
        },
        "templates": dict(sorted(PLAN.items())),
        "frame_frequencies": aggregates["frame_frequencies"],
        "construction_by_frame": aggregates["construction_by_frame"],
        "is_root_by_frame": aggregates["is_root_by_frame"],
        "role_link_frequencies": aggregates["role_link_frequencies"],
        "foregrounding": aggregates["foregrounding"],
        "documents": manifest_docs,
        "unlinked_documents": list(UNLINKED_DOCS),
        "negative_lag_documents": dict(sorted(NEGATIVE_LAGS.items())),
    }

    (out_dir / "sentences.conllu").write_text("\n".join(conllu_parts), encoding="utf-8")
    (out_dir / "frames.jsonl").write_text("\n".join(annotation_lines) + "\n", encoding="utf-8")
    (out_dir / "docs.jsonl").write_text("\n".join(doc_lines) + "\n", encoding="utf-8")
    (out_dir / "events.jsonl").write_text(
        "\n".join(json.dumps(e, sort_keys=True, ensure_ascii=False) for e in events) + "\n",
        encoding="utf-8",
    )
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, sort_keys=True, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )
    return manifest


def _aggregate(aggregates, inst):
    freq = aggregates["frame_frequencies"]
    freq[inst.frame] = freq.get(inst.frame, 0) + 1

    matrix = aggregates["construction_by_frame"].setdefault(inst.frame, {})
    matrix[inst.construction] = matrix.get(inst.construction, 0) + 1

    roots = aggregates["is_root_by_frame"].setdefault(inst.frame, {"true": 0, "false": 0})
    roots["true" if inst.is_root else "false"] += 1

    links = aggregates["role_link_frequencies"].setdefault(inst.frame, {})
    for role, path in inst.paths:
        per_role = links.setdefault(role, {})
        per_role[path] = per_role.get(path, 0) + 1

    if inst.frame in MAPPED_FRAMES:
        fg = aggregates["foregrounding"].setdefault(inst.frame, {"foregrounding": 0, "total": 0})
        fg["total"] += 1
        if inst.foregrounding:
            fg["foregrounding"] += 1
