#!/usr/bin/env python3
"""Regenerate the bundled KB files and the synthetic demo word vectors.

The bundled KB is a hand-curated subset of FrameNet 1.7 covering the frames
used by the bundled corpora and fixtures: entries list real frame names, core
and non-core roles, and lexical units, with definitions and examples written
for this distribution. Deployments that need the full lexicon should compile
one from a FrameNet release with scripts/import_framenet.py.

The demo vectors are synthetic: each word's vector is derived from a SHA-256
hash of the word, so the file is reproducible word-by-word. They support
exact-word keyword search in demos and tests; point the tools at real
pretrained vectors (e.g. GloVe) for meaningful similarity search.

Usage: python scripts/build_bundled_kb.py
"""

import hashlib
import json
import pathlib

import numpy as np

DATA_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "framelens" / "data"

VECTOR_DIM = 50

FRAMES = [
    {
        "name": "Abusing",
        "definition": "An Abuser subjects a Victim to repeated physical or psychological mistreatment.",
        "core_roles": ["Abuser", "Victim"],
        "non_core_roles": ["Degree", "Manner", "Means", "Place", "Time"],
        "lexical_units": ["abuse.v", "abuse.n", "maltreat.v", "mistreat.v", "batter.v"],
        "examples": ["He had abused his partner for years.", "The report documents the abuse of inmates."],
    },
    {
        "name": "Arrest",
        "definition": "Authorities take a Suspect into custody, typically in connection with Charges.",
        "core_roles": ["Authorities", "Suspect", "Charges", "Offense"],
        "non_core_roles": ["Manner", "Means", "Place", "Time", "Purpose"],
        "lexical_units": ["arrest.v", "arrest.n", "apprehend.v", "nab.v", "collar.v", "bust.v"],
        "examples": ["Officers arrested the suspect at dawn.", "The arrest took place without incident."],
    },
    {
        "name": "Attack",
        "definition": "An Assailant physically attacks a Victim, possibly with a Weapon.",
        "core_roles": ["Assailant", "Victim"],
        "non_core_roles": ["Weapon", "Manner", "Place", "Time", "Purpose"],
        "lexical_units": ["attack.v", "attack.n", "assault.v", "assault.n", "ambush.v", "strike.v"],
        "examples": ["A man attacked the victim in the street.", "The assault left her badly hurt."],
    },
    {
        "name": "Catastrophe",
        "definition": "An Undesirable_event takes place and affects a Patient negatively.",
        "core_roles": ["Patient", "Undesirable_event"],
        "non_core_roles": ["Place", "Time", "Cause"],
        "lexical_units": ["tragedy.n", "disaster.n", "catastrophe.n", "calamity.n", "crisis.n"],
        "examples": ["The tragedy devastated the village.", "It was a disaster for the whole family."],
    },
    {
        "name": "Causation",
        "definition": "A Causer or Cause brings about an Effect or affects an Affected party.",
        "core_roles": ["Causer", "Cause", "Effect", "Affected", "Actor"],
        "non_core_roles": ["Manner", "Place", "Time"],
        "lexical_units": ["cause.v", "cause.n", "make.v", "bring about.v", "lead to.v"],
        "examples": ["The storm caused widespread damage."],
    },
    {
        "name": "Cause_harm",
        "definition": "An Agent or Cause injures a Victim, possibly in a specific Body_part.",
        "core_roles": ["Agent", "Cause", "Victim", "Body_part"],
        "non_core_roles": ["Instrument", "Means", "Manner", "Place", "Time"],
        "lexical_units": ["hurt.v", "injure.v", "wound.v", "beat.v", "stab.v", "strike.v", "batter.v"],
        "examples": ["The blow injured his shoulder.", "She was beaten by the intruder."],
    },
    {
        "name": "Cause_impact",
        "definition": "An Agent or Cause makes an Impactor come into forceful contact with an Impactee.",
        "core_roles": ["Agent", "Cause", "Impactor", "Impactee", "Impactors"],
        "non_core_roles": ["Place", "Time", "Manner", "Result"],
        "lexical_units": ["hit.v", "strike.v", "knock.v", "slam.v", "smash.v", "crash.v", "bang.v"],
        "examples": ["A car hit the cyclist.", "He slammed the box onto the table."],
    },
    {
        "name": "Cause_motion",
        "definition": "An Agent or Cause sets a Theme in motion along a Path towards a Goal.",
        "core_roles": ["Agent", "Cause", "Theme", "Source", "Path", "Goal"],
        "non_core_roles": ["Manner", "Means", "Place", "Time"],
        "lexical_units": ["throw.v", "hurl.v", "push.v", "drag.v", "shove.v", "toss.v"],
        "examples": ["He threw the keys onto the roof."],
    },
    {
        "name": "Dead_or_alive",
        "definition": "A Protagonist is in the state of being alive or dead.",
        "core_roles": ["Protagonist"],
        "non_core_roles": ["Explanation", "Circumstances", "Place", "Time"],
        "lexical_units": ["dead.a", "alive.a", "deceased.a", "lifeless.a", "living.a"],
        "examples": ["The victim was found dead.", "Rescuers pulled him out alive."],
    },
    {
        "name": "Death",
        "definition": "A Protagonist ceases to live, possibly from an expressed Cause.",
        "core_roles": ["Protagonist"],
        "non_core_roles": ["Cause", "Explanation", "Circumstances", "Manner", "Place", "Time"],
        "lexical_units": ["die.v", "death.n", "perish.v", "expire.v", "demise.n", "pass away.v"],
        "examples": ["The woman died at the scene.", "His death stunned the neighbourhood."],
    },
    {
        "name": "Emotion_directed",
        "definition": "An Experiencer feels an emotion directed at or prompted by a Stimulus or Topic.",
        "core_roles": ["Experiencer", "Expressor", "State", "Stimulus", "Topic"],
        "non_core_roles": ["Degree", "Manner", "Place", "Time"],
        "lexical_units": ["upset.a", "angry.a", "distressed.a", "shocked.a", "stunned.a", "devastated.a", "anguish.n"],
        "examples": ["Neighbours were shocked by the news."],
    },
    {
        "name": "Event",
        "definition": "An Event happens at a Place and Time, with no participant entailed.",
        "core_roles": ["Event", "Place", "Time"],
        "non_core_roles": ["Duration", "Manner", "Reason"],
        "lexical_units": ["happen.v", "occur.v", "take place.v", "event.n", "incident.n", "transpire.v"],
        "examples": ["The incident occurred around midnight.", "The event took place in Milan."],
    },
    {
        "name": "Experience_bodily_harm",
        "definition": "An Experiencer is injured, possibly in a specific Body_part.",
        "core_roles": ["Experiencer", "Body_part"],
        "non_core_roles": ["Injury", "Injuring_entity", "Severity", "Place", "Time"],
        "lexical_units": ["break.v", "sprain.v", "bruise.v", "fracture.v", "injury.n", "hurt.v"],
        "examples": ["She broke her arm in the fall."],
    },
    {
        "name": "Hit_target",
        "definition": "An Agent succeeds in hitting a Target.",
        "core_roles": ["Agent", "Target"],
        "non_core_roles": ["Instrument", "Means", "Manner", "Place", "Time"],
        "lexical_units": ["hit.v", "shoot.v", "strike.v", "pick off.v"],
        "examples": ["The sniper hit the target twice."],
    },
    {
        "name": "Impact",
        "definition": "An Impactor comes into sudden forceful contact with an Impactee, or Impactors collide.",
        "core_roles": ["Impactor", "Impactee", "Impactors"],
        "non_core_roles": ["Place", "Time", "Manner", "Force", "Result"],
        "lexical_units": ["collision.n", "crash.n", "impact.n", "collide.v", "smash.v", "bang.n", "thud.n"],
        "examples": ["The collision happened at the crossing.", "The two trains collided near the station."],
    },
    {
        "name": "Killing",
        "definition": "A Killer or Cause causes the death of a Victim.",
        "core_roles": ["Killer", "Victim", "Cause", "Instrument", "Means"],
        "non_core_roles": ["Manner", "Place", "Time", "Purpose", "Degree"],
        "lexical_units": [
            "kill.v", "killer.n", "killing.n", "murder.v", "murder.n", "murderer.n",
            "assassin.n", "assassinate.v", "assassination.n", "homicide.n", "femicide.n",
            "slay.v", "slaughter.v", "slaughter.n", "massacre.n", "deadly.a", "fatal.a",
            "lethal.a", "suicide.n",
        ],
        "examples": ["The man murdered his wife.", "The murder shocked the country."],
    },
    {
        "name": "Locating",
        "definition": "A Cognizer comes to know the location of a Sought_entity.",
        "core_roles": ["Cognizer", "Sought_entity"],
        "non_core_roles": ["Ground", "Purpose", "Place", "Time"],
        "lexical_units": ["find.v", "locate.v", "trace.v"],
        "examples": ["Police found the missing woman within hours."],
    },
    {
        "name": "Motion",
        "definition": "A Theme moves along a Path from a Source towards a Goal.",
        "core_roles": ["Theme", "Source", "Path", "Goal", "Direction", "Area"],
        "non_core_roles": ["Manner", "Speed", "Place", "Time"],
        "lexical_units": ["move.v", "motion.n", "go.v", "drift.v", "roll.v", "float.v"],
        "examples": ["The boat drifted towards the shore."],
    },
    {
        "name": "Motion_directional",
        "definition": "A Theme moves in a direction determined by gravity or geometry, with no agent.",
        "core_roles": ["Theme", "Direction", "Goal", "Path", "Source"],
        "non_core_roles": ["Place", "Time", "Distance", "Manner"],
        "lexical_units": ["fall.v", "drop.v", "plummet.v", "descend.v", "rise.v", "tumble.v"],
        "examples": ["He fell off the stairs.", "The rock plummeted into the gorge."],
    },
    {
        "name": "Precipitation",
        "definition": "Precipitation falls at a Place and Time; the verb is typically impersonal.",
        "core_roles": ["Precipitation"],
        "non_core_roles": ["Place", "Time", "Quantity", "Duration"],
        "lexical_units": ["rain.v", "rain.n", "snow.v", "snow.n", "drizzle.v", "hail.v"],
        "examples": ["It rained all night."],
    },
    {
        "name": "Quarreling",
        "definition": "Arguers engage in a verbal dispute about an Issue.",
        "core_roles": ["Arguers", "Arguer1", "Arguer2", "Issue"],
        "non_core_roles": ["Manner", "Place", "Time"],
        "lexical_units": ["quarrel.v", "quarrel.n", "argue.v", "argument.n", "bicker.v", "row.n"],
        "examples": ["The couple quarreled all night."],
    },
    {
        "name": "Rape",
        "definition": "A Perpetrator sexually violates a Victim.",
        "core_roles": ["Perpetrator", "Victim"],
        "non_core_roles": ["Manner", "Place", "Time"],
        "lexical_units": ["rape.v", "rape.n", "violate.v"],
        "examples": ["He was convicted of rape."],
    },
    {
        "name": "Self_motion",
        "definition": "A Self_mover moves under their own power along a Path towards a Goal.",
        "core_roles": ["Self_mover", "Source", "Path", "Goal", "Direction", "Area"],
        "non_core_roles": ["Manner", "Speed", "Place", "Time"],
        "lexical_units": ["walk.v", "run.v", "swim.v", "stroll.v", "march.v", "hike.v", "crawl.v"],
        "examples": ["The girl walked to school."],
    },
    {
        "name": "Transitive_action",
        "definition": "Abstract frame for acts in which an Agent or Cause affects a Patient.",
        "core_roles": ["Agent", "Cause", "Patient", "Event"],
        "non_core_roles": ["Manner", "Place", "Time"],
        "lexical_units": [],
        "examples": [],
    },
    {
        "name": "Use_firearm",
        "definition": "An Agent discharges a Firearm, possibly at a Goal.",
        "core_roles": ["Agent", "Firearm", "Goal"],
        "non_core_roles": ["Manner", "Place", "Time"],
        "lexical_units": ["fire.v", "shoot.v", "discharge.v", "let off.v"],
        "examples": ["He fired the gun twice into the air."],
    },
]

# Frame-to-frame relations present in FrameNet 1.7 between the frames above.
RELATIONS = [
    ("Causative_of", "Cause_impact", "Impact"),
    ("Causative_of", "Killing", "Death"),
    ("Causative_of", "Cause_motion", "Motion"),
    ("Inchoative_of", "Death", "Dead_or_alive"),
    ("Inheritance", "Transitive_action", "Killing"),
    ("See_also", "Cause_harm", "Experience_bodily_harm"),
]

# Agentivity classes: active frames entail an Agent-like participant,
# non-active ones only a Patient-like participant, no_participant frames
# entail neither (their verbal uses read as impersonal).
AGENTIVITY = {
    "Abusing": "active",
    "Arrest": "active",
    "Attack": "active",
    "Catastrophe": "non_active",
    "Causation": "active",
    "Cause_harm": "active",
    "Cause_impact": "active",
    "Cause_motion": "active",
    "Dead_or_alive": "non_active",
    "Death": "non_active",
    "Emotion_directed": "non_active",
    "Event": "no_participant",
    "Experience_bodily_harm": "active",
    "Hit_target": "active",
    "Impact": "non_active",
    "Killing": "active",
    "Locating": "active",
    "Motion": "non_active",
    "Motion_directional": "non_active",
    "Precipitation": "no_participant",
    "Quarreling": "active",
    "Rape": "active",
    "Self_motion": "active",
    "Transitive_action": "active",
    "Use_firearm": "active",
}

# frame -> (perpetrator-like roles, victim-like role, cause-like role).
ROLE_MAPPINGS = [
    ("Abusing", "Abuser", "Victim", "-"),
    ("Attack", "Assailant", "Victim", "-"),
    ("Causation", "Causer", "Affected", "Cause"),
    ("Cause_harm", "Agent", "Victim", "Cause"),
    ("Cause_motion", "-", "-", "-"),
    ("Dead_or_alive", "-", "Protagonist", "Explanation"),
    ("Death", "-", "Protagonist", "Cause"),
    ("Emotion_directed", "-", "-", "-"),
    ("Event", "-", "-", "-"),
    ("Experience_bodily_harm", "Experiencer|Body_part", "-", "-"),
    ("Hit_target", "Agent", "Target", "-"),
    ("Killing", "Killer", "Victim", "Cause"),
    ("Quarreling", "-", "-", "-"),
    ("Rape", "Perpetrator", "Victim", "-"),
    ("Use_firearm", "Agent", "Goal", "-"),
]


def word_vector(word, dim=VECTOR_DIM):
    """Deterministic pseudo-vector for a word, seeded from its SHA-256 hash."""
    digest = hashlib.sha256(word.encode("utf-8")).digest()
    seed = int.from_bytes(digest[:8], "big")
    rng = np.random.default_rng(seed)
    return rng.standard_normal(dim)


def lu_vector_words():
    words = set()
    for frame in FRAMES:
        for lu in frame["lexical_units"]:
            base = lu.rsplit(".", 1)[0]
            for word in base.replace("_", " ").split(" "):
                words.add(word.lower())
    return sorted(words)


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    with open(DATA_DIR / "kb.jsonl", "w", encoding="utf-8") as out:
        for frame in sorted(FRAMES, key=lambda f: f["name"]):
            record = {
                "type": "frame",
                "name": frame["name"],
                "definition": frame["definition"],
                "core_roles": frame["core_roles"],
                "non_core_roles": frame["non_core_roles"],
                "lexical_units": frame["lexical_units"],
                "examples": frame["examples"],
            }
            out.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
        for rel_type, parent, child in RELATIONS:
            record = {"type": "relation", "relation": rel_type, "parent": parent, "child": child}
            out.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")

    with open(DATA_DIR / "agentivity.tsv", "w", encoding="utf-8") as out:
        out.write("# frame\tagentivity class (active | non_active | no_participant)\n")
        for frame, cls in sorted(AGENTIVITY.items()):
            out.write(f"{frame}\t{cls}\n")

    with open(DATA_DIR / "role_mappings.tsv", "w", encoding="utf-8") as out:
        out.write("# frame\tperpetrator_like\tvictim_like\tcause_like ('-' = absent, '|' separates alternatives)\n")
        for row in ROLE_MAPPINGS:
            out.write("\t".join(row) + "\n")

    with open(DATA_DIR / "vectors_toy.txt", "w", encoding="utf-8") as out:
        for word in lu_vector_words():
            values = " ".join(f"{v:.6f}" for v in word_vector(word))
            out.write(f"{word} {values}\n")

    print(f"wrote kb.jsonl ({len(FRAMES)} frames, {len(RELATIONS)} relations), "
          f"agentivity.tsv, role_mappings.tsv, vectors_toy.txt under {DATA_DIR}")


if __name__ == "__main__":
    main()
