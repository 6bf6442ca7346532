"""Finding the right frames for a new analysis question.

Run with: python3 demos/frame_discovery.py

Scenario: you want to study how news items frame road deaths. You know
some keywords but not the frame inventory. This walk mirrors the wizard
flow of the explorer UI: keyword search, then relation-based expansion,
then on-demand analysis of a parsed example.
"""

from framelens.conllu import parse_conllu, sentence_to_record
from framelens.data import bundled_kb, bundled_vectors_path
from framelens.discovery import embed_frames, keyword_search, load_word_vectors, suggestion_payload
from framelens.service import analyze_payload

kb = bundled_kb()

# Frames are embedded as the mean vector of their lexical units' words, so
# keyword proximity in vector space surfaces candidate frames.
store = load_word_vectors(bundled_vectors_path())
embeddings = embed_frames(kb, store)

ranked = keyword_search(["crash", "collision", "collide"], store, embeddings, top_n=3)
print("closest frames to {crash, collision, collide}:")
for detail, (_, distance) in zip(suggestion_payload(ranked, kb), ranked):
    print(f"  {detail['frame']:16s} d={distance:.3f}  {detail['definition'][:60]}")

# Suppose you accept Impact. A frame rarely comes alone: FrameNet relations
# link it to frames presenting the same situation from other viewpoints.
# The default whitelist walks Perspective_on, Causative_of, Inchoative_of.
expanded = kb.alternatives(["Impact"])
print(f"\nalternatives of Impact: {expanded}")
# Cause_impact is the agentive counterpart: "X hit Y" vs "X and Y collided".
# Analyzing both frames together is what catches framing differences.

# Finally, run the analyzer on a pre-parsed pair of example sentences.
# In production this body comes from your frame parser via
# scripts/adapt_parser_output.py; here we build it by hand.
PAIR = """\
# sent_id = a
# text = The collision killed two cyclists
1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_
2\tcollision\tcollision\tNOUN\t_\tNumber=Sing\t3\tnsubj\t_\t_
3\tkilled\tkill\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_
4\ttwo\ttwo\tNUM\t_\t_\t5\tnummod\t_\t_
5\tcyclists\tcyclist\tNOUN\t_\tNumber=Plur\t3\tobj\t_\t_

# sent_id = b
# text = A driver hit two cyclists
1\tA\ta\tDET\t_\t_\t2\tdet\t_\t_
2\tdriver\tdriver\tNOUN\t_\tNumber=Sing\t3\tnsubj\t_\t_
3\thit\thit\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_
4\ttwo\ttwo\tNUM\t_\t_\t5\tnummod\t_\t_
5\tcyclists\tcyclist\tNOUN\t_\tNumber=Plur\t3\tobj\t_\t_
"""

instances = {
    "a": [
        {"sent_id": "a", "frame": "Impact",
         "trigger": {"start": 1, "end": 2},
         "roles": [{"name": "Impactors", "start": 1, "end": 2}]},
        {"sent_id": "a", "frame": "Killing",
         "trigger": {"start": 2, "end": 3},
         "roles": [{"name": "Cause", "start": 0, "end": 2},
                   {"name": "Victim", "start": 3, "end": 5}]},
    ],
    "b": [
        {"sent_id": "b", "frame": "Cause_impact",
         "trigger": {"start": 2, "end": 3},
         "roles": [{"name": "Agent", "start": 0, "end": 2},
                   {"name": "Impactee", "start": 3, "end": 5}]},
    ],
}

sentences = []
for _, sentence in parse_conllu(PAIR):
    record = sentence_to_record(sentence)
    record["instances"] = instances[sentence.sent_id]
    sentences.append(record)

result = analyze_payload({"sentences": sentences}, kb)
print("\nanalysis of the example pair:")
for sent in result["sentences"]:
    print(f"  {sent['text']}")
    for inst in sent["instances"]:
        ann = inst["annotation"]
        links = ", ".join(f"{l['role']}:{l['path']}" for l in ann["role_links"]) or "no roles"
        print(f"    {inst['frame']:14s} {ann['construction']:16s} {links}")

# Same event, different packaging: the collision sentence hides the driver
# entirely (the trigger has no agent role), while "hit" puts the driver in
# subject position. That contrast is the whole point of perspective
# analysis.
