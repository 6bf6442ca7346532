"""A guided walk over the bundled mini corpus.

Run with: python3 demos/explore_corpus.py

The corpus is synthetic femicide-domain news coverage: 100 documents, each
linked to one of 30 structured events. Everything printed here is also
reachable through the CLI and the HTTP service; this script uses the
library directly.
"""

from framelens.corpus import load_corpus
from framelens.data import bundled_kb, mini_corpus_paths
from framelens.stats import (
    CorpusFilter,
    FeatureQuery,
    construction_by_frame,
    focus_scores,
    foregrounding_share,
    frame_frequencies,
    role_link_frequencies,
    sample_sentences,
    time_lag_histogram,
)
from framelens.syntax import analyze_corpus

# Load and analyze. The KB supplies frame definitions, agentivity classes,
# and the role mapping; analysis attaches a construction label, role paths,
# and a root-status flag to every frame instance.
kb = bundled_kb()
corpus = load_corpus(*mini_corpus_paths(), kb=kb)
analyzed = analyze_corpus(corpus, kb)
print(f"{len(corpus.documents)} documents, {len(corpus.events)} events")

# Which frames does the coverage use, and how often?
freq = frame_frequencies(analyzed)
print("\ntop frames:")
for frame in sorted(freq, key=freq.get, reverse=True)[:5]:
    print(f"  {frame:24s} {freq[frame]:4d}")

# The same counts split by syntactic construction. A frame that mostly
# shows up as vrb_passive or vrb_unaccusative is packaging the event
# without an agent in subject position.
table = construction_by_frame(analyzed)
print("\nKilling by construction:")
for construction, count in sorted(table["Killing"].items(), key=lambda kv: -kv[1]):
    print(f"  {construction:18s} {count:4d}")

# Role-dependency links show where each participant sits relative to the
# trigger. "*" means the role span contains the trigger itself; "nsubj↓"
# is the trigger's own subject.
print("\nmost common Killing role links:")
links = role_link_frequencies(analyzed, "Killing")
flat = [(f"{role}:{path}", n) for role, row in links.items() for path, n in row.items()]
for label, count in sorted(flat, key=lambda kv: -kv[1])[:5]:
    print(f"  {label:22s} {count:4d}")

# The headline statistic: in what share of a frame's instances is the
# victim foregrounded (agentless construction, or victim in subject-or-self
# position with no perpetrator there)?
for frame in ("Killing", "Death"):
    share, total = foregrounding_share(analyzed, frame, kb)
    print(f"\n{frame}: victim foregrounded in {share:.0%} of {total} instances")

# Filters are structured predicates over document and event metadata.
north = CorpusFilter.from_payload(
    {"event_predicates": [{"key": "region", "op": "eq", "value": "north"}]}
)
share, total = foregrounding_share(analyzed, "Killing", kb, north)
print(f"Killing, northern events only: {share:.0%} of {total}")

# How long after the event does coverage appear, per frame?
histogram = time_lag_histogram(analyzed, ["Killing", "Death"], bucket_days=7)
print("\npublication lag (weeks) for Killing vs Death:")
for start, counts in histogram.buckets:
    killing, death = counts.get("Killing", 0), counts.get("Death", 0)
    print(f"  week {start // 7}: Killing {killing:3d}  Death {death:3d}")

# Qualitative check: pull a reproducible sample of passive Killing
# sentences. Same seed, same sentences, byte for byte.
query = FeatureQuery.from_payload({"frame": "Killing", "construction": "vrb_passive"})
for match in sample_sentences(analyzed, query, n=3, seed=7):
    print(f"\n  [{match.doc_id}/{match.sent_id}] {match.text}")

# The bundled survey table says how strongly readers perceive each
# participant given the frame and construction; compare the scores for the
# two packagings of a killing.
print("\nperceived focus (0-5), murderer vs victim:")
for construction in ("vrb_active", "vrb_passive"):
    scores = focus_scores("Killing", construction)
    print(
        f"  Killing/{construction:12s} murderer {scores['murderer']:.2f} "
        f"victim {scores['victim']:.2f}"
    )
