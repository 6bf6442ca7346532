"""Independent reference implementations the real code is tested against.

These deliberately use different algorithms (breadth-first search over the
undirected tree, plain-Python float arithmetic, set-based graph expansion)
so shared bugs with the library are unlikely.
"""

from __future__ import annotations

import math
from collections import deque


def tree_path_steps(sentence, start, target):
    """Steps of the unique tree path start -> target via breadth-first search.

    Edges are walked in both directions; an up-step renders "↑", a down-step
    into node c renders "<deprel(c)>↓". Returns a list of rendered steps.
    """
    neighbors = {tok.index: [] for tok in sentence.tokens}
    for tok in sentence.tokens:
        if tok.head != 0:
            neighbors[tok.index].append((tok.head, "↑"))
            neighbors[tok.head].append((tok.index, f"{tok.deprel}↓"))
    seen = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node == target:
            break
        for other, step in neighbors[node]:
            if other not in seen:
                seen[other] = (node, step)
                queue.append(other)
    steps = []
    node = target
    while node != start:
        node, step = seen[node]
        steps.append(step)
    steps.reverse()
    return steps


def best_role_path(sentence, trigger_head, span, max_steps):
    """(path, resolved) for a role span per the declared selection rule.

    Candidates are the tree paths from the trigger head to each span token;
    the winner minimizes (length, up-steps, rendered string). The trigger
    head inside the span short-circuits to "*"; no candidate within
    max_steps yields ("?", False).
    """
    if trigger_head - 1 in range(span.start, span.end):
        return "*", True
    candidates = []
    for position in range(span.start, span.end):
        steps = tree_path_steps(sentence, trigger_head, position + 1)
        if len(steps) <= max_steps:
            rendered = "--".join(steps)
            ups = sum(1 for s in steps if s == "↑")
            candidates.append((len(steps), ups, rendered))
    if not candidates:
        return "?", False
    return min(candidates)[2], True


def brute_frame_vector(kb, store, frame, lu_words):
    """Frame embedding via plain-Python accumulation (no numpy reductions)."""
    dim = store.dimension
    total = [0.0] * dim
    count = 0
    for lu_name, _ in kb.frames[frame].lexical_units:
        for word in lu_words(lu_name):
            vec = store.lookup(word)
            if vec is None:
                continue
            for i in range(dim):
                total[i] += float(vec[i])
            count += 1
    if count == 0:
        return None
    return [v / count for v in total]


def brute_cosine_distance(u, v):
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    return 1.0 - dot / (nu * nv)


def brute_keyword_ranking(keywords, store, kb, lu_words, top_n):
    """Full search pipeline recomputed with list arithmetic; ties by name."""
    found = [store.lookup(k) for k in keywords]
    found = [v for v in found if v is not None]
    dim = store.dimension
    centroid = [sum(float(v[i]) for v in found) / len(found) for i in range(dim)]
    ranked = []
    for name in sorted(kb.frames):
        vector = brute_frame_vector(kb, store, name, lu_words)
        if vector is None:
            continue
        ranked.append((name, brute_cosine_distance(centroid, vector)))
    ranked.sort(key=lambda item: (item[1], item[0]))
    return ranked[:top_n]


def brute_alternatives(kb, frames, whitelist, hops):
    """Set expansion over the relation graph, one hop at a time."""
    edges = set()
    for rel in kb.relations:
        if rel.type in whitelist:
            edges.add((rel.parent, rel.child))
            edges.add((rel.child, rel.parent))
    reached = set(frames)
    for _ in range(hops):
        reached |= {b for a, b in edges if a in reached}
    return sorted(reached)
