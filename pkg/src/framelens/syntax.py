"""Syntactic perspective analysis of frame instances.

Three pieces of information are derived for every frame instance from the
dependency tree and the frame KB: the syntactic construction evoking the
frame, a dependency-path link for each annotated role, and whether the
trigger occupies the root (or subject-of-root) position of the sentence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AnalysisError, KBError
from .kb import Agentivity

UP = "↑"    # upward step marker in rendered paths
DOWN = "↓"  # downward step marker
STEP_SEP = "--"
SELF_PATH = "*"
UNRESOLVED_PATH = "?"

VERBAL_POS = frozenset(["VERB", "AUX"])
SUBJECT_DEPRELS = frozenset(["nsubj", "nsubj:pass"])


class Construction(str, Enum):
    """Syntactic construction types, in increasing participant foregrounding."""

    NONVERBAL = "nonverbal"
    VRB_IMPERSONAL = "vrb_impersonal"
    VRB_UNACCUSATIVE = "vrb_unaccusative"
    VRB_PASSIVE = "vrb_passive"
    VRB_ACTIVE = "vrb_active"
    OTHER = "other"


CONSTRUCTIONS = tuple(c.value for c in Construction)


@dataclass(frozen=True)
class RoleDependencyLink:
    """How a role span sits in the tree relative to the frame trigger.

    The path is "*" when the trigger head falls inside the role span, "?"
    when no span token was reachable within the step budget, and otherwise a
    "--"-joined step sequence: "↑" walks to the head, "<deprel>↓" walks to a
    dependent carrying that relation.
    """

    role: str
    path: str
    resolved: bool

    @property
    def label(self):
        """The display form used in the paper's examples, e.g. "Killer:*"."""
        return f"{self.role}:{self.path}"


@dataclass(frozen=True)
class PerspectiveAnnotation:
    instance_id: str
    frame: str
    construction: Construction
    role_links: tuple[RoleDependencyLink, ...]
    is_root: bool
    trigger_head_token: int


def trigger_head(sentence, trigger):
    """The span-internal tree root of a trigger range: minimal depth, leftmost.

    Its head necessarily lies outside the span, so it is the token through
    which the whole trigger attaches to the rest of the tree.
    """
    candidates = range(trigger.start + 1, trigger.end + 1)  # 1-based indices
    return min(candidates, key=lambda idx: (sentence.depth(idx), idx))


def _has_child(sentence, index, deprel, base=False):
    for child in sentence.children(index):
        tok = sentence.token(child)
        if (tok.base_deprel if base else tok.deprel) == deprel:
            return True
    return False


def _passive_evidence(sentence, head):
    tok = sentence.token(head)
    return (
        _has_child(sentence, head, "aux:pass")
        or _has_child(sentence, head, "nsubj:pass")
        or tok.feat("Voice") == "Pass"
    )


def _is_finite(sentence, head):
    if sentence.token(head).feat("VerbForm") == "Fin":
        return True
    for child in sentence.children(head):
        tok = sentence.token(child)
        if tok.base_deprel == "aux" and tok.feat("VerbForm") == "Fin":
            return True
    return False


def classify_construction(sentence, instance, kb):
    """Label the construction of one frame instance.

    The cascade: a non-verbal trigger head is nonverbal regardless of the
    frame; verbal triggers split by the frame's agentivity class (impersonal
    for participant-less frames, unaccusative for non-active ones); active
    frames resolve to passive on passive evidence, to active on finiteness or
    an overt subject, and to "other" for the bare-infinitive/participial
    residue.
    """
    agentivity = kb.agentivity(instance.frame)  # raises on unknown frame
    head = trigger_head(sentence, instance.trigger)
    tok = sentence.token(head)
    if tok.upos not in VERBAL_POS:
        return Construction.NONVERBAL
    if agentivity is Agentivity.NO_PARTICIPANT:
        return Construction.VRB_IMPERSONAL
    if agentivity is Agentivity.NON_ACTIVE:
        return Construction.VRB_UNACCUSATIVE
    if _passive_evidence(sentence, head):
        return Construction.VRB_PASSIVE
    if _is_finite(sentence, head) or _has_child(sentence, head, "nsubj", base=True):
        return Construction.VRB_ACTIVE
    return Construction.OTHER


def _steps_to(sentence, start, target):
    """Render the unique tree path start -> target as a list of step strings."""
    start_chain = []  # start and its ancestors, bottom-up
    node = start
    while node != 0:
        start_chain.append(node)
        node = sentence.token(node).head
    target_chain = []
    node = target
    while node != 0:
        target_chain.append(node)
        node = sentence.token(node).head
    common = None
    target_ancestors = {n: i for i, n in enumerate(target_chain)}
    for i, node in enumerate(start_chain):
        if node in target_ancestors:
            common = (i, target_ancestors[node])
            break
    ups, downs = common
    steps = [UP] * ups
    # Walk down from the meeting point towards the target.
    for node in reversed(target_chain[:downs]):
        steps.append(f"{sentence.token(node).deprel}{DOWN}")
    return steps


def render_path(steps):
    return STEP_SEP.join(steps)


def parse_path(path):
    """Inverse of render_path for resolved, non-self paths.

    Returns a list of ("up", None) / ("down", deprel) pairs.
    """
    if path in (SELF_PATH, UNRESOLVED_PATH):
        raise ValueError(f"{path!r} does not encode a step sequence")
    steps = []
    for piece in path.split(STEP_SEP):
        if piece == UP:
            steps.append(("up", None))
        elif piece.endswith(DOWN) and len(piece) > 1:
            steps.append(("down", piece[: -len(DOWN)]))
        else:
            raise ValueError(f"malformed path step {piece!r}")
    return steps


def _path_key(steps):
    ups = sum(1 for s in steps if s == UP)
    return (len(steps), ups, render_path(steps))


def role_dependency_links(sentence, instance, max_steps=3):
    """One RoleDependencyLink per annotated role, in role order.

    For each role the traversal starts at the trigger head and stops at the
    first role-span token. Among span tokens at equal distance the path with
    fewer upward steps wins, then the lexicographically smaller rendering.
    Paths longer than ``max_steps`` come back unresolved.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    head = trigger_head(sentence, instance.trigger)
    links = []
    for role in instance.roles:
        if head - 1 in role.span:  # span positions are 0-based
            links.append(RoleDependencyLink(role=role.name, path=SELF_PATH, resolved=True))
            continue
        best = None
        for position in range(role.span.start, role.span.end):
            steps = _steps_to(sentence, head, position + 1)
            if len(steps) > max_steps:
                continue
            key = _path_key(steps)
            if best is None or key < best:
                best = key
        if best is None:
            links.append(RoleDependencyLink(role=role.name, path=UNRESOLVED_PATH, resolved=False))
        else:
            links.append(RoleDependencyLink(role=role.name, path=best[2], resolved=True))
    return links


def root_status(sentence, instance, construction):
    """Whether the trigger occupies the sentence's most prominent position.

    Verbal constructions count as root when the trigger head is the tree
    root; nonverbal ones when it is the subject of the root, or is itself the
    root (copular and fragment sentences).
    """
    head = trigger_head(sentence, instance.trigger)
    tok = sentence.token(head)
    if construction is not Construction.NONVERBAL:
        return tok.head == 0
    if tok.head == 0:
        return True
    return tok.deprel in SUBJECT_DEPRELS and sentence.token(tok.head).head == 0


def analyze_instance(sentence, instance, kb, max_steps=3):
    construction = classify_construction(sentence, instance, kb)
    links = role_dependency_links(sentence, instance, max_steps=max_steps)
    return PerspectiveAnnotation(
        instance_id=instance.instance_id,
        frame=instance.frame,
        construction=construction,
        role_links=tuple(links),
        is_root=root_status(sentence, instance, construction),
        trigger_head_token=trigger_head(sentence, instance.trigger),
    )


@dataclass(frozen=True)
class AnalyzedCorpus:
    """A corpus plus one PerspectiveAnnotation per successfully analyzed instance."""

    corpus: object
    annotations: dict  # instance_id -> PerspectiveAnnotation
    failures: tuple[tuple[str, str], ...]  # (instance_id, message)
    max_steps: int = 3

    def annotation(self, instance_id):
        try:
            return self.annotations[instance_id]
        except KeyError:
            raise AnalysisError(f"no annotation for instance {instance_id!r}")


def analyze_corpus(corpus, kb, max_steps=3):
    """Analyze every frame instance; a bad instance is reported, not fatal.

    Documents are processed in corpus order so results are deterministic.
    Re-running on an already analyzed corpus yields identical annotations.
    """
    annotations = {}
    failures = []
    for doc in corpus.documents:
        sentences = {s.sent_id: s for s in doc.sentences}
        for instance in doc.frame_instances:
            try:
                sentence = sentences[instance.sent_id]
                annotations[instance.instance_id] = analyze_instance(
                    sentence, instance, kb, max_steps=max_steps
                )
            except (KBError, KeyError, ValueError) as exc:
                failures.append((instance.instance_id, str(exc)))
    return AnalyzedCorpus(
        corpus=corpus,
        annotations=annotations,
        failures=tuple(failures),
        max_steps=max_steps,
    )


def annotation_to_record(annotation):
    """The line-delimited export record consumed by the stats layer and the UI."""
    return {
        "instance_id": annotation.instance_id,
        "frame": annotation.frame,
        "construction": annotation.construction.value,
        "is_root": annotation.is_root,
        "role_links": [
            {"role": link.role, "path": link.path, "resolved": link.resolved}
            for link in annotation.role_links
        ],
    }


def annotation_from_record(record):
    return PerspectiveAnnotation(
        instance_id=record["instance_id"],
        frame=record["frame"],
        construction=Construction(record["construction"]),
        role_links=tuple(
            RoleDependencyLink(role=r["role"], path=r["path"], resolved=r["resolved"])
            for r in record["role_links"]
        ),
        is_root=record["is_root"],
        trigger_head_token=record.get("trigger_head_token", 0),
    )


def analysis_to_payload(analyzed):
    """Persisted-index representation of an analysis run.

    Index records carry the trigger head on top of the export fields so a
    reloaded analysis is complete.
    """
    return {
        "max_steps": analyzed.max_steps,
        "failures": [list(f) for f in analyzed.failures],
        "annotations": {
            iid: dict(annotation_to_record(ann), trigger_head_token=ann.trigger_head_token)
            for iid, ann in analyzed.annotations.items()
        },
    }


def analysis_from_payload(corpus, payload):
    return AnalyzedCorpus(
        corpus=corpus,
        annotations={
            iid: annotation_from_record(rec)
            for iid, rec in payload["annotations"].items()
        },
        failures=tuple((f[0], f[1]) for f in payload.get("failures", [])),
        max_steps=payload.get("max_steps", 3),
    )


def open_analyzed(path, kb, max_steps=3):
    """Load a saved index; reuse its stored analysis, else analyze now.

    Either way the result is the same: analysis is a deterministic function
    of the corpus, so the stored section is just a cache.
    """
    from .corpus import corpus_from_payload, read_corpus_payload

    payload = read_corpus_payload(path)
    corpus = corpus_from_payload(payload, where=str(path))
    if "analysis" in payload:
        return analysis_from_payload(corpus, payload["analysis"])
    return analyze_corpus(corpus, kb, max_steps=max_steps)
