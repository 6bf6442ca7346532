import random

import pytest

from framelens.annotations import FrameInstance, RoleSpan, Span
from framelens.conllu import parse_conllu
from framelens.syntax import (
    Construction,
    analyze_corpus,
    analyze_instance,
    annotation_from_record,
    annotation_to_record,
    classify_construction,
    parse_path,
    render_path,
    role_dependency_links,
    root_status,
    trigger_head,
)

from gen import random_span, random_tree
from oracles import best_role_path


def _sentence(block):
    [(_, sentence)] = parse_conllu("# sent_id = s1\n" + block)
    return sentence


def _instance(frame, trigger, roles=()):
    return FrameInstance(
        instance_id="t:s1:0",
        sent_id="s1",
        frame=frame,
        trigger=Span(*trigger),
        roles=tuple(RoleSpan(name=n, span=Span(a, b)) for n, a, b in roles),
    )


# "the brutal murder of MLK": nominal trigger, role attached below it.
NOMINAL = _sentence(
    "1\tthe\tthe\tDET\t_\t_\t3\tdet\t_\t_\n"
    "2\tbrutal\tbrutal\tADJ\t_\t_\t3\tamod\t_\t_\n"
    "3\tmurder\tmurder\tNOUN\t_\t_\t0\troot\t_\t_\n"
    "4\tof\tof\tADP\t_\t_\t5\tcase\t_\t_\n"
    "5\tMLK\tMLK\tPROPN\t_\t_\t3\tnmod\t_\t_\n"
)

# "She was killed by him": passive with all three evidence kinds present.
PASSIVE = _sentence(
    "1\tShe\tshe\tPRON\t_\t_\t3\tnsubj:pass\t_\t_\n"
    "2\twas\tbe\tAUX\t_\tVerbForm=Fin\t3\taux:pass\t_\t_\n"
    "3\tkilled\tkill\tVERB\t_\tTense=Past|VerbForm=Part|Voice=Pass\t0\troot\t_\t_\n"
    "4\tby\tby\tADP\t_\t_\t5\tcase\t_\t_\n"
    "5\thim\the\tPRON\t_\t_\t3\tobl:agent\t_\t_\n"
)

# "He killed her": plain finite transitive.
ACTIVE = _sentence(
    "1\tHe\the\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
    "2\tkilled\tkill\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_\n"
    "3\ther\tshe\tPRON\t_\t_\t2\tobj\t_\t_\n"
)


class TestTriggerHead:
    def test_single_token(self):
        assert trigger_head(NOMINAL, Span(2, 3)) == 3

    def test_minimal_depth_wins(self):
        # span "brutal murder": murder (depth 0) beats brutal (depth 1)
        assert trigger_head(NOMINAL, Span(1, 3)) == 3

    def test_leftmost_breaks_depth_ties(self):
        # span "the brutal": both depth 1 under murder
        assert trigger_head(NOMINAL, Span(0, 2)) == 1

    def test_head_of_trigger_lies_outside_span(self):
        rng = random.Random(4242)
        for _ in range(200):
            sentence = random_tree(rng, rng.randint(2, 10))
            span = random_span(rng, len(sentence), max_len=4)
            head = trigger_head(sentence, span)
            assert sentence.token(head).head - 1 not in span


class TestConstructionCascade:
    def test_nonverbal_trumps_agentivity(self, kb):
        # Killing is an active frame, but the nominal trigger decides.
        inst = _instance("Killing", (2, 3))
        assert classify_construction(NOMINAL, inst, kb) is Construction.NONVERBAL

    def test_impersonal_for_no_participant_frames(self, kb):
        sentence = _sentence(
            "1\tIt\tit\tPRON\t_\t_\t2\texpl\t_\t_\n"
            "2\trained\train\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_\n"
        )
        inst = _instance("Precipitation", (1, 2))
        assert classify_construction(sentence, inst, kb) is Construction.VRB_IMPERSONAL

    def test_unaccusative_for_non_active_frames(self, kb):
        sentence = _sentence(
            "1\tShe\tshe\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
            "2\tdied\tdie\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_\n"
        )
        inst = _instance("Death", (1, 2))
        assert classify_construction(sentence, inst, kb) is Construction.VRB_UNACCUSATIVE

    @pytest.mark.parametrize("drop", ["aux", "subj", "feat"])
    def test_any_single_passive_evidence_suffices(self, kb, drop):
        aux = "2\twas\tbe\tAUX\t_\tVerbForm=Fin\t3\taux:pass\t_\t_\n"
        subj = "1\tShe\tshe\tPRON\t_\t_\t3\tnsubj:pass\t_\t_\n"
        feats = "Voice=Pass"
        if drop == "aux":
            aux = "2\twas\tbe\tAUX\t_\tVerbForm=Fin\t3\taux\t_\t_\n"
        if drop == "subj":
            subj = "1\tShe\tshe\tPRON\t_\t_\t3\tobl\t_\t_\n"
        if drop == "feat":
            feats = "Tense=Past"
        sentence = _sentence(
            subj + aux + f"3\tkilled\tkill\tVERB\t_\t{feats}\t0\troot\t_\t_\n"
        )
        inst = _instance("Killing", (2, 3))
        assert classify_construction(sentence, inst, kb) is Construction.VRB_PASSIVE

    def test_active_finite(self, kb):
        inst = _instance("Killing", (1, 2))
        assert classify_construction(ACTIVE, inst, kb) is Construction.VRB_ACTIVE

    def test_active_via_finite_aux_child(self, kb):
        sentence = _sentence(
            "1\tHe\the\tPRON\t_\t_\t3\tnsubj\t_\t_\n"
            "2\thas\thave\tAUX\t_\tVerbForm=Fin\t3\taux\t_\t_\n"
            "3\tkilled\tkill\tVERB\t_\tTense=Past|VerbForm=Part\t0\troot\t_\t_\n"
        )
        inst = _instance("Killing", (2, 3))
        assert classify_construction(sentence, inst, kb) is Construction.VRB_ACTIVE

    def test_other_for_bare_nonfinite(self, kb):
        sentence = _sentence(
            "1\tkilling\tkill\tVERB\t_\tVerbForm=Ger\t0\troot\t_\t_\n"
            "2\ttime\ttime\tNOUN\t_\t_\t1\tobj\t_\t_\n"
        )
        inst = _instance("Killing", (0, 1))
        assert classify_construction(sentence, inst, kb) is Construction.OTHER


class TestRolePaths:
    def test_star_when_trigger_head_in_span(self):
        inst = _instance("Killing", (2, 3), [("Killer", 0, 3)])
        [link] = role_dependency_links(NOMINAL, inst)
        assert (link.path, link.resolved, link.label) == ("*", True, "Killer:*")

    def test_single_down_step_uses_full_deprel(self):
        inst = _instance("Killing", (2, 3), [("Victim", 4, 5)])
        [link] = role_dependency_links(NOMINAL, inst)
        assert link.label == "Victim:nmod↓"

    def test_passive_agent_path(self):
        inst = _instance("Killing", (2, 3), [("Killer", 3, 5), ("Victim", 0, 1)])
        links = role_dependency_links(PASSIVE, inst)
        assert [l.label for l in links] == ["Killer:obl:agent↓", "Victim:nsubj:pass↓"]

    def test_up_then_down(self):
        # trigger "MLK", role span "the brutal": up to murder, then down to
        # either span token; amod↓ wins the tie lexicographically over det↓
        inst = _instance("Killing", (4, 5), [("Killer", 0, 2)])
        [link] = role_dependency_links(NOMINAL, inst)
        assert link.path == "↑--amod↓"

    def test_unresolved_beyond_max_steps(self):
        chain = _sentence(
            "1\ta\ta\tNOUN\t_\t_\t2\tnmod\t_\t_\n"
            "2\tb\tb\tNOUN\t_\t_\t3\tnmod\t_\t_\n"
            "3\tc\tc\tNOUN\t_\t_\t4\tnmod\t_\t_\n"
            "4\td\td\tNOUN\t_\t_\t5\tnmod\t_\t_\n"
            "5\te\te\tNOUN\t_\t_\t0\troot\t_\t_\n"
        )
        inst = _instance("Event", (0, 1), [("Event", 4, 5)])
        [link] = role_dependency_links(chain, inst, max_steps=3)
        assert (link.path, link.resolved) == ("?", False)
        [link] = role_dependency_links(chain, inst, max_steps=4)
        assert (link.path, link.resolved) == ("↑--↑--↑--↑", True)

    def test_max_steps_must_be_positive(self):
        inst = _instance("Killing", (2, 3), [("Victim", 4, 5)])
        with pytest.raises(ValueError, match="max_steps"):
            role_dependency_links(NOMINAL, inst, max_steps=0)

    def test_fewer_ups_break_length_ties(self):
        # From "killed": him is obl:agent↓ (0 ups), She is nsubj:pass↓; a
        # two-token span covering both "was" and "by" prefers the down-step
        # only when ups differ; built directly on the paper-style tree.
        inst = _instance("Killing", (2, 3), [("Place", 1, 2)])
        [link] = role_dependency_links(PASSIVE, inst)
        assert link.path == "aux:pass↓"

    def test_matches_bfs_oracle_on_random_trees(self):
        rng = random.Random(90125)
        agree = 0
        for _ in range(300):
            sentence = random_tree(rng, rng.randint(2, 12))
            n = len(sentence)
            trigger = random_span(rng, n, max_len=2)
            role_span = random_span(rng, n, max_len=4)
            max_steps = rng.randint(1, 4)
            inst = _instance(
                "Event",
                (trigger.start, trigger.end),
                [("R", role_span.start, role_span.end)],
            )
            [link] = role_dependency_links(sentence, inst, max_steps=max_steps)
            head = trigger_head(sentence, trigger)
            want_path, want_resolved = best_role_path(
                sentence, head, inst.roles[0].span, max_steps
            )
            assert (link.path, link.resolved) == (want_path, want_resolved), (
                sentence, trigger, role_span, max_steps
            )
            agree += 1
        assert agree == 300


class TestPathRendering:
    def test_round_trip(self):
        steps = ["↑", "nsubj↓", "obl:agent↓"]
        assert parse_path(render_path(steps)) == [
            ("up", None),
            ("down", "nsubj"),
            ("down", "obl:agent"),
        ]

    @pytest.mark.parametrize("bad", ["*", "?", "nsubj", "↓", "↑--"])
    def test_rejects_non_step_strings(self, bad):
        with pytest.raises(ValueError):
            parse_path(bad)


class TestRootStatus:
    def test_verbal_root(self, kb):
        inst = _instance("Killing", (1, 2))
        ann = analyze_instance(ACTIVE, inst, kb)
        assert ann.is_root

    def test_verbal_non_root(self, kb):
        sentence = _sentence(
            "1\tPolice\tpolice\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
            "2\tsaid\tsay\tVERB\t_\tVerbForm=Fin\t0\troot\t_\t_\n"
            "3\the\the\tPRON\t_\t_\t4\tnsubj\t_\t_\n"
            "4\tkilled\tkill\tVERB\t_\tVerbForm=Fin\t2\tccomp\t_\t_\n"
        )
        inst = _instance("Killing", (3, 4))
        assert not analyze_instance(sentence, inst, kb).is_root

    def test_nonverbal_as_root_itself(self, kb):
        inst = _instance("Killing", (2, 3))
        assert root_status(NOMINAL, inst, Construction.NONVERBAL)

    def test_nonverbal_subject_of_root(self, kb):
        sentence = _sentence(
            "1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
            "2\tmurder\tmurder\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
            "3\tshocked\tshock\tVERB\t_\tVerbForm=Fin\t0\troot\t_\t_\n"
            "4\teveryone\teveryone\tPRON\t_\t_\t3\tobj\t_\t_\n"
        )
        inst = _instance("Killing", (1, 2))
        assert root_status(sentence, inst, Construction.NONVERBAL)

    def test_nonverbal_object_is_not_root(self, kb):
        sentence = _sentence(
            "1\tHe\the\tPRON\t_\t_\t2\tnsubj\t_\t_\n"
            "2\tdescribed\tdescribe\tVERB\t_\tVerbForm=Fin\t0\troot\t_\t_\n"
            "3\tthe\tthe\tDET\t_\t_\t4\tdet\t_\t_\n"
            "4\tmurder\tmurder\tNOUN\t_\t_\t2\tobj\t_\t_\n"
        )
        inst = _instance("Killing", (3, 4))
        assert not root_status(sentence, inst, Construction.NONVERBAL)


class TestAnalyzeCorpus:
    def test_is_deterministic(self, kb, mini):
        again = analyze_corpus(mini.corpus, kb)
        assert again.annotations == mini.annotations
        assert again.failures == mini.failures

    def test_record_round_trip(self, mini):
        for annotation in list(mini.annotations.values())[:50]:
            record = annotation_to_record(annotation)
            back = annotation_from_record(
                dict(record, trigger_head_token=annotation.trigger_head_token)
            )
            assert back == annotation

    def test_table2_constructions(self, table2):
        got = [
            table2.annotations[f"table2:t2-{k:02d}:0"].construction.value
            for k in range(1, 11)
        ]
        assert got == [
            "nonverbal",
            "nonverbal",
            "vrb_impersonal",
            "vrb_impersonal",
            "vrb_unaccusative",
            "vrb_unaccusative",
            "vrb_passive",
            "vrb_passive",
            "vrb_active",
            "vrb_active",
        ]


SECTION31 = {
    # "the [event] happened": trigger "happened", Event role on the subject NP
    "event": (
        "1\tthe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
        "2\tevent\tevent\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
        "3\thappened\thappen\tVERB\t_\tTense=Past|VerbForm=Fin\t0\troot\t_\t_\n",
        _instance("Event", (2, 3), [("Event", 0, 2)]),
        "Event:nsubj↓",
    ),
    # "the [assassin] of JFK": trigger span covers the role's own token
    "killer": (
        "1\tthe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
        "2\tassassin\tassassin\tNOUN\t_\t_\t0\troot\t_\t_\n"
        "3\tof\tof\tADP\t_\t_\t4\tcase\t_\t_\n"
        "4\tJFK\tJFK\tPROPN\t_\t_\t2\tnmod\t_\t_\n",
        _instance("Killing", (1, 2), [("Killer", 1, 2)]),
        "Killer:*",
    ),
    # "the [prisoner] remains in detention": role is the subject of the
    # verb governing the trigger noun
    "suspect": (
        "1\tthe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
        "2\tprisoner\tprisoner\tNOUN\t_\t_\t3\tnsubj\t_\t_\n"
        "3\tremains\tremain\tVERB\t_\tVerbForm=Fin\t0\troot\t_\t_\n"
        "4\tin\tin\tADP\t_\t_\t5\tcase\t_\t_\n"
        "5\tdetention\tdetention\tNOUN\t_\t_\t3\tobl\t_\t_\n",
        _instance("Arrest", (4, 5), [("Suspect", 1, 2)]),
        "Suspect:↑--nsubj↓",
    ),
}


@pytest.mark.parametrize("case", sorted(SECTION31))
def test_section31_labels_verbatim(case):
    block, inst, expected = SECTION31[case]
    sentence = _sentence(block)
    [link] = role_dependency_links(sentence, inst)
    assert link.label == expected
