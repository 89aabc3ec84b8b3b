"""Shared graph builders for the worked examples used across the suite.

The frozen expected values asserted against these builders were derived by
hand-executing the algorithms on paper before implementation.
"""

import pytest

from ace import AceGraph, RuleInfo, VertexKind


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """One explicit pass/fail line per acceptance criterion."""
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.fspath.basename == "test_acceptance.py":
        verdict = "PASS" if rep.passed else "FAIL"
        print(f"\n[acceptance] {item.name}: {verdict}", flush=True)

I, C, P = VertexKind.INFERENCE, VertexKind.CONFLICT, VertexKind.PREFERENCE


def rule(rule_id, kind, transitive=False, description=""):
    return RuleInfo(rule_id=rule_id, kind=kind, transitive=transitive,
                    description=description)


def build_player_graph():
    """The music-player revenue discussion: an AND-refined revenue goal, an
    attack on audio ads by the no-interruptions preference's subject, and a
    preference that overrides the attack.  18 vertices; C2 is the newest."""
    g = AceGraph()
    g.add_information("Generate revenue from the audio player.", "i_g1")
    g.add_information("Include visual advertising in the interface.", "i_g2")
    g.add_information("Offer a paid premium subscription.", "i_g3")
    g.add_information("Play audio ads between songs.", "i_g4")
    g.add_rule_application(I, "and-refinement", {"i_g1"},
                           {"i_g2", "i_g3", "i_g4"}, vertex_id="I_T")
    g.add_information("Listeners hear the stream without interruptions.", "i_p1")
    g.add_rule_application(C, "revenue-conflict", {"i_p1"}, {"i_g4"},
                           vertex_id="C1")
    g.add_information("Listeners can skip any song.", "i_p2")
    g.add_information("Listeners can ban any song.", "i_p3")
    g.add_information("Listeners can pause the stream.", "i_p4")
    g.add_information("Skipping any song implies an uninterrupted stream.",
                      "imp2")
    g.add_information("Banning any song implies an uninterrupted stream.",
                      "imp3")
    g.add_information("Pausing the stream implies an uninterrupted stream.",
                      "imp4")
    g.add_rule_application(I, "modus-ponens", {"imp2", "i_p2"}, {"i_p1"},
                           vertex_id="I_MP1")
    g.add_rule_application(I, "modus-ponens", {"imp3", "i_p3"}, {"i_p1"},
                           vertex_id="I_MP2")
    g.add_rule_application(I, "modus-ponens", {"imp4", "i_p4"}, {"i_p1"},
                           vertex_id="I_MP3")
    g.add_rule_application(P, "listener-preference", {"i_g4"}, {"i_p1"},
                           vertex_id="P1")
    g.add_rule_application(C, "preference-override", {"P1"}, {"C1", "i_p1"},
                           vertex_id="C2")
    meta = {
        "and-refinement": rule("and-refinement", I),
        "modus-ponens": rule("modus-ponens", I),
        "revenue-conflict": rule("revenue-conflict", C),
        "preference-override": rule("preference-override", C),
        "listener-preference": rule("listener-preference", P),
    }
    return g, meta


def build_preference_chain_graph():
    """A transitive preference chain closed by a conflict: i2 > i1 > i3 > i4
    under one transitive rule, with i4 excluding i2.  Before closure the
    whole graph is a single 8-cycle; closure adds three domination lines."""
    g = AceGraph()
    for vid in ("i1", "i2", "i3", "i4"):
        g.add_information(f"option {vid}", vid)
    g.add_rule_application(P, "quality-preference", {"i2"}, {"i1"},
                           vertex_id="P1_1")
    g.add_rule_application(P, "quality-preference", {"i1"}, {"i3"},
                           vertex_id="P1_2")
    g.add_rule_application(P, "quality-preference", {"i3"}, {"i4"},
                           vertex_id="P1_3")
    g.add_rule_application(C, "exclusion", {"i4"}, {"i2"}, vertex_id="C2")
    meta = {
        "quality-preference": rule("quality-preference", P, transitive=True),
        "exclusion": rule("exclusion", C),
    }
    return g, meta


def build_mutual_attack_graph():
    """Two statements attacking each other: stable labels exist but depend on
    where the labeling starts."""
    g = AceGraph()
    g.add_information("statement one", "i1")
    g.add_information("statement two", "i2")
    g.add_rule_application(C, "mutual-exclusion", {"i1"}, {"i2"},
                           vertex_id="C1")
    g.add_rule_application(C, "mutual-exclusion", {"i2"}, {"i1"},
                           vertex_id="C2")
    meta = {"mutual-exclusion": rule("mutual-exclusion", C)}
    return g, meta


def build_unstable_graph():
    """A conflict fanning into two attack chains of odd attack parity that
    reconverge on its own premise.  Two simple cycles, no assignment of
    labels is consistent, and the walker never settles."""
    g = AceGraph()
    for vid in ("i_z", "a1", "a2", "b1", "b2"):
        g.add_information(f"claim {vid}", vid)
    g.add_rule_application(C, "objection", {"a1"}, {"a2"}, vertex_id="Ca1")
    g.add_rule_application(C, "objection", {"a2"}, {"i_z"}, vertex_id="Ca2")
    g.add_rule_application(C, "objection", {"b1"}, {"b2"}, vertex_id="Cb1")
    g.add_rule_application(C, "objection", {"b2"}, {"i_z"}, vertex_id="Cb2")
    g.add_rule_application(C, "objection", {"i_z"}, {"a1", "b1"},
                           vertex_id="Cf")
    meta = {"objection": rule("objection", C)}
    return g, meta


def build_rejected_premise_graph():
    """A joint inference with one premise knocked out: the rejection cascades
    through the application to the conclusion."""
    g = AceGraph()
    for vid in ("i1", "i2", "i3", "i4"):
        g.add_information(f"claim {vid}", vid)
    g.add_rule_application(I, "joint-inference", {"i2", "i3"}, {"i1"},
                           vertex_id="I5")
    g.add_rule_application(C, "objection", {"i4"}, {"i3"}, vertex_id="C6")
    meta = {"joint-inference": rule("joint-inference", I),
            "objection": rule("objection", C)}
    return g, meta


def build_rejected_conflict_graph():
    """An attack on an inference that is itself attacked: the inner conflict
    is rejected, so the inference and its conclusion stay accepted."""
    g = AceGraph()
    for vid in ("i1", "i2", "i3", "i4"):
        g.add_information(f"claim {vid}", vid)
    g.add_rule_application(I, "implication", {"i2"}, {"i1"}, vertex_id="I7")
    g.add_rule_application(C, "objection", {"i3"}, {"I7"}, vertex_id="C8")
    g.add_rule_application(C, "objection", {"i4"}, {"C8"}, vertex_id="C9")
    meta = {"implication": rule("implication", I),
            "objection": rule("objection", C)}
    return g, meta


def build_split_preference_graph():
    """Two applications of one transitive rule separated by a conflict; the
    rule's parameter subgraph falls apart, so no closure lines appear."""
    g = AceGraph()
    for vid in ("i1", "i2", "i3", "i4"):
        g.add_information(f"option {vid}", vid)
    g.add_rule_application(P, "taste", {"i1"}, {"i2"}, vertex_id="P1_1")
    g.add_rule_application(C, "objection", {"i2"}, {"i3"}, vertex_id="Cx")
    g.add_rule_application(P, "taste", {"i3"}, {"i4"}, vertex_id="P1_2")
    meta = {"taste": rule("taste", P, transitive=True),
            "objection": rule("objection", C)}
    return g, meta


def build_two_step_chain_graph():
    """i1 > i2 > {i3, i4} under one transitive rule: closure must add the
    first application's domination of i3 and i4, and nothing else."""
    g = AceGraph()
    for vid in ("i1", "i2", "i3", "i4"):
        g.add_information(f"option {vid}", vid)
    g.add_rule_application(P, "taste", {"i1"}, {"i2"}, vertex_id="P1_1")
    g.add_rule_application(P, "taste", {"i2"}, {"i3", "i4"}, vertex_id="P1_2")
    meta = {"taste": rule("taste", P, transitive=True)}
    return g, meta


@pytest.fixture
def player():
    return build_player_graph()


@pytest.fixture
def preference_chain():
    return build_preference_chain_graph()


@pytest.fixture
def mutual_attack():
    return build_mutual_attack_graph()


@pytest.fixture
def unstable():
    return build_unstable_graph()
