import json

import pytest

from betweenness import theorems as thm
from betweenness.axioms import check_profile
from betweenness.fixtures import FIXTURE_NAMES, load_fixture
from betweenness.graph_core import Graph, complete, cycle, fan3, path, pgraph
from betweenness.recognizers import is_bridged
from betweenness.transit import CapabilityError, TransitFunction, interval_function, underlying_graph, validate_t

SMALL = thm.CorpusSpec(exhaustive_max_n=5, random_count=0, tf_samples=0, tf_interval_max_n=0)


def wheel4():
    # hub 0, rim 1-3-2-4
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (3, 2), (2, 4), (4, 1)])


def test_registry_kinds():
    assert set(thm.GRAPH_EQUIVALENCES) <= set(thm.GRAPH_CLAIMS)
    assert "IMP_J3_J2P_J3P" in thm.TF_CLAIMS
    assert set(thm.GRAPH_CLAIMS) & set(thm.TF_CLAIMS) == {"THM_PTOL_CH", "THM_DH_CH"}
    with pytest.raises(thm.ClaimUsageError):
        thm.verify_graph_claim("IMP_J0_J0P", cycle(4))
    with pytest.raises(thm.ClaimUsageError):
        thm.verify_tf_claim("THM_J0_PTOLEMAIC", interval_function(cycle(4)))
    with pytest.raises(KeyError):
        thm.verify_graph_claim("THM_NOPE", cycle(4))


def test_graph_claim_examples():
    assert thm.verify_graph_claim("THM_J0_PTOLEMAIC", cycle(4)).verdict == "consistent"
    assert thm.verify_graph_claim("THM_J2PJ3P_DH", pgraph()).verdict == "consistent"
    assert thm.verify_graph_claim("THM_J0P_BRIDGED", cycle(6)).verdict == "consistent"
    assert thm.verify_graph_claim("PROP_J2P", cycle(5)).verdict == "consistent"
    assert thm.verify_graph_claim("THM_HHD3FAN", fan3()).verdict == "consistent"


def test_graph_claims_need_connected_input():
    with pytest.raises(thm.GraphInputError):
        thm.verify_graph_claim("PROP_J2P", Graph.from_edges(3, []))


def test_bridged_equivalence_fails_on_the_4_wheel():
    W = wheel4()
    assert not is_bridged(W).member
    assert check_profile(interval_function(W), ["J0p"])["J0p"].holds
    out = thm.verify_graph_claim("THM_J0P_BRIDGED", W)
    assert out.verdict == "counterexample"
    assert out.witness["axiom_side"] is True and out.witness["graph_side"] is False


def test_tf_claim_examples():
    fx = load_fixture("EX_J0J2B2_NOT_B3")
    assert thm.verify_tf_claim("THM_J0J2_CNFREE", fx.R).verdict == "consistent"
    for name in ("EX_J2B3_NOT_J0", "EX_B2J1_NOT_B3"):
        assert thm.verify_tf_claim("LEM_J0B3_B2CONN", load_fixture(name).R).verdict == "vacuous"
    tree = Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert thm.verify_tf_claim("THM_B3J0J2_PTOL_R_EQ_I", interval_function(tree)).verdict == "consistent"
    assert thm.verify_tf_claim("IMP_J0_J0P", load_fixture("EX_J0P_NOT_J0").R).verdict == "vacuous"


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_raise_no_counterexample(name):
    R = load_fixture(name).R
    for c in thm.TF_CLAIMS:
        assert thm.verify_tf_claim(c, R, name).verdict != "counterexample", c


def test_reconstruction_on_interval_functions():
    # I of a Ptolemaic graph (block graph) and of a DH non-Ptolemaic graph (the P graph)
    block = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    for c in ("THM_B3J0J2_PTOL_R_EQ_I", "THM_PTOL_CH", "THM_DISH", "THM_DISH1", "THM_DH_CH", "THM_INDUCED"):
        assert thm.verify_tf_claim(c, interval_function(block)).verdict == "consistent"
    R = interval_function(pgraph())
    assert thm.verify_tf_claim("THM_B3J0J2_PTOL_R_EQ_I", R).verdict == "vacuous"
    for c in ("THM_DISH", "THM_DISH1", "THM_DH_CH"):
        assert thm.verify_tf_claim(c, R).verdict == "consistent"


def test_disconnected_underlying_graph_is_reported():
    # every pair maps to the whole ground set: G_R has no edges at all
    n = 4
    R = TransitFunction.from_pairs(n, {(u, v): range(n) for u in range(n) for v in range(u + 1, n)})
    assert underlying_graph(R).edge_count() == 0
    out = thm.verify_tf_claim("LEM_B1B2_CONN", R)
    assert out.verdict in ("vacuous", "counterexample")
    if out.verdict == "counterexample":
        assert out.witness["reason"] == "G_R is disconnected"


def test_induced_path_claims_are_capability_guarded():
    with pytest.raises(CapabilityError):
        thm.verify_tf_claim("THM_DISH", interval_function(path(15)))


def test_literal_pairwise_characterisation_is_false():
    # R = I of the path 0-1-2 on the vertex set of a triangle
    R = interval_function(path(3))
    assert not thm.characterization_holds("THM_PTOL_CH", R, complete(3))
    assert not thm.characterization_holds("THM_DH_CH", R, complete(3))
    assert thm.characterization_holds("THM_PTOL_CH", R, path(3))
    assert thm.characterization_holds("THM_DH_CH", interval_function(cycle(5)), cycle(5))


def test_sampler():
    assert thm.sample_transit_function(4, "uniform", 1) == thm.sample_transit_function(4, "uniform", 1)
    assert thm.sample_transit_function(4, "uniform", 1) != thm.sample_transit_function(4, "uniform", 2)
    for seed in range(200):
        R = thm.sample_transit_function(5, "uniform", seed)
        assert validate_t(R).ok
        R = thm.sample_transit_function(6, "interval_mutation", seed, mutations=0)
        G = underlying_graph(R)
        assert R == interval_function(G)
        assert all(r.holds for a, r in check_profile(R, ["b1", "b2", "b3", "b4", "J2"]).items())
    with pytest.raises(ValueError):
        thm.sample_transit_function(5, "gaussian", 0)


def test_small_corpus_counts():
    rep = thm.run_corpus(thm.GRAPH_CLAIMS, SMALL)
    assert rep.graph_count == 1 + 1 + 4 + 38 + 728
    for c in thm.GRAPH_CLAIMS:
        t = rep.tallies[c]
        expected = 15 if c == "THM_J0P_BRIDGED" else 0  # the labelled copies of the 4-wheel
        assert len(t.counterexamples) == expected, c


def test_run_is_deterministic_and_worker_independent():
    spec = thm.CorpusSpec(exhaustive_max_n=4, random_count=30, tf_samples=40, tf_n_values=(4, 5),
                          tf_interval_max_n=4, seed=7)
    a = thm.run_corpus(spec=spec, workers=1).to_json()
    b = thm.run_corpus(spec=spec, workers=1).to_json()
    c = thm.run_corpus(spec=spec, workers=2).to_json()
    assert a == b == c
    doc = json.loads(a)
    assert doc["spec"]["seed"] == 7 and len(doc["claims"]) == len(thm.CLAIM_IDS)


def test_unknown_claim_in_run():
    with pytest.raises(KeyError):
        thm.run_corpus(["NOPE"], SMALL)
