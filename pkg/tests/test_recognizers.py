import random

import networkx as nx
import pytest

from betweenness import recognizers as rec
from betweenness.graph_core import (
    Graph,
    GraphInputError,
    complete,
    cycle,
    domino,
    enumerate_connected_unlabeled,
    fan3,
    house,
    path,
    pgraph,
    random_connected,
)

from . import oracles


def random_tree(n, seed):
    rng = random.Random(seed)
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def block_graph():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


TREES = [random_tree(n, s) for n, s in [(1, 0), (2, 0), (6, 1), (9, 2), (12, 3)]]


def test_pattern_search_examples():
    assert rec.find_induced_pattern(house(), "house").vertices == (0, 1, 2, 3, 4)
    occ = rec.find_induced_pattern(cycle(6), "hole")
    assert sorted(occ.vertices) == list(range(6))
    # the domino's isometric holes are its two squares
    occ = rec.find_induced_pattern(domino(), "isometric_hole")
    assert sorted(occ.vertices) in ([0, 1, 4, 5], [1, 2, 3, 4])
    assert rec.find_induced_pattern(domino(), "hole") is None
    assert rec.find_induced_pattern(path(6), "fan3") is None


def test_pattern_search_agrees_with_isomorphism_oracle():
    for n in range(5, 8):
        for G in enumerate_connected_unlabeled(n):
            for name, make in rec.FIXED_PATTERNS.items():
                P = make()
                if P.n > n:
                    continue
                occ = rec.find_induced_pattern(G, name)
                assert (occ is not None) == oracles.has_induced(G, P)
                if occ:
                    assert rec.replay_occurrence(G, occ)


def test_bridged_agrees_with_isometric_cycle_oracle():
    for n in range(4, 8):
        for G in enumerate_connected_unlabeled(n):
            assert rec.is_bridged(G).member == (not oracles.isometric_cycle_exists(G))


@pytest.mark.parametrize("T", TREES)
def test_trees_are_in_every_class(T):
    reports = rec.classify(T)
    assert all(r.member for r in reports.values())
    assert all(rec.replay_report(T, r) for r in reports.values())
    assert rec.dh_oracle_pruning(T) and rec.ptolemaic_oracle_inequality(T)


def test_chordal():
    r = rec.is_chordal(cycle(4))
    assert not r.member and sorted(r.certificate["vertices"]) == [0, 1, 2, 3]
    r = rec.is_chordal(house())
    assert not r.member and sorted(r.certificate["vertices"]) == [0, 1, 2, 3]
    r = rec.is_chordal(fan3())
    assert r.member and rec.is_perfect_elimination_order(fan3(), r.certificate["order"])


def test_chordal_agrees_with_networkx():
    rng = random.Random(5)
    for _ in range(300):
        G = random_connected(rng.randint(1, 10), rng.choice([0.2, 0.4, 0.6, 0.8]), rng)
        assert rec.is_chordal(G).member == nx.is_chordal(oracles.to_nx(G))


def test_distance_hereditary():
    r = rec.is_distance_hereditary(domino())
    assert not r.member and r.certificate["pattern"] == "domino"
    assert rec.is_distance_hereditary(pgraph()).member
    r = rec.is_distance_hereditary(cycle(5))
    assert not r.member and r.certificate["pattern"] == "hole"


def test_dh_definition_oracle():
    assert rec.dh_oracle_definition(path(4))
    assert not rec.dh_oracle_definition(house()) and not oracles.is_distance_hereditary_def(house())
    assert not rec.dh_oracle_definition(cycle(5))
    with pytest.raises(rec.CapabilityError):
        rec.dh_oracle_definition(path(10))


def test_dh_routes_agree_with_independent_definition():
    for n in range(1, 7):
        for G in enumerate_connected_unlabeled(n):
            ref = oracles.is_distance_hereditary_def(G)
            assert rec.is_distance_hereditary(G).member == ref
            assert rec.dh_oracle_pruning(G) == ref


def test_pruning():
    assert rec.dh_oracle_pruning(complete(5))
    steps = rec.pruning_sequence(complete(5))
    assert [s["op"] for s in steps] == ["true_twin"] * 3 + ["pendant"]
    assert not rec.dh_oracle_pruning(domino())
    assert rec.pruning_sequence(domino()) is None


def test_ptolemaic():
    assert not rec.is_ptolemaic(fan3()).member
    assert rec.is_ptolemaic(block_graph()).member
    assert rec.find_induced_pattern(block_graph(), "fan3") is None
    assert not rec.ptolemaic_oracle_inequality(cycle(4))
    assert not rec.ptolemaic_oracle_inequality(fan3())


def test_bridged():
    assert rec.is_bridged(complete(3)).member
    assert not rec.is_bridged(cycle(5)).member
    r = rec.is_bridged(house())
    assert not r.member and sorted(r.certificate["vertices"]) == [0, 1, 2, 3]


def test_pattern_free_classes():
    assert rec.is_HHD_free(fan3()).member and not rec.is_HHD3fan_free(fan3()).member
    assert rec.is_HHD3fan_free(pgraph()).member and not rec.is_HHP3fan_free(pgraph()).member
    for cls in ("HHD_free", "HHP3fan_free", "HHD3fan_free"):
        r = rec.RECOGNIZERS[cls](cycle(6))
        assert not r.member and r.certificate["pattern"] == "hole"


def test_classify_requires_connected():
    with pytest.raises(GraphInputError):
        rec.classify(Graph.from_edges(3, [(0, 1)]))


def test_every_certificate_replays_on_atlas():
    for n in range(1, 8):
        for G in enumerate_connected_unlabeled(n):
            for r in rec.classify(G).values():
                assert rec.replay_report(G, r), (G.to_graph6(), r)


def test_tampered_certificate_is_rejected():
    r = rec.is_chordal(cycle(5))
    bad = rec.RecognitionReport("chordal", False, {"pattern": "inducedC4plus", "vertices": [0, 1, 2, 3]})
    assert rec.replay_report(cycle(5), r) and not rec.replay_report(cycle(5), bad)
