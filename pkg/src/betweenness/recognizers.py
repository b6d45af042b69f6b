"""Forbidden-pattern search and graph-class recognition.

Each class comes with a certificate that can be replayed against the input:
a pattern occurrence for non-members, and a perfect elimination order or a
pruning sequence for members where one exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import graph_core as gc
from .graph_core import (
    CycleOccurrence,
    Graph,
    GraphInputError,
    bfs_all_pairs,
    bits,
    enumerate_induced_cycles,
    induced_edge_mask,
    is_isometric_cycle,
    popcount,
    require_connected,
)
from .transit import CapabilityError

FIXED_PATTERNS = {
    "house": gc.house,
    "domino": gc.domino,
    "fan3": gc.fan3,
    "pgraph": gc.pgraph,
}
CYCLE_PATTERNS = {"hole": 5, "inducedC4plus": 4, "isometric_hole": 4}
PATTERN_IDS = tuple(FIXED_PATTERNS) + tuple(CYCLE_PATTERNS)

CLASS_PATTERNS = {
    "HHD_free": ("house", "hole", "domino"),
    "HHP3fan_free": ("house", "hole", "pgraph", "fan3"),
    "HHD3fan_free": ("house", "hole", "domino", "fan3"),
}
CLASS_IDS = ("chordal", "distance_hereditary", "ptolemaic", "bridged",
             "HHD_free", "HHP3fan_free", "HHD3fan_free")

DEFINITION_MAX_N = 9


@dataclass(frozen=True)
class PatternOccurrence:
    pattern: str
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"pattern": self.pattern, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class RecognitionReport:
    cls: str
    member: bool
    certificate: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"class": self.cls, "member": self.member, "certificate": self.certificate}


@lru_cache(maxsize=None)
def _pattern_masks(pattern: str) -> tuple[int, frozenset]:
    P = FIXED_PATTERNS[pattern]()
    masks = set()
    for perm in itertools.permutations(range(P.n)):
        masks.add(induced_edge_mask(P, perm))
    return P.n, frozenset(masks)


def _find_fixed(G: Graph, pattern: str) -> PatternOccurrence | None:
    k, masks = _pattern_masks(pattern)
    m = popcount(next(iter(masks)))
    degs = [popcount(a) for a in G.adj]
    for S in itertools.combinations(range(G.n), k):
        # every pattern here is connected, so each chosen vertex needs a neighbour
        if any(degs[v] == 0 for v in S):
            continue
        mask = induced_edge_mask(G, S)
        if popcount(mask) == m and mask in masks:
            return PatternOccurrence(pattern, S)
    return None


def _cycle_key(c: CycleOccurrence):
    return (len(c.vertices), tuple(sorted(c.vertices)), c.vertices)


def find_induced_pattern(G: Graph, pattern: str, dist=None) -> PatternOccurrence | None:
    """Smallest occurrence of ``pattern`` in ``G``.

    Fixed patterns: lexicographically first vertex subset inducing a copy.
    Cycle patterns: the shortest qualifying induced cycle (ties broken by its
    sorted vertex set); vertices are reported in cyclic order.
    """
    if pattern in FIXED_PATTERNS:
        return _find_fixed(G, pattern)
    if pattern not in CYCLE_PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}")
    cycles = enumerate_induced_cycles(G, CYCLE_PATTERNS[pattern])
    if pattern == "isometric_hole":
        d = dist if dist is not None else bfs_all_pairs(G)
        cycles = [c for c in cycles if is_isometric_cycle(G, c, d)]
    if not cycles:
        return None
    best = min(cycles, key=_cycle_key)
    return PatternOccurrence(pattern, best.vertices)


def replay_occurrence(G: Graph, occ: PatternOccurrence) -> bool:
    """Check that ``occ`` really is an occurrence of its pattern in ``G``."""
    vs = occ.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
        return False
    if occ.pattern in FIXED_PATTERNS:
        _, masks = _pattern_masks(occ.pattern)
        return induced_edge_mask(G, vs) in masks
    if len(vs) < CYCLE_PATTERNS[occ.pattern]:
        return False
    c = CycleOccurrence(tuple(vs))
    if not (gc.is_cycle_of(G, c) and gc.is_chordless(G, c)):
        return False
    if occ.pattern == "isometric_hole":
        return is_isometric_cycle(G, c)
    return True


# --------------------------------------------------------------------------
# chordal graphs

def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the smallest vertex)."""
    weight = [0] * G.n
    visited = 0
    order = []
    for _ in range(G.n):
        best = max((v for v in range(G.n) if not visited >> v & 1),
                   key=lambda v: (weight[v], -v))
        order.append(best)
        visited |= 1 << best
        for w in bits(G.adj[best] & ~visited):
            weight[w] += 1
    return order


def is_perfect_elimination_order(G: Graph, order: list[int]) -> bool:
    if sorted(order) != list(range(G.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in bits(G.adj[v]) if pos[w] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        for w in later:
            if w != first and not G.has_edge(first, w):
                return False
    return True


def _report(cls: str, occ: PatternOccurrence | None, positive: dict | None = None) -> RecognitionReport:
    if occ is not None:
        return RecognitionReport(cls, False, occ.to_dict())
    return RecognitionReport(cls, True, positive or {})


def is_chordal(G: Graph) -> RecognitionReport:
    require_connected(G, "chordality recognition")
    order = list(reversed(mcs_order(G)))
    if is_perfect_elimination_order(G, order):
        return RecognitionReport("chordal", True, {"order": order})
    occ = find_induced_pattern(G, "inducedC4plus")
    if occ is None:
        raise AssertionError(f"no perfect elimination order but no induced cycle either: {G}")
    return RecognitionReport("chordal", False, occ.to_dict())


# --------------------------------------------------------------------------
# distance-hereditary graphs and their oracles

def find_first_pattern(G: Graph, patterns) -> PatternOccurrence | None:
    for p in patterns:
        occ = find_induced_pattern(G, p)
        if occ is not None:
            return occ
    return None


def is_distance_hereditary(G: Graph) -> RecognitionReport:
    require_connected(G, "distance-hereditary recognition")
    occ = find_first_pattern(G, CLASS_PATTERNS["HHD3fan_free"])
    if occ is not None:
        return _report("distance_hereditary", occ)
    seq = pruning_sequence(G)
    return RecognitionReport("distance_hereditary", True,
                             {"pruning": seq} if seq is not None else {})


def pruning_sequence(G: Graph) -> list[dict] | None:
    """Greedy pendant/twin deletion down to one vertex, or ``None`` if stuck.

    Deleting a pendant vertex or a twin from a distance-hereditary graph leaves
    a distance-hereditary graph, so the greedy order never misses a reduction.
    """
    alive = G.full
    adj = G.adj
    steps = []
    while popcount(alive) > 1:
        step = None
        for v in bits(alive):
            nv = adj[v] & alive
            if popcount(nv) == 1:
                step = {"vertex": v, "op": "pendant", "to": nv.bit_length() - 1}
                break
            for w in bits(alive & ~(1 << v)):
                nw = adj[w] & alive
                if nv & ~(1 << w) == nw & ~(1 << v):
                    step = {"vertex": v, "op": "true_twin" if nv >> w & 1 else "false_twin", "to": w}
                    break
            if step:
                break
        if step is None:
            return None
        steps.append(step)
        alive &= ~(1 << step["vertex"])
    return steps


def dh_oracle_pruning(G: Graph) -> bool:
    return pruning_sequence(G) is not None


def _masked_distances(adj, mask: int, s: int) -> dict[int, int]:
    dist = {s: 0}
    frontier = 1 << s
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= mask & ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def dh_oracle_definition(G: Graph) -> bool:
    """Every connected induced subgraph keeps the host distances (n <= 9)."""
    if G.n > DEFINITION_MAX_N:
        raise CapabilityError(
            f"the definitional check sweeps all vertex subsets; limited to n <= {DEFINITION_MAX_N}")
    d = bfs_all_pairs(G)
    for mask in range(1, 1 << G.n):
        if popcount(mask) < 3:
            continue
        members = list(bits(mask))
        s = members[0]
        from_s = _masked_distances(G.adj, mask, s)
        if len(from_s) != len(members):
            continue
        for a in members:
            da = from_s if a == s else _masked_distances(G.adj, mask, a)
            for b in members:
                if da[b] != d[a][b]:
                    return False
    return True


# --------------------------------------------------------------------------
# Ptolemaic, bridged, and the pattern-free classes

def is_ptolemaic(G: Graph) -> RecognitionReport:
    chordal = is_chordal(G)
    if not chordal.member:
        return RecognitionReport("ptolemaic", False, chordal.certificate)
    occ = find_induced_pattern(G, "fan3")
    via_dh = is_distance_hereditary(G).member
    if via_dh != (occ is None):
        raise AssertionError(f"chordal+fan3-free and chordal+DH disagree on {G}")
    if occ is not None:
        return _report("ptolemaic", occ)
    return RecognitionReport("ptolemaic", True, chordal.certificate)


def ptolemaic_oracle_inequality(G: Graph) -> bool:
    require_connected(G, "the Ptolemy inequality check")
    d = bfs_all_pairs(G)
    for u, v, x, y in itertools.combinations(range(G.n), 4):
        a = d[u][v] * d[x][y]
        b = d[u][x] * d[v][y]
        c = d[u][y] * d[v][x]
        if a > b + c or b > a + c or c > a + b:
            return False
    return True


def is_bridged(G: Graph) -> RecognitionReport:
    require_connected(G, "bridged recognition")
    return _report("bridged", find_induced_pattern(G, "isometric_hole"))


def _pattern_free(cls: str, G: Graph) -> RecognitionReport:
    require_connected(G, f"{cls} recognition")
    return _report(cls, find_first_pattern(G, CLASS_PATTERNS[cls]))


def is_HHD_free(G: Graph) -> RecognitionReport:
    return _pattern_free("HHD_free", G)


def is_HHP3fan_free(G: Graph) -> RecognitionReport:
    return _pattern_free("HHP3fan_free", G)


def is_HHD3fan_free(G: Graph) -> RecognitionReport:
    return _pattern_free("HHD3fan_free", G)


RECOGNIZERS = {
    "chordal": is_chordal,
    "distance_hereditary": is_distance_hereditary,
    "ptolemaic": is_ptolemaic,
    "bridged": is_bridged,
    "HHD_free": is_HHD_free,
    "HHP3fan_free": is_HHP3fan_free,
    "HHD3fan_free": is_HHD3fan_free,
}


def classify(G: Graph) -> dict[str, RecognitionReport]:
    require_connected(G, "classification")
    return {c: RECOGNIZERS[c](G) for c in CLASS_IDS}


def replay_report(G: Graph, report: RecognitionReport) -> bool:
    """Replay a report's certificate; members without a certificate pass trivially."""
    cert = report.certificate
    if not report.member:
        if "pattern" not in cert:
            return False
        return replay_occurrence(G, PatternOccurrence(cert["pattern"], tuple(cert["vertices"])))
    if "order" in cert:
        return is_perfect_elimination_order(G, list(cert["order"]))
    if "pruning" in cert:
        alive = G.full
        for step in cert["pruning"]:
            v, w = step["vertex"], step["to"]
            nv, nw = G.adj[v] & alive, G.adj[w] & alive
            if step["op"] == "pendant":
                ok = nv == 1 << w
            else:
                ok = nv & ~(1 << w) == nw & ~(1 << v)
            if not ok:
                return False
            alive &= ~(1 << v)
        return popcount(alive) == 1
    return True


__all__ = [
    "CLASS_IDS", "PATTERN_IDS", "PatternOccurrence", "RecognitionReport", "classify",
    "dh_oracle_definition", "dh_oracle_pruning", "find_induced_pattern", "is_HHD3fan_free",
    "is_HHD_free", "is_HHP3fan_free", "is_bridged", "is_chordal", "is_distance_hereditary",
    "is_perfect_elimination_order", "is_ptolemaic", "ptolemaic_oracle_inequality",
    "pruning_sequence", "replay_occurrence", "replay_report",
]
