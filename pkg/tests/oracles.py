"""Independent reference implementations used to derive expected values.

Everything here works from definitions (networkx distances, subset
enumeration, simple-path enumeration) and shares no code with the package
beyond the Graph container.
"""

from __future__ import annotations

import itertools

import networkx as nx

from betweenness.graph_core import Graph


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return Graph.from_edges(len(mapping), [(mapping[a], mapping[b]) for a, b in H.edges()])


def distances(G: Graph) -> dict:
    return dict(nx.all_pairs_shortest_path_length(to_nx(G)))


def interval(G: Graph) -> dict:
    """I(u,v) from the union of all shortest paths."""
    H = to_nx(G)
    out = {}
    for u in H:
        for v in H:
            out[u, v] = set().union(*map(set, nx.all_shortest_paths(H, u, v)))
    return out


def induced_paths_union(G: Graph) -> dict:
    """J(u,v): union of all chordless u,v-paths, by simple-path enumeration."""
    H = to_nx(G)
    out = {}
    for u in H:
        out[u, u] = {u}
        for v in H:
            if u == v:
                continue
            acc = set()
            for p in nx.all_simple_paths(H, u, v):
                if H.subgraph(p).number_of_edges() == len(p) - 1:
                    acc |= set(p)
            out[u, v] = acc
    return out


def induced_cycles_bruteforce(G: Graph, min_len: int = 3) -> set:
    """Vertex sets of induced cycles: subsets whose induced subgraph is a single cycle."""
    H = to_nx(G)
    found = set()
    for k in range(max(3, min_len), G.n + 1):
        for S in itertools.combinations(range(G.n), k):
            sub = H.subgraph(S)
            if sub.number_of_edges() == k and all(d == 2 for _, d in sub.degree()) and nx.is_connected(sub):
                found.add(frozenset(S))
    return found


def count_connected_labeled(n: int) -> int:
    pairs = list(itertools.combinations(range(n), 2))
    total = 0
    for mask in range(1 << len(pairs)):
        H = nx.Graph()
        H.add_nodes_from(range(n))
        H.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        total += nx.is_connected(H)
    return total


def has_induced(G: Graph, pattern: Graph) -> bool:
    H = to_nx(G)
    P = to_nx(pattern)
    for S in itertools.combinations(range(G.n), pattern.n):
        if nx.is_isomorphic(H.subgraph(S), P):
            return True
    return False


def isometric_cycle_exists(G: Graph, min_len: int = 4) -> bool:
    """Any cycle (as a vertex sequence) of length >= min_len whose cycle distances equal graph distances."""
    H = to_nx(G)
    d = distances(G)
    for c in nx.simple_cycles(H.to_directed()):
        k = len(c)
        if k < min_len:
            continue
        if all(d[c[i]][c[j]] == min(abs(i - j), k - abs(i - j)) for i in range(k) for j in range(i + 1, k)):
            return True
    return False


def is_distance_hereditary_def(G: Graph) -> bool:
    H = to_nx(G)
    d = distances(G)
    for k in range(2, G.n + 1):
        for S in itertools.combinations(range(G.n), k):
            sub = H.subgraph(S)
            if not nx.is_connected(sub):
                continue
            ds = dict(nx.all_pairs_shortest_path_length(sub))
            if any(ds[a][b] != d[a][b] for a in S for b in S):
                return False
    return True
