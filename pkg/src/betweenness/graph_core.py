"""Finite simple graphs on vertices ``0..n-1`` stored as per-vertex bitsets.

Everything downstream (transit functions, recognizers, the theorem corpus)
works on :class:`Graph`. Graphs are immutable and hashable, so they can be
shared freely between worker processes.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

UNREACHABLE = -1

MAX_VERTICES = 64


class GraphInputError(ValueError):
    """Raised for malformed graph input (graph6 text, edge lists, vertex sets)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphInputError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise GraphInputError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def degree(self, u: int) -> int:
        return popcount(self.adj[u])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def to_edge_list(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class CycleOccurrence:
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise GraphInputError("a cycle needs at least three vertices")

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


# --------------------------------------------------------------------------
# graph6 and edge-list documents

def _n_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode_graph6(G: Graph) -> str:
    bitstr = []
    for j in range(1, G.n):
        for i in range(j):
            bitstr.append(1 if G.adj[i] >> j & 1 else 0)
    while len(bitstr) % 6:
        bitstr.append(0)
    body = []
    for k in range(0, len(bitstr), 6):
        val = 0
        for b in bitstr[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _n_header(G.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphInputError("empty graph6 string (byte offset 0)")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphInputError(f"invalid graph6 byte {ch!r} at byte offset {off}")
    if s[0] == "~":
        if len(s) < 4:
            raise GraphInputError("truncated graph6 size header at byte offset 1")
        if s[1] == "~":
            raise GraphInputError("graph6 sizes above 258047 are unsupported (byte offset 1)")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        start = 4
    else:
        n = ord(s[0]) - 63
        start = 1
    if n == 0:
        raise GraphInputError("graph6 header encodes an empty graph (byte offset 0)")
    if n > MAX_VERTICES:
        raise GraphInputError(f"graph6 header declares n={n} > {MAX_VERTICES} at byte offset 0")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[start:]
    if len(payload) < need:
        raise GraphInputError(
            f"truncated graph6 payload: expected {need} data bytes, "
            f"input ends at byte offset {len(s)}")
    if len(payload) > need:
        raise GraphInputError(f"trailing data in graph6 string at byte offset {start + need}")
    flat = []
    for ch in payload:
        v = ord(ch) - 63
        flat.extend((v >> s_) & 1 for s_ in range(5, -1, -1))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if flat[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def parse_edge_list(doc) -> Graph:
    """Build a graph from ``{"n": .., "edges": [[u, v], ...]}`` (dict or JSON text)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"edge-list document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc:
        raise GraphInputError("edge-list document must be an object with key 'n'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"'n' must be a positive integer, got {n!r}")
    edges = doc.get("edges", [])
    for idx, e in enumerate(edges):
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphInputError(f"edge #{idx} is not a pair: {e!r}")
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# distances and basic structure

def bfs_all_pairs(G: Graph) -> tuple[tuple[int, ...], ...]:
    """Hop-count matrix; ``UNREACHABLE`` marks pairs in different components."""
    rows = []
    for s in range(G.n):
        dist = [UNREACHABLE] * G.n
        dist[s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            nxt &= ~seen
            for v in bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        rows.append(tuple(dist))
    return tuple(rows)


def component_mask(G: Graph, start: int = 0) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(G: Graph) -> bool:
    return component_mask(G) == G.full


def require_connected(G: Graph, what: str = "this operation") -> None:
    if not is_connected(G):
        raise GraphInputError(f"{what} requires a connected graph")


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``S``; returns it with ``mapping[new] = old``."""
    mapping = tuple(sorted(set(S)))
    if not mapping:
        raise GraphInputError("induced subgraph needs a nonempty vertex set")
    for v in mapping:
        if not 0 <= v < G.n:
            raise GraphInputError(f"vertex {v} is not in the graph")
    index = {old: new for new, old in enumerate(mapping)}
    adj = []
    for old in mapping:
        row = 0
        for w in bits(G.adj[old]):
            if w in index:
                row |= 1 << index[w]
        adj.append(row)
    return Graph(len(mapping), tuple(adj)), mapping


def induced_edge_mask(G: Graph, vertices: Sequence[int]) -> int:
    """Adjacency of ``G[vertices]`` packed as a bitmask over pairs (i<j) of positions."""
    out = 0
    k = 0
    for j in range(1, len(vertices)):
        row = G.adj[vertices[j]]
        for i in range(j):
            if row >> vertices[i] & 1:
                out |= 1 << k
            k += 1
    return out


# --------------------------------------------------------------------------
# induced cycles

def enumerate_induced_cycles(G: Graph, min_len: int = 3) -> list[CycleOccurrence]:
    """All chordless cycles of length >= ``min_len``, each once.

    A cycle is reported from its smallest vertex, oriented so that the second
    vertex is smaller than the last. Output is sorted by that tuple.
    """
    if min_len < 3:
        raise GraphInputError("min_len must be at least 3")
    adj = G.adj
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], interior: int) -> None:
        s = path[0]
        last = path[-1]
        # interior: vertices strictly between s and last
        for w in bits(adj[last] & ~((1 << (s + 1)) - 1)):
            if adj[w] & interior or w in path:
                continue
            if adj[w] >> s & 1:
                if len(path) >= 2 and path[1] < w and len(path) + 1 >= min_len:
                    found.append(tuple(path) + (w,))
                continue
            path.append(w)
            extend(path, interior | (1 << last))
            path.pop()

    for s in range(G.n):
        for a in bits(adj[s] & ~((1 << (s + 1)) - 1)):
            extend([s, a], 0)
    found.sort()
    return [CycleOccurrence(c) for c in found]


def is_cycle_of(G: Graph, c: CycleOccurrence) -> bool:
    vs = c.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < G.n for v in vs):
        return False
    return all(G.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def is_chordless(G: Graph, c: CycleOccurrence) -> bool:
    k = len(c.vertices)
    for i, j in itertools.combinations(range(k), 2):
        if (j - i) % k in (1, k - 1):
            continue
        if G.has_edge(c.vertices[i], c.vertices[j]):
            return False
    return True


def is_isometric_cycle(G: Graph, c: CycleOccurrence, dist=None) -> bool:
    if not is_cycle_of(G, c):
        raise GraphInputError(f"{c.vertices} is not a cycle of the graph")
    d = dist if dist is not None else bfs_all_pairs(G)
    k = len(c.vertices)
    for i, j in itertools.combinations(range(k), 2):
        along = min(j - i, k - (j - i))
        if d[c.vertices[i]][c.vertices[j]] != along:
            return False
    return True


# --------------------------------------------------------------------------
# named graphs and generators
#
# Canonical labelings (fixed; fixture witnesses depend on them):
#   house:  square 0-1-2-3-0, apex 4 adjacent to 0 and 1
#   domino: 6-cycle 0-1-2-3-4-5-0 with rung 1-4 (0,2,3,5 are the corners)
#   fan3:   path 0-1-2-3, hub 4 adjacent to all four
#   pgraph: square 0-1-2-3-0, pendant 4 attached to 0

def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def house() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])


def domino() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])


def fan3() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])


def pgraph() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def er_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample, deterministic in ``(n, p, seed)``."""
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected(n: int, p: float, rng: random.Random, max_tries: int = 100000) -> Graph:
    """Rejection-sample G(n, p) until connected."""
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(max_tries):
        G = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(G):
            return G
    raise RuntimeError(f"no connected G({n}, {p}) sample after {max_tries} tries")


GENERATORS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "house": house,
    "domino": domino,
    "fan3": fan3,
    "pgraph": pgraph,
    "er": er_random,
}


def generate(kind: str, n: int | None = None, p: float | None = None, seed: int = 0) -> Graph:
    if kind in ("complete", "cycle", "path"):
        if n is None or n < 1:
            raise GraphInputError(f"{kind} needs n >= 1")
        return GENERATORS[kind](n)
    if kind in ("er", "er_random"):
        if n is None or p is None:
            raise GraphInputError("er needs n and p")
        return er_random(n, p, seed)
    if kind in GENERATORS:
        return GENERATORS[kind]()
    raise GraphInputError(f"unknown graph kind {kind!r}")


# --------------------------------------------------------------------------
# exhaustive corpora

def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices (1 <= n <= 6)."""
    if not 1 <= n <= 6:
        raise GraphInputError(f"labeled enumeration is limited to 1 <= n <= 6, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if code >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        G = Graph(n, tuple(adj))
        if is_connected(G):
            yield G


def enumerate_connected_unlabeled(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs (n <= 7).

    Backed by the networkx graph atlas.
    """
    if not 1 <= n <= 7:
        raise GraphInputError(f"the graph atlas covers 1 <= n <= 7, got {n}")
    import networkx as nx

    for H in nx.graph_atlas_g():
        if H.number_of_nodes() != n or not nx.is_connected(H):
            continue
        yield Graph.from_edges(n, H.edges())
