"""Transit functions over ``V = 0..n-1`` and the graph constructions I_G, J_G, G_R.

A :class:`TransitFunction` stores one vertex bitmask per unordered pair, so
symmetry is structural. The diagonal defaults to ``R(u,u) = {u}`` but may be
overridden (documents are allowed to describe invalid functions; checking
them is :func:`validate_t`'s job).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .graph_core import (
    Graph,
    GraphInputError,
    bfs_all_pairs,
    bits,
    require_connected,
)

INDUCED_PATH_MAX_N = 14


class CapabilityError(RuntimeError):
    """The request is outside the desk-scale limits of an exponential routine."""


@dataclass(frozen=True, eq=False)
class TransitFunction:
    n: int
    matrix: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        if self.n < 1:
            raise GraphInputError("a transit function needs a nonempty ground set")
        if len(self.matrix) != self.n or any(len(r) != self.n for r in self.matrix):
            raise GraphInputError("transit matrix must be n x n")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphInputError("need exactly one label per vertex")

    @classmethod
    def from_pairs(cls, n: int, sets: Mapping[tuple[int, int], Iterable[int] | int],
                   default: str = "pair", labels: Sequence[str] | None = None,
                   diagonal: Mapping[int, Iterable[int] | int] | None = None) -> "TransitFunction":
        """Build from ``{(u, v): members}``; unlisted pairs follow ``default``.

        ``default="pair"`` maps unlisted pairs to ``{u, v}``; ``"none"`` to the
        empty set. Members may be an iterable of vertices or a ready bitmask.
        """
        if default not in ("pair", "none"):
            raise GraphInputError(f"unknown default rule {default!r}")
        rows = [[0] * n for _ in range(n)]
        for u in range(n):
            rows[u][u] = 1 << u
            for v in range(u + 1, n):
                if default == "pair":
                    rows[u][v] = rows[v][u] = (1 << u) | (1 << v)
        for (u, v), members in sets.items():
            _check_index(u, n)
            _check_index(v, n)
            mask = _to_mask(members, n)
            rows[u][v] = rows[v][u] = mask
        for u, members in (diagonal or {}).items():
            _check_index(u, n)
            rows[u][u] = _to_mask(members, n)
        return cls(n, tuple(tuple(r) for r in rows),
                   tuple(labels) if labels is not None else None)

    def __call__(self, u: int, v: int) -> int:
        return self.matrix[u][v]

    def members(self, u: int, v: int) -> list[int]:
        return list(bits(self.matrix[u][v]))

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def with_labels(self, labels: Sequence[str] | None) -> "TransitFunction":
        return TransitFunction(self.n, self.matrix, tuple(labels) if labels else None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransitFunction):
            return NotImplemented
        return self.n == other.n and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.n, self.matrix))

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def pair_mask(self) -> tuple[int, ...]:
        """``pair_mask[u]`` = vertices v (including u itself) with R(u,v) = {u,v}."""
        out = []
        for u in range(self.n):
            m = 0
            for v in range(self.n):
                if self.matrix[u][v] == (1 << u) | (1 << v):
                    m |= 1 << v
            out.append(m)
        return tuple(out)

    @cached_property
    def containing(self) -> tuple[tuple[int, ...], ...]:
        """``containing[a][b]`` = vertices c with b in R(a, c)."""
        n = self.n
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            row = self.matrix[a]
            for c in range(n):
                for b in bits(row[c]):
                    table[a][b] |= 1 << c
        return tuple(tuple(r) for r in table)

    def differing_pairs(self, other: "TransitFunction") -> list[tuple[int, int]]:
        """Unordered pairs (u <= v) where the two functions disagree."""
        if self.n != other.n:
            raise GraphInputError("transit functions live on different ground sets")
        return [(u, v) for u in range(self.n) for v in range(u, self.n)
                if self.matrix[u][v] != other.matrix[u][v]]


def _check_index(v, n: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise GraphInputError(f"vertex index {v!r} out of range 0..{n - 1}")


def _to_mask(members, n: int) -> int:
    if isinstance(members, int):
        if members >> n:
            raise GraphInputError("member mask has bits outside the ground set")
        return members
    mask = 0
    for w in members:
        _check_index(w, n)
        mask |= 1 << w
    return mask


# --------------------------------------------------------------------------
# (t1)-(t3)

@dataclass(frozen=True)
class TValidation:
    t1_ok: bool
    t2_ok: bool
    t3_ok: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.t1_ok and self.t2_ok and self.t3_ok


def validate_t(R: TransitFunction) -> TValidation:
    witnesses = {}
    t1_ok = True
    for u in range(R.n):
        for v in range(R.n):
            if not R(u, v) >> u & 1:
                t1_ok = False
                witnesses["t1"] = {"u": u, "v": v}
                break
        if not t1_ok:
            break
    t3_ok = True
    for u in range(R.n):
        if R(u, u) != 1 << u:
            t3_ok = False
            witnesses["t3"] = {"u": u}
            break
    # storage is one entry per unordered pair
    return TValidation(t1_ok, True, t3_ok, witnesses)


# --------------------------------------------------------------------------
# graph constructions

def interval_function(G: Graph) -> TransitFunction:
    require_connected(G, "the interval function")
    d = bfs_all_pairs(G)
    n = G.n
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        du = d[u]
        for v in range(u, n):
            dv = d[v]
            target = du[v]
            mask = 0
            for w in range(n):
                if du[w] + dv[w] == target:
                    mask |= 1 << w
            rows[u][v] = rows[v][u] = mask
    return TransitFunction(n, tuple(tuple(r) for r in rows))


def induced_path_function(G: Graph) -> TransitFunction:
    """J_G by exhaustive enumeration of induced paths from every source."""
    if G.n > INDUCED_PATH_MAX_N:
        raise CapabilityError(
            f"the induced-path function is exponential and limited to desk-scale "
            f"graphs with n <= {INDUCED_PATH_MAX_N}; got n = {G.n}")
    require_connected(G, "the induced-path function")
    n = G.n
    adj = G.adj
    rows = [[0] * n for _ in range(n)]

    for s in range(n):
        acc = rows[s]
        acc[s] = 1 << s
        stack = [(s, 1 << s)]
        while stack:
            last, pmask = stack.pop()
            others = pmask & ~(1 << last)
            for w in bits(adj[last] & ~pmask):
                if adj[w] & others:
                    continue
                nmask = pmask | (1 << w)
                acc[w] |= nmask
                stack.append((w, nmask))
    return TransitFunction(n, tuple(tuple(r) for r in rows))


def underlying_graph(R: TransitFunction) -> Graph:
    edges = [(u, v) for u in range(R.n) for v in range(u + 1, R.n)
             if R(u, v) == (1 << u) | (1 << v)]
    return Graph.from_edges(R.n, edges)


# --------------------------------------------------------------------------
# documents

def tf_from_document(doc) -> TransitFunction:
    """Load ``{n, default, vertices?, entries: [{u, v, set}]}`` (dict or JSON text).

    ``vertices`` names the ground set in order; when given, ``u``, ``v`` and set
    members may be written as those names.
    """
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"transit-function document is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise GraphInputError("transit-function document must be an object")
    labels = doc.get("vertices")
    n = doc.get("n", len(labels) if labels else None)
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"'n' must be a positive integer, got {n!r}")
    if labels is not None and len(labels) != n:
        raise GraphInputError("'vertices' must list exactly n names")
    index = {str(name): i for i, name in enumerate(labels)} if labels else {}

    def vid(x):
        if isinstance(x, str) and x in index:
            return index[x]
        if isinstance(x, int) and not isinstance(x, bool):
            _check_index(x, n)
            return x
        raise GraphInputError(f"unknown vertex {x!r}")

    sets = {}
    diagonal = {}
    for k, entry in enumerate(doc.get("entries", [])):
        try:
            u, v, members = entry["u"], entry["v"], entry["set"]
        except (KeyError, TypeError):
            raise GraphInputError(f"entry #{k} must have keys u, v, set") from None
        u, v = vid(u), vid(v)
        mask = 0
        for w in members:
            mask |= 1 << vid(w)
        if u == v:
            diagonal[u] = mask
        else:
            sets[(u, v)] = mask
    return TransitFunction.from_pairs(n, sets, default=doc.get("default", "pair"),
                                      labels=labels, diagonal=diagonal)


def tf_to_document(R: TransitFunction, default: str = "pair") -> dict:
    """Serialise losslessly; with ``default="pair"`` only non-{u,v} entries are listed."""
    name = (lambda v: R.labels[v]) if R.labels else (lambda v: v)
    entries = []
    for u in range(R.n):
        for v in range(u, R.n):
            mask = R(u, v)
            if default == "pair" and mask == (1 << u) | (1 << v):
                continue
            entries.append({"u": name(u), "v": name(v), "set": [name(w) for w in bits(mask)]})
    doc = {"n": R.n, "default": default, "entries": entries}
    if R.labels:
        doc["vertices"] = list(R.labels)
    return doc


def load_tf(path) -> TransitFunction:
    with open(path) as fh:
        return tf_from_document(fh.read())


def save_tf(R: TransitFunction, path, default: str = "pair") -> None:
    with open(path, "w") as fh:
        json.dump(tf_to_document(R, default), fh, indent=1)
        fh.write("\n")
