"""Exhaustive decision procedures for the betweenness axioms.

Each axiom is a universally quantified statement over the ground set. The
sweep visits assignments in lexicographic order of the axiom's variables, so
the first falsifying assignment found is the lexicographically smallest one
and doubles as the witness.

Quantifier domains: (J0), (J0') and (J2') range over pairwise-distinct
u, x, y, v; (J3) requires x != y; everything else ranges over all tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph_core import bits
from .transit import TransitFunction

AXIOM_IDS = ("t1", "t2", "t3", "b1", "b2", "b3", "b4",
             "J0", "J0p", "J1", "J2", "J2p", "J3", "J3p")

DISPLAY = {a: a.replace("p", "'") if a.startswith("J") else a for a in AXIOM_IDS}

VARIABLES = {
    "t1": ("u", "v"),
    "t2": ("u", "v"),
    "t3": ("u",),
    "b1": ("u", "v", "x"),
    "b2": ("u", "v", "x", "y"),
    "b3": ("u", "v", "x", "y"),
    "b4": ("u", "v", "x"),
    "J0": ("u", "x", "y", "v"),
    "J0p": ("u", "x", "y", "v"),
    "J1": ("u", "v", "w"),
    "J2": ("u", "x", "v"),
    "J2p": ("u", "x", "y", "v"),
    "J3": ("u", "x", "y", "v"),
    "J3p": ("u", "x", "y", "v"),
}

DISTINCT = frozenset({"J0", "J0p", "J2p"})

MAX_PROFILE_N = 32


def parse_axiom(name: str) -> str:
    """Map an I/O name such as ``"J2'"`` or ``"j2p"`` to its axiom id."""
    key = name.strip()
    key = key.replace("′", "'").replace("'", "p")
    for a in AXIOM_IDS:
        if a.lower() == key.lower():
            return a
    raise ValueError(f"unknown axiom {name!r}; expected one of "
                     + ", ".join(DISPLAY[a] for a in AXIOM_IDS))


def parse_axiom_list(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return list(AXIOM_IDS)
    return [parse_axiom(part) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    holds: bool
    witness: dict | None = None
    tuples_checked: int = 0
    note: str = ""

    @property
    def name(self) -> str:
        return DISPLAY[self.axiom]

    def witness_text(self, R: TransitFunction | None = None) -> str:
        if self.witness is None:
            return ""
        name = R.name if R is not None else str
        return ", ".join(f"{k}={name(v)}" for k, v in self.witness.items())

    def to_dict(self, R: TransitFunction | None = None) -> dict:
        out = {"axiom": self.name, "holds": self.holds, "tuples_checked": self.tuples_checked}
        if self.witness is not None:
            name = R.name if R is not None and R.labels else (lambda v: v)
            out["witness"] = {k: name(v) for k, v in self.witness.items()}
        if self.note:
            out["note"] = self.note
        return out


AxiomProfile = dict


# --------------------------------------------------------------------------
# literal evaluation of one assignment (used for witness replay and as the
# brute-force reference sweep)

def in_domain(axiom: str, a: dict) -> bool:
    if axiom in DISTINCT:
        return len({a["u"], a["x"], a["y"], a["v"]}) == 4
    if axiom == "J3":
        return a["x"] != a["y"]
    return True


def evaluate(R: TransitFunction, axiom: str, a: dict) -> bool:
    """Truth value of the axiom's body under assignment ``a`` (True = not falsified)."""
    if not in_domain(axiom, a):
        return True

    def S(p, q):
        return set(R.members(p, q))

    def pair(p, q):
        return S(p, q) == {p, q}

    g = a.get
    u, v, x, y, w = g("u"), g("v"), g("x"), g("y"), g("w")
    if axiom == "t1":
        return u in S(u, v)
    if axiom == "t2":
        return S(u, v) == S(v, u)
    if axiom == "t3":
        return S(u, u) == {u}
    if axiom == "b1":
        return not (x in S(u, v) and x != v) or v not in S(u, x)
    if axiom == "b2":
        return not (x in S(u, v) and y in S(u, x)) or y in S(u, v)
    if axiom == "b3":
        return not (x in S(u, v) and y in S(u, x)) or x in S(y, v)
    if axiom == "b4":
        return x not in S(u, v) or S(u, x) & S(x, v) == {x}
    if axiom == "J0":
        return not (x in S(u, y) and y in S(x, v)) or x in S(u, v)
    if axiom == "J0p":
        hyp = x in S(u, y) and y in S(x, v) and S(u, y) & S(x, v) <= {u, x, y, v}
        return not hyp or x in S(u, v)
    if axiom == "J1":
        if not (w in S(u, v) and w != u and w != v):
            return True
        for u1 in S(u, w) - S(v, w):
            for v1 in S(v, w) - S(u, w):
                if pair(u1, w) and pair(v1, w) and w in S(u1, v1):
                    return True
        return False
    if axiom == "J2":
        hyp = pair(u, x) and pair(x, v) and not pair(u, v)
        return not hyp or x in S(u, v)
    if axiom == "J2p":
        hyp = (x in S(u, y) and y in S(x, v) and pair(u, x) and pair(x, y)
               and pair(y, v) and not pair(u, v))
        return not hyp or x in S(u, v)
    if axiom in ("J3", "J3p"):
        hyp = x in S(u, y) and y in S(x, v) and not pair(u, v)
        if axiom == "J3p":
            hyp = hyp and not pair(x, y)
        return not hyp or x in S(u, v)
    raise ValueError(f"unknown axiom {axiom!r}")


def brute_force_check(R: TransitFunction, axiom: str) -> AxiomResult:
    """Reference sweep: every assignment in lexicographic order through :func:`evaluate`."""
    names = VARIABLES[axiom]
    count = 0
    for combo in itertools.product(range(R.n), repeat=len(names)):
        a = dict(zip(names, combo))
        count += 1
        if not evaluate(R, axiom, a):
            return AxiomResult(axiom, False, a, count)
    return AxiomResult(axiom, True, None, count)


# --------------------------------------------------------------------------
# fast bitset sweeps; each returns (witness tuple | None, tuples examined)

def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _sweep_t1(R):
    n, M = R.n, R.matrix
    for u in range(n):
        for v in range(n):
            if not M[u][v] >> u & 1:
                return (u, v), u * n + v + 1
    return None, n * n


def _sweep_t3(R):
    for u in range(R.n):
        if R.matrix[u][u] != 1 << u:
            return (u,), u + 1
    return None, R.n


def _sweep_b1(R):
    n, M, C = R.n, R.matrix, R.containing
    seen = 0
    for u in range(n):
        for v in range(n):
            seen += n
            bad = M[u][v] & ~(1 << v) & C[u][v]
            if bad:
                return (u, v, _low(bad)), seen
    return None, seen


def _sweep_b2(R):
    n, M = R.n, R.matrix
    seen = 0
    for u in range(n):
        Mu = M[u]
        for v in range(n):
            ruv = Mu[v]
            for x in range(n):
                seen += n
                if not ruv >> x & 1:
                    continue
                bad = Mu[x] & ~ruv
                if bad:
                    return (u, v, x, _low(bad)), seen
    return None, seen


def _sweep_b3(R):
    n, M, C = R.n, R.matrix, R.containing
    seen = 0
    for u in range(n):
        Mu = M[u]
        for v in range(n):
            ruv = Mu[v]
            Cv = C[v]
            for x in range(n):
                seen += n
                if not ruv >> x & 1:
                    continue
                bad = Mu[x] & ~Cv[x]
                if bad:
                    return (u, v, x, _low(bad)), seen
    return None, seen


def _sweep_b4(R):
    n, M = R.n, R.matrix
    seen = 0
    for u in range(n):
        for v in range(n):
            for x in range(n):
                seen += 1
                if M[u][v] >> x & 1 and M[u][x] & M[x][v] != 1 << x:
                    return (u, v, x), seen
    return None, seen


def _sweep_four_point(R, axiom):
    """Shared sweep for J0, J0', J2', J3, J3' over (u, x, y, v)."""
    n, M, C, P, full = R.n, R.matrix, R.containing, R.pair_mask, R.full
    distinct = axiom in DISTINCT
    seen = 0
    for u in range(n):
        bu = 1 << u
        Mu, Cu, Pu = M[u], C[u], P[u]
        for x in range(n):
            if distinct and x == u:
                continue
            bx = 1 << x
            if axiom == "J2p" and not Pu >> x & 1:
                seen += n * n
                continue
            not_concl = ~Cu[x] & full
            for y in range(n):
                seen += n
                if (distinct or axiom == "J3") and y == x:
                    continue
                if distinct and y == u:
                    continue
                if not Mu[y] >> x & 1:
                    continue
                by = 1 << y
                bad = C[x][y] & not_concl
                if axiom == "J0":
                    bad &= ~(bu | bx | by)
                elif axiom == "J0p":
                    bad &= ~(bu | bx | by)
                    ruy = Mu[y]
                    keep = 0
                    for v in bits(bad):
                        if not (ruy & M[x][v]) & ~(bu | bx | by | (1 << v)):
                            keep |= 1 << v
                    bad = keep
                elif axiom == "J2p":
                    if not P[x] >> y & 1:
                        continue
                    bad &= P[y] & ~Pu & ~(bu | bx | by)
                elif axiom == "J3":
                    bad &= ~Pu
                elif axiom == "J3p":
                    if P[x] >> y & 1:
                        continue
                    bad &= ~Pu
                if bad:
                    return (u, x, y, _low(bad)), seen
    return None, seen


def _sweep_J2(R):
    n, C, P = R.n, R.containing, R.pair_mask
    seen = 0
    for u in range(n):
        for x in range(n):
            seen += n
            if not P[u] >> x & 1:
                continue
            bad = P[x] & ~P[u] & ~C[u][x]
            if bad:
                return (u, x, _low(bad)), seen
    return None, seen


def _sweep_J1(R):
    n, M, C, P = R.n, R.matrix, R.containing, R.pair_mask
    seen = 0
    for u in range(n):
        for v in range(n):
            ruv = M[u][v] & ~(1 << u) & ~(1 << v)
            for w in range(n):
                seen += 1
                if not ruv >> w & 1:
                    continue
                ruw, rvw = M[u][w], M[v][w]
                A = ruw & ~rvw & P[w]
                B = rvw & ~ruw & P[w]
                if not any(C[u1][w] & B for u1 in bits(A)):
                    return (u, v, w), seen
    return None, seen


_SWEEPS: dict[str, Callable] = {
    "t1": _sweep_t1,
    "t3": _sweep_t3,
    "b1": _sweep_b1,
    "b2": _sweep_b2,
    "b3": _sweep_b3,
    "b4": _sweep_b4,
    "J1": _sweep_J1,
    "J2": _sweep_J2,
}
for _a in ("J0", "J0p", "J2p", "J3", "J3p"):
    _SWEEPS[_a] = (lambda a: lambda R: _sweep_four_point(R, a))(_a)


def check_axiom(R: TransitFunction, axiom: str) -> AxiomResult:
    axiom = parse_axiom(axiom) if axiom not in AXIOM_IDS else axiom
    if axiom == "t2":
        return AxiomResult("t2", True, None, 0, note="structural: one entry per unordered pair")
    witness, seen = _SWEEPS[axiom](R)
    if witness is None:
        return AxiomResult(axiom, True, None, seen)
    return AxiomResult(axiom, False, dict(zip(VARIABLES[axiom], witness)), seen)


def check_profile(R: TransitFunction, axioms: Iterable[str] = AXIOM_IDS) -> AxiomProfile:
    if R.n > MAX_PROFILE_N:
        raise ValueError(f"axiom profiles are limited to n <= {MAX_PROFILE_N}")
    return {a: check_axiom(R, a) for a in axioms}


def holds_all(R: TransitFunction, axioms: Iterable[str]) -> bool:
    return all(check_axiom(R, a).holds for a in axioms)


def replay_witness(R: TransitFunction, result: AxiomResult) -> bool:
    """True iff the result's witness really falsifies its axiom on ``R``."""
    if result.witness is None:
        return False
    return in_domain(result.axiom, result.witness) and not evaluate(R, result.axiom, result.witness)


@dataclass(frozen=True)
class ImplicationVerdict:
    verdict: str  # "vacuous" | "consistent" | "counterexample"
    premises: tuple[str, ...]
    conclusion: str
    failed_premise: str | None = None
    witness: dict | None = None
    extra: dict = field(default_factory=dict)


def implication_check(R: TransitFunction, premises: Iterable[str], conclusion: str) -> ImplicationVerdict:
    prem = tuple(parse_axiom(p) if p not in AXIOM_IDS else p for p in premises)
    conclusion = parse_axiom(conclusion) if conclusion not in AXIOM_IDS else conclusion
    for p in prem:
        if not check_axiom(R, p).holds:
            return ImplicationVerdict("vacuous", prem, conclusion, failed_premise=p)
    res = check_axiom(R, conclusion)
    if res.holds:
        return ImplicationVerdict("consistent", prem, conclusion)
    return ImplicationVerdict("counterexample", prem, conclusion, witness=res.witness)


__all__ = [
    "AXIOM_IDS", "DISPLAY", "VARIABLES", "AxiomResult", "ImplicationVerdict",
    "brute_force_check", "check_axiom", "check_profile", "evaluate", "holds_all",
    "implication_check", "parse_axiom", "parse_axiom_list", "replay_witness",
]
