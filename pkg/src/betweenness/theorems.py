"""Executable versions of the characterisation theorems and their corpus runner.

Claims come in two flavours. GRAPH claims are equivalences about the
interval function of a connected graph and are evaluated in both
directions. TF claims are implications about an arbitrary transit function:
when a premise fails the instance is *vacuous*, otherwise the conclusion is
checked and a failure is reported with a replayable witness.
"""

from __future__ import annotations

import json
import os
import random
import re
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator

from . import recognizers as rec
from .axioms import DISPLAY, AxiomResult, check_axiom
from .fixtures import all_fixtures
from .graph_core import (
    Graph,
    GraphInputError,
    enumerate_connected_labeled,
    enumerate_induced_cycles,
    is_connected,
    parse_graph6,
    random_connected,
)
from .transit import (
    INDUCED_PATH_MAX_N,
    CapabilityError,
    TransitFunction,
    induced_path_function,
    interval_function,
    tf_from_document,
    tf_to_document,
    underlying_graph,
)

GRAPH_EQUIVALENCES = ("PROP_J2P", "THM_J3_HHP", "THM_J2PJ3P_DH", "THM_J0_PTOLEMAIC", "THM_J0P_BRIDGED")


@dataclass(frozen=True)
class Claim:
    id: str
    kinds: frozenset
    statement: str
    premises: tuple[str, ...] = ()


def _claim(id, kinds, statement, premises=()):
    return Claim(id, frozenset(kinds), statement, tuple(premises))


CLAIMS = {c.id: c for c in [
    _claim("IMP_T1B4_T3", {"TF"}, "(t1) and (b4) imply (t3)", ("t1", "b4")),
    _claim("IMP_B3_B4_B1", {"TF"}, "(t1),(t2),(t3),(b3) imply (b4); (t1),(b4) imply (b1)"),
    _claim("PROP_J2P", {"GRAPH"}, "I_G satisfies (J2') iff G is house-, C5-, 3-fan-free"),
    _claim("LEM_DHG", {"TF"}, "(b1),(J2),(J2'),(J3') imply G_R is HHD-free",
           ("b1", "J2", "J2p", "J3p")),
    _claim("THM_HHD3FAN", {"GRAPH"}, "G is distance hereditary iff G is HHD3-fan-free"),
    _claim("THM_J3_HHP", {"GRAPH"}, "I_G satisfies (J3) iff G is HHP3-fan-free"),
    _claim("THM_J2PJ3P_DH", {"GRAPH"}, "I_G satisfies (J2') and (J3') iff G is distance hereditary"),
    _claim("LEM_HHD3FAN_GR", {"TF"}, "(b3),(J2),(J2'),(J3') imply G_R is HHD3-fan-free",
           ("b3", "J2", "J2p", "J3p")),
    _claim("THM_J0_PTOLEMAIC", {"GRAPH"}, "I_G satisfies (J0) iff G is Ptolemaic"),
    _claim("THM_J0J2_CNFREE", {"TF"}, "(J0),(J2) imply G_R has no induced C_k, k >= 4", ("J0", "J2")),
    _claim("LEM_B1B2_CONN", {"TF"}, "(b1),(b2) imply G_R is connected", ("b1", "b2")),
    _claim("LEM_J0B3_B2CONN", {"TF"}, "(J0),(b3) imply (b2) and G_R connected", ("J0", "b3")),
    _claim("THM_B3J0J2_PTOL_R_EQ_I", {"TF"}, "(b3),(J0),(J2) imply G_R Ptolemaic and R = I_{G_R}",
           ("b3", "J0", "J2")),
    _claim("THM_PTOL_CH", {"TF", "GRAPH"},
           "G Ptolemaic and R = I_G iff R has (b3),(J0),(J2) and R(u,v)={u,v} implies uv in E(G)",
           ("b3", "J0", "J2")),
    _claim("IMP_J0_J0P", {"TF"}, "(J0) implies (J0'), (J2') and (J3')", ("J0",)),
    _claim("IMP_J3_J2P_J3P", {"TF"}, "(J3) implies (J2') and (J3')", ("J3",)),
    _claim("THM_J0P_BRIDGED", {"GRAPH"}, "I_G satisfies (J0') iff G is bridged"),
    _claim("PROP_B2B3_J1", {"TF"}, "(b2),(b3) imply (J1)", ("b2", "b3")),
    _claim("PROP_J1B2_B1", {"TF"}, "(J1),(b2) imply (b1)", ("J1", "b2")),
    _claim("THM_INDUCED", {"TF"},
           "(b1),(b2),(J1),(J2),(J2'),(J3') imply G_R HHD-free and R = J_{G_R}",
           ("b1", "b2", "J1", "J2", "J2p", "J3p")),
    _claim("THM_DISH", {"TF"},
           "(b2),(b3),(J2),(J2'),(J3') imply G_R HHD3-fan-free and R = J_{G_R}",
           ("b2", "b3", "J2", "J2p", "J3p")),
    _claim("THM_DISH1", {"TF"},
           "(b2),(b3),(J2),(J2'),(J3') imply G_R distance hereditary and R = I_{G_R}",
           ("b2", "b3", "J2", "J2p", "J3p")),
    _claim("THM_DH_CH", {"TF", "GRAPH"},
           "G distance hereditary and R = I_G iff R has (b2),(b3),(J2),(J2'),(J3') "
           "and R(u,v)={u,v} implies uv in E(G)",
           ("b2", "b3", "J2", "J2p", "J3p")),
]}

CLAIM_IDS = tuple(CLAIMS)
GRAPH_CLAIMS = tuple(c for c in CLAIM_IDS if "GRAPH" in CLAIMS[c].kinds)
TF_CLAIMS = tuple(c for c in CLAIM_IDS if "TF" in CLAIMS[c].kinds)


class ClaimUsageError(ValueError):
    """A claim was evaluated on the wrong kind of instance."""


@dataclass(frozen=True)
class ClaimOutcome:
    claim: str
    instance: str
    verdict: str  # consistent | vacuous | counterexample
    witness: dict | None = None


# --------------------------------------------------------------------------
# per-instance caches

class _Axioms:
    def __init__(self, R: TransitFunction):
        self.R = R
        self._res: dict[str, AxiomResult] = {}

    def __getitem__(self, a: str) -> AxiomResult:
        if a not in self._res:
            self._res[a] = check_axiom(self.R, a)
        return self._res[a]

    def failed(self, axioms: Iterable[str]) -> str | None:
        for a in axioms:
            if not self[a].holds:
                return a
        return None


class GraphCase:
    """Lazily computed facts about one connected graph."""

    def __init__(self, G: Graph, instance: str | None = None):
        if not is_connected(G):
            raise GraphInputError("graph claims are stated for connected graphs")
        self.G = G
        self.instance = instance or G.to_graph6()
        self._reports: dict[str, rec.RecognitionReport] = {}

    @cached_property
    def I(self) -> TransitFunction:
        return interval_function(self.G)

    @cached_property
    def axioms(self) -> _Axioms:
        return _Axioms(self.I)

    def report(self, cls: str) -> rec.RecognitionReport:
        if cls not in self._reports:
            self._reports[cls] = rec.RECOGNIZERS[cls](self.G)
        return self._reports[cls]


class TFCase:
    """Lazily computed facts about one transit function and its underlying graph."""

    def __init__(self, R: TransitFunction, instance: str):
        self.R = R
        self.instance = instance

    @cached_property
    def axioms(self) -> _Axioms:
        return _Axioms(self.R)

    @cached_property
    def GR(self) -> Graph:
        return underlying_graph(self.R)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.GR)

    @cached_property
    def I_GR(self) -> TransitFunction:
        return interval_function(self.GR)

    @cached_property
    def J_GR(self) -> TransitFunction:
        return induced_path_function(self.GR)


def _names(R: TransitFunction, vs) -> list:
    return [R.name(v) for v in vs]


def _axiom_witness(res: AxiomResult, R: TransitFunction | None = None) -> dict:
    out = {"axiom": DISPLAY[res.axiom], "holds": res.holds}
    if res.witness is not None:
        out["assignment"] = {k: (R.name(v) if R is not None else v) for k, v in res.witness.items()}
    return out


# --------------------------------------------------------------------------
# GRAPH claims

def _induced_c5(G: Graph):
    for c in enumerate_induced_cycles(G, 5):
        if len(c.vertices) == 5:
            return rec.PatternOccurrence("hole", c.vertices)
    return None


def _iff(c: str, case: GraphCase, lhs: bool, rhs: bool, detail: dict) -> ClaimOutcome:
    if lhs == rhs:
        return ClaimOutcome(c, case.instance, "consistent")
    return ClaimOutcome(c, case.instance, "counterexample", {"axiom_side": lhs, "graph_side": rhs, **detail})


def _axiom_side(case: GraphCase, axioms) -> tuple[bool, list]:
    results = [case.axioms[a] for a in axioms]
    return all(r.holds for r in results), [_axiom_witness(r) for r in results if not r.holds]


def _class_side(case: GraphCase, cls: str) -> tuple[bool, dict]:
    r = case.report(cls)
    return r.member, r.to_dict()


def verify_graph_claim(c: str, G: Graph, case: GraphCase | None = None) -> ClaimOutcome:
    if c not in CLAIMS:
        raise KeyError(f"unknown claim {c!r}")
    if "GRAPH" not in CLAIMS[c].kinds:
        raise ClaimUsageError(f"{c} is a transit-function claim; use verify_tf_claim")
    case = case or GraphCase(G)
    G = case.G

    if c == "PROP_J2P":
        lhs, fails = _axiom_side(case, ["J2p"])
        occ = (rec.find_induced_pattern(G, "house") or _induced_c5(G)
               or rec.find_induced_pattern(G, "fan3"))
        return _iff(c, case, lhs, occ is None,
                    {"axiom_failures": fails, "pattern": occ.to_dict() if occ else None})

    simple = {
        "THM_J3_HHP": (["J3"], "HHP3fan_free"),
        "THM_J2PJ3P_DH": (["J2p", "J3p"], "distance_hereditary"),
        "THM_J0_PTOLEMAIC": (["J0"], "ptolemaic"),
        "THM_J0P_BRIDGED": (["J0p"], "bridged"),
    }
    if c in simple:
        axioms, cls = simple[c]
        lhs, fails = _axiom_side(case, axioms)
        rhs, report = _class_side(case, cls)
        return _iff(c, case, lhs, rhs, {"axiom_failures": fails, "report": report})

    if c == "THM_HHD3FAN":
        patterns = case.report("HHD3fan_free").member
        pruning = rec.dh_oracle_pruning(G)
        routes = {"forbidden_patterns": patterns, "pruning": pruning}
        if G.n <= rec.DEFINITION_MAX_N:
            routes["definition"] = rec.dh_oracle_definition(G)
        if len(set(routes.values())) == 1:
            return ClaimOutcome(c, case.instance, "consistent")
        return ClaimOutcome(c, case.instance, "counterexample", {"routes": routes})

    # backward direction of the two characterisations: take R := I_G
    premises = CLAIMS[c].premises
    cls = "ptolemaic" if c == "THM_PTOL_CH" else "distance_hereditary"
    lhs = case.report(cls).member
    failed = case.axioms.failed(premises)
    edge_bad = _edge_axiom_violation(case.I, G)
    rhs = failed is None and edge_bad is None
    detail = {"report": case.report(cls).to_dict()}
    if failed:
        detail["failed_premise"] = _axiom_witness(case.axioms[failed])
    if edge_bad:
        detail["edge_axiom_violation"] = list(edge_bad)
    return _iff(c, case, lhs, rhs, detail)


def _edge_axiom_violation(R: TransitFunction, G: Graph):
    for u in range(R.n):
        for v in range(u + 1, R.n):
            if R(u, v) == (1 << u) | (1 << v) and not G.has_edge(u, v):
                return (u, v)
    return None


def characterization_holds(c: str, R: TransitFunction, G: Graph) -> bool:
    """Both sides of THM_PTOL_CH / THM_DH_CH for an explicit pair (R, G) on one vertex set."""
    if c not in ("THM_PTOL_CH", "THM_DH_CH"):
        raise ClaimUsageError(f"{c} is not a characterisation claim")
    cls = "ptolemaic" if c == "THM_PTOL_CH" else "distance_hereditary"
    lhs = is_connected(G) and rec.RECOGNIZERS[cls](G).member and R == interval_function(G)
    ax = _Axioms(R)
    rhs = ax.failed(CLAIMS[c].premises) is None and _edge_axiom_violation(R, G) is None
    return lhs == rhs


# --------------------------------------------------------------------------
# TF claims

def _equal_to(R: TransitFunction, other: TransitFunction, label: str):
    diff = R.differing_pairs(other)
    if not diff:
        return True, None
    u, v = diff[0]
    return False, {"reason": f"R differs from {label}", "pair": _names(R, (u, v)),
                   "R": _names(R, R.members(u, v)), label: _names(R, other.members(u, v))}


def _free_of(case: TFCase, cls: str):
    occ = rec.find_first_pattern(case.GR, rec.CLASS_PATTERNS[cls])
    if occ is None:
        return True, None
    return False, {"reason": f"G_R is not {cls}", "pattern": occ.pattern,
                   "vertices": _names(case.R, occ.vertices)}


def _need_connected(case: TFCase):
    if case.connected:
        return True, None
    return False, {"reason": "G_R is disconnected", "G_R_edges": [
        _names(case.R, e) for e in case.GR.edges()]}


def _all(*checks: Callable):
    for chk in checks:
        ok, detail = chk()
        if not ok:
            return False, detail
    return True, None


def _need_J(case: TFCase):
    if case.R.n > INDUCED_PATH_MAX_N:
        raise CapabilityError(
            f"this claim compares against the induced-path function, limited to n <= {INDUCED_PATH_MAX_N}")


def _conclusion(c: str, case: TFCase):
    """Evaluate the conclusion of TF claim ``c`` (premises already hold)."""
    R, ax = case.R, case.axioms

    def axiom_ok(a):
        return lambda: (True, None) if ax[a].holds else (False, _axiom_witness(ax[a], R))

    if c == "IMP_T1B4_T3":
        return axiom_ok("t3")()
    if c == "IMP_J0_J0P":
        return _all(axiom_ok("J0p"), axiom_ok("J2p"), axiom_ok("J3p"))
    if c == "IMP_J3_J2P_J3P":
        return _all(axiom_ok("J2p"), axiom_ok("J3p"))
    if c == "PROP_B2B3_J1":
        return axiom_ok("J1")()
    if c == "PROP_J1B2_B1":
        return axiom_ok("b1")()
    if c == "LEM_DHG":
        return _free_of(case, "HHD_free")
    if c == "LEM_HHD3FAN_GR":
        return _free_of(case, "HHD3fan_free")
    if c == "THM_J0J2_CNFREE":
        cycles = enumerate_induced_cycles(case.GR, 4)
        if not cycles:
            return True, None
        return False, {"reason": "G_R has an induced cycle of length >= 4",
                       "cycle": _names(R, cycles[0].vertices)}
    if c == "LEM_B1B2_CONN":
        return _need_connected(case)
    if c == "LEM_J0B3_B2CONN":
        return _all(axiom_ok("b2"), lambda: _need_connected(case))
    if c in ("THM_B3J0J2_PTOL_R_EQ_I", "THM_PTOL_CH"):
        return _all(lambda: _need_connected(case),
                    lambda: _class_ok(case, "ptolemaic"),
                    lambda: _equal_to(R, case.I_GR, "I_{G_R}"))
    if c in ("THM_DISH1", "THM_DH_CH"):
        return _all(lambda: _need_connected(case),
                    lambda: _class_ok(case, "distance_hereditary"),
                    lambda: _equal_to(R, case.I_GR, "I_{G_R}"))
    if c == "THM_DISH":
        _need_J(case)
        return _all(lambda: _free_of(case, "HHD3fan_free"),
                    lambda: _need_connected(case),
                    lambda: _equal_to(R, case.J_GR, "J_{G_R}"))
    if c == "THM_INDUCED":
        _need_J(case)
        return _all(lambda: _free_of(case, "HHD_free"),
                    lambda: _need_connected(case),
                    lambda: _equal_to(R, case.J_GR, "J_{G_R}"))
    raise KeyError(c)


def _class_ok(case: TFCase, cls: str):
    r = rec.RECOGNIZERS[cls](case.GR)
    if r.member:
        return True, None
    cert = dict(r.certificate)
    if "vertices" in cert:
        cert["vertices"] = _names(case.R, cert["vertices"])
    return False, {"reason": f"G_R is not {cls}", "certificate": cert}


def _sub_implication(case: TFCase, premises, conclusion):
    failed = case.axioms.failed(premises)
    if failed:
        return "vacuous", None
    res = case.axioms[conclusion]
    if res.holds:
        return "consistent", None
    return "counterexample", {"premises": [DISPLAY[p] for p in premises],
                              "conclusion": _axiom_witness(res, case.R)}


def verify_tf_claim(c: str, R: TransitFunction, instance: str = "R",
                    case: TFCase | None = None) -> ClaimOutcome:
    if c not in CLAIMS:
        raise KeyError(f"unknown claim {c!r}")
    if "TF" not in CLAIMS[c].kinds:
        raise ClaimUsageError(f"{c} is a graph claim; use verify_graph_claim")
    case = case or TFCase(R, instance)

    if c == "IMP_B3_B4_B1":
        parts = [_sub_implication(case, ("t1", "t2", "t3", "b3"), "b4"),
                 _sub_implication(case, ("t1", "b4"), "b1")]
        for verdict, w in parts:
            if verdict == "counterexample":
                return ClaimOutcome(c, case.instance, verdict, w)
        verdict = "consistent" if any(v == "consistent" for v, _ in parts) else "vacuous"
        return ClaimOutcome(c, case.instance, verdict)

    failed = case.axioms.failed(CLAIMS[c].premises)
    if failed:
        return ClaimOutcome(c, case.instance, "vacuous")
    ok, detail = _conclusion(c, case)
    if ok:
        return ClaimOutcome(c, case.instance, "consistent")
    return ClaimOutcome(c, case.instance, "counterexample", detail)


# --------------------------------------------------------------------------
# samplers

SAMPLE_MODES = ("uniform", "interval_mutation")


def sample_transit_function(n: int, mode: str, seed, mutations: int | None = None) -> TransitFunction:
    """Random (t1)-(t3)-valid transit function on ``n`` points, deterministic in its arguments.

    ``uniform``: every R(u,v) is {u,v} plus a uniformly random subset of the
    rest. ``interval_mutation``: I_G of a random connected graph with
    ``mutations`` single-vertex toggles (default: 0-3, drawn from the seed).
    """
    if not 3 <= n <= 8:
        raise ValueError(f"sampling supports 3 <= n <= 8, got {n}")
    rng = random.Random(f"{mode}:{n}:{seed}")
    if mode == "uniform":
        sets = {}
        for u in range(n):
            for v in range(u + 1, n):
                rest = rng.getrandbits(n) & ~((1 << u) | (1 << v))
                sets[(u, v)] = rest | (1 << u) | (1 << v)
        return TransitFunction.from_pairs(n, sets)
    if mode == "interval_mutation":
        G = random_connected(n, rng.choice((0.3, 0.5, 0.7)), rng)
        I = interval_function(G)
        k = rng.randint(0, 3) if mutations is None else mutations
        rows = [list(r) for r in I.matrix]
        for _ in range(k):
            u, v = sorted(rng.sample(range(n), 2))
            w = rng.choice([x for x in range(n) if x not in (u, v)])
            rows[u][v] ^= 1 << w
            rows[v][u] = rows[u][v]
        return TransitFunction(n, tuple(tuple(r) for r in rows))
    raise ValueError(f"unknown sampling mode {mode!r}")


# --------------------------------------------------------------------------
# corpus runs

@dataclass
class CorpusSpec:
    exhaustive_max_n: int = 6
    random_count: int = 1000
    random_n_range: tuple[int, int] = (7, 10)
    edge_probabilities: tuple[float, ...] = (0.2, 0.4, 0.6)
    seed: int = 0
    tf_samples: int = 10000
    tf_n_values: tuple[int, ...] = (4, 5, 6)
    tf_modes: tuple[str, ...] = SAMPLE_MODES
    tf_interval_max_n: int = 6
    include_fixtures: bool = True


@dataclass
class ClaimTally:
    claim: str
    instances: int = 0
    consistent: int = 0
    vacuous: int = 0
    counterexamples: list = field(default_factory=list)

    def add(self, o: ClaimOutcome) -> None:
        self.instances += 1
        if o.verdict == "consistent":
            self.consistent += 1
        elif o.verdict == "vacuous":
            self.vacuous += 1
        else:
            self.counterexamples.append({"instance": o.instance, "witness": o.witness})

    def to_dict(self) -> dict:
        return {"claim": self.claim, "statement": CLAIMS[self.claim].statement,
                "instances": self.instances, "consistent": self.consistent,
                "vacuous": self.vacuous, "counterexamples": self.counterexamples}


@dataclass
class CorpusReport:
    spec: CorpusSpec
    tallies: dict
    graph_count: int = 0
    tf_count: int = 0

    @property
    def counterexample_total(self) -> int:
        return sum(len(t.counterexamples) for t in self.tallies.values())

    def to_dict(self) -> dict:
        spec = asdict(self.spec)
        return {"spec": spec, "graphs": self.graph_count, "transit_functions": self.tf_count,
                "claims": [self.tallies[c].to_dict() for c in CLAIM_IDS if c in self.tallies],
                "counterexamples_total": self.counterexample_total}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True)


def corpus_graphs(spec: CorpusSpec) -> Iterator[tuple[str, Graph]]:
    for n in range(1, spec.exhaustive_max_n + 1):
        for G in enumerate_connected_labeled(n):
            yield f"exhaustive:{G.to_graph6()}", G
    rng = random.Random(spec.seed)
    lo, hi = spec.random_n_range
    probs = spec.edge_probabilities
    for i in range(spec.random_count):
        n = rng.randint(lo, hi)
        G = random_connected(n, probs[i % len(probs)], rng)
        yield f"random#{i}:{G.to_graph6()}", G


def corpus_transit_functions(spec: CorpusSpec) -> Iterator[tuple[str, TransitFunction]]:
    if spec.include_fixtures:
        for fx in all_fixtures():
            yield f"fixture:{fx.name}", fx.R
    for n in range(1, spec.tf_interval_max_n + 1):
        for G in enumerate_connected_labeled(n):
            yield f"interval:{G.to_graph6()}", interval_function(G)
    for n in spec.tf_n_values:
        for mode in spec.tf_modes:
            for i in range(spec.tf_samples):
                seed = f"{spec.seed}:{i}"
                yield f"{mode}(n={n},seed={seed})", sample_transit_function(n, mode, seed)


_SAMPLE_ID = re.compile(r"^(\w+)\(n=(\d+),seed=(.*)\)$")


def rebuild_instance(instance: str) -> Graph | TransitFunction:
    """Reconstruct the graph or transit function behind a corpus instance id."""
    kind, _, rest = instance.partition(":")
    if kind == "exhaustive" or kind.startswith("random#"):
        return parse_graph6(rest)
    if kind == "interval":
        return interval_function(parse_graph6(rest))
    if kind == "fixture":
        from .fixtures import load_fixture
        return load_fixture(rest).R
    m = _SAMPLE_ID.match(instance)
    if m:
        return sample_transit_function(int(m.group(2)), m.group(1), m.group(3))
    raise ValueError(f"unrecognised instance id {instance!r}")


def _graph_outcomes(claims, instance: str, G: Graph) -> list[ClaimOutcome]:
    case = GraphCase(G, instance)
    return [verify_graph_claim(c, G, case) for c in claims]


def _tf_outcomes(claims, instance: str, R: TransitFunction) -> list[ClaimOutcome]:
    case = TFCase(R, instance)
    return [verify_tf_claim(c, R, instance, case) for c in claims]


def _graph_chunk(args):
    claims, items = args
    out = []
    for inst, g6 in items:
        out.extend(_graph_outcomes(claims, inst, parse_graph6(g6)))
    return out


def _tf_chunk(args):
    claims, items = args
    out = []
    for inst, doc in items:
        out.extend(_tf_outcomes(claims, inst, tf_from_document(doc)))
    return out


def _chunks(it, size):
    buf = []
    for x in it:
        buf.append(x)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("BETWEENNESS_WORKERS", "1")))
    except ValueError:
        return 1


def run_corpus(claims: Iterable[str] | None = None, spec: CorpusSpec | None = None,
               workers: int | None = None, progress: Callable[[str], None] | None = None) -> CorpusReport:
    """Evaluate ``claims`` over the corpus described by ``spec``.

    Results are aggregated in corpus order, so the report does not depend on
    ``workers``.
    """
    spec = spec or CorpusSpec()
    claims = list(CLAIM_IDS if claims is None else claims)
    for c in claims:
        if c not in CLAIMS:
            raise KeyError(f"unknown claim {c!r}")
    workers = default_workers() if workers is None else workers
    gclaims = [c for c in claims if "GRAPH" in CLAIMS[c].kinds]
    tclaims = [c for c in claims if "TF" in CLAIMS[c].kinds]
    tallies = {c: ClaimTally(c) for c in claims}
    report = CorpusReport(spec, tallies)

    def consume(outcomes):
        for o in outcomes:
            tallies[o.claim].add(o)

    if gclaims:
        items = corpus_graphs(spec)
        if workers > 1:
            payload = ((gclaims, [(i, G.to_graph6()) for i, G in chunk])
                       for chunk in _chunks(items, 500))
            with _pool(workers) as pool:
                for i, res in enumerate(pool.imap(_graph_chunk, payload)):
                    consume(res)
        else:
            for inst, G in items:
                consume(_graph_outcomes(gclaims, inst, G))
        report.graph_count = tallies[gclaims[0]].instances
        if progress:
            progress(f"graph claims done over {report.graph_count} graphs")

    if tclaims:
        items = corpus_transit_functions(spec)
        if workers > 1:
            payload = ((tclaims, [(i, tf_to_document(R, "none")) for i, R in chunk])
                       for chunk in _chunks(items, 1000))
            with _pool(workers) as pool:
                for res in pool.imap(_tf_chunk, payload):
                    consume(res)
        else:
            for inst, R in items:
                consume(_tf_outcomes(tclaims, inst, R))
        report.tf_count = tallies[tclaims[0]].instances
        if progress:
            progress(f"transit-function claims done over {report.tf_count} instances")
    return report


def _pool(workers: int):
    import multiprocessing as mp

    return mp.get_context("fork").Pool(workers)
