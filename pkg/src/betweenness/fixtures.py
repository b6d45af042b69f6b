"""The thirteen worked example transit functions, transcribed literally.

Vertices keep their letter names. Every fixture carries the axiom verdicts
claimed for it, plus the claimed falsifying assignment where one exists.
:func:`verify_fixture` replays the engine against those claims and never
edits a fixture to make it agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import DISPLAY, check_axiom, evaluate, in_domain
from .transit import TransitFunction, tf_to_document, validate_t


@dataclass(frozen=True)
class Fixture:
    name: str
    title: str
    R: TransitFunction
    expected: dict
    claimed_witnesses: dict = field(default_factory=dict)


def _build(vertices: str, pairs: dict, default: str) -> TransitFunction:
    index = {ch: i for i, ch in enumerate(vertices)}
    sets = {}
    for key, members in pairs.items():
        a, b = key
        sets[(index[a], index[b])] = [index[m] for m in members]
    return TransitFunction.from_pairs(len(vertices), sets, default=default, labels=tuple(vertices))


def _named(vertices: str, assignment: dict) -> dict:
    index = {ch: i for i, ch in enumerate(vertices)}
    return {k: index[v] for k, v in assignment.items()}


# name -> (title, vertex order, pair table, default rule, expected, claimed witnesses)
_RAW = {
    "EX_J2P_NOT_J3P": (
        "(J2') holds, (J3') fails", "uvwxyz",
        {"ux": "ux", "uw": "uxzw", "xz": "uxzw", "uz": "uz", "uv": "uzv", "xy": "xwy",
         "uy": "uvwxyz", "xv": "uvwxyz", "xw": "xw", "zw": "zw", "zy": "zwyv", "wv": "zwyv",
         "zv": "zv", "wy": "wy", "yv": "yv"},
        "none",
        {"J2p": True, "J3p": False},
        {"J3p": {"u": "u", "x": "x", "y": "y", "v": "v"}},
    ),
    "EX_J3P_NOT_J2P": (
        "(J3') holds, (J2') fails", "xyuvw",
        {"ux": "ux", "uy": "uxy", "uv": "uwv", "uw": "uw", "yw": "yxvw", "xv": "yxvw",
         "yv": "vy", "xy": "xy", "xw": "xw", "vw": "vw"},
        "pair",
        {"J3p": True, "J2p": False},
        {"J2p": {"u": "u", "x": "x", "y": "y", "v": "v"}},
    ),
    "EX_J0J2B2_NOT_B3": (
        "(J0), (J2), (b2) hold, (b3) fails", "uvwxy",
        {"uv": "uvwxy", "ux": "uywx", "wv": "xwyv"},
        "pair",
        {"J0": True, "J2": True, "b2": True, "b3": False},
        {"b3": {"u": "u", "v": "v", "x": "x", "y": "y"}},
    ),
    "EX_J0J2_NOT_B3": (
        "(J0), (J2) hold, (b3) fails", "abcde",
        {"ab": "ab", "ac": "ac", "ad": "abcd", "ae": "abcde", "bc": "bc", "bd": "bd",
         "be": "be", "cd": "cd", "ce": "bcde", "de": "de"},
        "pair",
        {"J0": True, "J2": True, "b3": False},
        {"b3": {"u": "a", "v": "e", "x": "d", "y": "b"}},
    ),
    "EX_J2B3_NOT_J0": (
        "(J2), (b3) hold, (J0) fails", "abcde",
        {"ab": "ab", "ac": "ac", "ad": "abcd", "ae": "abe", "bc": "bc", "bd": "bd",
         "be": "be", "cd": "cd", "ce": "bcde", "de": "de"},
        "pair",
        {"J2": True, "b3": True, "J0": False},
        {"J0": {"u": "a", "x": "c", "y": "d", "v": "e"}},
    ),
    "EX_J0B3_NOT_J2": (
        "(J0), (b3) hold, (J2) fails", "abcde",
        {"ae": "ae", "be": "be", "ab": "abc"},
        "pair",
        {"J0": True, "b3": True, "J2": False},
        {"J2": {"u": "a", "x": "e", "v": "b"}},
    ),
    "EX_J0P_NOT_J0": (
        "(J0') holds, (J0) fails", "abcde",
        {"ae": "ae", "ab": "ab", "be": "be", "bc": "bc", "ce": "ce", "cd": "cd", "de": "de",
         "ac": "abce", "ad": "aed", "bd": "bcde"},
        "pair",
        {"J0": False, "J0p": True},
        {"J0": {"u": "a", "x": "b", "y": "c", "v": "d"}},
    ),
    "EX_B2J1_NOT_B3": (
        "(b2), (J1) hold, (b3) fails", "uvxyz",
        {"uv": "uvxyz", "uy": "uy", "ux": "uyzx", "uz": "uz", "zy": "zy", "zx": "zx",
         "zv": "zyxv", "xv": "xv", "xy": "xy", "yv": "yv"},
        "pair",
        {"b2": True, "J1": True, "b3": False},
        {"b3": {"u": "u", "v": "v", "x": "x", "y": "y"}},
    ),
    "EX_ALL_NOT_B2": (
        "(J2), (J2'), (J3'), (b3) hold, (b2) fails", "abcde",
        {"ab": "ab", "ac": "abc", "ad": "abcd", "ae": "abde", "bc": "bc", "bd": "bcd",
         "be": "bcde", "cd": "cd", "ce": "cde", "de": "de"},
        "pair",
        {"J2": True, "J2p": True, "J3p": True, "b3": True, "b2": False},
        {"b2": {"u": "a", "v": "e", "x": "d", "y": "c"}},
    ),
    "EX_ALL_NOT_B3": (
        "(J2), (J2'), (J3'), (b2) hold, (b3) fails", "abcde",
        {"ab": "ab", "ac": "ac", "ad": "abcd", "ae": "abcde", "bc": "bc", "bd": "bd",
         "be": "be", "cd": "cd", "ce": "cbde", "de": "de"},
        "pair",
        {"J2": True, "J2p": True, "J3p": True, "b2": True, "b3": False},
        {"b3": {"u": "a", "v": "e", "x": "d", "y": "b"}},
    ),
    "EX_ALL_NOT_J2P": (
        "(J2), (J3'), (b2), (b3) hold, (J2') fails", "abcde",
        {"ab": "ab", "ac": "ac", "ad": "abcd", "ae": "abe", "bc": "bc", "bd": "bd",
         "be": "be", "cd": "cd", "ce": "cbde", "de": "de"},
        "pair",
        {"J2": True, "J3p": True, "b2": True, "b3": True, "J2p": False},
        {"J2p": {"u": "a", "x": "c", "y": "d", "v": "e"}},
    ),
    "EX_ALL_NOT_J2": (
        "(J2'), (J3'), (b2), (b3) hold, (J2) fails", "abcde",
        {"ab": "abc", "ae": "ae", "be": "be"},
        "pair",
        {"J2p": True, "J3p": True, "b2": True, "b3": True, "J2": False},
        {"J2": {"u": "a", "x": "e", "v": "b"}},
    ),
    "EX_ALL_NOT_J3P": (
        "(J2), (J2'), (b2), (b3) hold, (J3') fails", "uvwxyz",
        {"ux": "ux", "uz": "uxz", "uy": "uvwxyz", "xv": "uvwxyz", "zw": "uvwxyz",
         "uv": "uwy", "uw": "uw", "xz": "xz", "xy": "xzy", "xw": "xw", "zy": "zy",
         "zv": "zv", "yv": "yv", "yw": "yw", "vw": "vw"},
        "pair",
        {"J2": True, "J2p": True, "b2": True, "b3": True, "J3p": False},
        {"J3p": {"u": "u", "x": "x", "y": "y", "v": "v"}},
    ),
}

FIXTURE_NAMES = tuple(_RAW)


def load_fixture(name: str) -> Fixture:
    try:
        title, vertices, pairs, default, expected, witnesses = _RAW[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    R = _build(vertices, pairs, default)
    claimed = {a: _named(vertices, w) for a, w in witnesses.items()}
    return Fixture(name, title, R, dict(expected), claimed)


def all_fixtures() -> list[Fixture]:
    return [load_fixture(n) for n in FIXTURE_NAMES]


# Claims the engine refutes are recorded here with the engine's witness,
# keyed by (fixture, axiom). Entries are findings, not corrections.
KNOWN_DISCREPANCIES: dict[tuple[str, str], str] = {
    # As transcribed, R(u,v) = {u,w,y} omits v, so the table is not even (t1)-valid
    # (witness u=v, v=u). Restoring v does not rescue (b1), (b2), (b3), (J2) or (J2').
    ("EX_ALL_NOT_J3P", "J2"): "R(x,w)={x,w}, R(w,y)={w,y}, R(x,y)={x,z,y} but w not in R(x,y)",
    ("EX_ALL_NOT_J3P", "J2p"): "u=u, x=w, y=v, v=z: w in R(u,v), v in R(w,z)=V, "
                               "uw, wv, vz pairs, R(u,z)={u,x,z} misses w",
    ("EX_ALL_NOT_J3P", "b2"): "u=u, v=v, x=y, y=v: y in R(u,v), v in R(u,y)=V, v not in R(u,v)",
    ("EX_ALL_NOT_J3P", "b3"): "u=u, v=v, x=y, y=v: y in R(u,v), v in R(u,y)=V, y not in R(v,v)",
}


@dataclass
class FixtureRow:
    axiom: str
    claimed: bool
    engine: bool
    witness: dict | None
    status: str  # CONFIRMED | DISCREPANCY | KNOWN_DISCREPANCY


@dataclass
class FixtureReport:
    name: str
    title: str
    t_valid: bool
    t_witnesses: dict
    rows: list
    claimed_witnesses_replay: dict

    @property
    def confirmed(self) -> bool:
        return (all(r.status != "DISCREPANCY" for r in self.rows)
                and all(self.claimed_witnesses_replay.values()))

    def to_dict(self, R: TransitFunction) -> dict:
        name = R.name
        return {
            "fixture": self.name,
            "title": self.title,
            "t_valid": self.t_valid,
            "t_witnesses": {k: {a: name(b) for a, b in w.items()} for k, w in self.t_witnesses.items()},
            "claims": [
                {"axiom": DISPLAY[r.axiom], "claimed": r.claimed, "engine": r.engine,
                 "status": r.status,
                 **({"witness": {k: name(v) for k, v in r.witness.items()}} if r.witness else {})}
                for r in self.rows
            ],
            "stated_witnesses_replay": {DISPLAY[a]: ok for a, ok in self.claimed_witnesses_replay.items()},
            "confirmed": self.confirmed,
        }


def verify_fixture(name: str) -> FixtureReport:
    fx = load_fixture(name)
    tv = validate_t(fx.R)
    rows = []
    for axiom, claimed in fx.expected.items():
        res = check_axiom(fx.R, axiom)
        if res.holds == claimed:
            status = "CONFIRMED"
        elif (name, axiom) in KNOWN_DISCREPANCIES:
            status = "KNOWN_DISCREPANCY"
        else:
            status = "DISCREPANCY"
        rows.append(FixtureRow(axiom, claimed, res.holds, res.witness, status))
    replay = {}
    for axiom, a in fx.claimed_witnesses.items():
        replay[axiom] = in_domain(axiom, a) and not evaluate(fx.R, axiom, a)
    return FixtureReport(name, fx.title, tv.ok, tv.witnesses, rows, replay)


def export_fixture(name: str) -> dict:
    fx = load_fixture(name)
    return tf_to_document(fx.R, default="none")
