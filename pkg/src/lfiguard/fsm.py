"""FSM description: parsing, validation, and state classification.

The interchange format is a single JSON document::

    {
      "name": "controller",
      "states": ["IDLE", "RUN"],
      "reset_state": "IDLE",
      "transitions": [{"from": "IDLE", "to": "RUN", "prob": "0.25"}],
      "authorized_transitions": [["IDLE", "RUN"]]
    }

Probabilities are relative weights, accepted as decimal strings, JSON
numbers, or "num/den" fraction strings, and are parsed exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


class FsmFormatError(ValueError):
    """An FSM document violates the interchange schema."""


@dataclass(frozen=True)
class Transition:
    src: str
    dst: str
    prob: Fraction


@dataclass(frozen=True)
class FsmSpec:
    """Validated FSM graph with designated authorized transitions.

    States keep their declaration order; downstream indexing (encoding
    variables, flip-flop numbering) relies on it being stable.
    """

    name: str
    states: tuple[str, ...]
    reset_state: str
    transitions: tuple[Transition, ...]
    authorized_transitions: tuple[tuple[str, str], ...]

    def __post_init__(self):
        declared = set(self.states)
        if len(declared) != len(self.states):
            seen = set()
            for s in self.states:
                if s in seen:
                    raise FsmFormatError(f"duplicate state {s!r}")
                seen.add(s)
        if self.reset_state not in declared:
            raise FsmFormatError(f"reset_state {self.reset_state!r} is not a declared state")
        edges = set()
        for t in self.transitions:
            if t.src not in declared:
                raise FsmFormatError(f"transition source {t.src!r} is not a declared state")
            if t.dst not in declared:
                raise FsmFormatError(f"transition target {t.dst!r} is not a declared state")
            if t.prob < 0:
                raise FsmFormatError(f"transition {t.src!r}->{t.dst!r} has negative probability {t.prob}")
            if (t.src, t.dst) in edges:
                raise FsmFormatError(f"duplicate transition {t.src!r}->{t.dst!r}")
            edges.add((t.src, t.dst))
        for a, p in self.authorized_transitions:
            if a not in declared:
                raise FsmFormatError(f"authorized transition source {a!r} is not a declared state")
            if p not in declared:
                raise FsmFormatError(f"authorized transition target {p!r} is not a declared state")
            if a == p:
                raise FsmFormatError(f"authorized transition {a!r}->{p!r} is a self-loop")
            if (a, p) not in edges:
                raise FsmFormatError(f"authorized transition {a!r}->{p!r} is not in transitions")

    def state_index(self, state: str) -> int:
        return self.states.index(state)

    def prob(self, src: str, dst: str) -> Fraction:
        for t in self.transitions:
            if t.src == src and t.dst == dst:
                return t.prob
        return Fraction(0)


@dataclass(frozen=True)
class StateClasses:
    """Partition of states induced by the authorized transitions."""

    au: frozenset[str]
    p: frozenset[str]
    ss: frozenset[str]
    ns: frozenset[str]


def classify_states(fsm: FsmSpec) -> StateClasses:
    """Derive authorized/protected/sensitive/normal state sets.

    A state may be both authorized and protected when authorized
    transitions chain through it.
    """
    au = frozenset(a for a, _ in fsm.authorized_transitions)
    p = frozenset(b for _, b in fsm.authorized_transitions)
    ss = au | p
    ns = frozenset(fsm.states) - ss
    return StateClasses(au=au, p=p, ss=ss, ns=ns)


def pair_probability(fsm: FsmSpec, i: str, j: str) -> Fraction:
    """Total transition weight between two distinct states, both directions."""
    if i == j:
        raise ValueError(f"pair_probability requires distinct states, got {i!r} twice")
    return fsm.prob(i, j) + fsm.prob(j, i)


def _parse_prob(value, where: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FsmFormatError(f"{where}: probability must be a number or string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise FsmFormatError(f"{where}: cannot parse probability {value!r}") from exc
    raise FsmFormatError(f"{where}: probability has unsupported type {type(value).__name__}")


def parse_fsm_spec(text: str) -> FsmSpec:
    """Parse and validate an FSM interchange document.

    JSON floats are handed to Fraction as raw strings, so decimal
    probabilities survive exactly.
    """
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise FsmFormatError(f"malformed FSM document: {exc}") from exc
    if not isinstance(doc, dict):
        raise FsmFormatError("malformed FSM document: top level must be an object")

    for key in ("name", "states", "reset_state", "transitions", "authorized_transitions"):
        if key not in doc:
            raise FsmFormatError(f"missing required key {key!r}")

    states = doc["states"]
    if not isinstance(states, list) or not all(isinstance(s, str) for s in states):
        raise FsmFormatError("'states' must be an array of strings")
    if not states:
        raise FsmFormatError("'states' must not be empty")

    transitions = []
    for k, entry in enumerate(doc["transitions"]):
        if not isinstance(entry, dict) or not {"from", "to", "prob"} <= set(entry):
            raise FsmFormatError(f"transition #{k} must be an object with 'from', 'to', 'prob'")
        transitions.append(
            Transition(
                src=entry["from"],
                dst=entry["to"],
                prob=_parse_prob(entry["prob"], f"transition #{k}"),
            )
        )

    ats = []
    for k, entry in enumerate(doc["authorized_transitions"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise FsmFormatError(f"authorized transition #{k} must be a two-element array")
        ats.append((entry[0], entry[1]))

    return FsmSpec(
        name=doc["name"],
        states=tuple(states),
        reset_state=doc["reset_state"],
        transitions=tuple(transitions),
        authorized_transitions=tuple(ats),
    )


def format_fraction(value: Fraction) -> str:
    """Canonical text for an exact weight: terminating decimal or num/den."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(value.numerator)
    scaled = value.numerator * 10**digits // value.denominator
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def serialize_fsm_spec(fsm: FsmSpec) -> str:
    """Render the canonical interchange document; parse() of it round-trips."""
    doc = {
        "name": fsm.name,
        "states": list(fsm.states),
        "reset_state": fsm.reset_state,
        "transitions": [
            {"from": t.src, "to": t.dst, "prob": format_fraction(t.prob)} for t in fsm.transitions
        ],
        "authorized_transitions": [list(at) for at in fsm.authorized_transitions],
    }
    return json.dumps(doc, indent=2) + "\n"
