"""Generic execution semantics: instruction selection, runs, cost accounting.

Everything here is parameterized over a *model* object supplying the two
engines and the configuration space. A model provides:

    start_config(text)        -> Configuration       (the start of an input)
    transition(config, inst)  -> Configuration|None  (one engine step; None
                                                      where the instruction
                                                      does not apply)
    accept(config)            -> bool                (the accepting engine;
                                                      may mutate the model)
    string_of(config)         -> str                 (tape content, end
                                                      blanks stripped)
    acceptor_ticks            -> int                 (monotone counter of
                                                      accepting-engine work;
                                                      constant 0 for pure
                                                      models)

`evosim.tape.StandardModel` is the plain stateless machine;
`evosim.engine.EvolvingModel` swaps in an acceptor that rewrites itself.
The run loop itself holds no state: all mutation lives in the model, so a
run against a stateful model needs exclusive access to that model instance,
while concurrent runs against distinct instances are safe.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DeterminationError

BLANK = "△"
ALPHABET = ("0", "1", BLANK)
MOVES = ("L", "R")

START_STATE = "q0"
HALT_STATE = "h"


@dataclass(frozen=True, slots=True)
class Instruction:
    """One rewrite rule: in `state` reading `read`, write `write`, move
    one cell in `move`, and enter `target`."""

    state: str
    read: str
    target: str
    write: str
    move: str

    def __post_init__(self):
        if self.read not in ALPHABET or self.write not in ALPHABET:
            raise ValueError(f"symbol outside alphabet in {self.key()}")
        if self.move not in MOVES:
            raise ValueError(f"move must be L or R, got {self.move!r}")
        if not self.state or not self.target:
            raise ValueError("state names must be nonempty")

    def key(self):
        return (self.state, self.read)


def check_determination(instructions):
    """Return the (state, symbol) keys claimed by more than one instruction.

    An empty result means at most one instruction can ever apply to a
    configuration, which is what makes selection single-valued.
    """
    seen = {}
    collisions = []
    for inst in instructions:
        key = inst.key()
        if key in seen and key not in collisions:
            collisions.append(key)
        seen[key] = inst
    return collisions


class Procedure:
    """A finite instruction set with at most one instruction per
    (state, symbol) key.

    Construction rejects colliding keys; `Procedure.unchecked` skips the
    check so that the selector's own collision guard can be exercised.
    """

    def __init__(self, instructions):
        self.instructions = tuple(instructions)
        collisions = check_determination(self.instructions)
        if collisions:
            raise DeterminationError(collisions)
        self._index = {inst.key(): (inst,) for inst in self.instructions}

    @classmethod
    def unchecked(cls, instructions):
        proc = cls.__new__(cls)
        proc.instructions = tuple(instructions)
        index = {}
        for inst in proc.instructions:
            index.setdefault(inst.key(), []).append(inst)
        proc._index = {key: tuple(vals) for key, vals in index.items()}
        return proc

    def candidates(self, state, symbol):
        """Instructions keyed on (state, symbol).

        Both shipped models only ever apply key-matching instructions, so
        indexing by key is a safe shortcut for selection.
        """
        return self._index.get((state, symbol), ())

    def __len__(self):
        return len(self.instructions)

    def __iter__(self):
        return iter(self.instructions)

    def __eq__(self, other):
        if not isinstance(other, Procedure):
            return NotImplemented
        return frozenset(self.instructions) == frozenset(other.instructions)

    def __hash__(self):
        return hash(frozenset(self.instructions))

    def __repr__(self):
        return f"Procedure({len(self.instructions)} instructions)"


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    HALTED_REJECTED = "halted-rejected"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True, slots=True)
class CostMeter:
    """Two-level cost of a run.

    path_length counts configurations; transition_ticks counts engine steps
    (always path_length - 1); acceptor_ticks counts accepting-engine work
    (0 under the stateless model).
    """

    path_length: int
    transition_ticks: int
    acceptor_ticks: int


@dataclass(frozen=True, slots=True)
class RunResult:
    verdict: Verdict
    path: tuple
    applied: tuple
    cost: CostMeter
    final_string: str

    @property
    def accepted(self):
        return self.verdict is Verdict.ACCEPTED


def _applicable(model, procedure, config):
    """The unique applicable instruction and its successor configuration."""
    chosen = None
    successor = None
    for inst in procedure.candidates(config.state, config.head):
        nxt = model.transition(config, inst)
        if nxt is None:
            continue
        if chosen is not None:
            raise DeterminationError([inst.key()])
        chosen, successor = inst, nxt
    return chosen, successor


def select_instruction(model, procedure, config):
    """The unique instruction of `procedure` that applies to `config`,
    or None when none does."""
    return _applicable(model, procedure, config)[0]


def run(model, procedure, text, budget=10_000):
    """Execute `procedure` on `text` under `model`.

    The accepting engine is consulted on every configuration in order of
    generation (its side effects on an evolving model persist), but only
    its answer on the final configuration decides the verdict. `budget`
    bounds transition steps, not acceptor work; exhausting it yields the
    BUDGET_EXCEEDED verdict rather than an error.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    config = model.start_config(text)
    path = [config]
    applied = []
    ticks_before = model.acceptor_ticks
    answer = model.accept(config)
    while True:
        inst, successor = _applicable(model, procedure, config)
        if inst is None:
            verdict = Verdict.ACCEPTED if answer else Verdict.HALTED_REJECTED
            break
        if len(applied) >= budget:
            verdict = Verdict.BUDGET_EXCEEDED
            break
        config = successor
        path.append(config)
        applied.append(inst)
        answer = model.accept(config)
    cost = CostMeter(
        path_length=len(path),
        transition_ticks=len(applied),
        acceptor_ticks=model.acceptor_ticks - ticks_before,
    )
    return RunResult(
        verdict=verdict,
        path=tuple(path),
        applied=tuple(applied),
        cost=cost,
        final_string=model.string_of(path[-1]),
    )


def compute_function(model, procedure, text, budget=10_000):
    """The string a successful run leaves behind, or None if the run does
    not end accepted."""
    result = run(model, procedure, text, budget)
    return result.final_string if result.accepted else None
