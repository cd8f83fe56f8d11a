"""evosim: tape machines with fixed or evolving acceptance.

The stateless model runs ordinary single-tape machines. The evolving model
keeps the same transitions but answers acceptance through a growing trie,
so the language a procedure decides depends on the order the world was
queried in. The package makes that observable, replayable, and testable
at desk scale.
"""

from .errors import (
    DeterminationError,
    EvosimError,
    InvalidSymbolError,
    ProcedureSyntaxError,
    ScenarioError,
    SnapshotError,
)
from .runner import (
    BLANK,
    CostMeter,
    Instruction,
    Procedure,
    RunResult,
    Verdict,
    check_determination,
    compute_function,
    run,
    select_instruction,
)
from .tape import (
    Configuration,
    StandardModel,
    apply_instruction,
    extract_string,
    halting_accept,
    import_tm,
    start_config,
)
from .trie import MachineStats, PartialDfa, QueryCase, QueryLedger, QueryOutcome, replay_check
from .numbering import ArrivalNumbering
from .engine import EvolvingModel, InvocationRecord, decode_snapshot, encode_snapshot, fork
from .experiments import (
    SaturationReport,
    SiblingSearchResult,
    StructureDelta,
    TraceRecord,
    binary_strings,
    order_demo,
    right_scanner,
    run_traced,
    saturate,
    sibling_search,
)
from .procfile import load_procedure, parse_procedure, render_procedure

__version__ = "0.1.0"


def make_model(kind):
    """Model instance for a selector: "v" (stateless) or "e" (evolving)."""
    if kind == "v":
        return StandardModel()
    if kind == "e":
        return EvolvingModel()
    raise ValueError(f"unknown model kind {kind!r}; expected 'v' or 'e'")
