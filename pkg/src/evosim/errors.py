"""Exception types shared across the package."""


class EvosimError(Exception):
    """Base class for all package errors."""


class InvalidSymbolError(EvosimError):
    """An input string contains characters outside the machine alphabet."""


class DeterminationError(EvosimError):
    """Two instructions compete for the same configuration.

    Carries the colliding (state, symbol) keys in `collisions`.
    """

    def __init__(self, collisions):
        self.collisions = tuple(collisions)
        keys = ", ".join(f"({s},{a})" for s, a in self.collisions)
        super().__init__(f"conflicting instructions for key(s): {keys}")


class SnapshotError(EvosimError):
    """A snapshot text is malformed or violates machine invariants."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class ProcedureSyntaxError(EvosimError):
    """A procedure file line does not match the instruction grammar."""

    def __init__(self, message, line_no):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ScenarioError(EvosimError):
    """A scenario is malformed or misuses a command."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
