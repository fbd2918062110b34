"""Exception types shared across the library.

Every exception carries a short machine-readable ``code`` used by the CLI
to build its report and pick an exit status.
"""

from __future__ import annotations


class ExpdiffError(Exception):
    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class BudgetExceededError(ExpdiffError):
    """A resource budget was hit; the computation was aborted, never wrong."""

    code = "BUDGET_EXCEEDED"

    def __init__(self, budget: str, limit: int):
        self.budget = budget
        self.limit = limit
        super().__init__(f"budget '{budget}' exceeded (limit {limit})")


class InvalidPresentationError(ExpdiffError):
    code = "INVALID_PRESENTATION"


class NonCommutingError(ExpdiffError):
    """Two presented derivations fail to commute on a generator."""

    code = "NON_COMMUTING"

    def __init__(self, i: int, j: int, generator: str):
        self.witness = (i, j, generator)
        super().__init__(f"derivations {i} and {j} do not commute on '{generator}'")


class NotInGammaError(ExpdiffError):
    code = "NOT_IN_GAMMA"


class SoundnessAlarmError(ExpdiffError):
    """Trigger fired but the relation lattice is zero.

    Impossible when the presented constants are the whole constant field;
    signals hidden constants inflating the transcendence-degree bound.
    """

    code = "SOUNDNESS_ALARM"

    def __init__(self, report=None):
        self.report = report
        super().__init__("trigger fired with a zero relation lattice")


class NotDisjointError(ExpdiffError):
    code = "NOT_DISJOINT"


class DimTooSmallError(ExpdiffError):
    code = "DIM_TOO_SMALL"


class DegenerateDrawError(ExpdiffError):
    """The drawn hyperplane failed the expected dimension drop."""

    code = "DEGENERATE"


class FVanishesError(ExpdiffError):
    code = "F_VANISHES"


class NoExtensionError(ExpdiffError):
    code = "NO_EXTENSION"


class SingleDerivationError(ExpdiffError):
    """Derivation extension supports exactly one base derivation."""

    code = "NONCOMMUTING"


class PointNotOnVarietyError(ExpdiffError):
    code = "POINT_NOT_ON_U"


class FactorizationIncompleteError(ExpdiffError):
    code = "FACTORIZATION_INCOMPLETE"

    def __init__(self, coordinate: str):
        self.coordinate = coordinate
        super().__init__(f"coordinate {coordinate} does not factor over the base")


class EmptyVarietyError(ExpdiffError):
    code = "EMPTY_VARIETY"


class ParseError(ExpdiffError):
    code = "PARSE_ERROR"

    def __init__(self, line: int, col: int, reason: str):
        self.line = line
        self.col = col
        self.reason = reason
        super().__init__(f"line {line}, col {col}: {reason}")


class InputError(ExpdiffError):
    """A name failed to resolve or an argument is malformed."""

    code = "INPUT_ERROR"
