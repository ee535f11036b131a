"""Exception hierarchy shared across the library."""


class BihomegaError(Exception):
    """Base class for all library errors."""


class ShapeMismatch(BihomegaError):
    """Dimensions of two objects are incompatible."""


class Singular(BihomegaError):
    """A matrix that must be invertible is not.

    When raised for a structure-map family, `index` names the semigroup
    element whose matrix failed to invert.
    """

    def __init__(self, message: str, index: str | None = None):
        super().__init__(message)
        self.index = index


class NonCommutingStructureMaps(BihomegaError):
    """p and q fail to commute at some index."""

    def __init__(self, index: str):
        super().__init__(f"structure maps p and q do not commute at index {index!r}")
        self.index = index


class NonCommutingFamilies(BihomegaError):
    """Two linear families required to commute do not."""

    def __init__(self, names: tuple[str, str], index: str):
        a, b = names
        super().__init__(f"families {a} and {b} do not commute at index {index!r}")
        self.names = names
        self.index = index


class NonCommutativeOmega(BihomegaError):
    """A checker or construction needs a commutative index semigroup."""


class KindMismatch(BihomegaError):
    """An instance of the wrong structure class was supplied."""


class NonzeroWeight(BihomegaError):
    """A construction defined only for weight 0 got a nonzero weight."""


class PreconditionCheckFailed(BihomegaError):
    """A construction's input failed its checker; the report is attached."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class MorphismCheckFailed(PreconditionCheckFailed):
    """A map family required to be a morphism is not."""


class PostconditionCheckFailed(BihomegaError):
    """A construction's output failed its target checker."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ConditionViolated(BihomegaError):
    """A parameter tuple violates a displayed side-condition."""

    def __init__(self, condition: str, indices: tuple[str, ...]):
        super().__init__(f"condition {condition!r} fails at indices {indices}")
        self.condition = condition
        self.indices = indices


class BudgetExceeded(BihomegaError):
    """A brute-force search space is larger than the configured budget."""

    def __init__(self, space: int, budget: int):
        super().__init__(f"search space of {space} candidates exceeds budget {budget}")
        self.space = space
        self.budget = budget


class ParseError(BihomegaError):
    """Syntax error in workspace text; positions are 1-based."""

    def __init__(self, line: int, column: int, expected: str, found: str):
        super().__init__(f"{line}:{column}: expected {expected}, found {found!r}")
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found


class ResolutionError(BihomegaError):
    """A workspace reference does not resolve (dangling name, bad dims)."""
