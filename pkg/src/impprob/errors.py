"""Exception hierarchy shared by every layer of the package."""


class ImpError(Exception):
    """Base class for all errors raised by :mod:`impprob`."""

    kind = "error"

    def to_json(self):
        return {"error": self.kind, "message": str(self)}


class DimensionError(ImpError, ValueError):
    kind = "dimension"


class StochasticityError(ImpError, ValueError):
    """A vector or matrix column is not a probability vector."""

    kind = "stochasticity"


class GradeError(ImpError, ValueError):
    """Grades of two graded morphisms do not fit together."""

    kind = "grade"


class NameClash(GradeError):
    """The same Knightian name would be drawn twice in sequence."""

    kind = "name_clash"


class InvariantViolation(ImpError, AssertionError):
    """A property guaranteed by construction failed; indicates a bug."""

    kind = "invariant"


class LangError(ImpError):
    kind = "language"


class ParseError(LangError):
    kind = "parse"

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column

    def to_json(self):
        d = super().to_json()
        d["line"] = self.line
        d["column"] = self.column
        return d


class ScopeError(LangError):
    kind = "scope"


class ImpTypeError(LangError, TypeError):
    kind = "type"


class SideConditionError(LangError):
    """A law instance does not satisfy the law's freshness side conditions."""

    kind = "side_condition"
