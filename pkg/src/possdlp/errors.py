"""Exception hierarchy shared by all modules."""


class PossError(Exception):
    """Base class for every error raised by possdlp."""


# lattice
class LatticeError(PossError, ValueError):
    pass


class CycleError(LatticeError):
    pass


class NotALattice(LatticeError):
    pass


class DuplicateElement(LatticeError):
    pass


class UnknownElement(LatticeError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class LatticeMismatch(PossError, ValueError):
    pass


# parser
class ParseError(PossError, ValueError):
    """Malformed program text; carries a 1-based line/column when known."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(where + message)


class UnknownLabel(ParseError):
    pass


class NonTopConstraintLabel(ParseError):
    pass


class EmptyRule(ParseError):
    pass


# engines
class SignatureTooLarge(PossError, RuntimeError):
    pass


class NoPivot(PossError, ValueError):
    pass


class NotEntailed(PossError, RuntimeError):
    pass


class NotApplicable(PossError, ValueError):
    pass


class ProjectionMismatch(PossError, AssertionError):
    pass
