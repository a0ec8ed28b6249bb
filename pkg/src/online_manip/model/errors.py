from typing import Optional


class ValidationError(ValueError):
    """Raised when an OMS, snapshot or schedule-free state violates a type invariant."""


class EmptyCandidateSet(ValidationError):
    pass


class DuplicateName(ValidationError):
    pass


class UnknownCandidateInBallot(ValidationError):
    pass


class IncompleteBallot(ValidationError):
    pass


class DistinguishedNotCandidate(ValidationError):
    pass


class CurrentVoterNotManipulator(ValidationError):
    pass


class BadCoalitionBound(ValidationError):
    pass


class NonUnitWeightInUnweighted(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class UnexpectedCurrentBallot(ValidationError):
    pass


class FinalVoterNotManipulator(ValidationError):
    pass


class RuleError(ValueError):
    """Raised for malformed rule parameters (scoring vectors, k, widths)."""


class MTooSmall(RuleError):
    pass


class LengthMismatch(RuleError):
    pass


class TooFewCandidates(RuleError):
    pass


class WrongVariant(ValueError):
    """A solver was called on an instance outside its declared precondition."""


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, budget: int):
        super().__init__(f"Game-tree search exceeded the node budget of {budget} nodes")
        self.budget = budget


class ReductionError(ValueError):
    """Raised by instance generators and brute-force source oracles."""


class EmptyCoalition(ReductionError):
    pass


class MalformedQbf(ReductionError):
    pass


class TooLarge(ReductionError):
    pass


class BadPartitionInput(ReductionError):
    pass


class OddSum(ReductionError):
    pass


class NotThreeCnf(ReductionError):
    pass


class VariableX1Used(ReductionError):
    pass


class NegativeDerivedWeight(ReductionError):
    pass


class ParseError(ValueError):
    """Positional parse failure; line and column are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1, source: Optional[str] = None):
        location = f"{source}:" if source else ""
        super().__init__(f"{location}{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
