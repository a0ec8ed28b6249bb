import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from ..model.election import Ballot, Candidate
from ..model.errors import EmptyCandidateSet, LengthMismatch, MTooSmall, RuleError

logger = logging.getLogger(__name__)


class RuleKind(str, Enum):
    SCORING = "scoring"
    K_APPROVAL = "approval"
    K_VETO = "kveto"
    TIERED = "tiered"


@dataclass(frozen=True)
class ScoringVector:
    alpha: Tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.alpha):
            raise RuleError(f"Scoring vector {self.alpha} has a negative entry")
        if any(self.alpha[i] < self.alpha[i + 1] for i in range(len(self.alpha) - 1)):
            raise RuleError(f"Scoring vector {self.alpha} is not nonincreasing")

    def __len__(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class RuleId:
    """
    A voting rule. Plurality is k-approval with k=1 and veto is k-veto with
    k=1; use the `plurality()` / `veto()` constructors.
    """
    kind: RuleKind
    k: int = 1
    alpha: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind in (RuleKind.K_APPROVAL, RuleKind.K_VETO) and self.k < 1:
            raise RuleError(f"k must be at least 1, got {self.k}")
        if self.kind is RuleKind.SCORING and self.alpha is None:
            raise RuleError("A scoring rule needs its alpha vector")
        if self.alpha is not None:
            ScoringVector(self.alpha)

    @classmethod
    def plurality(cls) -> "RuleId":
        return cls(RuleKind.K_APPROVAL, 1)

    @classmethod
    def veto(cls) -> "RuleId":
        return cls(RuleKind.K_VETO, 1)

    @classmethod
    def k_approval(cls, k: int) -> "RuleId":
        return cls(RuleKind.K_APPROVAL, k)

    @classmethod
    def k_veto(cls, k: int) -> "RuleId":
        return cls(RuleKind.K_VETO, k)

    @classmethod
    def scoring(cls, alpha: Sequence[int]) -> "RuleId":
        return cls(RuleKind.SCORING, 1, tuple(alpha))

    @classmethod
    def tiered(cls) -> "RuleId":
        return cls(RuleKind.TIERED)

    @property
    def is_scoring(self) -> bool:
        return self.kind is not RuleKind.TIERED

    @property
    def is_plurality(self) -> bool:
        return self.kind is RuleKind.K_APPROVAL and self.k == 1

    @property
    def is_veto(self) -> bool:
        return self.kind is RuleKind.K_VETO and self.k == 1

    def describe(self) -> str:
        if self.is_plurality:
            return "plurality"
        if self.is_veto:
            return "veto"
        if self.kind is RuleKind.K_APPROVAL:
            return f"approval {self.k}"
        if self.kind is RuleKind.K_VETO:
            return f"kveto {self.k}"
        if self.kind is RuleKind.SCORING:
            return "scoring " + " ".join(str(a) for a in self.alpha or ())
        return "tiered"


def scoring_vector(rule: RuleId, m: int) -> ScoringVector:
    if rule.kind is RuleKind.TIERED:
        raise RuleError("The tiered rule has no scoring vector")
    if rule.kind is RuleKind.SCORING:
        alpha = rule.alpha or ()
        if len(alpha) != m:
            raise LengthMismatch(f"Scoring vector of length {len(alpha)} used with {m} candidates")
        return ScoringVector(tuple(alpha))
    if m < rule.k:
        raise MTooSmall(f"{rule.describe()} needs at least {rule.k} candidates, got {m}")
    if rule.kind is RuleKind.K_APPROVAL:
        return ScoringVector((1,) * rule.k + (0,) * (m - rule.k))
    return ScoringVector((1,) * (m - rule.k) + (0,) * rule.k)


def tally(
    alpha: ScoringVector,
    candidates: Sequence[Candidate],
    weighted_ballots: Iterable[Tuple[int, Ballot]],
) -> Dict[Candidate, int]:
    scores = {c: 0 for c in candidates}
    for weight, ballot in weighted_ballots:
        for position, c in enumerate(ballot):
            scores[c] += weight * alpha.alpha[position]
    return scores


def top_scorers(scores: Dict[Candidate, int]) -> FrozenSet[Candidate]:
    if not scores:
        raise EmptyCandidateSet("Cannot determine winners without candidates")
    best = max(scores.values())
    return frozenset(c for c, s in scores.items() if s == best)


def winners(
    alpha: ScoringVector,
    candidates: Sequence[Candidate],
    weighted_ballots: Iterable[Tuple[int, Ballot]],
) -> FrozenSet[Candidate]:
    """All candidates scoring the most points."""
    if not candidates:
        raise EmptyCandidateSet("Cannot determine winners without candidates")
    if len(alpha) != len(candidates):
        raise LengthMismatch(f"Scoring vector of length {len(alpha)} used with {len(candidates)} candidates")
    return top_scorers(tally(alpha, candidates, weighted_ballots))
