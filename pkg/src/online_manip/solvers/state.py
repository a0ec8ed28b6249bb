from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from ..model.election import OMS, Candidate, Direction, ProblemVariant, Target, Weighting
from ..model.errors import WrongVariant
from ..rules.scoring import ScoringVector, tally


def monus(x: int, y: int) -> int:
    """Proper subtraction."""
    return max(x - y, 0)


@dataclass(frozen=True)
class ScoreState:
    """
    Aggregates the closed-form solvers work on.

    `current` holds each candidate's points from the cast ballots. Wm/n1 cover
    the manipulators from u onward, Wn/n0 the nonmanipulators after u.
    `maxscore` is a candidate's score if every voter from u onward gives it the
    top value of the scoring vector.
    """
    candidates: Tuple[Candidate, ...]
    current: Dict[Candidate, int]
    Wm: int
    Wn: int
    n1: int
    n0: int
    maxscore: Dict[Candidate, int]

    @classmethod
    def from_oms(cls, oms: OMS, alpha: ScoringVector) -> "ScoreState":
        snapshot = oms.snapshot
        current = tally(alpha, oms.candidates, ((v.weight, b) for v, b in snapshot.past))
        pending = snapshot.pending
        manipulators = [v for v in pending if v.is_manipulator]
        others = [v for v in snapshot.future if not v.is_manipulator]
        remaining_weight = sum(v.weight for v in pending)
        top = alpha.alpha[0] if len(alpha) else 0
        return cls(
            candidates=oms.candidates,
            current=current,
            Wm=sum(v.weight for v in manipulators),
            Wn=sum(v.weight for v in others),
            n1=len(manipulators),
            n0=len(others),
            maxscore={c: current[c] + top * remaining_weight for c in oms.candidates},
        )

    def best(self, group: Iterable[Candidate]) -> int:
        """Largest current score in `group`; 0 for an empty group."""
        return max((self.current[c] for c in group), default=0)


def require(
    variant: ProblemVariant,
    solver: str,
    direction: Direction = Direction.CONSTRUCTIVE,
    segment: bool = True,
    weighting: Optional[Weighting] = None,
) -> None:
    """Raises WrongVariant unless the variant sits inside a solver's precondition."""
    if variant.direction is not direction:
        raise WrongVariant(f"{solver} only handles {direction.value} instances")
    if segment and direction is Direction.CONSTRUCTIVE and variant.target is not Target.SEGMENT:
        raise WrongVariant(f"{solver} only handles segment targets")
    if variant.unique:
        raise WrongVariant(f"{solver} does not handle the unique-winner model")
    if variant.freeform:
        raise WrongVariant(f"{solver} does not handle freeform instances")
    if weighting is not None and variant.weighting is not weighting:
        raise WrongVariant(f"{solver} only handles {weighting.value} instances")
