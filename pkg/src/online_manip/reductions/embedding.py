import itertools
import logging
from typing import Sequence, Tuple

from ..model.election import (
    OMS,
    Ballot,
    Candidate,
    Direction,
    ElectionSnapshot,
    ProblemVariant,
    Role,
    Target,
    Voter,
    WinnerModel,
)
from ..model.errors import DistinguishedNotCandidate, EmptyCoalition
from ..rules.scoring import RuleId, scoring_vector, winners
from .generated import GeneratedInstance

logger = logging.getLogger(__name__)

WeightedBallot = Tuple[int, Ballot]


def embed_standard_wcm(
    candidates: Sequence[Candidate],
    cast: Sequence[WeightedBallot],
    coalition: Sequence[int],
    c: Candidate,
    rule: RuleId,
    direction: Direction = Direction.CONSTRUCTIVE,
) -> GeneratedInstance:
    """
    Turns a classic coalitional manipulation instance into an OMS where only
    manipulators vote from u onward. The coalition's order puts c on top
    (constructive) or at the bottom (destructive), so the goal set is {c}.
    """
    if not coalition:
        raise EmptyCoalition("The manipulating coalition must not be empty")
    if c not in candidates:
        raise DistinguishedNotCandidate(f"{c!r} is not a candidate")

    others = tuple(x for x in candidates if x != c)
    sigma = (c,) + others if direction is Direction.CONSTRUCTIVE else others + (c,)
    past = tuple((Voter(f"s{i}", w, Role.NONMANIPULATOR), tuple(b)) for i, (w, b) in enumerate(cast, start=1))
    manipulators = tuple(Voter(f"m{i}", w, Role.MANIPULATOR) for i, w in enumerate(coalition, start=1))
    snapshot = ElectionSnapshot(past=past, current=manipulators[0], future=manipulators[1:])
    oms = OMS(tuple(candidates), snapshot, sigma, c)
    variant = ProblemVariant(direction=direction, target=Target.PINPOINT)
    return GeneratedInstance(oms, rule, variant)


def standard_manipulation_brute(
    candidates: Sequence[Candidate],
    cast: Sequence[WeightedBallot],
    coalition: Sequence[int],
    c: Candidate,
    rule: RuleId,
    direction: Direction = Direction.CONSTRUCTIVE,
    winner_model: WinnerModel = WinnerModel.NONUNIQUE,
) -> bool:
    """Tries every joint ballot assignment of the coalition directly."""
    alpha = scoring_vector(rule, len(candidates))
    orders = list(itertools.permutations(candidates))
    for joint in itertools.product(orders, repeat=len(coalition)):
        ballots = list(cast) + list(zip(coalition, joint))
        won = winners(alpha, candidates, ballots)
        if direction is Direction.CONSTRUCTIVE:
            ok = c in won and (winner_model is WinnerModel.NONUNIQUE or len(won) == 1)
        elif winner_model is WinnerModel.NONUNIQUE:
            ok = c not in won
        else:
            ok = won != frozenset((c,))
        if ok:
            return True
    return False
