import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from .errors import (
    BadCoalitionBound,
    CurrentVoterNotManipulator,
    DistinguishedNotCandidate,
    DuplicateName,
    EmptyCandidateSet,
    FinalVoterNotManipulator,
    IncompleteBallot,
    NegativeWeight,
    NonUnitWeightInUnweighted,
    UnexpectedCurrentBallot,
    UnknownCandidateInBallot,
    ValidationError,
)

logger = logging.getLogger(__name__)

# Candidate names are plain strings. Python compares str by code point, which
# is the same order as bytewise comparison of their UTF-8 encodings, so
# "lexicographic" means the same thing here as on raw byte strings.
Candidate = str
Ballot = Tuple[Candidate, ...]


class Role(str, Enum):
    MANIPULATOR = "manip"
    NONMANIPULATOR = "nonmanip"


class Direction(str, Enum):
    CONSTRUCTIVE = "constructive"
    DESTRUCTIVE = "destructive"


class Target(str, Enum):
    SEGMENT = "segment"
    PINPOINT = "pinpoint"


class Weighting(str, Enum):
    WEIGHTED = "weighted"
    UNWEIGHTED = "unweighted"


class WinnerModel(str, Enum):
    NONUNIQUE = "nonunique"
    UNIQUE = "unique"


@dataclass(frozen=True)
class Voter:
    name: str
    weight: int = 1
    role: Role = Role.NONMANIPULATOR

    @property
    def is_manipulator(self) -> bool:
        return self.role is Role.MANIPULATOR


@dataclass(frozen=True)
class ElectionSnapshot:
    """
    A sequential election frozen at the current voter's turn.

    `past` holds the cast ballots in voting order, `current` is the voter u who
    is about to move and `future` lists the voters after u with their roles.
    `current_ballot` is only meaningful for a freeform instance whose current
    voter is a nonmanipulator: a supplied ballot is a fixed move.
    """
    past: Tuple[Tuple[Voter, Ballot], ...]
    current: Voter
    future: Tuple[Voter, ...] = field(default_factory=tuple)
    current_ballot: Optional[Ballot] = None

    @property
    def pending(self) -> Tuple[Voter, ...]:
        """Voters from u onward, in voting order."""
        return (self.current,) + self.future

    @property
    def voters(self) -> Tuple[Voter, ...]:
        return tuple(v for v, _ in self.past) + self.pending


@dataclass(frozen=True)
class ProblemVariant:
    direction: Direction = Direction.CONSTRUCTIVE
    target: Target = Target.SEGMENT
    weighting: Weighting = Weighting.WEIGHTED
    winner_model: WinnerModel = WinnerModel.NONUNIQUE
    freeform: bool = False
    coalition_bound: Optional[int] = None
    final_voter_manipulator: bool = False

    @property
    def constructive(self) -> bool:
        return self.direction is Direction.CONSTRUCTIVE

    @property
    def unique(self) -> bool:
        return self.winner_model is WinnerModel.UNIQUE


@dataclass(frozen=True)
class OMS:
    """
    Online manipulation setting: candidates (in declaration order), the
    snapshot, the coalition's preference order sigma and the distinguished
    candidate d. `d` may be None for full-profile queries.
    """
    candidates: Tuple[Candidate, ...]
    snapshot: ElectionSnapshot
    sigma: Ballot
    d: Optional[Candidate] = None

    def with_distinguished(self, d: Candidate) -> "OMS":
        return replace(self, d=d)


@dataclass(frozen=True)
class ScheduleFreeState:
    """Like an OMS, but the remaining voters have no known voting order."""
    candidates: Tuple[Candidate, ...]
    past: Tuple[Tuple[Voter, Ballot], ...]
    remaining: Tuple[Voter, ...]
    sigma: Ballot
    d: Optional[Candidate] = None


def goal_set(sigma: Ballot, d: Candidate, direction: Direction, target: Target) -> FrozenSet[Candidate]:
    """
    Candidates the coalition's goal refers to.

    Constructive sets are sets the winner set must intersect; destructive sets
    are the forbidden candidates the winner set must avoid.
    """
    if d not in sigma:
        raise DistinguishedNotCandidate(f"Distinguished candidate {d!r} is not ranked in sigma")
    position = sigma.index(d)
    if direction is Direction.DESTRUCTIVE:
        return frozenset(sigma[position:])
    if target is Target.PINPOINT:
        return frozenset((d,))
    return frozenset(sigma[: position + 1])


def outcome_succeeds(winners: FrozenSet[Candidate], goal: FrozenSet[Candidate], variant: ProblemVariant) -> bool:
    """
    Success predicate on a final winner set.

    Unique-winner destructive instances fail only when there is exactly one
    winner and that winner is forbidden.
    """
    if variant.constructive:
        if variant.unique:
            return len(winners) == 1 and not winners.isdisjoint(goal)
        return not winners.isdisjoint(goal)
    if variant.unique:
        return not (len(winners) == 1 and not winners.isdisjoint(goal))
    return winners.isdisjoint(goal)


def _check_ballot(ballot: Sequence[Candidate], candidates: FrozenSet[Candidate], what: str) -> None:
    for c in ballot:
        if c not in candidates:
            raise UnknownCandidateInBallot(f"{what} ranks unknown candidate {c!r}")
    if len(ballot) != len(candidates) or len(set(ballot)) != len(ballot):
        raise IncompleteBallot(f"{what} is not a total order over all {len(candidates)} candidates")


def _check_candidates(candidates: Sequence[Candidate]) -> FrozenSet[Candidate]:
    if not candidates:
        raise EmptyCandidateSet("The candidate set is empty")
    seen = set()
    for c in candidates:
        if not c:
            raise ValidationError("Candidate names must be nonempty")
        if c in seen:
            raise DuplicateName(f"Duplicate candidate name {c!r}")
        seen.add(c)
    return frozenset(seen)


def _check_voters(voters: Iterable[Voter], variant: ProblemVariant) -> None:
    seen = set()
    for v in voters:
        if not v.name:
            raise ValidationError("Voter names must be nonempty")
        if v.name in seen:
            raise DuplicateName(f"Duplicate voter name {v.name!r}")
        seen.add(v.name)
        if v.weight < 0:
            raise NegativeWeight(f"Voter {v.name!r} has negative weight {v.weight}")
        if variant.weighting is Weighting.UNWEIGHTED and v.weight != 1:
            raise NonUnitWeightInUnweighted(
                f"Voter {v.name!r} has weight {v.weight} in an unweighted problem"
            )


def _check_pending(pending: Sequence[Voter], variant: ProblemVariant) -> None:
    manipulators = sum(1 for v in pending if v.is_manipulator)
    if variant.coalition_bound is not None:
        if variant.coalition_bound < 0 or manipulators > variant.coalition_bound:
            raise BadCoalitionBound(
                f"{manipulators} manipulators from u onward exceed the coalition bound {variant.coalition_bound}"
            )
    if variant.final_voter_manipulator and pending and not pending[-1].is_manipulator:
        raise FinalVoterNotManipulator(f"Final voter {pending[-1].name!r} is not a manipulator")


def validate_oms(oms: OMS, variant: ProblemVariant, require_distinguished: bool = True) -> OMS:
    """
    Checks every OMS invariant for the given variant and returns the input unchanged.
    """
    known = _check_candidates(oms.candidates)
    _check_ballot(oms.sigma, known, "sigma")
    if oms.d is None:
        if require_distinguished:
            raise DistinguishedNotCandidate("No distinguished candidate given")
    elif oms.d not in known:
        raise DistinguishedNotCandidate(f"Distinguished candidate {oms.d!r} is not a candidate")

    snapshot = oms.snapshot
    for voter, ballot in snapshot.past:
        _check_ballot(ballot, known, f"Ballot of {voter.name!r}")
    _check_voters(snapshot.voters, variant)

    current = snapshot.current
    if not variant.freeform and not current.is_manipulator:
        raise CurrentVoterNotManipulator(f"Current voter {current.name!r} is not a manipulator")
    if snapshot.current_ballot is not None:
        if not variant.freeform or current.is_manipulator:
            raise UnexpectedCurrentBallot(
                f"Only a freeform nonmanipulator current voter may come with a ballot ({current.name!r})"
            )
        _check_ballot(snapshot.current_ballot, known, f"Ballot of {current.name!r}")
    _check_pending(snapshot.pending, variant)

    logger.debug(f"Validated OMS with {len(oms.candidates)} candidates and {len(snapshot.voters)} voters")
    return oms


def validate_schedule_free(state: ScheduleFreeState, variant: ProblemVariant) -> ScheduleFreeState:
    known = _check_candidates(state.candidates)
    _check_ballot(state.sigma, known, "sigma")
    if state.d is None or state.d not in known:
        raise DistinguishedNotCandidate(f"Distinguished candidate {state.d!r} is not a candidate")
    for voter, ballot in state.past:
        _check_ballot(ballot, known, f"Ballot of {voter.name!r}")
    _check_voters(tuple(v for v, _ in state.past) + state.remaining, variant)
    manipulators = sum(1 for v in state.remaining if v.is_manipulator)
    if variant.coalition_bound is not None and manipulators > variant.coalition_bound:
        raise BadCoalitionBound(
            f"{manipulators} remaining manipulators exceed the coalition bound {variant.coalition_bound}"
        )
    return state
