"""
Exact game-tree evaluation of online manipulation problems.

Remaining voters are processed in order. A manipulator's turn is an
existential ply over all total orders of the candidates, a nonmanipulator's
turn is a universal ply, and a leaf is scored with the rule and checked
against the goal set.
"""
import itertools
import logging
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..config import get_settings
from ..model.election import (
    OMS,
    Ballot,
    Candidate,
    Direction,
    ElectionSnapshot,
    ProblemVariant,
    ScheduleFreeState,
    Target,
    Voter,
    goal_set,
    outcome_succeeds,
    validate_oms,
    validate_schedule_free,
)
from ..model.errors import SearchBudgetExceeded, WrongVariant
from ..rules.scoring import RuleId, scoring_vector, tally, top_scorers
from ..rules.tiered import tiered_winners

logger = logging.getLogger(__name__)

# (voter, fixed ballot or None)
Step = Tuple[Voter, Optional[Ballot]]
Decider = Callable[[OMS], bool]


class _Search:
    def __init__(
        self,
        candidates: Sequence[Candidate],
        rule: RuleId,
        variant: ProblemVariant,
        goal: FrozenSet[Candidate],
        node_budget: Optional[int] = None,
    ):
        self.candidates = tuple(candidates)
        self.rule = rule
        self.variant = variant
        self.goal = goal
        self.node_budget = node_budget if node_budget is not None else get_settings().node_budget
        self.nodes = 0
        self.ballots: List[Ballot] = list(itertools.permutations(self.candidates))
        self.memo: Dict[Tuple[int, Tuple[int, ...]], bool] = {}
        self.alpha = scoring_vector(rule, len(self.candidates)) if rule.is_scoring else None
        if self.alpha is not None:
            index = {c: i for i, c in enumerate(self.candidates)}
            # Ballots giving every candidate the same points are interchangeable.
            seen: Dict[Tuple[int, ...], Ballot] = {}
            for ballot in self.ballots:
                points = [0] * len(self.candidates)
                for position, c in enumerate(ballot):
                    points[index[c]] = self.alpha.alpha[position]
                seen.setdefault(tuple(points), ballot)
            self.point_vectors = list(seen.items())

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetExceeded(self.node_budget)

    def _scores_of(self, cast: Sequence[Tuple[Voter, Ballot]]) -> Tuple[int, ...]:
        assert self.alpha is not None
        scores = tally(self.alpha, self.candidates, ((v.weight, b) for v, b in cast))
        return tuple(scores[c] for c in self.candidates)

    def _scoring_leaf(self, scores: Tuple[int, ...]) -> bool:
        winners = top_scorers(dict(zip(self.candidates, scores)))
        return outcome_succeeds(winners, self.goal, self.variant)

    def _points(self, ballot: Ballot) -> Tuple[int, ...]:
        assert self.alpha is not None
        points = [0] * len(self.candidates)
        for position, c in enumerate(ballot):
            points[self.candidates.index(c)] = self.alpha.alpha[position]
        return tuple(points)

    def _scoring_value(self, steps: Sequence[Step], idx: int, scores: Tuple[int, ...]) -> bool:
        if idx == len(steps):
            return self._scoring_leaf(scores)
        key = (idx, scores)
        if key in self.memo:
            return self.memo[key]
        self._tick()
        voter, fixed = steps[idx]
        w = voter.weight

        def child(points: Tuple[int, ...]) -> bool:
            return self._scoring_value(steps, idx + 1, tuple(s + w * p for s, p in zip(scores, points)))

        if fixed is not None:
            result = child(self._points(fixed))
        elif voter.is_manipulator:
            result = any(child(points) for points, _ in self.point_vectors)
        else:
            result = all(child(points) for points, _ in self.point_vectors)
        self.memo[key] = result
        return result

    def _tiered_value(self, steps: Sequence[Step], idx: int, cast: Tuple[Tuple[Voter, Ballot], ...]) -> bool:
        if idx == len(steps):
            return outcome_succeeds(tiered_winners(self.candidates, cast), self.goal, self.variant)
        self._tick()
        voter, fixed = steps[idx]
        if fixed is not None:
            return self._tiered_value(steps, idx + 1, cast + ((voter, fixed),))
        children = (self._tiered_value(steps, idx + 1, cast + ((voter, b),)) for b in self.ballots)
        return any(children) if voter.is_manipulator else all(children)

    def value(self, past: Sequence[Tuple[Voter, Ballot]], steps: Sequence[Step]) -> bool:
        if self.alpha is None:
            return self._tiered_value(steps, 0, tuple(past))
        return self._scoring_value(steps, 0, self._scores_of(past))

    def winning_moves(self, past: Sequence[Tuple[Voter, Ballot]], steps: Sequence[Step]) -> List[Ballot]:
        """Ballots for the first step after which the rest of the game is won."""
        voter = steps[0][0]
        moves = []
        for ballot in self.ballots:
            if self.value(tuple(past) + ((voter, ballot),), steps[1:]):
                moves.append(ballot)
        return moves


def _steps_of(snapshot: ElectionSnapshot) -> Tuple[Step, ...]:
    first: Step = (snapshot.current, snapshot.current_ballot)
    return (first,) + tuple((v, None) for v in snapshot.future)


def _goal(oms: OMS, variant: ProblemVariant) -> FrozenSet[Candidate]:
    assert oms.d is not None
    return goal_set(oms.sigma, oms.d, variant.direction, variant.target)


def decide_online(oms: OMS, rule: RuleId, variant: ProblemVariant, node_budget: Optional[int] = None) -> bool:
    """Exact game value of the OMS: can the coalition force its goal against every nonmanipulator?"""
    validate_oms(oms, variant)
    search = _Search(oms.candidates, rule, variant, _goal(oms, variant), node_budget)
    result = search.value(oms.snapshot.past, _steps_of(oms.snapshot))
    logger.debug(f"decide_online d={oms.d!r} -> {result} after {search.nodes} nodes")
    return result


def winning_ballots(
    oms: OMS, rule: RuleId, variant: ProblemVariant, node_budget: Optional[int] = None
) -> List[Ballot]:
    """All ballots the current manipulator can cast that still force success."""
    validate_oms(oms, variant)
    if not oms.snapshot.current.is_manipulator:
        raise WrongVariant("Winning ballots are only defined for a manipulator's turn")
    search = _Search(oms.candidates, rule, variant, _goal(oms, variant), node_budget)
    return search.winning_moves(oms.snapshot.past, _steps_of(oms.snapshot))


def full_profile(
    oms: OMS,
    rule: RuleId,
    variant: ProblemVariant,
    method: str = "each",
    decider: Optional[Decider] = None,
) -> Tuple[int, ...]:
    """
    One bit per candidate, in declaration order: the verdict with that candidate as d.

    `method="bisect"` relies on the segment-constructive profile being monotone
    along sigma and finds the first winning position with a binary search.
    """
    validate_oms(oms, variant, require_distinguished=False)
    if decider is None:
        def decider(o: OMS) -> bool:
            return decide_online(o, rule, variant)

    if method == "each":
        return tuple(int(decider(oms.with_distinguished(c))) for c in oms.candidates)
    if method != "bisect":
        raise ValueError(f"Unknown profile method {method!r}")
    if variant.direction is not Direction.CONSTRUCTIVE or variant.target is not Target.SEGMENT:
        raise WrongVariant("Bisection needs a constructive segment target")

    lo, hi = 0, len(oms.sigma)
    while lo < hi:
        mid = (lo + hi) // 2
        if decider(oms.with_distinguished(oms.sigma[mid])):
            hi = mid
        else:
            lo = mid + 1
    winning = set(oms.sigma[lo:])
    return tuple(int(c in winning) for c in oms.candidates)


def decide_schedule_robust(
    state: ScheduleFreeState,
    rule: RuleId,
    variant: ProblemVariant,
    method: str = "exhaustive",
    node_budget: Optional[int] = None,
) -> bool:
    """
    Whether the coalition succeeds under every voting order of the remaining voters.

    `exhaustive` checks each order; `manipulators_first` checks only the order
    where all manipulators vote before all nonmanipulators.
    """
    validate_schedule_free(state, variant)
    assert state.d is not None
    goal = goal_set(state.sigma, state.d, variant.direction, variant.target)
    search = _Search(state.candidates, rule, variant, goal, node_budget)

    if method == "manipulators_first":
        order = [v for v in state.remaining if v.is_manipulator] + [
            v for v in state.remaining if not v.is_manipulator
        ]
        return search.value(state.past, tuple((v, None) for v in order))
    if method != "exhaustive":
        raise ValueError(f"Unknown schedule method {method!r}")

    for order in itertools.permutations(state.remaining):
        search.memo.clear()
        if not search.value(state.past, tuple((v, None) for v in order)):
            logger.debug(f"Order {[v.name for v in order]} defeats the coalition")
            return False
    return True
