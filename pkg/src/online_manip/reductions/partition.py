import logging
from typing import Sequence, Tuple

from ..config import get_settings
from ..model.election import (
    OMS,
    Direction,
    ElectionSnapshot,
    ProblemVariant,
    Role,
    Voter,
    WinnerModel,
)
from ..model.errors import BadPartitionInput, OddSum, TooLarge
from ..rules.scoring import RuleId
from .generated import GeneratedInstance

logger = logging.getLogger(__name__)

DESTRUCTIVE = "destructive"
CONSTRUCTIVE_COMPLEMENT = "constructive_complement"
FLAVORS = (DESTRUCTIVE, CONSTRUCTIVE_COMPLEMENT)


def _half(weights: Sequence[int]) -> int:
    if not weights or any(w <= 0 for w in weights):
        raise BadPartitionInput(f"Partition weights must be positive and nonempty, got {list(weights)}")
    total = sum(weights)
    if total % 2:
        raise BadPartitionInput(f"Partition weights must have an even sum, got {total}")
    return total // 2


def partition_brute(weights: Sequence[int]) -> bool:
    """Is there a subset summing to exactly half the total?"""
    if any(w <= 0 for w in weights):
        raise BadPartitionInput(f"Partition weights must be positive, got {list(weights)}")
    limit = get_settings().max_brute_items
    if len(weights) > limit:
        raise TooLarge(f"{len(weights)} weights exceed the brute-force limit of {limit}")
    total = sum(weights)
    if total % 2:
        raise OddSum(f"Weights sum to the odd number {total}")
    reachable = 1
    for w in weights:
        reachable |= reachable << w
    return bool((reachable >> (total // 2)) & 1)


def _ballot_for(top: str, candidates: Tuple[str, ...]) -> Tuple[str, ...]:
    return (top,) + tuple(c for c in candidates if c != top)


def gen_partition_plurality_uw(weights: Sequence[int], m: int, flavor: str = DESTRUCTIVE) -> GeneratedInstance:
    """
    Plurality unique-winner instance built from a Partition instance.

    In the destructive flavor the coalition succeeds iff it can force a tie,
    which it can iff the weights split evenly. The complement flavor hands the
    weights to nonmanipulators, so the coalition succeeds iff they cannot tie.
    """
    W = _half(weights)
    if m < 2:
        raise BadPartitionInput(f"Need at least 2 candidates, got {m}")
    if flavor not in FLAVORS:
        raise BadPartitionInput(f"Unknown flavor {flavor!r}")

    candidates = tuple(f"c{i}" for i in range(1, m + 1))
    past = tuple(
        (Voter(f"v{i}", (m - 1) * W - i, Role.NONMANIPULATOR), _ballot_for(candidates[i - 1], candidates))
        for i in range(1, m - 1)
    )
    if flavor == DESTRUCTIVE:
        pending = tuple(Voter(f"u{i}", (m - 1) * w, Role.MANIPULATOR) for i, w in enumerate(weights, start=1))
        d = candidates[0]
        variant = ProblemVariant(direction=Direction.DESTRUCTIVE, winner_model=WinnerModel.UNIQUE)
    else:
        pending = (Voter("u0", 0, Role.MANIPULATOR),) + tuple(
            Voter(f"u{i}", (m - 1) * w, Role.NONMANIPULATOR) for i, w in enumerate(weights, start=1)
        )
        d = candidates[-1]
        variant = ProblemVariant(winner_model=WinnerModel.UNIQUE)

    snapshot = ElectionSnapshot(past=past, current=pending[0], future=pending[1:])
    return GeneratedInstance(OMS(candidates, snapshot, candidates, d), RuleId.plurality(), variant)


def gen_partition_veto3(weights: Sequence[int]) -> GeneratedInstance:
    """Three-candidate veto instance that is a NO instance iff the weights split evenly."""
    W = _half(weights)
    candidates = ("a", "b", "c")
    past = ((Voter("v", W - 1, Role.NONMANIPULATOR), ("a", "b", "c")),)
    u = Voter("u", 0, Role.MANIPULATOR)
    future = tuple(Voter(f"n{i}", w, Role.NONMANIPULATOR) for i, w in enumerate(weights, start=1))
    snapshot = ElectionSnapshot(past=past, current=u, future=future)
    return GeneratedInstance(OMS(candidates, snapshot, candidates, "b"), RuleId.veto(), ProblemVariant())


def partition_plurality_label(weights: Sequence[int], flavor: str = DESTRUCTIVE) -> bool:
    solvable = partition_brute(weights)
    return solvable if flavor == DESTRUCTIVE else not solvable


def partition_veto3_label(weights: Sequence[int]) -> bool:
    return not partition_brute(weights)
