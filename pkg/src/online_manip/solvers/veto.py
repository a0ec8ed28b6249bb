"""
Weighted veto: threshold comparison with an exact covering search standing in
for the NP oracle, plus the three-candidate case split.
"""
import bisect
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..model.election import OMS, Candidate, ProblemVariant, validate_oms
from ..model.errors import WrongVariant
from ..rules.scoring import RuleId, scoring_vector
from .plurality import CONSTRUCTIVE_NUW
from .state import ScoreState, monus, require

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _subset_sums(weights: Tuple[int, ...]) -> Tuple[int, ...]:
    sums = {0}
    for w in weights:
        sums |= {s + w for s in sums}
    return tuple(sorted(sums))


def _two_groups(weights: Sequence[int], d1: int, d2: int) -> bool:
    """Is there a subset with sum in [d1, total - d2]? Meet in the middle."""
    total = sum(weights)
    hi = total - d2
    if hi < d1:
        return False
    half = len(weights) // 2
    left = _subset_sums(tuple(sorted(weights[:half])))
    right = _subset_sums(tuple(sorted(weights[half:])))
    for s in left:
        lo_needed = d1 - s
        pos = bisect.bisect_left(right, lo_needed)
        if pos < len(right) and s + right[pos] <= hi:
            return True
    return False


def _many_groups(weights: Sequence[int], demands: Sequence[int]) -> bool:
    """Branch and bound, largest weight first; unassigned weights go to a sink."""
    items = sorted(weights, reverse=True)
    suffix = [0] * (len(items) + 1)
    for i in range(len(items) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + items[i]
    memo: Dict[Tuple[int, Tuple[int, ...]], bool] = {}

    def search(i: int, needs: Tuple[int, ...]) -> bool:
        if not needs:
            return True
        if suffix[i] < sum(needs):
            return False
        key = (i, needs)
        if key in memo:
            return memo[key]
        w = items[i]
        result = False
        tried = set()
        for j, need in enumerate(needs):
            if need in tried:
                continue
            tried.add(need)
            rest = needs[:j] + needs[j + 1 :]
            left = need - w
            child = tuple(sorted(rest + ((left,) if left > 0 else ()), reverse=True))
            if search(i + 1, child):
                result = True
                break
        if not result:
            result = search(i + 1, needs)
        memo[key] = result
        return result

    return search(0, tuple(sorted((d for d in demands if d > 0), reverse=True)))


def partition_feasible(weights: Sequence[int], demands: Sequence[int]) -> bool:
    """
    Can the weights be split into disjoint groups, one per demand, each
    summing to at least its demand? Weights may be left unused.
    """
    needs = [d for d in demands if d > 0]
    if not needs:
        return True
    if sum(weights) < sum(needs):
        return False
    if len(needs) == 1:
        return True
    if len(needs) == 2:
        return _two_groups(list(weights), needs[0], needs[1])
    return _many_groups(list(weights), needs)


def min_threshold(weights: Sequence[int], maxscores: Sequence[int]) -> int:
    """Least t such that the weights can bring every target down to at most t."""
    if not maxscores:
        return 0
    lo, hi = 0, max(maxscores)
    while lo < hi:
        mid = (lo + hi) // 2
        if partition_feasible(weights, [monus(s, mid) for s in maxscores]):
            hi = mid
        else:
            lo = mid + 1
    logger.debug(f"min_threshold over {len(weights)} weights and {len(maxscores)} targets = {lo}")
    return lo


def _veto_state(oms: OMS) -> ScoreState:
    return ScoreState.from_oms(oms, scoring_vector(RuleId.veto(), len(oms.candidates)))


def decide_veto_weighted(oms: OMS, variant: Optional[ProblemVariant] = None) -> bool:
    """
    Compares the lowest cap t1 the manipulators can impose on the disliked
    candidates with the lowest cap t2 the nonmanipulators can impose on the
    liked ones; the coalition wins iff t1 <= t2.
    """
    variant = variant or CONSTRUCTIVE_NUW
    require(variant, "Weighted veto solver")
    validate_oms(oms, variant)
    assert oms.d is not None

    position = oms.sigma.index(oms.d)
    if position == len(oms.sigma) - 1:
        return True
    state = _veto_state(oms)
    pending = oms.snapshot.pending
    manipulator_weights = [v.weight for v in pending if v.is_manipulator]
    other_weights = [v.weight for v in pending if not v.is_manipulator]
    t1 = min_threshold(manipulator_weights, [state.maxscore[c] for c in oms.sigma[position + 1 :]])
    t2 = min_threshold(other_weights, [state.maxscore[c] for c in oms.sigma[: position + 1]])
    logger.debug(f"veto thresholds t1={t1} t2={t2}")
    return t1 <= t2


def _past_vetoes(oms: OMS) -> Dict[Candidate, int]:
    vetoes = {c: 0 for c in oms.candidates}
    for voter, ballot in oms.snapshot.past:
        vetoes[ballot[-1]] += voter.weight
    return vetoes


def decide_veto3_weighted(oms: OMS, variant: Optional[ProblemVariant] = None) -> bool:
    variant = variant or CONSTRUCTIVE_NUW
    require(variant, "Three-candidate veto solver")
    if len(oms.candidates) != 3:
        raise WrongVariant(f"Three-candidate veto solver got {len(oms.candidates)} candidates")
    validate_oms(oms, variant)
    assert oms.d is not None

    a, b, c = oms.sigma
    if oms.d == c:
        return True
    pending = oms.snapshot.pending
    manipulator_weights: List[int] = [v.weight for v in pending if v.is_manipulator]
    other_weights: List[int] = [v.weight for v in pending if not v.is_manipulator]
    past = _past_vetoes(oms)
    if oms.d == a:
        # nonmanipulators all veto a; manipulators must lift b and c to a's vetoes
        va = past[a] + sum(other_weights)
        return partition_feasible(manipulator_weights, (monus(va, past[b]), monus(va, past[c])))
    # manipulators all veto c; nonmanipulators try to make c the unique winner
    vc = past[c] + sum(manipulator_weights)
    return not partition_feasible(other_weights, (monus(vc + 1, past[a]), monus(vc + 1, past[b])))
