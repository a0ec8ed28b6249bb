import logging
from typing import Dict, List, Optional

from ..model.election import OMS, Candidate, ProblemVariant, Weighting, validate_oms
from ..model.errors import MTooSmall, WrongVariant
from ..rules.scoring import RuleId, RuleKind, scoring_vector, tally, top_scorers
from .state import ScoreState, monus, require

logger = logging.getLogger(__name__)

UNWEIGHTED_CONSTRUCTIVE_NUW = ProblemVariant(weighting=Weighting.UNWEIGHTED)


def _greedy_order(
    approvals: Dict[Candidate, int], liked: List[Candidate], disliked: List[Candidate], reverse_ties: bool
) -> List[Candidate]:
    """Liked candidates by approvals descending, then the rest by approvals ascending."""
    # sorted() is stable, so the name order survives as the tie-break
    head = sorted(sorted(liked, reverse=reverse_ties), key=lambda c: -approvals[c])
    tail = sorted(sorted(disliked, reverse=reverse_ties), key=lambda c: approvals[c])
    return head + tail


def decide_kapproval_kveto_unweighted(
    oms: OMS,
    family: RuleKind,
    k: int,
    variant: Optional[ProblemVariant] = None,
    reverse_ties: bool = False,
) -> bool:
    """
    Simulates every voter from u onward: a manipulator approves the first l
    candidates of the greedy order and a nonmanipulator the last l, where l is
    k for k-approval and |C|-k for k-veto. Success can be forced iff the
    simulated election ends with a liked winner.
    """
    variant = variant or UNWEIGHTED_CONSTRUCTIVE_NUW
    require(variant, "Greedy approval solver", weighting=Weighting.UNWEIGHTED)
    if family not in (RuleKind.K_APPROVAL, RuleKind.K_VETO):
        raise WrongVariant(f"Greedy solver handles k-approval and k-veto, not {family.value}")
    validate_oms(oms, variant)
    assert oms.d is not None

    m = len(oms.candidates)
    if m < k:
        raise MTooSmall(f"{family.value} with k={k} needs at least {k} candidates, got {m}")
    rule = RuleId(family, k)
    alpha = scoring_vector(rule, m)
    approvals = tally(alpha, oms.candidates, ((v.weight, b) for v, b in oms.snapshot.past))
    ell = k if family is RuleKind.K_APPROVAL else m - k

    position = oms.sigma.index(oms.d)
    liked, disliked = list(oms.sigma[: position + 1]), list(oms.sigma[position + 1 :])
    for voter in oms.snapshot.pending:
        order = _greedy_order(approvals, liked, disliked, reverse_ties)
        chosen = order[:ell] if voter.is_manipulator else order[m - ell :]
        for c in chosen:
            approvals[c] += 1
        logger.debug(f"greedy: {voter.name} approves {chosen}")

    return not top_scorers(approvals).isdisjoint(liked)


def decide_1veto_threshold(oms: OMS, variant: Optional[ProblemVariant] = None) -> bool:
    """
    Some threshold t lets the manipulators hold every disliked candidate to at
    most t while the nonmanipulators cannot push every liked candidate below t.
    """
    variant = variant or UNWEIGHTED_CONSTRUCTIVE_NUW
    require(variant, "1-veto threshold solver", weighting=Weighting.UNWEIGHTED)
    validate_oms(oms, variant)
    assert oms.d is not None

    position = oms.sigma.index(oms.d)
    if position == len(oms.sigma) - 1:
        return True
    state = ScoreState.from_oms(oms, scoring_vector(RuleId.veto(), len(oms.candidates)))
    liked, disliked = oms.sigma[: position + 1], oms.sigma[position + 1 :]
    total_voters = len(oms.snapshot.voters)
    for t in range(total_voters + 1):
        needed = sum(monus(state.maxscore[c], t) for c in disliked)
        blocking = sum(monus(state.maxscore[c], t - 1) for c in liked)
        if needed <= state.n1 and blocking > state.n0:
            logger.debug(f"1-veto threshold {t} works")
            return True
    return False
