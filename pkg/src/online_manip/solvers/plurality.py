import logging
from typing import Optional

from ..model.election import OMS, Direction, ProblemVariant, validate_oms
from ..rules.scoring import RuleId, scoring_vector
from .state import ScoreState, require

logger = logging.getLogger(__name__)

CONSTRUCTIVE_NUW = ProblemVariant()
DESTRUCTIVE_NUW = ProblemVariant(direction=Direction.DESTRUCTIVE)


def _state(oms: OMS) -> ScoreState:
    return ScoreState.from_oms(oms, scoring_vector(RuleId.plurality(), len(oms.candidates)))


def decide_plurality_constructive_weighted(oms: OMS, variant: Optional[ProblemVariant] = None) -> bool:
    """
    Manipulators pile onto the strongest liked candidate, nonmanipulators onto
    the strongest disliked one; the coalition succeeds iff the former keeps up.
    """
    variant = variant or CONSTRUCTIVE_NUW
    require(variant, "Plurality constructive solver")
    validate_oms(oms, variant)
    assert oms.d is not None

    position = oms.sigma.index(oms.d)
    liked, disliked = oms.sigma[: position + 1], oms.sigma[position + 1 :]
    if not disliked:
        return True
    state = _state(oms)
    result = state.best(liked) + state.Wm >= state.Wn + state.best(disliked)
    logger.debug(
        f"plurality constructive: {state.best(liked)}+{state.Wm} vs {state.Wn}+{state.best(disliked)} -> {result}"
    )
    return result


def decide_plurality_destructive_weighted(oms: OMS, variant: Optional[ProblemVariant] = None) -> bool:
    variant = variant or DESTRUCTIVE_NUW
    require(variant, "Plurality destructive solver", direction=Direction.DESTRUCTIVE)
    validate_oms(oms, variant)
    assert oms.d is not None

    position = oms.sigma.index(oms.d)
    if position == 0:
        # every candidate is forbidden
        return False
    state = _state(oms)
    G = state.best(oms.sigma[:position])
    L = state.best(oms.sigma[position:])
    return G + state.Wm > L + state.Wn
