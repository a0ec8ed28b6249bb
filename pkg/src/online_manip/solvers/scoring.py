import logging
from dataclasses import dataclass
from typing import Optional, Union

from ..model.election import OMS, ProblemVariant, validate_oms
from ..model.errors import LengthMismatch
from ..rules.scoring import ScoringVector
from .plurality import CONSTRUCTIVE_NUW, decide_plurality_constructive_weighted
from .state import require

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotPolynomialCase:
    """Returned when a scoring vector falls outside the polynomial cases; use the oracle."""
    alpha: ScoringVector


def decide_scoring_weighted(
    alpha: ScoringVector, oms: OMS, variant: Optional[ProblemVariant] = None
) -> Union[bool, NotPolynomialCase]:
    variant = variant or CONSTRUCTIVE_NUW
    require(variant, "Scoring solver")
    validate_oms(oms, variant)
    if len(alpha) != len(oms.candidates):
        raise LengthMismatch(f"Scoring vector of length {len(alpha)} used with {len(oms.candidates)} candidates")
    a = alpha.alpha
    if a[0] == a[-1]:
        # all candidates always tie
        return True
    if a[1] == a[-1]:
        # an affine shift of plurality scores, so the winner sets coincide
        return decide_plurality_constructive_weighted(oms, variant)
    logger.debug(f"Scoring vector {a} is not a polynomial case")
    return NotPolynomialCase(alpha)
