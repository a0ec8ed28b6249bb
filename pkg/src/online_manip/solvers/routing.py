"""
Solver routing: which decision procedure answers which instance.

The `auto` route walks ROUTING_TABLE top to bottom and takes the first row
that applies; the oracle row applies to everything.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from ..model.election import OMS, Direction, ProblemVariant, Target, Weighting
from ..model.errors import WrongVariant
from ..oracle.game import decide_online
from ..rules.scoring import RuleId, RuleKind, scoring_vector
from .approval import decide_1veto_threshold, decide_kapproval_kveto_unweighted
from .plurality import decide_plurality_constructive_weighted, decide_plurality_destructive_weighted
from .scoring import NotPolynomialCase, decide_scoring_weighted
from .veto import decide_veto3_weighted, decide_veto_weighted

logger = logging.getLogger(__name__)

SOLVER_CHOICES = ("auto", "oracle", "poly", "veto-pnp", "veto3", "greedy", "threshold")


def _plain(variant: ProblemVariant) -> bool:
    return not variant.freeform and not variant.unique


def _constructive_segment(variant: ProblemVariant) -> bool:
    return _plain(variant) and variant.direction is Direction.CONSTRUCTIVE and variant.target is Target.SEGMENT


def _polynomial_alpha(rule: RuleId, oms: OMS) -> bool:
    if rule.kind is not RuleKind.SCORING or len(rule.alpha or ()) != len(oms.candidates):
        return False
    a = scoring_vector(rule, len(oms.candidates)).alpha
    return a[0] == a[-1] or a[1] == a[-1]


@dataclass(frozen=True)
class Route:
    name: str
    family: str
    condition: str
    applies: Callable[[OMS, RuleId, ProblemVariant], bool]
    run: Callable[[OMS, RuleId, ProblemVariant], bool]


def _run_scoring(oms: OMS, rule: RuleId, variant: ProblemVariant) -> bool:
    result = decide_scoring_weighted(scoring_vector(rule, len(oms.candidates)), oms, variant)
    if isinstance(result, NotPolynomialCase):
        raise WrongVariant(f"Scoring vector {result.alpha.alpha} has no polynomial solver")
    return result


ROUTING_TABLE: Tuple[Route, ...] = (
    Route(
        "plurality-constructive",
        "poly",
        "plurality, constructive, segment, nonunique, not freeform",
        lambda o, r, v: r.is_plurality and _constructive_segment(v),
        lambda o, r, v: decide_plurality_constructive_weighted(o, v),
    ),
    Route(
        "plurality-destructive",
        "poly",
        "plurality, destructive, nonunique, not freeform",
        lambda o, r, v: r.is_plurality and _plain(v) and v.direction is Direction.DESTRUCTIVE,
        lambda o, r, v: decide_plurality_destructive_weighted(o, v),
    ),
    Route(
        "scoring",
        "poly",
        "scoring vector with alpha2 = alpham, constructive, segment, nonunique, not freeform",
        lambda o, r, v: _polynomial_alpha(r, o) and _constructive_segment(v),
        _run_scoring,
    ),
    Route(
        "veto-threshold",
        "threshold",
        "veto, unweighted, constructive, segment, nonunique, not freeform",
        lambda o, r, v: r.is_veto and v.weighting is Weighting.UNWEIGHTED and _constructive_segment(v),
        lambda o, r, v: decide_1veto_threshold(o, v),
    ),
    Route(
        "veto3",
        "veto3",
        "veto, 3 candidates, constructive, segment, nonunique, not freeform",
        lambda o, r, v: r.is_veto and len(o.candidates) == 3 and _constructive_segment(v),
        lambda o, r, v: decide_veto3_weighted(o, v),
    ),
    Route(
        "veto-pnp",
        "veto-pnp",
        "veto, constructive, segment, nonunique, not freeform",
        lambda o, r, v: r.is_veto and _constructive_segment(v),
        lambda o, r, v: decide_veto_weighted(o, v),
    ),
    Route(
        "greedy",
        "greedy",
        "k-approval or k-veto, unweighted, constructive, segment, nonunique, not freeform",
        lambda o, r, v: r.kind in (RuleKind.K_APPROVAL, RuleKind.K_VETO)
        and v.weighting is Weighting.UNWEIGHTED
        and _constructive_segment(v),
        lambda o, r, v: decide_kapproval_kveto_unweighted(o, r.kind, r.k, v),
    ),
    Route(
        "oracle",
        "oracle",
        "any instance",
        lambda o, r, v: True,
        lambda o, r, v: decide_online(o, r, v),
    ),
)


def route(oms: OMS, rule: RuleId, variant: ProblemVariant, solver: str = "auto") -> Route:
    """
    The row answering this instance. `auto` takes the first applicable row;
    a named solver takes the first applicable row of that family and raises
    WrongVariant if none applies.
    """
    if solver not in SOLVER_CHOICES:
        raise ValueError(f"Unknown solver {solver!r}")
    for row in ROUTING_TABLE:
        if solver != "auto" and row.family != solver:
            continue
        if row.applies(oms, rule, variant):
            return row
    raise WrongVariant(f"Solver {solver!r} does not apply to {rule.describe()} with this variant")


def solve(oms: OMS, rule: RuleId, variant: ProblemVariant, solver: str = "auto") -> Tuple[bool, str]:
    row = route(oms, rule, variant, solver)
    logger.info(f"Routing to {row.name}")
    return row.run(oms, rule, variant), row.name


def explain(chosen: Optional[Route] = None) -> List[str]:
    lines = []
    for row in ROUTING_TABLE:
        marker = "*" if chosen is not None and row.name == chosen.name else " "
        lines.append(f"{marker} {row.name:<24} [{row.family}] {row.condition}")
    return lines
