from .approval import decide_1veto_threshold, decide_kapproval_kveto_unweighted
from .plurality import decide_plurality_constructive_weighted, decide_plurality_destructive_weighted
from .routing import ROUTING_TABLE, SOLVER_CHOICES, Route, explain, route, solve
from .scoring import NotPolynomialCase, decide_scoring_weighted
from .state import ScoreState, monus
from .veto import decide_veto3_weighted, decide_veto_weighted, min_threshold, partition_feasible

__all__ = [
    "decide_1veto_threshold",
    "decide_kapproval_kveto_unweighted",
    "decide_plurality_constructive_weighted",
    "decide_plurality_destructive_weighted",
    "ROUTING_TABLE",
    "SOLVER_CHOICES",
    "Route",
    "explain",
    "route",
    "solve",
    "NotPolynomialCase",
    "decide_scoring_weighted",
    "ScoreState",
    "monus",
    "decide_veto3_weighted",
    "decide_veto_weighted",
    "min_threshold",
    "partition_feasible",
]
