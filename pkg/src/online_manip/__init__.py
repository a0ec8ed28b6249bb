"""Decision procedures, oracles and reductions for online coalitional manipulation."""
from .model import OMS, ElectionSnapshot, ProblemVariant, ScheduleFreeState, Voter
from .oracle import decide_online, decide_schedule_robust, full_profile, winning_ballots
from .rules import RuleId
from .solvers import solve

__version__ = "0.1.0"

__all__ = [
    "OMS",
    "ElectionSnapshot",
    "ProblemVariant",
    "ScheduleFreeState",
    "Voter",
    "decide_online",
    "decide_schedule_robust",
    "full_profile",
    "winning_ballots",
    "RuleId",
    "solve",
]
