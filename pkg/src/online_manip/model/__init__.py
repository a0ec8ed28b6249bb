from .election import (
    OMS,
    Ballot,
    Candidate,
    Direction,
    ElectionSnapshot,
    ProblemVariant,
    Role,
    ScheduleFreeState,
    Target,
    Voter,
    Weighting,
    WinnerModel,
    goal_set,
    outcome_succeeds,
    validate_oms,
    validate_schedule_free,
)

__all__ = [
    "OMS",
    "Ballot",
    "Candidate",
    "Direction",
    "ElectionSnapshot",
    "ProblemVariant",
    "Role",
    "ScheduleFreeState",
    "Target",
    "Voter",
    "Weighting",
    "WinnerModel",
    "goal_set",
    "outcome_succeeds",
    "validate_oms",
    "validate_schedule_free",
]
