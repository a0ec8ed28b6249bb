from .game import decide_online, decide_schedule_robust, full_profile, winning_ballots

__all__ = [
    "decide_online",
    "decide_schedule_robust",
    "full_profile",
    "winning_ballots",
]
