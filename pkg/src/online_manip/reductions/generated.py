from dataclasses import dataclass

from ..model.election import OMS, ProblemVariant
from ..rules.scoring import RuleId


@dataclass(frozen=True)
class GeneratedInstance:
    """An OMS together with the rule and variant it is meant to be decided under."""
    oms: OMS
    rule: RuleId
    variant: ProblemVariant
