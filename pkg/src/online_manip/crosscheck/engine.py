"""
Randomized solver-equivalence sweeps.

Every sample is drawn from its own seeded generator, so a sweep is
reproducible for a fixed seed whatever the number of workers, and results are
reported in sample order.
"""
import logging
import random
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..model.election import (
    Direction,
    ProblemVariant,
    Role,
    Voter,
    Weighting,
)
from ..oracle.game import decide_online, decide_schedule_robust, full_profile
from ..parser.instance import InstanceFile
from ..rules.scoring import RuleId, RuleKind, scoring_vector
from ..solvers.approval import decide_1veto_threshold, decide_kapproval_kveto_unweighted
from ..solvers.plurality import decide_plurality_constructive_weighted, decide_plurality_destructive_weighted
from ..solvers.scoring import decide_scoring_weighted
from ..solvers.veto import decide_veto3_weighted, decide_veto_weighted

logger = logging.getLogger(__name__)

FAMILIES = ("plurality", "veto", "approval", "scoring", "schedule")


@dataclass(frozen=True)
class Bounds:
    max_candidates: int = 3
    max_voters: int = 4
    max_weight: int = 3


@dataclass(frozen=True)
class CrosscheckReport:
    checked: int
    counterexample: Optional[InstanceFile] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def _random_voters(
    rng: random.Random, bounds: Bounds, weighted: bool, candidates: Tuple[str, ...], remaining_cap: Optional[int] = None
):
    total = rng.randint(1, max(1, bounds.max_voters))
    remaining = rng.randint(1, total if remaining_cap is None else min(total, remaining_cap))
    names = [f"v{i}" for i in range(1, total + 1)]

    def weight() -> int:
        return rng.randint(0, bounds.max_weight) if weighted else 1

    def role() -> Role:
        return rng.choice((Role.MANIPULATOR, Role.NONMANIPULATOR))

    past = []
    for name in names[: total - remaining]:
        ballot = list(candidates)
        rng.shuffle(ballot)
        past.append((Voter(name, weight(), role()), tuple(ballot)))
    rest = [Voter(name, weight(), role()) for name in names[total - remaining :]]
    return tuple(past), rest


def sample_instance(
    rng: random.Random,
    bounds: Bounds,
    rule: RuleId,
    variant: ProblemVariant,
    min_candidates: int = 2,
    schedule_free: bool = False,
) -> InstanceFile:
    m = rng.randint(min_candidates, max(min_candidates, bounds.max_candidates))
    candidates = tuple(string.ascii_lowercase[:m])
    weighted = variant.weighting is Weighting.WEIGHTED
    past, rest = _random_voters(rng, bounds, weighted, candidates, 3 if schedule_free else None)
    sigma = list(candidates)
    rng.shuffle(sigma)
    d = rng.choice(candidates)
    if schedule_free:
        return InstanceFile(candidates, tuple(sigma), rule, variant, d, past, unordered=tuple(rest))
    rest[0] = replace(rest[0], role=Role.MANIPULATOR)
    return InstanceFile(candidates, tuple(sigma), rule, variant, d, past, pending=tuple(rest))


Verdicts = List[Tuple[str, bool]]


def _plurality(rng: random.Random, bounds: Bounds, mutant: bool) -> Tuple[InstanceFile, Verdicts]:
    direction = rng.choice((Direction.CONSTRUCTIVE, Direction.DESTRUCTIVE))
    instance = sample_instance(rng, bounds, RuleId.plurality(), ProblemVariant(direction=direction))
    oms, variant = instance.to_oms(), instance.variant
    if direction is Direction.CONSTRUCTIVE:
        verdict = decide_plurality_constructive_weighted(oms, variant)
        name = "plurality-constructive"
    else:
        verdict = decide_plurality_destructive_weighted(oms, variant)
        name = "plurality-destructive"
    return instance, [(name, verdict != mutant)]


def _veto(rng: random.Random, bounds: Bounds, mutant: bool) -> Tuple[InstanceFile, Verdicts]:
    weighting = rng.choice((Weighting.WEIGHTED, Weighting.UNWEIGHTED))
    instance = sample_instance(rng, bounds, RuleId.veto(), ProblemVariant(weighting=weighting))
    oms, variant = instance.to_oms(), instance.variant
    verdicts = [("veto-pnp", decide_veto_weighted(oms, variant))]
    if len(oms.candidates) == 3:
        verdicts.append(("veto3", decide_veto3_weighted(oms, variant)))
    if weighting is Weighting.UNWEIGHTED:
        verdicts.append(("veto-threshold", decide_1veto_threshold(oms, variant)))
        verdicts.append(("greedy", decide_kapproval_kveto_unweighted(oms, RuleKind.K_VETO, 1, variant)))
    return instance, verdicts


def _approval(rng: random.Random, bounds: Bounds, mutant: bool) -> Tuple[InstanceFile, Verdicts]:
    family = rng.choice((RuleKind.K_APPROVAL, RuleKind.K_VETO))
    k = rng.randint(1, 2)
    variant = ProblemVariant(weighting=Weighting.UNWEIGHTED)
    instance = sample_instance(rng, bounds, RuleId(family, k), variant, min_candidates=k + 1)
    oms = instance.to_oms()
    return instance, [
        ("greedy", decide_kapproval_kveto_unweighted(oms, family, k, variant)),
        ("greedy-reversed", decide_kapproval_kveto_unweighted(oms, family, k, variant, reverse_ties=True)),
    ]


def _scoring(rng: random.Random, bounds: Bounds, mutant: bool) -> Tuple[InstanceFile, Verdicts]:
    instance = sample_instance(rng, bounds, RuleId.plurality(), ProblemVariant())
    m = len(instance.candidates)
    top = rng.randint(1, 3)
    # alpha2 = ... = alpham keeps the vector in the polynomial case
    instance = replace(instance, rule=RuleId.scoring((top,) + (rng.randint(0, top),) * (m - 1)))
    oms = instance.to_oms()
    result = decide_scoring_weighted(scoring_vector(instance.rule, len(oms.candidates)), oms, instance.variant)
    return instance, [("scoring", result)] if isinstance(result, bool) else []


def _oracle_verdict(instance: InstanceFile) -> bool:
    return decide_online(instance.to_oms(), instance.rule, instance.variant)


_FAMILY_CHECKS: Dict[str, Callable[[random.Random, Bounds, bool], Tuple[InstanceFile, Verdicts]]] = {
    "plurality": _plurality,
    "veto": _veto,
    "approval": _approval,
    "scoring": _scoring,
}


def check_sample(family: str, seed: int, index: int, bounds: Bounds, mutant: bool = False) -> Optional[Tuple[InstanceFile, str]]:
    """Draws sample `index` of a sweep and returns (instance, description) on a disagreement."""
    rng = random.Random(f"{seed}:{family}:{index}")

    if family == "schedule":
        rule = rng.choice((RuleId.plurality(), RuleId.veto()))
        instance = sample_instance(rng, bounds, rule, ProblemVariant(), schedule_free=True)
        state = instance.to_schedule_free()
        exhaustive = decide_schedule_robust(state, rule, instance.variant, "exhaustive")
        first = decide_schedule_robust(state, rule, instance.variant, "manipulators_first")
        if exhaustive != first:
            return replace(instance, label=exhaustive), f"exhaustive={exhaustive} manipulators_first={first}"
        return None

    instance, verdicts = _FAMILY_CHECKS[family](rng, bounds, mutant)
    expected = _oracle_verdict(instance)
    for name, verdict in verdicts:
        if verdict != expected:
            return replace(instance, label=expected), f"{name}={verdict} oracle={expected}"

    variant = instance.variant
    if family == "plurality" and variant.direction is Direction.CONSTRUCTIVE:
        oms = replace(instance.to_oms(), d=None)
        profile = full_profile(oms, instance.rule, variant)
        along_sigma = [profile[oms.candidates.index(c)] for c in oms.sigma]
        if along_sigma != sorted(along_sigma):
            return replace(instance, label=expected), f"profile {profile} is not monotone along sigma"
    return None


def _run_batch(args: Tuple[str, int, Sequence[int], Bounds, bool]) -> List[Optional[Tuple[InstanceFile, str]]]:
    family, seed, indices, bounds, mutant = args
    return [check_sample(family, seed, i, bounds, mutant) for i in indices]


def crosscheck(
    families: Sequence[str] = ("plurality", "veto"),
    bounds: Bounds = Bounds(),
    samples: int = 200,
    seed: int = 0,
    workers: int = 1,
    mutant: bool = False,
) -> CrosscheckReport:
    """
    Runs `samples` checks per family and stops at the first disagreement
    (in family, then sample, order).
    """
    for family in families:
        if family not in FAMILIES:
            raise ValueError(f"Unknown rule family {family!r}; expected one of {', '.join(FAMILIES)}")

    checked = 0
    batch = 50
    for family in families:
        jobs = [
            (family, seed, range(start, min(start + batch, samples)), bounds, mutant)
            for start in range(0, samples, batch)
        ]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = [r for chunk in pool.map(_run_batch, jobs) for r in chunk]
        else:
            results = [r for job in jobs for r in _run_batch(job)]
        for result in results:
            checked += 1
            if result is not None:
                instance, detail = result
                logger.error(f"Counterexample in {family} sweep: {detail}")
                return CrosscheckReport(checked, instance, detail)
        logger.info(f"{family}: {samples} samples agree")
    return CrosscheckReport(checked)
