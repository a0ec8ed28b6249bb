import logging

from ..model.election import OMS, ElectionSnapshot, ProblemVariant, Role, Voter
from ..model.errors import NegativeDerivedWeight
from ..rules.scoring import RuleId
from .cnf import ThreeCnfFormula, build_hat_formulas
from .generated import GeneratedInstance
from .wagner import wagner_subset_sum

logger = logging.getLogger(__name__)

CANDIDATES = ("a", "b", "c", "d'")


def _vetoing(target: str):
    return tuple(c for c in CANDIDATES if c != target) + (target,)


def gen_maxsatasg_veto_oms(phi: ThreeCnfFormula, psi: ThreeCnfFormula) -> GeneratedInstance:
    """
    Weighted veto instance over a > b > c > d' with distinguished b that is a
    YES instance iff phi and psi are satisfiable with equal largest
    satisfying assignments. Manipulators carry the subset-sum items of
    phi_hat, nonmanipulators those of psi_hat.
    """
    phi_hat, psi_hat = build_hat_formulas(phi, psi)
    mine = wagner_subset_sum(phi_hat)
    theirs = wagner_subset_sum(psi_hat)
    L, L2 = mine.L, theirs.L
    span = 2 * (2 ** phi_hat.num_vars - 1)

    weights = {
        "a": L,
        "b": L + 2 * L2 + span - sum(theirs.items),
        "c": L2,
        "d'": L2 + 2 * L + span - sum(mine.items),
    }
    for target, w in weights.items():
        if w < 0:
            raise NegativeDerivedWeight(f"Past voter vetoing {target} would get weight {w}")

    past = tuple(
        (Voter(f"p{i}", weights[target], Role.NONMANIPULATOR), _vetoing(target))
        for i, target in enumerate(CANDIDATES, start=1)
    )
    manipulators = tuple(Voter(f"u{i}", k, Role.MANIPULATOR) for i, k in enumerate(mine.items, start=1))
    others = tuple(Voter(f"w{i}", k, Role.NONMANIPULATOR) for i, k in enumerate(theirs.items, start=1))
    snapshot = ElectionSnapshot(past=past, current=manipulators[0], future=manipulators[1:] + others)
    logger.debug(f"MAXSATASG instance: {len(manipulators)} manipulators, {len(others)} nonmanipulators")
    return GeneratedInstance(OMS(CANDIDATES, snapshot, CANDIDATES, "b"), RuleId.veto(), ProblemVariant())
