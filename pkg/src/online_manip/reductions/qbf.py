import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from ..model.election import OMS, ElectionSnapshot, ProblemVariant, Role, Voter, Weighting
from ..model.errors import MalformedQbf, TooLarge
from ..rules.formula import Formula, VarKey, evaluate, render, variables
from ..rules.scoring import RuleId
from .generated import GeneratedInstance

logger = logging.getLogger(__name__)

MAX_QBF_VARIABLES = 20


@dataclass(frozen=True)
class QBFInstance:
    """
    Exists x_{1,*} forall x_{2,*} exists x_{3,*} ... [matrix].

    `blocks[i-1]` is k_i, the number of variables x_{i,1}..x_{i,k_i} bound by block i.
    """
    blocks: Tuple[int, ...]
    matrix: Formula

    def __post_init__(self):
        if not self.blocks:
            raise MalformedQbf("A QBF needs at least one quantifier block")
        if any(k < 1 for k in self.blocks):
            raise MalformedQbf(f"Every block must bind at least one variable, got {self.blocks}")
        used = variables(self.matrix)
        for i, j in used:
            if i > len(self.blocks) or j > self.blocks[i - 1]:
                raise MalformedQbf(f"Variable x_{{{i},{j}}} is not bound by any block")
        for i in range(1, len(self.blocks) + 1):
            if not any(b == i for b, _ in used):
                raise MalformedQbf(f"Block {i} has no variable in the matrix")

    @property
    def num_variables(self) -> int:
        return sum(self.blocks)


def qbf_eval(q: QBFInstance) -> bool:
    if q.num_variables > MAX_QBF_VARIABLES:
        raise TooLarge(f"QBF with {q.num_variables} variables exceeds {MAX_QBF_VARIABLES}")
    assignment: Dict[VarKey, bool] = {}

    def expand(i: int) -> bool:
        if i > len(q.blocks):
            return evaluate(q.matrix, assignment)
        k = q.blocks[i - 1]
        for values in itertools.product((False, True), repeat=k):
            for j, value in enumerate(values, start=1):
                assignment[(i, j)] = value
            outcome = expand(i + 1)
            # odd blocks are existential
            if outcome == (i % 2 == 1):
                return outcome
        return i % 2 == 0

    return expand(1)


def gen_qbf_oms(q: QBFInstance) -> GeneratedInstance:
    """
    One voter per block, manipulators on existential blocks. The formula is a
    candidate name, followed by 2*max(k_i) dummies named right after it.
    """
    c = render(q.matrix)
    dummies = tuple(c + "!" * t for t in range(1, 2 * max(q.blocks) + 1))
    candidates = (c,) + dummies
    sigma = tuple(sorted(candidates))

    ell = len(q.blocks)
    width = max(2, len(str(ell)))
    voters = tuple(
        Voter(f"v{i:0{width}d}", 1, Role.MANIPULATOR if i % 2 == 1 else Role.NONMANIPULATOR)
        for i in range(1, ell + 1)
    )
    snapshot = ElectionSnapshot(past=(), current=voters[0], future=voters[1:])
    variant = ProblemVariant(weighting=Weighting.UNWEIGHTED, coalition_bound=math.ceil(ell / 2))
    logger.debug(f"QBF instance: {len(candidates)} candidates, {ell} voters")
    return GeneratedInstance(OMS(candidates, snapshot, sigma, c), RuleId.tiered(), variant)
