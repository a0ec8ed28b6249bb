"""
The tiered-formula election system.

The lexicographically least candidate name is read as a boolean formula over
variables x_{i,j}. Voter i (in (name, ballot) order) supplies the values of
block i through the bottom of her ballot, and the formula's truth value
decides whether every candidate wins or every candidate loses.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from ..model.election import Ballot, Candidate, Voter
from ..model.errors import TooFewCandidates, UnknownCandidateInBallot
from .formula import Formula, FormulaSyntaxError, VarKey, evaluate, parse_formula, variables

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TieredFormula:
    formula: Formula
    blocks: int
    width: int
    inhabited: bool

    @classmethod
    def from_name(cls, name: str) -> Optional["TieredFormula"]:
        """Reads a candidate name as a tiered formula; None if it is not one."""
        try:
            formula = parse_formula(name)
        except FormulaSyntaxError:
            return None
        keys = variables(formula)
        blocks = max(i for i, _ in keys)
        width = max(j for _, j in keys)
        used_blocks = {i for i, _ in keys}
        return cls(formula, blocks, width, all(i in used_blocks for i in range(1, blocks + 1)))


def decode_bits(ballot: Ballot, c: Candidate, width: int) -> Tuple[int, ...]:
    """
    Bit vector carried by the bottom 2*width entries of `ballot` once `c` is removed.

    With c_1 the least preferred remaining candidate, c_2 the next one up and so
    on, bit l is 0 iff name(c_{2l-1}) < name(c_{2l}).
    """
    if c not in ballot:
        raise UnknownCandidateInBallot(f"Candidate {c!r} is not ranked in the ballot")
    if len(ballot) < 1 + 2 * width:
        raise TooFewCandidates(f"Decoding {width} bits needs {1 + 2 * width} candidates, got {len(ballot)}")
    rest = [x for x in ballot if x != c]
    bottom_up = rest[::-1][: 2 * width]
    return tuple(0 if bottom_up[2 * l] < bottom_up[2 * l + 1] else 1 for l in range(width))


def tiered_winners(
    candidates: Sequence[Candidate],
    cast: Sequence[Tuple[Voter, Ballot]],
) -> FrozenSet[Candidate]:
    if not candidates:
        return frozenset()
    c = min(candidates)
    tiered = TieredFormula.from_name(c)
    if tiered is None:
        return frozenset()
    if len(cast) < tiered.blocks:
        return frozenset()
    if len(candidates) < 1 + 2 * tiered.width:
        return frozenset()
    if not tiered.inhabited:
        return frozenset()

    ordered = sorted(cast, key=lambda vb: (vb[0].name, vb[1]))
    assignment: Dict[VarKey, bool] = {}
    for i in range(1, tiered.blocks + 1):
        bits = decode_bits(ordered[i - 1][1], c, tiered.width)
        for j in range(1, tiered.width + 1):
            assignment[(i, j)] = bits[j - 1] == 1

    if evaluate(tiered.formula, assignment):
        return frozenset(candidates)
    return frozenset()
