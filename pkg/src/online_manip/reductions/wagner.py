"""
Subset-sum encoding of 3CNF satisfiability with the assignment readable from
the sum.

Numbers are written in base 6, most significant first: one digit per clause,
one digit per variable, then a low part holding the assignment as a binary
integer (x_1 most significant). No digit position can carry: a clause digit
sums to at most 3 literal occurrences plus 2 slack items.
"""
import logging
from dataclasses import dataclass
from typing import Set, Tuple

from ..config import get_settings
from ..model.errors import NotThreeCnf, ReductionError, TooLarge
from .cnf import CnfFormula, satisfies, value_bits

logger = logging.getLogger(__name__)

BASE = 6
AUTO_VERIFY_ITEMS = 16


@dataclass(frozen=True)
class SubsetSumInstance:
    items: Tuple[int, ...]
    L: int


def _require_three_cnf(f: CnfFormula) -> None:
    for clause in f.clauses:
        if len(clause) != 3:
            raise NotThreeCnf(f"Clause {clause} does not have exactly three literals")


def wagner_subset_sum(f: CnfFormula, verify: bool = True) -> SubsetSumInstance:
    """
    Items k_1..k_t and base L such that a subset sums to L + a iff the
    assignment a satisfies f, and no subset sums to L + K for
    2^n <= K <= 2(2^n - 1). Small formulas (at most 3 variables) are checked
    exhaustively when `verify` is set.
    """
    _require_three_cnf(f)
    n, m = f.num_vars, len(f.clauses)
    if n < 1:
        raise ReductionError("The formula needs at least one variable")

    def var_digit(i: int) -> int:
        return BASE ** (n + (n - i))

    def clause_digit(j: int) -> int:
        return BASE ** (2 * n + (m - 1 - j))

    items = []
    for i in range(1, n + 1):
        pos = var_digit(i) + 2 ** (n - i)
        neg = var_digit(i)
        for j, clause in enumerate(f.clauses):
            pos += clause.count(i) * clause_digit(j)
            neg += clause.count(-i) * clause_digit(j)
        items.extend((pos, neg))
    for j in range(m):
        items.extend((clause_digit(j), clause_digit(j)))

    L = sum(3 * clause_digit(j) for j in range(m)) + sum(var_digit(i) for i in range(1, n + 1))
    instance = SubsetSumInstance(tuple(items), L)
    if verify and n <= 3 and len(items) <= AUTO_VERIFY_ITEMS:
        if not verify_wagner_properties(f, instance):
            raise ReductionError(f"Subset-sum encoding of {f.clauses} violates its defining properties")
    return instance


def _subset_sums(items: Tuple[int, ...]) -> Set[int]:
    limit = get_settings().max_brute_items
    if len(items) > limit:
        raise TooLarge(f"{len(items)} items exceed the brute-force limit of {limit}")
    sums = {0}
    for k in items:
        sums |= {s + k for s in sums}
    return sums


def verify_wagner_properties(f: CnfFormula, instance: SubsetSumInstance) -> bool:
    """Checks both defining properties by enumerating every subset."""
    n = f.num_vars
    sums = _subset_sums(instance.items)
    for a in range(2 ** n):
        if (instance.L + a in sums) != satisfies(f, value_bits(a, n)):
            logger.debug(f"assignment {a} breaks the satisfiability property")
            return False
    for K in range(2 ** n, 2 * (2 ** n - 1) + 1):
        if instance.L + K in sums:
            logger.debug(f"L + {K} is reachable")
            return False
    return True
