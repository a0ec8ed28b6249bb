"""
CNF formulas with DIMACS-style integer literals: variable i is the literal
i, its negation is -i. Assignments are bit tuples with x_1 first, read as
binary integers with x_1 the most significant bit.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..model.errors import NotThreeCnf, ReductionError, TooLarge, VariableX1Used

logger = logging.getLogger(__name__)

Clause = Tuple[int, ...]
Assignment = Tuple[int, ...]

MAX_SAT_VARIABLES = 22


@dataclass(frozen=True)
class CnfFormula:
    clauses: Tuple[Clause, ...]
    num_vars: int

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ReductionError(f"Literal {lit} out of range for {self.num_vars} variables")

    def mentions(self, var: int) -> bool:
        return any(abs(lit) == var for clause in self.clauses for lit in clause)


@dataclass(frozen=True)
class ThreeCnfFormula(CnfFormula):
    def __post_init__(self):
        super().__post_init__()
        for clause in self.clauses:
            if len(clause) != 3:
                raise NotThreeCnf(f"Clause {clause} does not have exactly three literals")


def assignment_value(bits: Assignment) -> int:
    value = 0
    for bit in bits:
        value = (value << 1) | bit
    return value


def value_bits(value: int, n: int) -> Assignment:
    return tuple((value >> (n - i)) & 1 for i in range(1, n + 1))


def satisfies(f: CnfFormula, bits: Assignment) -> bool:
    return all(any((bits[abs(lit) - 1] == 1) == (lit > 0) for lit in clause) for clause in f.clauses)


def maxsatasg_brute(f: CnfFormula, n: Optional[int] = None) -> Optional[Assignment]:
    """Lexicographically largest satisfying assignment over x_1..x_n, or None."""
    n = f.num_vars if n is None else n
    if n > MAX_SAT_VARIABLES:
        raise TooLarge(f"{n} variables exceed the brute-force limit of {MAX_SAT_VARIABLES}")
    # clause as (positive mask, negative mask) over the integer encoding
    masks = []
    for clause in f.clauses:
        pos = neg = 0
        for lit in clause:
            bit = 1 << (n - abs(lit))
            if lit > 0:
                pos |= bit
            else:
                neg |= bit
        masks.append((pos, neg))
    full = (1 << n) - 1
    for value in range(full, -1, -1):
        if all((value & pos) or (~value & neg & full) for pos, neg in masks):
            return value_bits(value, n)
    return None


def _merge(*parts: Sequence[int]) -> Optional[Clause]:
    seen: List[int] = []
    for part in parts:
        for lit in part:
            if -lit in seen:
                return None
            if lit not in seen:
                seen.append(lit)
    return tuple(seen)


def cnf_or(phi: CnfFormula, psi: CnfFormula, literal: int) -> CnfFormula:
    """CNF of phi | psi | literal by distribution; tautological clauses are dropped."""
    n = max(phi.num_vars, psi.num_vars, abs(literal))
    clauses: List[Clause] = []
    seen = set()
    for a in phi.clauses:
        for b in psi.clauses:
            merged = _merge(a, b, (literal,))
            if merged is None:
                continue
            key = frozenset(merged)
            if key not in seen:
                seen.add(key)
                clauses.append(merged)
    return CnfFormula(tuple(clauses), n)


def to_three_cnf(f: CnfFormula, n: Optional[int] = None) -> ThreeCnfFormula:
    """
    Clause-by-clause conversion to 3CNF. Short clauses repeat their last
    literal; long clauses are chained through fresh variables x_{n+1}, ...
    numbered in clause order. The variable horizon is at least n+1.
    """
    n = f.num_vars if n is None else n
    fresh = n
    out: List[Clause] = []
    for clause in f.clauses:
        if not clause:
            fresh += 1
            out.extend(((fresh, fresh, fresh), (-fresh, -fresh, -fresh)))
        elif len(clause) <= 3:
            out.append(tuple(clause) + (clause[-1],) * (3 - len(clause)))
        else:
            fresh += 1
            out.append((clause[0], clause[1], fresh))
            for lit in clause[2:-2]:
                out.append((-fresh, lit, fresh + 1))
                fresh += 1
            out.append((-fresh, clause[-2], clause[-1]))
    return ThreeCnfFormula(tuple(out), max(fresh, n + 1))


def build_hat_formulas(phi: ThreeCnfFormula, psi: ThreeCnfFormula) -> Tuple[ThreeCnfFormula, ThreeCnfFormula]:
    """
    Returns (phi_hat, psi_hat) over a shared horizon n_hat > n:
    phi_hat = phi & psi & (x1|x1|x1) & (x_nhat|x_nhat|~x_nhat),
    psi_hat = to_three_cnf(phi | psi | ~x1).
    """
    if phi.mentions(1) or psi.mentions(1):
        raise VariableX1Used("x_1 must not occur in either formula")
    n = max(phi.num_vars, psi.num_vars, 1)
    psi_hat = to_three_cnf(cnf_or(phi, psi, -1), n)
    n_hat = psi_hat.num_vars
    phi_hat = ThreeCnfFormula(phi.clauses + psi.clauses + ((1, 1, 1), (n_hat, n_hat, -n_hat)), n_hat)
    logger.debug(f"hat formulas over {n_hat} variables: {len(phi_hat.clauses)} and {len(psi_hat.clauses)} clauses")
    return phi_hat, psi_hat


def in_maxsatasg_eq(phi: CnfFormula, psi: CnfFormula) -> bool:
    """Both satisfiable with the same largest satisfying assignment."""
    n = max(phi.num_vars, psi.num_vars)
    a, b = maxsatasg_brute(phi, n), maxsatasg_brute(psi, n)
    return a is not None and b is not None and a == b
