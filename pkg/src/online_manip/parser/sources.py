"""
Source formats for the instance generators.

QBF:       E x11 x12 A x21 : (x11|x21)&~x12      (x<i><j> or x_{i,j})
Partition: whitespace-separated positive integers
MAXSATASG: two DIMACS-like formulas, each opening with `p cnf <n> <m>`,
           clause lines ending in 0; lines starting with `c` are comments
"""
import logging
import re
from typing import List, Optional, Tuple

from ..model.errors import ParseError
from ..reductions.cnf import CnfFormula, ThreeCnfFormula, in_maxsatasg_eq
from ..reductions.generated import GeneratedInstance
from ..reductions.maxsatasg import gen_maxsatasg_veto_oms
from ..reductions.partition import (
    DESTRUCTIVE,
    gen_partition_plurality_uw,
    gen_partition_veto3,
    partition_plurality_label,
    partition_veto3_label,
)
from ..reductions.qbf import QBFInstance, gen_qbf_oms, qbf_eval
from ..rules.formula import FormulaSyntaxError, parse_formula

logger = logging.getLogger(__name__)

GENERATOR_KINDS = ("qbf", "partition-plurality", "partition-veto3", "maxsatasg")

_SHORT_VAR_RE = re.compile(r"\bx(\d)(\d)\b")
_VAR_RE = re.compile(r"^(?:x(\d)(\d)|x_\{(\d+),(\d+)\})$")


def _expand_short_names(text: str) -> str:
    return _SHORT_VAR_RE.sub(lambda m: f"x_{{{m.group(1)},{m.group(2)}}}", text)


def parse_qbf_source(text: str, source: Optional[str] = None) -> QBFInstance:
    body = " ".join(line for line in text.splitlines() if not line.strip().startswith("#"))
    prefix, sep, matrix_text = body.partition(":")
    if not sep:
        raise ParseError("Expected '<prefix> : <matrix>'", 1, 1, source)

    blocks: List[int] = []
    expected = "E"
    for match in re.finditer(r"\S+", prefix):
        token = match.group()
        column = match.start() + 1
        if token in ("E", "A"):
            if token != expected:
                raise ParseError("Quantifier blocks must alternate, starting with E", 1, column, source)
            blocks.append(0)
            expected = "A" if token == "E" else "E"
            continue
        var = _VAR_RE.match(token)
        if not var or not blocks:
            raise ParseError(f"Unexpected token {token!r} in the quantifier prefix", 1, column, source)
        i = int(var.group(1) or var.group(3))
        j = int(var.group(2) or var.group(4))
        if i != len(blocks) or j < 1:
            raise ParseError(f"Variable {token!r} does not belong to block {len(blocks)}", 1, column, source)
        blocks[-1] = max(blocks[-1], j)
    if not blocks or any(k == 0 for k in blocks):
        raise ParseError("Every quantifier block must declare a variable", 1, 1, source)

    try:
        matrix = parse_formula("".join(_expand_short_names(matrix_text).split()))
    except FormulaSyntaxError as e:
        raise ParseError(f"Bad matrix: {e}", 1, len(prefix) + 2, source)
    return QBFInstance(tuple(blocks), matrix)


def parse_partition_source(text: str, source: Optional[str] = None) -> Tuple[int, ...]:
    weights: List[int] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip().startswith("#"):
            continue
        for match in re.finditer(r"\S+", line):
            try:
                weights.append(int(match.group()))
            except ValueError:
                raise ParseError(f"Expected an integer, got {match.group()!r}", number, match.start() + 1, source)
    return tuple(weights)


def parse_dimacs(text: str, source: Optional[str] = None) -> List[CnfFormula]:
    """All formulas in the text, one per `p cnf` header."""
    formulas: List[Tuple[int, int, List[Tuple[int, ...]]]] = []
    pending: List[int] = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c") or stripped.startswith("#"):
            continue
        if stripped.startswith("p"):
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("Expected 'p cnf <vars> <clauses>'", number, 1, source)
            try:
                formulas.append((int(parts[2]), int(parts[3]), []))
            except ValueError:
                raise ParseError("Expected 'p cnf <vars> <clauses>'", number, 1, source)
            continue
        if not formulas:
            raise ParseError("Clause before any 'p cnf' header", number, 1, source)
        for match in re.finditer(r"\S+", line):
            try:
                lit = int(match.group())
            except ValueError:
                raise ParseError(f"Expected a literal, got {match.group()!r}", number, match.start() + 1, source)
            if lit == 0:
                formulas[-1][2].append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if pending:
        raise ParseError("Last clause is not terminated by 0", len(text.splitlines()), 1, source)

    result = []
    for n, m, clauses in formulas:
        if len(clauses) != m:
            logger.warning(f"Header announces {m} clauses but {len(clauses)} were read")
        result.append(CnfFormula(tuple(clauses), n))
    return result


def parse_cnf_pair(text: str, source: Optional[str] = None) -> Tuple[ThreeCnfFormula, ThreeCnfFormula]:
    formulas = parse_dimacs(text, source)
    if len(formulas) != 2:
        raise ParseError(f"Expected two formulas, found {len(formulas)}", 1, 1, source)
    phi, psi = (ThreeCnfFormula(f.clauses, f.num_vars) for f in formulas)
    return phi, psi


def build_from_source(
    kind: str, text: str, m: int = 2, flavor: str = DESTRUCTIVE, source: Optional[str] = None
) -> Tuple[GeneratedInstance, bool]:
    """Parses a generator source and returns the generated instance with its brute-force label."""
    if kind == "qbf":
        q = parse_qbf_source(text, source)
        return gen_qbf_oms(q), qbf_eval(q)
    if kind == "partition-plurality":
        weights = parse_partition_source(text, source)
        return gen_partition_plurality_uw(weights, m, flavor), partition_plurality_label(weights, flavor)
    if kind == "partition-veto3":
        weights = parse_partition_source(text, source)
        return gen_partition_veto3(weights), partition_veto3_label(weights)
    if kind == "maxsatasg":
        phi, psi = parse_cnf_pair(text, source)
        return gen_maxsatasg_veto_oms(phi, psi), in_maxsatasg_eq(phi, psi)
    raise ValueError(f"Unknown generator kind {kind!r}; expected one of {', '.join(GENERATOR_KINDS)}")
