from .formula import (
    And,
    Formula,
    FormulaSyntaxError,
    Not,
    Or,
    Var,
    evaluate,
    parse_formula,
    render,
    variables,
)
from .scoring import (
    RuleId,
    RuleKind,
    ScoringVector,
    scoring_vector,
    tally,
    top_scorers,
    winners,
)
from .tiered import TieredFormula, decode_bits, tiered_winners

__all__ = [
    "And",
    "Formula",
    "FormulaSyntaxError",
    "Not",
    "Or",
    "Var",
    "evaluate",
    "parse_formula",
    "render",
    "variables",
    "RuleId",
    "RuleKind",
    "ScoringVector",
    "scoring_vector",
    "tally",
    "top_scorers",
    "winners",
    "TieredFormula",
    "decode_bits",
    "tiered_winners",
]
