from .cnf import (
    CnfFormula,
    ThreeCnfFormula,
    assignment_value,
    build_hat_formulas,
    cnf_or,
    in_maxsatasg_eq,
    maxsatasg_brute,
    satisfies,
    to_three_cnf,
)
from .embedding import embed_standard_wcm, standard_manipulation_brute
from .generated import GeneratedInstance
from .maxsatasg import gen_maxsatasg_veto_oms
from .partition import (
    CONSTRUCTIVE_COMPLEMENT,
    DESTRUCTIVE,
    gen_partition_plurality_uw,
    gen_partition_veto3,
    partition_brute,
    partition_plurality_label,
    partition_veto3_label,
)
from .qbf import QBFInstance, gen_qbf_oms, qbf_eval
from .wagner import SubsetSumInstance, verify_wagner_properties, wagner_subset_sum

__all__ = [
    "CnfFormula",
    "ThreeCnfFormula",
    "assignment_value",
    "build_hat_formulas",
    "cnf_or",
    "in_maxsatasg_eq",
    "maxsatasg_brute",
    "satisfies",
    "to_three_cnf",
    "embed_standard_wcm",
    "standard_manipulation_brute",
    "GeneratedInstance",
    "gen_maxsatasg_veto_oms",
    "CONSTRUCTIVE_COMPLEMENT",
    "DESTRUCTIVE",
    "gen_partition_plurality_uw",
    "gen_partition_veto3",
    "partition_brute",
    "partition_plurality_label",
    "partition_veto3_label",
    "QBFInstance",
    "gen_qbf_oms",
    "qbf_eval",
    "SubsetSumInstance",
    "verify_wagner_properties",
    "wagner_subset_sum",
]
