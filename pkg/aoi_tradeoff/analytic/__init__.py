from .age import (
    DEFAULT_N_PATHS,
    MinTermEstimate,
    a_min,
    estimate_min_term,
    gginf_age,
    lcfsp_age,
    lcfsp_age_alternate,
    min_term_path,
)
from .delay import fcfs_mg1_delay, lcfsp_resume_delay, mg1_lcfsp_delay, utilization
from .heavy_tail import (
    ConditionRow,
    MinTermWitness,
    SufficientConditionReport,
    check_suff_conditions,
    min_term_to_zero_witness,
)

__all__ = [
    "DEFAULT_N_PATHS",
    "MinTermEstimate",
    "a_min",
    "estimate_min_term",
    "gginf_age",
    "lcfsp_age",
    "lcfsp_age_alternate",
    "min_term_path",
    "fcfs_mg1_delay",
    "lcfsp_resume_delay",
    "mg1_lcfsp_delay",
    "utilization",
    "ConditionRow",
    "MinTermWitness",
    "SufficientConditionReport",
    "check_suff_conditions",
    "min_term_to_zero_witness",
]
