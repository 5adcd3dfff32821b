"""C_h[g] and weak-C_h[g] integer sets: verification, bounds, constructions,
exact search, sequence statistics and a planar variant."""

from .bounds import (
    deletion_p,
    overlap_sigma,
    strict_upper_bound,
    thm1_leading,
    thm1_rigorous,
    thm2_exponent,
)
from .construct import (
    DeletionTrace,
    bad_elements,
    greedy,
    random_deletion,
    sidon_erdos_turan,
    sidon_greedy,
    strict_bad_elements,
)
from .core import (
    BudgetExhausted,
    ChsetsError,
    ElementOutOfRange,
    EmptySample,
    IntegerSet,
    InvalidSet,
    InvalidShape,
    Mode,
    NotPrime,
    OracleTooLarge,
    ParamOrder,
    Params,
    Shape,
    Witness,
    normalize_shape,
    parse_set,
)
from .grid2d import GridSet, GridShape, grid_greedy, is_grid_chg
from .search import extremal_table, max_chg
from .seqstats import BlockProfile, block_profile, counting_function, tau, thm3_statistic
from .verify import IncrementalChecker, ViolationReport, brute_force_verify, check, is_chg, is_weak_chg

__all__ = [
    "BlockProfile",
    "BudgetExhausted",
    "ChsetsError",
    "DeletionTrace",
    "ElementOutOfRange",
    "EmptySample",
    "GridSet",
    "GridShape",
    "IncrementalChecker",
    "IntegerSet",
    "InvalidSet",
    "InvalidShape",
    "Mode",
    "NotPrime",
    "OracleTooLarge",
    "ParamOrder",
    "Params",
    "Shape",
    "ViolationReport",
    "Witness",
    "bad_elements",
    "block_profile",
    "brute_force_verify",
    "check",
    "counting_function",
    "deletion_p",
    "extremal_table",
    "greedy",
    "grid_greedy",
    "is_chg",
    "is_grid_chg",
    "is_weak_chg",
    "max_chg",
    "normalize_shape",
    "overlap_sigma",
    "parse_set",
    "random_deletion",
    "sidon_erdos_turan",
    "sidon_greedy",
    "strict_bad_elements",
    "strict_upper_bound",
    "tau",
    "thm1_leading",
    "thm1_rigorous",
    "thm2_exponent",
    "thm3_statistic",
]

__version__ = "0.1.0"
