"""nivenkit: exact construction and verification of high-degree Niven numbers.

The package builds the families b**(2**k) - 1 whose powers have
closed-form base-b digit strings, checks the divisibility hypotheses
that make those powers Niven, and cross-validates every closed form
against an independent brute-force oracle.  All arithmetic is exact.
"""

from .digits import (
    Base,
    DigitString,
    as_base,
    concat,
    digit_sum,
    from_digits,
    repeat_block,
    to_base,
)
from .errors import (
    CapExceeded,
    DigitOutOfRange,
    InvalidInput,
    NivenkitError,
    PreconditionViolated,
    ZeroInput,
)
from .families import (
    BoundsReport,
    FamilyInstance,
    OddPartDecomposition,
    Theorem3Params,
    TheoremCertificate,
    base_family,
    binomial,
    degree_threshold,
    even_power_digits,
    lemma_bounds_report,
    nk_value,
    odd_part,
    odd_power_digits,
    power_digits,
    predicted_digit_sum,
    smallest_base,
    theorem3_params,
    theorem_preconditions,
)
from .nivencheck import DegreeProfile, degree_profile, is_b_niven, is_degree_m
from .oracle import (
    ChainReport,
    DivisibilityFlags,
    VerificationReport,
    brute_force_power_digits,
    divisibility_chain,
    enumerate_niven,
    euler_check,
    probe_even_bases,
    probe_max_degree,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "Base",
    "BoundsReport",
    "CapExceeded",
    "ChainReport",
    "DegreeProfile",
    "DigitOutOfRange",
    "DigitString",
    "DivisibilityFlags",
    "FamilyInstance",
    "InvalidInput",
    "NivenkitError",
    "OddPartDecomposition",
    "PreconditionViolated",
    "Theorem3Params",
    "TheoremCertificate",
    "VerificationReport",
    "ZeroInput",
    "as_base",
    "base_family",
    "binomial",
    "brute_force_power_digits",
    "concat",
    "degree_profile",
    "degree_threshold",
    "digit_sum",
    "divisibility_chain",
    "enumerate_niven",
    "euler_check",
    "even_power_digits",
    "from_digits",
    "is_b_niven",
    "is_degree_m",
    "lemma_bounds_report",
    "nk_value",
    "odd_part",
    "odd_power_digits",
    "power_digits",
    "predicted_digit_sum",
    "probe_even_bases",
    "probe_max_degree",
    "repeat_block",
    "smallest_base",
    "theorem3_params",
    "theorem_preconditions",
    "to_base",
    "verify_instance",
]
