"""Exact symplectic algebra over prime fields for quantum error-correcting codes."""

from .anticodes import (
    Anticode,
    SPrimeDecomposition,
    all_anticodes,
    complementarity_check,
    intersect_with_anticode,
    puncture,
    s_prime_decompose,
    shorten,
    verify_cleaning,
)
from .codes import (
    Code,
    CodeParams,
    SubsystemCode,
    bacon_shor_code,
    from_pauli,
    pauli_to_vector,
    repetition_code,
    shor_code,
    stabilizer_code_from_isotropic,
    subsystem_from_gauge,
    vector_to_pauli,
)
from .enumerators import (
    binomial_moments,
    distance_from_enumerators,
    distribution_from_moments,
    enumerator_polys,
    format_enumerator,
    macwilliams_check,
    moments_from_distribution,
    weight_distribution,
)
from .errors import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    CommutationError,
    DimensionMismatchError,
    ParseError,
    QsympError,
)
from .invariants import (
    InvariantTable,
    alpha,
    beta,
    generalized_weights,
    invariant_table,
    profiles,
    verify_bounds,
)
from .linalg import PrimeField
from .report import CheckResult
from .symplectic import (
    SplitDecomposition,
    Subspace,
    hamming_weight,
    support_of,
    symplectic_form,
    vector_from_factors,
)

__version__ = "0.1.0"

__all__ = [
    "Anticode",
    "BudgetExceededError",
    "CheckResult",
    "Code",
    "CodeParams",
    "CommutationError",
    "DEFAULT_BUDGET",
    "DimensionMismatchError",
    "InvariantTable",
    "ParseError",
    "PrimeField",
    "QsympError",
    "SPrimeDecomposition",
    "SplitDecomposition",
    "Subspace",
    "SubsystemCode",
    "all_anticodes",
    "alpha",
    "bacon_shor_code",
    "beta",
    "binomial_moments",
    "complementarity_check",
    "distance_from_enumerators",
    "distribution_from_moments",
    "enumerator_polys",
    "format_enumerator",
    "from_pauli",
    "generalized_weights",
    "hamming_weight",
    "intersect_with_anticode",
    "invariant_table",
    "macwilliams_check",
    "moments_from_distribution",
    "pauli_to_vector",
    "profiles",
    "puncture",
    "repetition_code",
    "s_prime_decompose",
    "shor_code",
    "shorten",
    "stabilizer_code_from_isotropic",
    "subsystem_from_gauge",
    "support_of",
    "symplectic_form",
    "vector_from_factors",
    "vector_to_pauli",
    "verify_bounds",
    "verify_cleaning",
    "weight_distribution",
]
