"""Exact Verblunsky data and quantum-walk dynamics for the Riesz measure."""

from .series import (
    NonzeroConstantTerm,
    Rational,
    TruncatedSeries,
    ZeroConstantTerm,
)
from .riesz import MeasureVariant, caratheodory_series, moment, signed_quartic_digits
from .schur import (
    FirstReturnSeries,
    InsufficientPrecision,
    ParameterOutOfDisk,
    PrecisionExhausted,
    SchurState,
    cumulative_return_probability,
    extract_verblunsky,
    first_return_series,
    renewal_first_return,
    schur_from_caratheodory,
    schur_step,
)
from .ansatz import (
    IndexDecomposition,
    LimitFamilies,
    OutOfDomain,
    VerificationReport,
    alpha,
    alpha_from_offsets,
    backbone,
    backbone_constant,
    decompose_index,
    limit_values,
    nonzero_alpha,
    verify_ansatz,
)
from .cmv import (
    BandedUnitary,
    CoefficientOutOfDisk,
    DimensionMismatch,
    DimensionTooSmall,
    VerblunskyCoefficient,
    apply_from_source,
    build_cmv,
    spectral_moment,
    unitarity_defect,
)
from .walk import (
    HADAMARD_COIN,
    CoinMatrix,
    NonUnitaryCoin,
    PositionDistribution,
    WalkState,
    ZeroCoin,
    coined_walk_matrix,
    constant_coin_schur_coeffs,
    evolve,
    first_return_numeric,
    hadamard_alpha,
    position_distribution,
    riesz_walk_matrix,
    traditional_walk_test,
)

__all__ = [
    "BandedUnitary",
    "CoefficientOutOfDisk",
    "CoinMatrix",
    "DimensionMismatch",
    "DimensionTooSmall",
    "FirstReturnSeries",
    "HADAMARD_COIN",
    "IndexDecomposition",
    "InsufficientPrecision",
    "LimitFamilies",
    "MeasureVariant",
    "NonUnitaryCoin",
    "NonzeroConstantTerm",
    "OutOfDomain",
    "ParameterOutOfDisk",
    "PositionDistribution",
    "PrecisionExhausted",
    "Rational",
    "SchurState",
    "TruncatedSeries",
    "VerblunskyCoefficient",
    "VerificationReport",
    "WalkState",
    "ZeroCoin",
    "ZeroConstantTerm",
    "alpha",
    "alpha_from_offsets",
    "apply_from_source",
    "backbone",
    "backbone_constant",
    "build_cmv",
    "caratheodory_series",
    "coined_walk_matrix",
    "constant_coin_schur_coeffs",
    "cumulative_return_probability",
    "decompose_index",
    "evolve",
    "extract_verblunsky",
    "first_return_numeric",
    "first_return_series",
    "hadamard_alpha",
    "limit_values",
    "moment",
    "nonzero_alpha",
    "position_distribution",
    "renewal_first_return",
    "riesz_walk_matrix",
    "schur_from_caratheodory",
    "schur_step",
    "signed_quartic_digits",
    "spectral_moment",
    "traditional_walk_test",
    "unitarity_defect",
    "verify_ansatz",
]

__version__ = "0.1.0"
