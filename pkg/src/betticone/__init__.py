"""Exact Betti diagram arithmetic for secant varieties of curves.

Pure diagrams, greedy cone decomposition, the jump-tuple family of
degree sequences, and floating point asymptotics for the dominant
strand of the Betti table.
"""

from .asymptotics import (
    EXACT_CROSSOVER,
    DistributionRow,
    PuritySweepRow,
    calibrate_purity,
    collapse_identity,
    distribution_sweep,
    dominant_binomial_ratio,
    kappa_dominant_log,
    normal_dist_point,
    purity_lower_bound,
    purity_sweep,
    realized_column,
    stirling_ratio,
    write_distribution_csv,
    write_purity_csv,
)
from .decomposition import Decomposition, PureSummand, VerifyResult, decompose, verify
from .diagrams import (
    BettiDiagram,
    DegreeSequence,
    RationalPolynomial,
    add,
    hilbert_numerator,
    multiplicity,
    projective_dimension,
    pure_diagram,
    regularity,
    scale,
    subtract,
    top_strand,
)
from .errors import (
    BettiConeError,
    DegenerateBound,
    EmptyDiagram,
    InvalidParams,
    InvalidRange,
    InvalidTuple,
    MalformedDegreeSequence,
    MissingColumn,
    NegativeEntry,
    NotCohenMacaulayShape,
    NotInCone,
    NotStrictlyIncreasing,
    OutOfRange,
    TupleNotMaximalRegularity,
)
from .secant import (
    SecantParams,
    bottom_right_betti,
    degree_sequence,
    dominant_tuple,
    hn_leading_coefficient,
    jump_tuples,
    kappa_dominant,
    nonvanishing_range,
    normalized_hn_leading,
    secant_degree,
    secant_pure_diagram,
    shape_mask,
)

__version__ = "0.1.0"

__all__ = [
    "BettiConeError",
    "BettiDiagram",
    "DegenerateBound",
    "Decomposition",
    "DegreeSequence",
    "DistributionRow",
    "EXACT_CROSSOVER",
    "EmptyDiagram",
    "InvalidParams",
    "InvalidRange",
    "InvalidTuple",
    "MalformedDegreeSequence",
    "MissingColumn",
    "NegativeEntry",
    "NotCohenMacaulayShape",
    "NotInCone",
    "NotStrictlyIncreasing",
    "OutOfRange",
    "PureSummand",
    "PuritySweepRow",
    "RationalPolynomial",
    "SecantParams",
    "TupleNotMaximalRegularity",
    "VerifyResult",
    "add",
    "bottom_right_betti",
    "calibrate_purity",
    "collapse_identity",
    "decompose",
    "degree_sequence",
    "distribution_sweep",
    "dominant_binomial_ratio",
    "dominant_tuple",
    "hilbert_numerator",
    "hn_leading_coefficient",
    "jump_tuples",
    "kappa_dominant",
    "kappa_dominant_log",
    "multiplicity",
    "nonvanishing_range",
    "normal_dist_point",
    "normalized_hn_leading",
    "projective_dimension",
    "pure_diagram",
    "purity_lower_bound",
    "purity_sweep",
    "realized_column",
    "regularity",
    "scale",
    "secant_degree",
    "secant_pure_diagram",
    "shape_mask",
    "stirling_ratio",
    "subtract",
    "top_strand",
    "verify",
    "write_distribution_csv",
    "write_purity_csv",
]
