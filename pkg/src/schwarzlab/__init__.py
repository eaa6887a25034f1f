"""Numerical laboratory for coefficient inequalities of Schwarz and
Caratheodory functions: truncated series arithmetic, extremal generator
families, inequality checkers with slack reports, and disk-intersection
feasibility regions for the third and fourth coefficients."""

from schwarzlab.series import (
    DEFAULT_ORDER,
    CompositionDomainError,
    NotInvertibleError,
    OrderMismatchError,
    TruncatedSeries,
    add_scaled,
    compose,
    geometric_mobius,
    mul,
    reciprocal,
    scale,
)
from schwarzlab.families import (
    B2Extremal,
    CaratheodoryGenerator,
    CayleyOfSchwarz,
    FiniteBlaschke,
    HerglotzAtoms,
    InvalidGeneratorError,
    InverseCayley,
    MonomialRotation,
    SchwarzGenerator,
    cayley_from_schwarz,
    evaluate_caratheodory,
    evaluate_schwarz,
    expand_caratheodory,
    expand_schwarz,
    harmonic_boundary_atoms,
    inverse_cayley,
    sample_herglotz,
    sample_schwarz,
)
from schwarzlab.bounds import (
    BoundReport,
    fourth_coefficient_constraints,
    harmonic_propagation,
    livingston_gap,
    pointwise_contraction,
    schwarz_coefficient_bounds,
    second_coefficient_bound,
    third_coefficient_bound,
)
from schwarzlab.regions import (
    BoundingBox,
    DiskConstraintFamily,
    FrontierBin,
    RegionEstimate,
    ScanRecord,
    attainability_frontier,
    attainability_scan,
    b3_region,
    b4_feasible_region,
    b4_margin,
    intersect_disk_family,
)
from schwarzlab.grammar import GeneratorParseError, parse_generator

__version__ = "0.1.0"

__all__ = [
    "B2Extremal",
    "BoundReport",
    "BoundingBox",
    "CaratheodoryGenerator",
    "CayleyOfSchwarz",
    "CompositionDomainError",
    "DEFAULT_ORDER",
    "DiskConstraintFamily",
    "FiniteBlaschke",
    "FrontierBin",
    "GeneratorParseError",
    "HerglotzAtoms",
    "InvalidGeneratorError",
    "InverseCayley",
    "MonomialRotation",
    "NotInvertibleError",
    "OrderMismatchError",
    "RegionEstimate",
    "ScanRecord",
    "SchwarzGenerator",
    "TruncatedSeries",
    "add_scaled",
    "attainability_frontier",
    "attainability_scan",
    "b3_region",
    "b4_feasible_region",
    "b4_margin",
    "cayley_from_schwarz",
    "compose",
    "evaluate_caratheodory",
    "evaluate_schwarz",
    "expand_caratheodory",
    "expand_schwarz",
    "fourth_coefficient_constraints",
    "geometric_mobius",
    "harmonic_boundary_atoms",
    "harmonic_propagation",
    "intersect_disk_family",
    "inverse_cayley",
    "livingston_gap",
    "mul",
    "parse_generator",
    "pointwise_contraction",
    "reciprocal",
    "sample_herglotz",
    "sample_schwarz",
    "scale",
    "schwarz_coefficient_bounds",
    "second_coefficient_bound",
    "third_coefficient_bound",
    "__version__",
]
