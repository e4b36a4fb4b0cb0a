"""gammakit: rational inner functions of the symmetrized bidisc.

Construction, validation and analysis of rational maps h = (s, p) from the
unit disc into the closed symmetrized bidisc that send the unit circle into
its distinguished boundary: membership geometry, royal-node analysis,
synthesis from prescribed data via spectral factorization, and extreme-point
classification.
"""

from .errors import (
    BadParameter,
    BadSpec,
    ConditionFailed,
    DegreeExceedsBound,
    DifferentSecondComponent,
    ExtremeNoWitness,
    GammaKitError,
    NotBalanced,
    NotInner,
    NotNonnegative,
    NotOnTorusFiber,
    OddCircleZero,
    OrderOverflow,
    ParseError,
    PointOutOfRegion,
    PoleOnDomain,
    RoyalVariety,
    ValidationError,
    ZeroPolynomial,
)
from .geometry import GammaRegion, classify_point, mobius_chart, royal_residual, symmetrize
from .inner import (
    GammaInner,
    circle_gap,
    eval_h,
    from_inner_pair,
    geodesic,
    h_nu,
    superficial,
    validate,
)
from .io import (
    TraceRow,
    parse_gamma_inner,
    parse_poly,
    parse_royal_profile,
    parse_spec,
    parse_trig,
    serialize,
    trace_boundary,
    trace_to_csv,
)
from .polynomials import (
    Poly,
    conj_reciprocal,
    is_n_symmetric,
    l_factor,
    poly_from_roots,
    q_factor,
    roots_with_multiplicity,
)
from .royal import (
    NodeRegion,
    RoyalNode,
    RoyalProfile,
    boundary_flatness,
    is_n_balanced,
    is_s_extreme,
    is_superficial,
    royal_polynomial,
    royal_profile,
)
from .spectral import (
    TrigPoly,
    circle_extrema,
    fejer_riesz,
    to_trig_modulus_squared,
    to_trig_shifted,
)
from .synthesis import (
    SynthesisSpec,
    build_re,
    convex_combine,
    recover_spec,
    synthesize,
    witness_non_extreme,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig

__version__ = "0.1.0"

__all__ = [
    "BadParameter",
    "BadSpec",
    "ConditionFailed",
    "DEFAULT_TOL",
    "DegreeExceedsBound",
    "DifferentSecondComponent",
    "ExtremeNoWitness",
    "GammaInner",
    "GammaKitError",
    "GammaRegion",
    "NodeRegion",
    "NotBalanced",
    "NotInner",
    "NotNonnegative",
    "NotOnTorusFiber",
    "OddCircleZero",
    "OrderOverflow",
    "ParseError",
    "PointOutOfRegion",
    "Poly",
    "PoleOnDomain",
    "RoyalNode",
    "RoyalProfile",
    "RoyalVariety",
    "SynthesisSpec",
    "ToleranceConfig",
    "TraceRow",
    "TrigPoly",
    "ValidationError",
    "ZeroPolynomial",
    "boundary_flatness",
    "build_re",
    "circle_extrema",
    "circle_gap",
    "classify_point",
    "conj_reciprocal",
    "convex_combine",
    "eval_h",
    "fejer_riesz",
    "from_inner_pair",
    "geodesic",
    "h_nu",
    "is_n_balanced",
    "is_n_symmetric",
    "is_s_extreme",
    "is_superficial",
    "l_factor",
    "mobius_chart",
    "parse_gamma_inner",
    "parse_poly",
    "parse_royal_profile",
    "parse_spec",
    "parse_trig",
    "poly_from_roots",
    "q_factor",
    "recover_spec",
    "roots_with_multiplicity",
    "royal_polynomial",
    "royal_profile",
    "royal_residual",
    "serialize",
    "superficial",
    "symmetrize",
    "synthesize",
    "to_trig_modulus_squared",
    "to_trig_shifted",
    "trace_boundary",
    "trace_to_csv",
    "validate",
    "witness_non_extreme",
]
