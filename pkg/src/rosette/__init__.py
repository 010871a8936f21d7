"""Rosette harmonic mappings of the unit disk.

A library for the family of univalent harmonic maps whose images are
n-fold rotationally symmetric rosettes with n cusps (or, at the extreme
phase, n nodes joined by arcs of constancy): specialized hypergeometric
series evaluation, exact boundary geometry, and numerical verification of
the family's symmetry, univalence and tiling properties.
"""

from .errors import (
    DomainError,
    IntervalCrossesCusp,
    NoConvergence,
    NonCanonicalBeta,
    OpenCurve,
    QuadratureFailure,
    RosetteError,
    SingularParameter,
    SingularPoint,
    TooCloseToCurve,
    WrongBeta,
)
from .gammafn import gamma_real
from .series import (
    CoeffTriple,
    EndpointValues,
    SeriesKind,
    SeriesSpec,
    TruncationPolicy,
    central_binomials,
    coeff,
    coeff_triple,
    endpoint_values,
    eval_series,
    eval_series_many,
    scale_constant,
    tail_bound,
)
from .maps import (
    MapValue,
    RosetteParams,
    canonical_rotation,
    dg,
    dh,
    dilatation,
    f,
    f_many,
    g,
    g_many,
    h,
    h_many,
    hypocycloid,
    jacobian,
    reduce_beta,
)
from .boundary import (
    BoundaryDerivative,
    BoundaryFeature,
    CurveSample,
    FeatureKind,
    FeatureReport,
    SeparationSide,
    boundary_derivative,
    boundary_point,
    boundary_points,
    bounding_radius,
    classify_singular_point,
    curve_samples,
    detect_arg_nonmonotonicity,
    extract_features,
    halfspeed_points,
    halfspeed_reparam,
    separation_angle,
    total_curvature,
    total_curvature_numeric,
)
from .verify import (
    CheckResult,
    CoverageReport,
    FundamentalSet,
    IntegralCheck,
    RotatedCopy,
    VerificationReport,
    WindingResult,
    boundary_polyline,
    count_self_intersections,
    fundamental_decomposition,
    fundamental_set,
    integral_oracle,
    min_distance_to_curve,
    rotated_copies,
    symmetry_suite,
    univalence_scan,
    winding_number,
    winding_numbers,
)
from .render import Overlay, RenderSpec, feature_overlay_deviation_px, render, render_svg

__version__ = "0.1.0"

__all__ = [
    "BoundaryDerivative",
    "BoundaryFeature",
    "CheckResult",
    "CoeffTriple",
    "CoverageReport",
    "CurveSample",
    "DomainError",
    "EndpointValues",
    "FeatureKind",
    "FeatureReport",
    "FundamentalSet",
    "IntegralCheck",
    "IntervalCrossesCusp",
    "MapValue",
    "NoConvergence",
    "NonCanonicalBeta",
    "OpenCurve",
    "Overlay",
    "QuadratureFailure",
    "RenderSpec",
    "RosetteError",
    "RosetteParams",
    "RotatedCopy",
    "SeparationSide",
    "SeriesKind",
    "SeriesSpec",
    "SingularParameter",
    "SingularPoint",
    "TooCloseToCurve",
    "TruncationPolicy",
    "VerificationReport",
    "WindingResult",
    "WrongBeta",
    "boundary_derivative",
    "boundary_point",
    "boundary_points",
    "boundary_polyline",
    "bounding_radius",
    "canonical_rotation",
    "central_binomials",
    "classify_singular_point",
    "coeff",
    "coeff_triple",
    "count_self_intersections",
    "curve_samples",
    "detect_arg_nonmonotonicity",
    "dg",
    "dh",
    "dilatation",
    "endpoint_values",
    "eval_series",
    "eval_series_many",
    "extract_features",
    "f",
    "f_many",
    "feature_overlay_deviation_px",
    "fundamental_decomposition",
    "fundamental_set",
    "g",
    "g_many",
    "gamma_real",
    "h",
    "h_many",
    "halfspeed_points",
    "halfspeed_reparam",
    "hypocycloid",
    "integral_oracle",
    "jacobian",
    "min_distance_to_curve",
    "reduce_beta",
    "render",
    "render_svg",
    "rotated_copies",
    "scale_constant",
    "separation_angle",
    "symmetry_suite",
    "tail_bound",
    "total_curvature",
    "total_curvature_numeric",
    "univalence_scan",
    "winding_number",
    "winding_numbers",
]
