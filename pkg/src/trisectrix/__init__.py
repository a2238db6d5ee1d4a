"""Angle trisection via a two-circle intersection locus.

Planar primitives, the locus construction and its bisection solver, the
origami fold reconstruction, independent verification oracles, and
deterministic JSON/CSV/SVG emitters.
"""

from .errors import (
    AngleOutOfRange,
    ConcentricCircles,
    DegeneratePoint,
    InvalidSampleCount,
    MaxIterationsExceeded,
    MismatchDetected,
    NoIntersection,
    ParameterOutOfRange,
    TrisectrixError,
)
from .geom import (
    Angle,
    Circle,
    ORIGIN,
    Point2,
    Ray,
    SQRT3,
    X_AXIS_RAY,
    as_angle,
    circle_circle_intersections,
    distance,
    foot_of_perpendicular,
    midpoint,
    polar_angle,
    rotate,
)
from .locus import (
    LocusParams,
    LocusPoint,
    TrisectionResult,
    locus_point,
    locus_polar_radius,
    locus_relation_residual,
    sample_locus,
    trisect,
    verify_trisection,
)
from .oracles import (
    ChordDiagram,
    CrossValidationReport,
    chord_diagram,
    chord_residuals,
    cross_validate,
    oracle_theta,
    triple_angle_residual,
)
from .origami import AbeConstruction, abe_construct, abe_verify
from .render import RenderSpec, render_svg
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "AngleOutOfRange",
    "AbeConstruction",
    "ChordDiagram",
    "Circle",
    "ConcentricCircles",
    "CrossValidationReport",
    "DegeneratePoint",
    "InvalidSampleCount",
    "LocusParams",
    "LocusPoint",
    "MaxIterationsExceeded",
    "MismatchDetected",
    "NoIntersection",
    "ORIGIN",
    "ParameterOutOfRange",
    "Point2",
    "Ray",
    "RenderSpec",
    "SQRT3",
    "TrisectionResult",
    "TrisectrixError",
    "VerificationReport",
    "X_AXIS_RAY",
    "abe_construct",
    "abe_verify",
    "as_angle",
    "chord_diagram",
    "chord_residuals",
    "circle_circle_intersections",
    "cross_validate",
    "distance",
    "foot_of_perpendicular",
    "locus_point",
    "locus_polar_radius",
    "locus_relation_residual",
    "midpoint",
    "oracle_theta",
    "polar_angle",
    "render_svg",
    "rotate",
    "sample_locus",
    "triple_angle_residual",
    "trisect",
    "verify_trisection",
]
