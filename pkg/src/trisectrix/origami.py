"""Hisashi Abe's origami trisection, reconstructed and checked coordinate-wise.

The fold brings the corner of the sheet onto the first crease while a second
marked point lands on the far side of the given angle; the crease directions
then trisect the angle. Rather than simulating the fold search, the module
synthesizes the known end state of that construction for a given angle and
verifies every equal-segment and equal-angle relationship it promises, all
measured from the coordinates (never assumed).

Point legend, with ``t`` the trisected angle and the given angle ``3t``
opening counterclockwise from the positive x axis:

    O  corner of the sheet, the angle vertex, at the origin
    D  marked point on the y axis at height ``2 sin t`` (second crease height)
    S  midpoint of O and D, on the first crease ``y = sin t``
    H  image of O after the fold: on the first crease, on the unit circle
    C  image of D after the fold: on the far ray, on the unit circle
    G  midpoint of H and C (image of S), defining the middle trisecting ray
    P  foot of the perpendicular dropped from H onto the base ray
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AngleOutOfRange
from .geom import (
    Angle,
    AngleLike,
    ORIGIN,
    Point2,
    X_AXIS_RAY,
    as_angle,
    distance,
    foot_of_perpendicular,
    midpoint,
    polar_angle,
)
from .report import VerificationReport


@dataclass(frozen=True)
class AbeConstruction:
    """The named point set and trisecting angles of the fold's end state.

    ``alpha``, ``beta``, ``gamma`` are the three angles between consecutive
    trisecting rays, measured from the constructed points. ``unit_length`` is
    the measured distance O-H (the fold is normalized so it equals 1).
    """

    three_theta: Angle
    theta: Angle
    O: Point2
    D: Point2
    S: Point2
    H: Point2
    C: Point2
    G: Point2
    P: Point2
    alpha: Angle
    beta: Angle
    gamma: Angle
    unit_length: float


def abe_construct(three_theta: AngleLike) -> AbeConstruction:
    """Build the fold end state for a given angle in (0, pi/2), exclusive.

    H sits on the first crease ``y = sin t`` (the corner maps onto it) and C
    sits on the ray at the full angle (the marked point maps onto it); both
    land on the unit circle, which is what makes the three angles equal.
    """
    t3 = as_angle(three_theta)
    if not 0.0 < t3.radians < 0.5 * math.pi:
        raise AngleOutOfRange(
            f"origami construction requires an angle in (0, 90) degrees exclusive, "
            f"got {t3.degrees:.6g}"
        )
    t = t3.radians / 3.0
    sin_t, cos_t = math.sin(t), math.cos(t)

    O = ORIGIN
    D = Point2(0.0, 2.0 * sin_t)
    S = Point2(0.0, sin_t)
    H = Point2(cos_t, sin_t)
    C = Point2(math.cos(t3.radians), math.sin(t3.radians))
    G = midpoint(H, C)
    P = foot_of_perpendicular(H, X_AXIS_RAY)

    alpha = polar_angle(H)
    beta = polar_angle(G) - alpha
    gamma = polar_angle(C) - polar_angle(G)

    return AbeConstruction(
        three_theta=t3,
        theta=Angle(t),
        O=O,
        D=D,
        S=S,
        H=H,
        C=C,
        G=G,
        P=P,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        unit_length=distance(O, H),
    )


def abe_verify(c: AbeConstruction) -> VerificationReport:
    """Measure every claimed relationship of the fold from the points.

    Angles are re-measured with atan2 rather than read from the stored
    fields, so a tampered or perturbed construction is flagged. All checked
    residuals sit at rounding level (<= 1e-12) for constructions produced by
    :func:`abe_construct`.

    Two readings of the point P exist in classical presentations of the
    fold: with P the foot of the perpendicular from H, the lengths O-P and
    H-P behave as expected (cos t and sin t), while the alternative reading
    "C-P equals sin t" does not hold for any point on the base ray. Both are
    reported; the alternative is informational only.
    """
    t = c.theta.radians
    t3 = c.three_theta.radians
    sin_t, cos_t = math.sin(t), math.cos(t)

    alpha = polar_angle(c.H).radians
    beta = polar_angle(c.G).radians - alpha
    gamma = polar_angle(c.C).radians - polar_angle(c.G).radians

    residuals = {
        "oh_vs_oc": abs(distance(c.O, c.H) - distance(c.O, c.C)),
        "hc_vs_od": abs(distance(c.H, c.C) - distance(c.O, c.D)),
        "os_vs_sd": abs(distance(c.O, c.S) - distance(c.S, c.D)),
        "hg_vs_gc": abs(distance(c.H, c.G) - distance(c.G, c.C)),
        "alpha_vs_beta": abs(alpha - beta),
        "beta_vs_gamma": abs(beta - gamma),
        "op_vs_cos_theta": abs(distance(c.O, c.P) - cos_t),
        "hp_vs_sin_theta": abs(distance(c.H, c.P) - sin_t),
        # Perpendicular distance of C from the ray at the full angle.
        "c_on_target_ray": abs(c.C.x * math.sin(t3) - c.C.y * math.cos(t3)),
        "angle_sum_vs_three_theta": abs(alpha + beta + gamma - t3),
        "h_on_first_crease": abs(c.H.y - sin_t),
    }
    informational = {
        "cp_vs_sin_theta": abs(distance(c.C, c.P) - sin_t),
    }
    return VerificationReport(residuals=residuals, informational=informational)
