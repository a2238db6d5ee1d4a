"""The two-circle intersection locus and the numerical trisector built on it.

Fix a fold spacing ``a`` and slide the point J = (b, a) along the line
``y = a``. Two circles are coupled to J:

    circle 1:  center O = (0, 0), radius |OJ| = sqrt(a^2 + b^2)
    circle 2:  center J,          radius 2a

J itself lies on circle 1, so the two always meet; the counterclockwise
intersection point Q traces a curve as b grows. Because the chord JQ of
circle 1 has fixed length 2a, the central angle it subtends is exactly twice
the angle of J, which puts Q at three times J's polar angle: the curve is a
trisectrix. Intersecting it with the ray at a target angle therefore solves
the trisection, and the distance |OQ| at the crossing is the unit length at
which the assumed fold spacing equals the sine of the trisected angle.

The crossing is found by plain bisection on the polar angle of Q, which is
strictly decreasing in b; the bracket starts at b = sqrt(3)*a, where Q sits
straight overhead at (0, 2a), and the upper end is found by doubling b until
the angle falls below the target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AngleOutOfRange,
    InvalidSampleCount,
    MaxIterationsExceeded,
    ParameterOutOfRange,
)
from .geom import SQRT3, Angle, AngleLike, ORIGIN, Point2, as_angle, distance
from .report import VerificationReport

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 200

# Relative slack on the b >= sqrt(3)*a lower bound, so a bound computed by a
# caller through a different (equally valid) floating expression is not
# rejected over the last bit.
_LOWER_BOUND_SLACK = 1e-12

# Doubling steps before the upper-bracket search gives up (2**64 scale).
_MAX_DOUBLINGS = 64


@dataclass(frozen=True)
class LocusParams:
    """Curve parameters: ``a`` is the fold spacing, the radius of circle 2
    being ``2a``. Strictly positive and finite."""

    a: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError(f"fold spacing a must be finite and positive, got {self.a!r}")


@dataclass(frozen=True)
class LocusPoint:
    """One sample of the curve: the parameter b, the point Q, satisfaction
    residuals for both circle equations and the curve's linear relation
    (all absolute values), and Q's polar angle."""

    b: float
    q: Point2
    residual_circle1: float
    residual_circle2: float
    residual_locus_relation: float
    q_polar_angle: Angle


@dataclass(frozen=True)
class TrisectionResult:
    """Solved trisection: the target angle, the trisected angle, the curve
    parameter at the crossing, the unit length |ON| = |OJ|, the crossing
    point N, and solver diagnostics."""

    three_theta: Angle
    theta: Angle
    b_star: float
    unit_length: float
    n_point: Point2
    iterations: int
    final_bracket_width: float
    angle_residual: float


def _check_b(a: float, b: float) -> None:
    lower = SQRT3 * a
    if not (math.isfinite(b) and b >= lower * (1.0 - _LOWER_BOUND_SLACK)):
        raise ParameterOutOfRange(
            f"parameter b must be at least sqrt(3)*a = {lower!r}, got {b!r}"
        )


def _q_coords(a: float, b: float) -> tuple[float, float]:
    """Counterclockwise intersection point of the two circles.

    Q is built from J's side as the chord endpoint: with d the angle of J,
    the chord direction is d + (pi/2 + d) rotated twice, giving
    Q = J + 2a*(-sin 2d, cos 2d). Using 2ab/(a^2+b^2) and
    (b^2-a^2)/(a^2+b^2) for the double angle keeps every term free of
    cancellation, so both circle equations and the linear relation hold to
    machine precision at any b/a ratio.
    """
    dd = a * a + b * b
    qx = b - 4.0 * a * a * b / dd
    qy = a + 2.0 * a * (b * b - a * a) / dd
    return qx, qy


def _q_angle(a: float, b: float) -> float:
    qx, qy = _q_coords(a, b)
    return math.atan2(qy, qx)


def locus_point(params: LocusParams, b: float) -> LocusPoint:
    """Evaluate the curve at parameter ``b >= sqrt(3)*a``.

    The counterclockwise branch is returned: the one that starts at
    (0, 2a) when b = sqrt(3)*a and sweeps down toward the base ray as b
    grows. Raises ParameterOutOfRange below the start of the curve, where
    the construction leaves its working regime.
    """
    a = params.a
    _check_b(a, b)
    qx, qy = _q_coords(a, b)
    q = Point2(qx, qy)
    dd = a * a + b * b
    r1 = math.hypot(a, b)
    return LocusPoint(
        b=b,
        q=q,
        residual_circle1=abs((qx * qx + qy * qy) - dd),
        residual_circle2=abs((qx - b) * (qx - b) + (qy - a) * (qy - a) - 4.0 * a * a),
        residual_locus_relation=abs(locus_relation_residual(params, b, q)),
        q_polar_angle=Angle(math.atan2(qy, qx)),
    )


def locus_relation_residual(params: LocusParams, b: float, q: Point2) -> float:
    """Signed residual of the curve's linear relation b*x + a*y = b^2 - a^2.

    The relation is the radical line of the two circles, so points produced
    by :func:`locus_point` satisfy it to rounding level. It is a diagnostic,
    not a solve equation: b varies along the curve.
    """
    a = params.a
    return b * q.x + a * q.y - (b * b - a * a)


def locus_polar_radius(params: LocusParams, phi: AngleLike) -> float:
    """Radial distance of the curve at polar angle ``phi`` in (0, pi/2].

    Closed polar form r = a / sin(phi/3): the chord JQ = 2a of circle 1
    subtends the central angle 2*phi/3, and sin of J's angle is a/r.
    Consistent with :func:`locus_point` under b = sqrt(r^2 - a^2).
    """
    p = as_angle(phi).radians
    if not 0.0 < p <= 0.5 * math.pi:
        raise AngleOutOfRange(
            f"locus polar angle must lie in (0, 90] degrees, got {math.degrees(p):.6g}"
        )
    return params.a / math.sin(p / 3.0)


def sample_locus(params: LocusParams, b_min: float, b_max: float, n: int) -> list[LocusPoint]:
    """Evaluate ``n`` uniformly spaced parameters over [b_min, b_max].

    Endpoints are included exactly; the list ascends in b. Sampling is
    deterministic: the same arguments always produce bit-identical points.
    """
    if n < 2:
        raise InvalidSampleCount(f"need at least 2 samples, got {n!r}")
    _check_b(params.a, b_min)
    if not b_min < b_max:
        raise ParameterOutOfRange(
            f"need b_min < b_max, got b_min={b_min!r}, b_max={b_max!r}"
        )
    points = []
    last = n - 1
    for i in range(n):
        t = i / last
        b = b_min * (1.0 - t) + b_max * t
        points.append(locus_point(params, b))
    return points


def trisect(
    three_theta: AngleLike,
    params: LocusParams,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> TrisectionResult:
    """Solve for the parameter b* where the curve crosses the target ray.

    Bisection on f(b) = polar_angle(Q(b)) - three_theta, bracketed by two
    points with opposite sign of f: the lower bracket is the curve start
    b = sqrt(3)*a (angle 90 degrees, at or above any valid target) and the
    upper bracket is found by doubling b until the angle drops below the
    target. f is strictly decreasing in b, so the bracket always contains
    the single crossing. Stops once |f| <= tol (radians); ``iterations``
    counts bisection steps.

    Raises AngleOutOfRange for targets outside (0, 90] degrees and
    MaxIterationsExceeded (with the best result attached) if the budget runs
    out before reaching tolerance.
    """
    t3 = as_angle(three_theta)
    target = t3.radians
    if not 0.0 < target <= 0.5 * math.pi:
        raise AngleOutOfRange(
            f"trisection target must lie in (0, 90] degrees, got {t3.degrees:.6g}"
        )
    if not (math.isfinite(tol) and tol > 0.0):
        raise ValueError(f"tol must be positive, got {tol!r}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter!r}")

    a = params.a
    # Stop at half of tol so residuals re-measured downstream from the
    # returned coordinates (which tripling the angle can stretch slightly)
    # cannot straddle the tol boundary.
    stop = 0.5 * tol

    def build(b: float, iterations: int, width: float, f_val: float) -> TrisectionResult:
        qx, qy = _q_coords(a, b)
        return TrisectionResult(
            three_theta=t3,
            theta=Angle(math.atan2(a, b)),
            b_star=b,
            unit_length=math.hypot(a, b),
            n_point=Point2(qx, qy),
            iterations=iterations,
            final_bracket_width=width,
            angle_residual=f_val,
        )

    lo = SQRT3 * a
    f_lo = _q_angle(a, lo) - target
    if abs(f_lo) <= stop:
        return build(lo, 0, 0.0, f_lo)

    hi = lo
    f_hi = f_lo
    for _ in range(_MAX_DOUBLINGS):
        hi *= 2.0
        f_hi = _q_angle(a, hi) - target
        if abs(f_hi) <= stop:
            return build(hi, 0, 0.0, f_hi)
        if f_hi < 0.0:
            break
    else:
        raise MaxIterationsExceeded(
            f"no upper bracket below target {t3.degrees!r} deg within "
            f"{_MAX_DOUBLINGS} doublings",
            result=build(hi, 0, hi - lo, f_hi),
        )

    mid = lo
    f_mid = f_lo
    for iteration in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        f_mid = _q_angle(a, mid) - target
        if abs(f_mid) <= stop:
            return build(mid, iteration, hi - lo, f_mid)
        if f_mid > 0.0:
            lo = mid
        else:
            hi = mid
    raise MaxIterationsExceeded(
        f"bisection did not reach tol={tol!r} rad in {max_iter} iterations "
        f"(|residual| = {abs(f_mid)!r})",
        result=build(mid, max_iter, hi - lo, f_mid),
    )


def verify_trisection(r: TrisectionResult, params: LocusParams) -> VerificationReport:
    """Re-measure the solved trisection's defining relationships.

    Residuals: the tripled angle against the target, the chord |NJ| against
    2a, |ON| against the unit length, the normalized fold spacing against
    sin(theta), and the curve relation at N. All are <= max(tol, 1e-12) for
    results produced by :func:`trisect`.
    """
    a = params.a
    j = Point2(r.b_star, a)
    residuals = {
        "three_theta_vs_target": abs(3.0 * r.theta.radians - r.three_theta.radians),
        "jn_vs_2a": abs(distance(r.n_point, j) - 2.0 * a),
        "on_vs_unit_length": abs(distance(ORIGIN, r.n_point) - r.unit_length),
        "fold_ratio_vs_sin_theta": abs(a / r.unit_length - math.sin(r.theta.radians)),
        "locus_relation_at_n": abs(locus_relation_residual(params, r.b_star, r.n_point)),
    }
    informational = {
        # b* in units of the solved unit length; equals cos(theta) at the
        # crossing, which is the normalized reading of the parameter range.
        "b_star_normalized": r.b_star / r.unit_length,
        "sin_theta_normalized": a / r.unit_length,
    }
    return VerificationReport(residuals=residuals, informational=informational)
