"""Nine-point tangency engine.

Feuerbach's theorem says the nine-point circle (radius R/2, center N) is
internally tangent to the incircle and externally tangent to the three
excircles.  In fully squared form the tangency conditions become rational
identities in the side lengths:

    |IN|^2   = R^2/4 + r^2   - R*r       (= (R/2 - r)^2)
    |E_aN|^2 = R^2/4 + r_a^2 + R*r_a     (= (R/2 + r_a)^2)

Every term on the right comes straight out of :class:`TriangleMetrics`;
the left side is evaluated through the barycentric distance identity with
the vertex-to-N distances.  Over the rational backend the residuals are
exact zeros for every valid triangle, which is what the fuzz harness and
the acceptance suite pin down.  Equilateral triangles are the one excluded
case: there the incircle and the nine-point circle coincide (r = R/2 and
I = N), so the report flags them and classifies the pair as coincident
rather than tangent.

Tangency classification works on squared quantities only.  The cross term
2*r1*r2 in (r1 +- r2)^2 is recovered with an exact square root of
r1^2 * r2^2; when that product is not a perfect square the circles cannot
be tangent at all (a rational center distance squared cannot equal an
irrational right-hand side), so the kind is NotTangent with informative
float residuals.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .numeric import (
    DEFAULT_TOLERANCE,
    Scalar,
    ToleranceProfile,
    coerce_scalar,
    is_exact,
    sqrt_exact,
)
from .triangle import (
    Barycentric,
    Point2,
    SideLengths,
    TriangleMetrics,
    barycentric_distance_sq,
    metrics,
)
from .centers import (
    Vertex,
    excenter_barycentric,
    incenter_barycentric,
    vertex_to_ninepoint_dist_sq,
)

__all__ = [
    "Tangency",
    "Circle",
    "TangencyReport",
    "FeuerbachEntry",
    "FeuerbachReport",
    "classify_tangency",
    "classify_tangency_sq",
    "center_to_ninepoint_dist_sq",
    "incircle_ninepoint_residual",
    "excircle_ninepoint_residual",
    "feuerbach_report",
]


class Tangency(enum.Enum):
    INTERNAL_TANGENT = "internal_tangent"
    EXTERNAL_TANGENT = "external_tangent"
    COINCIDENT = "coincident"
    NOT_TANGENT = "not_tangent"


@dataclass(frozen=True)
class Circle:
    """Circle stored by squared radius; the center is optional because the
    side-length pipeline knows center distances only in squared form."""

    radius_sq: Scalar
    center: Optional[Point2] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "radius_sq", coerce_scalar(self.radius_sq))
        if self.radius_sq <= 0:
            raise ValueError(f"radius_sq must be positive, got {self.radius_sq}")


@dataclass(frozen=True)
class TangencyReport:
    """Squared-distance comparison of two circles.

    ``lhs`` is the squared center distance; ``rhs_internal``/``rhs_external``
    are (r1 - r2)^2 and (r1 + r2)^2.  Both residuals are carried so a
    NotTangent outcome shows which comparison failed and by how much.
    """

    kind: Tangency
    lhs: Scalar
    rhs_internal: Scalar
    rhs_external: Scalar
    residual_internal: Scalar
    residual_external: Scalar

    @property
    def rhs(self) -> Scalar:
        if self.kind is Tangency.EXTERNAL_TANGENT:
            return self.rhs_external
        if self.kind is Tangency.INTERNAL_TANGENT:
            return self.rhs_internal
        if self.kind is Tangency.COINCIDENT:
            return self.lhs - self.lhs  # backend-matched zero
        if abs(self.residual_internal) <= abs(self.residual_external):
            return self.rhs_internal
        return self.rhs_external

    @property
    def residual(self) -> Scalar:
        return self.lhs - self.rhs


def classify_tangency_sq(
    center_dist_sq: Scalar,
    radius1_sq: Scalar,
    radius2_sq: Scalar,
    tol: ToleranceProfile = DEFAULT_TOLERANCE,
) -> TangencyReport:
    """Classify from squared center distance and squared radii.

    Exact inputs are compared exactly; floats within the tolerance of the
    candidate right-hand side count as tangent, and when both candidates fit
    inside the band the one with the smaller residual wins (near-degenerate
    triangles can squeeze (r1 - r2)^2 and (r1 + r2)^2 closer together than
    the conditioning-widened tolerance).  Coincident means the same circle:
    zero center distance and equal radii; it outranks the degenerate
    internal comparison at distance zero.
    """
    d_sq = coerce_scalar(center_dist_sq)
    r1_sq = coerce_scalar(radius1_sq)
    r2_sq = coerce_scalar(radius2_sq)
    if r1_sq <= 0 or r2_sq <= 0:
        raise ValueError("squared radii must be positive")

    exact = all(is_exact(v) for v in (d_sq, r1_sq, r2_sq))
    if d_sq < 0:
        # A float distance can land a hair below zero through cancellation
        # in the upstream squared-distance evaluation; clamp that, reject
        # anything genuinely negative (and any exact negative).
        if exact or -float(d_sq) > tol.bound(max(float(r1_sq), float(r2_sq))):
            raise ValueError(
                f"squared center distance must be nonnegative, got {d_sq}"
            )
        d_sq = 0.0

    if exact:
        cross = sqrt_exact(r1_sq * r2_sq)  # r1 * r2 when rational
        if cross is None:
            # d^2 - r1^2 - r2^2 is rational but +-2*r1*r2 is not: the
            # tangency equations have no rational solution.
            prod = 2.0 * math.sqrt(float(r1_sq) * float(r2_sq))
            base = float(r1_sq) + float(r2_sq)
            return TangencyReport(
                kind=Tangency.NOT_TANGENT,
                lhs=d_sq,
                rhs_internal=base - prod,
                rhs_external=base + prod,
                residual_internal=float(d_sq) - (base - prod),
                residual_external=float(d_sq) - (base + prod),
            )
        rhs_internal = r1_sq + r2_sq - 2 * cross
        rhs_external = r1_sq + r2_sq + 2 * cross
        report = TangencyReport(
            kind=Tangency.NOT_TANGENT,
            lhs=d_sq,
            rhs_internal=rhs_internal,
            rhs_external=rhs_external,
            residual_internal=d_sq - rhs_internal,
            residual_external=d_sq - rhs_external,
        )
        if d_sq == 0 and r1_sq == r2_sq:
            kind = Tangency.COINCIDENT
        elif d_sq == rhs_internal:
            kind = Tangency.INTERNAL_TANGENT
        elif d_sq == rhs_external:
            kind = Tangency.EXTERNAL_TANGENT
        else:
            kind = Tangency.NOT_TANGENT
        return _with_kind(report, kind)

    d_sq_f = float(d_sq)
    r1_sq_f = float(r1_sq)
    r2_sq_f = float(r2_sq)
    cross_f = 2.0 * math.sqrt(r1_sq_f * r2_sq_f)
    rhs_internal = r1_sq_f + r2_sq_f - cross_f
    rhs_external = r1_sq_f + r2_sq_f + cross_f
    report = TangencyReport(
        kind=Tangency.NOT_TANGENT,
        lhs=d_sq_f,
        rhs_internal=rhs_internal,
        rhs_external=rhs_external,
        residual_internal=d_sq_f - rhs_internal,
        residual_external=d_sq_f - rhs_external,
    )
    scale = max(d_sq_f, r1_sq_f, r2_sq_f)
    gap_internal = abs(d_sq_f - rhs_internal)
    gap_external = abs(d_sq_f - rhs_external)
    internal_fits = gap_internal <= tol.bound(max(d_sq_f, abs(rhs_internal), scale))
    external_fits = gap_external <= tol.bound(max(d_sq_f, rhs_external))
    if d_sq_f <= tol.bound(scale) and abs(r1_sq_f - r2_sq_f) <= tol.bound(scale):
        kind = Tangency.COINCIDENT
    elif internal_fits and (not external_fits or gap_internal <= gap_external):
        kind = Tangency.INTERNAL_TANGENT
    elif external_fits:
        kind = Tangency.EXTERNAL_TANGENT
    else:
        kind = Tangency.NOT_TANGENT
    return _with_kind(report, kind)


def _with_kind(report: TangencyReport, kind: Tangency) -> TangencyReport:
    return TangencyReport(
        kind=kind,
        lhs=report.lhs,
        rhs_internal=report.rhs_internal,
        rhs_external=report.rhs_external,
        residual_internal=report.residual_internal,
        residual_external=report.residual_external,
    )


def classify_tangency(
    circle1: Circle,
    circle2: Circle,
    tol: ToleranceProfile = DEFAULT_TOLERANCE,
) -> TangencyReport:
    """Classify two positioned circles (symmetric in its arguments)."""
    if circle1.center is None or circle2.center is None:
        raise ValueError("classify_tangency needs both centers; "
                         "use classify_tangency_sq with a center distance instead")
    d_sq = circle1.center.dist_sq(circle2.center)
    return classify_tangency_sq(d_sq, circle1.radius_sq, circle2.radius_sq, tol)


def center_to_ninepoint_dist_sq(
    sides: SideLengths,
    coords: Barycentric,
    met: Optional[TriangleMetrics] = None,
) -> Scalar:
    """Squared distance from a barycentric point to the nine-point center,
    via the vertex-to-N distances and the barycentric distance identity."""
    if met is None:
        met = metrics(sides)
    return barycentric_distance_sq(
        coords,
        vertex_to_ninepoint_dist_sq(sides, "A", met),
        vertex_to_ninepoint_dist_sq(sides, "B", met),
        vertex_to_ninepoint_dist_sq(sides, "C", met),
        sides,
    )


def incircle_ninepoint_residual(
    sides: SideLengths, met: Optional[TriangleMetrics] = None
) -> Scalar:
    """|IN|^2 - (R^2/4 + r^2 - R*r); exactly zero on the rational backend."""
    if met is None:
        met = metrics(sides)
    d_sq = center_to_ninepoint_dist_sq(sides, incenter_barycentric(sides), met)
    return d_sq - (met.R_sq / 4 + met.r_sq - met.Rr)


_EX_FIELDS = {"A": ("rA_sq", "RrA"), "B": ("rB_sq", "RrB"), "C": ("rC_sq", "RrC")}


def excircle_ninepoint_residual(
    sides: SideLengths, vertex: Vertex, met: Optional[TriangleMetrics] = None
) -> Scalar:
    """|E_xN|^2 - (R^2/4 + r_x^2 + R*r_x) for the excircle opposite a vertex."""
    if vertex not in _EX_FIELDS:
        raise ValueError(f"vertex must be one of ('A', 'B', 'C'), got {vertex!r}")
    if met is None:
        met = metrics(sides)
    d_sq = center_to_ninepoint_dist_sq(sides, excenter_barycentric(sides, vertex), met)
    r_sq_name, mixed_name = _EX_FIELDS[vertex]
    return d_sq - (met.R_sq / 4 + getattr(met, r_sq_name) + getattr(met, mixed_name))


@dataclass(frozen=True)
class FeuerbachEntry:
    """One circle-vs-nine-point-circle comparison."""

    circle: str  # "incircle" | "exA" | "exB" | "exC"
    report: TangencyReport

    @property
    def ok(self) -> bool:
        if self.circle == "incircle":
            return self.report.kind in (Tangency.INTERNAL_TANGENT, Tangency.COINCIDENT)
        return self.report.kind is Tangency.EXTERNAL_TANGENT


@dataclass(frozen=True)
class FeuerbachReport:
    """Tangency verdict for the incircle and all three excircles."""

    sides: SideLengths
    metrics: TriangleMetrics
    equilateral: bool
    entries: Tuple[FeuerbachEntry, ...]

    @property
    def ok(self) -> bool:
        return all(entry.ok for entry in self.entries)

    @property
    def max_normalized_residual(self) -> float:
        """Largest |expected-tangency residual| over the natural scale R^2/4.

        The incircle is measured against (R/2 - r)^2 and each excircle
        against (R/2 + r_x)^2, regardless of how the pair was classified.
        """
        scale = float(self.metrics.R_sq) / 4.0
        worst = 0.0
        for entry in self.entries:
            if entry.circle == "incircle":
                residual = entry.report.residual_internal
            else:
                residual = entry.report.residual_external
            worst = max(worst, abs(float(residual)) / scale)
        return worst


def feuerbach_report(
    sides: SideLengths, tol: ToleranceProfile = DEFAULT_TOLERANCE
) -> FeuerbachReport:
    """Classify nine-point circle against incircle and the three excircles."""
    met = metrics(sides)
    ninepoint_r_sq = met.R_sq / 4
    entries = [
        FeuerbachEntry(
            circle="incircle",
            report=classify_tangency_sq(
                center_to_ninepoint_dist_sq(sides, incenter_barycentric(sides), met),
                ninepoint_r_sq,
                met.r_sq,
                tol,
            ),
        )
    ]
    for vertex, r_sq_name in (("A", "rA_sq"), ("B", "rB_sq"), ("C", "rC_sq")):
        entries.append(
            FeuerbachEntry(
                circle=f"ex{vertex}",
                report=classify_tangency_sq(
                    center_to_ninepoint_dist_sq(
                        sides, excenter_barycentric(sides, vertex), met
                    ),
                    ninepoint_r_sq,
                    getattr(met, r_sq_name),
                    tol,
                ),
            )
        )
    return FeuerbachReport(
        sides=sides,
        metrics=met,
        equilateral=sides.is_equilateral,
        entries=tuple(entries),
    )
