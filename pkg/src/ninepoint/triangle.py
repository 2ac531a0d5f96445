"""Triangles, barycentric coordinates, and the squared metric quantities.

Side lengths (a, b, c) are the canonical description: every quantity the
tangency engine needs (K^2, R^2, r^2, the excircle radii squared, and the
mixed products R*r, R*r_a, ...) is a rational function of the sides, so the
exact backend stays exact end to end.  Coordinates enter only through the
barycentric machinery:

* a point X on side BC with |BX| + |CX| = a has coordinates
  (0, |CX|/a, |BX|/a);
* for X = alpha*A + beta*B + gamma*C with alpha + beta + gamma = 1 and any
  point Y,

      |XY|^2 = alpha*|AY|^2 + beta*|BY|^2 + gamma*|CY|^2
               - (beta*gamma*a^2 + gamma*alpha*b^2 + alpha*beta*c^2)

  which is how squared distances are evaluated without ever leaving the
  rational field.

All functions are polymorphic over the scalar backend.  The float area uses
the sorted-operand stable product form, so near-degenerate triangles lose
precision only where the input data already has.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .numeric import (
    DEFAULT_TOLERANCE,
    Scalar,
    ToleranceProfile,
    coerce_scalar,
    is_exact,
    sqrt_exact,
)

__all__ = [
    "InvalidTriangleError",
    "Point2",
    "SideLengths",
    "TriangleMetrics",
    "Barycentric",
    "semiperimeter",
    "metrics",
    "point_on_side",
    "barycentric_distance_sq",
    "barycentric_to_cartesian",
    "cartesian_to_barycentric",
    "orientation",
    "canonical_vertices",
    "sides_from_vertices",
]


class InvalidTriangleError(ValueError):
    """Side lengths that cannot form a nondegenerate triangle."""


@dataclass(frozen=True)
class Point2:
    """Plane point over either scalar backend."""

    x: Scalar
    y: Scalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _finite(coerce_scalar(self.x)))
        object.__setattr__(self, "y", _finite(coerce_scalar(self.y)))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scaled(self, k: Scalar) -> "Point2":
        k = coerce_scalar(k)
        return Point2(k * self.x, k * self.y)

    def dot(self, other: "Point2") -> Scalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> Scalar:
        return self.x * other.y - self.y * other.x

    def dist_sq(self, other: "Point2") -> Scalar:
        dx = self.x - other.x
        dy = self.y - other.y
        return dx * dx + dy * dy

    @property
    def is_exact(self) -> bool:
        return is_exact(self.x) and is_exact(self.y)

    def as_float(self) -> "Point2":
        return Point2(float(self.x), float(self.y))


def _finite(value: Scalar) -> Scalar:
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError(f"non-finite coordinate {value!r}")
    return value


@dataclass(frozen=True)
class SideLengths:
    """Validated side lengths a = |BC|, b = |CA|, c = |AB|.

    Construction enforces positivity and the strict triangle inequality;
    the diagnostic names the violated inequality.  Equilateral triples are
    accepted but flagged, because the incircle and the nine-point circle
    then coincide instead of being tangent.
    """

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", coerce_scalar(self.a))
        object.__setattr__(self, "b", coerce_scalar(self.b))
        object.__setattr__(self, "c", coerce_scalar(self.c))
        for name, value in (("a", self.a), ("b", self.b), ("c", self.c)):
            if isinstance(value, float) and not math.isfinite(value):
                raise InvalidTriangleError(f"non-finite side: {name} = {value!r}")
            if value <= 0:
                raise InvalidTriangleError(f"invalid side: {name} <= 0")
        for lhs, rhs, text in (
            ((self.a, self.b), self.c, "a + b"),
            ((self.b, self.c), self.a, "b + c"),
            ((self.c, self.a), self.b, "c + a"),
        ):
            total = lhs[0] + lhs[1]
            opposite = {"a + b": "c", "b + c": "a", "c + a": "b"}[text]
            if total == rhs:
                raise InvalidTriangleError(f"degenerate: {text} = {opposite}")
            if total < rhs:
                raise InvalidTriangleError(f"not a triangle: {text} < {opposite}")

    @property
    def is_exact(self) -> bool:
        return is_exact(self.a) and is_exact(self.b) and is_exact(self.c)

    @property
    def is_equilateral(self) -> bool:
        return self.a == self.b == self.c

    def as_tuple(self) -> Tuple[Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c)

    def as_float(self) -> "SideLengths":
        return SideLengths(float(self.a), float(self.b), float(self.c))

    def conditioning(self) -> float:
        """max side over min(s - a, s - b, s - c); large means near-degenerate."""
        a, b, c = (float(self.a), float(self.b), float(self.c))
        gaps = ((-a + b + c) / 2.0, (a - b + c) / 2.0, (a + b - c) / 2.0)
        return max(a, b, c) / min(gaps)


def semiperimeter(sides: SideLengths) -> Scalar:
    return (sides.a + sides.b + sides.c) / 2


@dataclass(frozen=True)
class TriangleMetrics:
    """Squared metric quantities plus the mixed radius products.

    Storing R^2 rather than R (and R*r rather than either factor alone)
    keeps every field rational in the side lengths; the circumradius itself
    is usually irrational.
    """

    s: Scalar
    K_sq: Scalar
    R_sq: Scalar
    r_sq: Scalar
    rA_sq: Scalar
    rB_sq: Scalar
    rC_sq: Scalar
    Rr: Scalar
    RrA: Scalar
    RrB: Scalar
    RrC: Scalar


def _area_sq_16(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    # Stable product form with x >= y >= z; parenthesization matters for
    # floats and is exactly Heron's 16*K^2 for rationals.
    x, y, z = sorted((a, b, c), reverse=True)
    return (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))


def metrics(sides: SideLengths) -> TriangleMetrics:
    """All squared quantities: K^2 = s(s-a)(s-b)(s-c), R^2 = (abc)^2 / 16K^2,
    r^2 = K^2/s^2, r_a^2 = K^2/(s-a)^2, R*r = abc/4s, R*r_a = abc/4(s-a)."""
    a, b, c = sides.as_tuple()
    s = semiperimeter(sides)
    # Computed as half-sums directly: one rounding instead of two for floats.
    s_a = (-a + b + c) / 2
    s_b = (a - b + c) / 2
    s_c = (a + b - c) / 2
    K_sq = _area_sq_16(a, b, c) / 16
    abc = a * b * c
    return TriangleMetrics(
        s=s,
        K_sq=K_sq,
        R_sq=(abc * abc) / (16 * K_sq),
        r_sq=K_sq / (s * s),
        rA_sq=K_sq / (s_a * s_a),
        rB_sq=K_sq / (s_b * s_b),
        rC_sq=K_sq / (s_c * s_c),
        Rr=abc / (4 * s),
        RrA=abc / (4 * s_a),
        RrB=abc / (4 * s_b),
        RrC=abc / (4 * s_c),
    )


@dataclass(frozen=True)
class Barycentric:
    """Normalized barycentric coordinates (components sum to 1).

    Components may be negative (excenters live outside the triangle).  The
    sum constraint is checked exactly on the rational backend and against a
    magnitude-aware tolerance on floats.
    """

    alpha: Scalar
    beta: Scalar
    gamma: Scalar

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", coerce_scalar(self.alpha))
        object.__setattr__(self, "beta", coerce_scalar(self.beta))
        object.__setattr__(self, "gamma", coerce_scalar(self.gamma))
        total = self.alpha + self.beta + self.gamma
        if is_exact(total):
            if total != 1:
                raise ValueError(f"barycentric coordinates sum to {total}, not 1")
        else:
            scale = max(1.0, *(abs(float(v)) for v in self.components))
            if abs(float(total) - 1.0) > DEFAULT_TOLERANCE.bound(scale):
                raise ValueError(f"barycentric coordinates sum to {total!r}, not 1")

    @property
    def components(self) -> Tuple[Scalar, Scalar, Scalar]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.components)


def point_on_side(
    dist_bx: Scalar,
    dist_cx: Scalar,
    sides: SideLengths,
    tol: ToleranceProfile = DEFAULT_TOLERANCE,
) -> Barycentric:
    """Coordinates (0, |CX|/a, |BX|/a) of a point X on segment BC.

    Endpoints are allowed: |BX| = 0 gives vertex B itself.  The two
    distances must be nonnegative and sum to a.
    """
    dist_bx = coerce_scalar(dist_bx)
    dist_cx = coerce_scalar(dist_cx)
    if dist_bx < 0 or dist_cx < 0:
        raise ValueError(f"negative distance along BC: |BX| = {dist_bx}, |CX| = {dist_cx}")
    a = sides.a
    total = dist_bx + dist_cx
    if is_exact(total) and is_exact(a):
        if total != a:
            raise ValueError(f"|BX| + |CX| = {total} does not equal a = {a}")
    elif abs(float(total) - float(a)) > tol.bound(float(a)):
        raise ValueError(f"|BX| + |CX| = {total!r} does not equal a = {a!r}")
    zero = a - a  # backend-matched zero
    return Barycentric(zero, dist_cx / a, dist_bx / a)


def barycentric_distance_sq(
    x: Barycentric,
    dist_ay_sq: Scalar,
    dist_by_sq: Scalar,
    dist_cy_sq: Scalar,
    sides: SideLengths,
) -> Scalar:
    """Squared distance |XY|^2 from X (barycentric) to Y (via its squared
    distances to the vertices); see the module docstring for the identity."""
    alpha, beta, gamma = x.components
    dist_ay_sq = coerce_scalar(dist_ay_sq)
    dist_by_sq = coerce_scalar(dist_by_sq)
    dist_cy_sq = coerce_scalar(dist_cy_sq)
    a, b, c = sides.as_tuple()
    weighted = alpha * dist_ay_sq + beta * dist_by_sq + gamma * dist_cy_sq
    pairwise = beta * gamma * (a * a) + gamma * alpha * (b * b) + alpha * beta * (c * c)
    return weighted - pairwise


def orientation(vertex_a: Point2, vertex_b: Point2, vertex_c: Point2) -> Scalar:
    """Twice the signed area of ABC; zero means collinear."""
    return (vertex_b - vertex_a).cross(vertex_c - vertex_a)


def barycentric_to_cartesian(
    x: Barycentric, vertex_a: Point2, vertex_b: Point2, vertex_c: Point2
) -> Point2:
    """Affine combination alpha*A + beta*B + gamma*C."""
    if orientation(vertex_a, vertex_b, vertex_c) == 0:
        raise ValueError("collinear vertices")
    alpha, beta, gamma = x.components
    return (
        vertex_a.scaled(alpha) + vertex_b.scaled(beta) + vertex_c.scaled(gamma)
    )


def cartesian_to_barycentric(
    point: Point2, vertex_a: Point2, vertex_b: Point2, vertex_c: Point2
) -> Barycentric:
    """Inverse of :func:`barycentric_to_cartesian` (2x2 linear solve)."""
    ac = vertex_a - vertex_c
    bc = vertex_b - vertex_c
    det = ac.cross(bc)
    if det == 0:
        raise ValueError("collinear vertices")
    xc = point - vertex_c
    alpha = xc.cross(bc) / det
    beta = ac.cross(xc) / det
    gamma = 1 - alpha - beta
    return Barycentric(alpha, beta, gamma)


def canonical_vertices(sides: SideLengths) -> Tuple[Point2, Point2, Point2]:
    """Embedding with C at the origin, B on the positive x-axis, A above.

    Exact inputs produce exact coordinates whenever the altitude from A is
    rational (squared side lengths of the embedding then reproduce a, b, c
    bit-for-bit); otherwise the embedding falls back to floats.
    """
    a, b, c = sides.as_tuple()
    if sides.is_exact:
        x = (a * a + b * b - c * c) / (2 * a)
        y = sqrt_exact(b * b - x * x)
        if y is not None:
            return (Point2(x, y), Point2(a, Fraction(0)), Point2(Fraction(0), Fraction(0)))
        a, b, c = float(a), float(b), float(c)
    x = (a * a + b * b - c * c) / (2.0 * a)
    # Altitude via the stable area, not b^2 - x^2 (catastrophic when flat).
    k_sq = _area_sq_16(a, b, c) / 16.0
    y = 2.0 * math.sqrt(k_sq) / a
    return (Point2(x, y), Point2(a, 0.0), Point2(0.0, 0.0))


def sides_from_vertices(
    vertex_a: Point2,
    vertex_b: Point2,
    vertex_c: Point2,
    exact: Optional[bool] = None,
) -> SideLengths:
    """Side lengths a = |BC|, b = |CA|, c = |AB| of an embedded triangle.

    With ``exact=True`` all three squared lengths must be perfect squares;
    otherwise the lengths are irrational and only the float backend can
    carry them (InvalidTriangleError points that out).  ``exact=None``
    picks exact when possible and floats otherwise.
    """
    sq = (
        vertex_b.dist_sq(vertex_c),
        vertex_c.dist_sq(vertex_a),
        vertex_a.dist_sq(vertex_b),
    )
    coords_exact = all(p.is_exact for p in (vertex_a, vertex_b, vertex_c))
    if exact is None:
        exact = coords_exact and all(sqrt_exact(v) is not None for v in sq)
    if exact:
        if not coords_exact:
            raise InvalidTriangleError("exact side lengths need exact coordinates")
        roots = [sqrt_exact(v) for v in sq]
        if any(r is None for r in roots):
            raise InvalidTriangleError(
                "side lengths are irrational for these coordinates; use the float backend"
            )
        return SideLengths(*roots)  # type: ignore[arg-type]
    return SideLengths(*(math.sqrt(float(v)) for v in sq))
