"""Triangle kernel: sides, metrics, barycentric machinery, embeddings.

Frozen expected values were computed first from an independent Cartesian
placement (C at the origin, B on the x-axis) before the formulas under test
existed; the exact backend must reproduce them bit-for-bit.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ninepoint.numeric import DEFAULT_TOLERANCE
from ninepoint.triangle import (
    Barycentric,
    InvalidTriangleError,
    Point2,
    SideLengths,
    barycentric_distance_sq,
    barycentric_to_cartesian,
    canonical_vertices,
    cartesian_to_barycentric,
    metrics,
    orientation,
    point_on_side,
    semiperimeter,
    sides_from_vertices,
)

F = Fraction

# Rational side triples via the substitution a = y+z, b = z+x, c = x+y
# with x, y, z > 0, which hits exactly the valid triangles.
positive_fractions = st.fractions(min_value=F(1, 50), max_value=50, max_denominator=50)
rational_sides = st.tuples(positive_fractions, positive_fractions, positive_fractions).map(
    lambda xyz: SideLengths(xyz[1] + xyz[2], xyz[2] + xyz[0], xyz[0] + xyz[1])
)


class TestSideLengths:
    def test_valid(self):
        sides = SideLengths(3, 4, 5)
        assert sides.as_tuple() == (F(3), F(4), F(5))
        assert sides.is_exact

    def test_nonpositive_side(self):
        with pytest.raises(InvalidTriangleError, match="invalid side: a <= 0"):
            SideLengths(0, 4, 5)
        with pytest.raises(InvalidTriangleError, match="invalid side: b <= 0"):
            SideLengths(3, -1, 5)

    def test_degenerate_flat(self):
        with pytest.raises(InvalidTriangleError, match=r"degenerate: a \+ b = c"):
            SideLengths(1, 2, 3)
        with pytest.raises(InvalidTriangleError, match=r"degenerate: b \+ c = a"):
            SideLengths(7, 3, 4)

    def test_inequality_violation(self):
        with pytest.raises(InvalidTriangleError, match=r"not a triangle: a \+ b < c"):
            SideLengths(1, 2, 10)

    def test_equilateral_flag(self):
        assert SideLengths(1, 1, 1).is_equilateral
        assert SideLengths(F(5, 3), F(5, 3), F(5, 3)).is_equilateral
        assert not SideLengths(3, 4, 5).is_equilateral

    def test_float_backend(self):
        sides = SideLengths(3.0, 4.0, 5.0)
        assert not sides.is_exact
        assert sides.as_tuple() == (3.0, 4.0, 5.0)

    def test_as_float(self):
        sides = SideLengths(F(1, 2), F(1, 2), F(3, 4)).as_float()
        assert sides.as_tuple() == (0.5, 0.5, 0.75)

    def test_conditioning(self):
        # s = 6; s-a = 3, s-b = 2, s-c = 1 -> max side / min gap = 5.
        assert SideLengths(3, 4, 5).conditioning() == pytest.approx(5.0)

    def test_mixed_backends_count_as_inexact(self):
        assert not SideLengths(3.0, F(4), 5.0).is_exact

    @given(rational_sides)
    def test_generated_sides_always_valid(self, sides: SideLengths):
        a, b, c = sides.as_tuple()
        assert a + b > c and b + c > a and c + a > b


class TestMetrics:
    def test_3_4_5(self):
        met = metrics(SideLengths(3, 4, 5))
        assert met.s == F(6)
        assert met.K_sq == F(36)
        assert met.R_sq == F(25, 4)
        assert met.r_sq == F(1)
        assert met.rA_sq == F(4)
        assert met.rB_sq == F(9)
        assert met.rC_sq == F(36)
        assert met.Rr == F(5, 2)
        assert met.RrA == F(5)
        assert met.RrB == F(15, 2)
        assert met.RrC == F(15)

    def test_equilateral_unit(self):
        met = metrics(SideLengths(1, 1, 1))
        assert met.s == F(3, 2)
        assert met.K_sq == F(3, 16)
        assert met.R_sq == F(1, 3)
        assert met.r_sq == F(1, 12)
        # r = R/2 in squared form: r_sq = R_sq / 4.
        assert met.r_sq == met.R_sq / 4

    def test_isoceles_2_2_3(self):
        met = metrics(SideLengths(2, 2, 3))
        assert met.s == F(7, 2)
        assert met.K_sq == F(63, 16)

    def test_scalene_2_3_4(self):
        met = metrics(SideLengths(2, 3, 4))
        assert met.s == F(9, 2)
        assert met.R_sq == F(576, 135)

    def test_semiperimeter(self):
        assert semiperimeter(SideLengths(3, 4, 5)) == F(6)

    def test_float_matches_exact(self):
        exact = metrics(SideLengths(3, 4, 5))
        approx = metrics(SideLengths(3.0, 4.0, 5.0))
        assert approx.R_sq == pytest.approx(float(exact.R_sq), rel=1e-12)
        assert approx.K_sq == pytest.approx(float(exact.K_sq), rel=1e-12)

    @given(rational_sides)
    def test_heron_consistency(self, sides: SideLengths):
        met = metrics(sides)
        a, b, c = sides.as_tuple()
        s = met.s
        assert met.K_sq == s * (s - a) * (s - b) * (s - c)
        assert met.K_sq > 0
        # abc = 4RK and K = rs in squared form.
        assert 16 * met.R_sq * met.K_sq == (a * b * c) ** 2
        assert met.r_sq * s * s == met.K_sq
        assert met.Rr * met.Rr == met.R_sq * met.r_sq

    @given(rational_sides, st.fractions(min_value=F(1, 7), max_value=7, max_denominator=20))
    def test_scale_covariance(self, sides: SideLengths, k: Fraction):
        a, b, c = sides.as_tuple()
        met = metrics(sides)
        scaled = metrics(SideLengths(k * a, k * b, k * c))
        assert scaled.R_sq == k * k * met.R_sq
        assert scaled.r_sq == k * k * met.r_sq
        assert scaled.K_sq == k ** 4 * met.K_sq


class TestBarycentric:
    def test_components(self):
        coords = Barycentric(F(1, 4), F(1, 3), F(5, 12))
        assert coords.components == (F(1, 4), F(1, 3), F(5, 12))
        assert coords.is_exact

    def test_negative_component_allowed(self):
        Barycentric(F(-1, 2), F(2, 3), F(5, 6))  # excenters sit outside

    def test_exact_sum_enforced(self):
        with pytest.raises(ValueError, match="sum"):
            Barycentric(F(1, 2), F(1, 2), F(1, 2))

    def test_float_sum_tolerance(self):
        Barycentric(0.25, 0.25, 0.5 + 1e-12)
        with pytest.raises(ValueError, match="sum"):
            Barycentric(0.25, 0.25, 0.51)


class TestPointOnSide:
    def test_interior(self):
        sides = SideLengths(3, 4, 5)
        # |BX| = 1, |CX| = 2 on BC.
        coords = point_on_side(F(1), F(2), sides)
        assert coords.components == (F(0), F(2, 3), F(1, 3))

    def test_endpoints_allowed(self):
        sides = SideLengths(3, 4, 5)
        at_b = point_on_side(F(0), F(3), sides)
        assert at_b.components == (F(0), F(1), F(0))
        at_c = point_on_side(F(3), F(0), sides)
        assert at_c.components == (F(0), F(0), F(1))

    def test_negative_distance_rejected(self):
        with pytest.raises(ValueError, match="negative distance"):
            point_on_side(F(-1), F(4), SideLengths(3, 4, 5))

    def test_sum_mismatch_rejected(self):
        with pytest.raises(ValueError, match="does not equal a"):
            point_on_side(F(1), F(1), SideLengths(3, 4, 5))

    def test_float_backend(self):
        coords = point_on_side(1.5, 1.5, SideLengths(3.0, 4.0, 5.0))
        assert coords.beta == pytest.approx(0.5)
        assert coords.gamma == pytest.approx(0.5)


class TestBarycentricDistance:
    def test_incenter_to_ninepoint_3_4_5(self):
        # I = (1/4, 1/3, 5/12); squared distances from A, B, C to N are
        # 153/16, 97/16, 25/16.  The identity must give |IN|^2 = 1/16.
        sides = SideLengths(3, 4, 5)
        x = Barycentric(F(1, 4), F(1, 3), F(5, 12))
        d_sq = barycentric_distance_sq(x, F(153, 16), F(97, 16), F(25, 16), sides)
        assert d_sq == F(1, 16)

    def test_vertex_to_vertex(self):
        # X = A, Y = B (so |AY|^2 = c^2, |BY|^2 = 0, |CY|^2 = a^2): the
        # identity collapses to |AB|^2 = c^2.
        sides = SideLengths(3, 4, 5)
        x = Barycentric(F(1), F(0), F(0))
        d_sq = barycentric_distance_sq(x, F(25), F(0), F(9), sides)
        assert d_sq == F(25)

    @given(rational_sides)
    def test_zero_distance_to_self(self, sides: SideLengths):
        # X = centroid, Y = centroid: distances to vertices are the median
        # thirds; the identity must return exactly zero.
        a, b, c = sides.as_tuple()
        third = F(1, 3)
        x = Barycentric(third, third, third)
        d_a = (2 * b * b + 2 * c * c - a * a) / 9
        d_b = (2 * c * c + 2 * a * a - b * b) / 9
        d_c = (2 * a * a + 2 * b * b - c * c) / 9
        assert barycentric_distance_sq(x, d_a, d_b, d_c, sides) == 0


class TestEmbeddings:
    def test_canonical_3_4_5(self):
        va, vb, vc = canonical_vertices(SideLengths(3, 4, 5))
        assert (va.x, va.y) == (F(0), F(4))
        assert (vb.x, vb.y) == (F(3), F(0))
        assert (vc.x, vc.y) == (F(0), F(0))

    def test_canonical_irrational_falls_back_to_float(self):
        va, vb, vc = canonical_vertices(SideLengths(1, 1, 1))
        assert not va.is_exact
        assert va.x == pytest.approx(0.5)
        assert va.y == pytest.approx(0.8660254037844386)
        assert (vb.x, vb.y) == (1.0, 0.0)

    def test_canonical_reproduces_sides(self):
        sides = SideLengths(F(13), F(14), F(15))
        va, vb, vc = canonical_vertices(sides)
        assert va.is_exact  # 13-14-15 is Heronian with rational altitude
        assert vb.dist_sq(vc) == F(169)
        assert vc.dist_sq(va) == F(196)
        assert va.dist_sq(vb) == F(225)

    def test_sides_from_vertices_exact(self):
        sides = sides_from_vertices(Point2(0, 4), Point2(3, 0), Point2(0, 0), exact=True)
        assert sides.as_tuple() == (F(3), F(4), F(5))

    def test_sides_from_vertices_irrational_rejected(self):
        with pytest.raises(InvalidTriangleError, match="irrational"):
            sides_from_vertices(Point2(0, 0), Point2(1, 0), Point2(0, 1), exact=True)

    def test_sides_from_vertices_auto_float(self):
        sides = sides_from_vertices(Point2(0, 0), Point2(1, 0), Point2(0, 1))
        assert not sides.is_exact
        assert sides.a == pytest.approx(2 ** 0.5)

    def test_orientation(self):
        assert orientation(Point2(0, 0), Point2(1, 0), Point2(0, 1)) > 0
        assert orientation(Point2(0, 0), Point2(0, 1), Point2(1, 0)) < 0
        assert orientation(Point2(0, 0), Point2(1, 1), Point2(2, 2)) == 0

    @given(rational_sides)
    def test_embedding_matches_sides(self, sides: SideLengths):
        va, vb, vc = canonical_vertices(sides)
        a, b, c = sides.as_tuple()
        if va.is_exact:
            assert vb.dist_sq(vc) == a * a
            assert vc.dist_sq(va) == b * b
            assert va.dist_sq(vb) == c * c
        else:
            assert float(vb.dist_sq(vc)) == pytest.approx(float(a * a), rel=1e-9)


class TestCartesianConversions:
    def test_to_cartesian_incenter(self):
        va, vb, vc = canonical_vertices(SideLengths(3, 4, 5))
        pt = barycentric_to_cartesian(Barycentric(F(1, 4), F(1, 3), F(5, 12)), va, vb, vc)
        assert (pt.x, pt.y) == (F(1), F(1))

    def test_roundtrip(self):
        va, vb, vc = canonical_vertices(SideLengths(3, 4, 5))
        coords = cartesian_to_barycentric(Point2(F(1), F(1)), va, vb, vc)
        assert coords.components == (F(1, 4), F(1, 3), F(5, 12))

    def test_collinear_rejected(self):
        with pytest.raises(ValueError):
            cartesian_to_barycentric(Point2(0, 0), Point2(0, 0), Point2(1, 1), Point2(2, 2))

    @given(
        rational_sides,
        st.fractions(min_value=-2, max_value=2, max_denominator=20),
        st.fractions(min_value=-2, max_value=2, max_denominator=20),
    )
    def test_roundtrip_any_affine_point(self, sides: SideLengths, alpha: Fraction, beta: Fraction):
        va, vb, vc = canonical_vertices(sides)
        if not va.is_exact:
            return
        coords = Barycentric(alpha, beta, 1 - alpha - beta)
        pt = barycentric_to_cartesian(coords, va, vb, vc)
        back = cartesian_to_barycentric(pt, va, vb, vc)
        assert back.components == coords.components


class TestPoint2:
    def test_arithmetic(self):
        p = Point2(F(1), F(2))
        q = Point2(F(3), F(5))
        assert ((p + q).x, (p + q).y) == (F(4), F(7))
        assert ((q - p).x, (q - p).y) == (F(2), F(3))
        assert p.dot(q) == F(13)
        assert p.cross(q) == F(-1)
        assert p.dist_sq(q) == F(13)

    def test_scaled(self):
        p = Point2(F(1), F(2)).scaled(F(3, 2))
        assert (p.x, p.y) == (F(3, 2), F(3))

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            Point2(float("nan"), 0.0)

    def test_int_promotion(self):
        p = Point2(1, 2)
        assert p.is_exact
        assert isinstance(p.x, Fraction)
