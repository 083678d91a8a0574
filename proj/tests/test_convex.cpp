#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace nerverep;

namespace {

Rational R(const char* s)
{
    return parse_rational(s);
}

Point parabola(long t)
{
    return {Rational(t), Rational(t * t)};
}

} // namespace

TEST(PolytopeIsEmpty, SpecExamples)
{
    const auto a = HPolytope::box({0, 0}, {1, 1});
    const auto b = HPolytope::box({2, 2}, {3, 3});
    EXPECT_TRUE(polytope_is_empty(a.intersect(b)));
    EXPECT_FALSE(polytope_is_empty(HPolytope::box({0}, {2}).intersect(HPolytope::box({1}, {3}))));
    EXPECT_FALSE(polytope_is_empty(HPolytope(1, {{1}, {-1}}, {0, 0})));
}

TEST(PolytopeIsEmpty, NoConstraintsIsNonempty)
{
    EXPECT_FALSE(polytope_is_empty(HPolytope(3, {}, {})));
}

TEST(PolytopeIsEmpty, RejectsMismatchedShapes)
{
    EXPECT_THROW(HPolytope(2, {{1, 0}}, {}), DimensionError);
    EXPECT_THROW(HPolytope(2, {{1}}, {0}), DimensionError);
    EXPECT_THROW(HPolytope::box({0}, {1}).intersect(HPolytope::box({0, 0}, {1, 1})), DimensionError);
}

TEST(PolytopeIsEmpty, AgreesWithFourierMotzkin)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> dims(1, 3);
    std::uniform_int_distribution<int> rows(1, 7);
    int empty = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = dims(rng);
        HPolytope p(m, {}, {});
        const int r = rows(rng);
        for (int i = 0; i < r; ++i) {
            std::vector<Rational> a(m);
            for (auto& v : a)
                v = coef(rng);
            p.add_row(a, oracle::random_rational(rng, -3, 3, 2));
        }
        const bool e = polytope_is_empty(p);
        empty += e;
        ASSERT_EQ(e, oracle::fourier_motzkin_is_empty(p)) << "trial " << trial;
    }
    EXPECT_GT(empty, 10);
    EXPECT_LT(empty, 290);
}

TEST(CanonicalPoint, SpecExamples)
{
    const auto sq = canonical_point_with_radius(HPolytope::box({0, 0}, {2, 2}));
    EXPECT_EQ(sq.point, (Point{1, 1}));
    EXPECT_EQ(sq.radius, 1);
    EXPECT_EQ(canonical_point(HPolytope::box({1}, {2})), (Point{R("3/2")}));
    const HPolytope seg(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {0, 0, 2, 0});
    const auto s = canonical_point_with_radius(seg);
    EXPECT_EQ(s.radius, 0);
    EXPECT_EQ(s.point, (Point{0, 0}));
}

TEST(CanonicalPoint, LexicographicTieBreak)
{
    // A 4x2 rectangle: radius 1, centres form the segment y = 1, 1 <= x <= 3.
    const auto c = canonical_point_with_radius(HPolytope::box({0, 0}, {4, 2}));
    EXPECT_EQ(c.radius, 1);
    EXPECT_EQ(c.point, (Point{1, 1}));
}

TEST(CanonicalPoint, Errors)
{
    EXPECT_THROW(canonical_point(HPolytope::box({0}, {1}).intersect(HPolytope::box({2}, {3}))), GeometryError);
    EXPECT_THROW(canonical_point(HPolytope(1, {{1}}, {0})), GeometryError);
    EXPECT_THROW(canonical_point(HPolytope(2, {{1, 0}, {-1, 0}}, {1, 1})), GeometryError);
}

TEST(CanonicalPoint, AgreesWithEmptinessAndLiesInside)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const auto fam = oracle::random_family(rng, 1 + trial % 3, 3, true, 6);
        HPolytope p = fam.body(1).intersect(fam.body(2)).intersect(fam.body(3));
        if (polytope_is_empty(p)) {
            EXPECT_THROW(canonical_point(p), GeometryError);
            continue;
        }
        const Point x = canonical_point(p);
        EXPECT_TRUE(p.contains(x));
        EXPECT_EQ(x, canonical_point(p));
    }
}

TEST(HullsIntersect, SpecExamples)
{
    EXPECT_TRUE(hulls_intersect({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}));
    const auto hit = hull_intersection({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->point, (Point{R("1/2"), R("1/2")}));
    EXPECT_FALSE(hulls_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}));
    EXPECT_TRUE(hulls_intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 5}}));
}

TEST(HullsIntersect, CoefficientsReproducePoint)
{
    const std::vector<Point> a{{0, 0, 0}, {4, 0, 0}, {0, 4, 0}};
    const std::vector<Point> b{{1, 1, -1}, {1, 1, 3}};
    const auto hit = hull_intersection(a, b);
    ASSERT_TRUE(hit);
    Point pa(3, 0), pb(3, 0);
    Rational la = 0, lb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_GE(hit->lambda[i], 0);
        la += hit->lambda[i];
        for (std::size_t r = 0; r < 3; ++r)
            pa[r] += hit->lambda[i] * a[i][r];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        EXPECT_GE(hit->mu[j], 0);
        lb += hit->mu[j];
        for (std::size_t r = 0; r < 3; ++r)
            pb[r] += hit->mu[j] * b[j][r];
    }
    EXPECT_EQ(la, 1);
    EXPECT_EQ(lb, 1);
    EXPECT_EQ(pa, pb);
    EXPECT_EQ(pa, hit->point);
    EXPECT_EQ(pa, (Point{1, 1, 0}));
}

TEST(HullsIntersect, Errors)
{
    EXPECT_THROW(hulls_intersect({}, {{0}}), DimensionError);
    EXPECT_THROW(hulls_intersect({{0, 0}}, {{0}}), DimensionError);
}

TEST(HullsIntersect, SymmetricAndReflexive)
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> count(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + trial % 3;
        auto pts = [&] {
            std::vector<Point> out(count(rng));
            for (auto& p : out)
                for (std::size_t r = 0; r < m; ++r)
                    p.push_back(oracle::random_rational(rng, -3, 3, 2));
            return out;
        };
        const auto a = pts();
        const auto b = pts();
        EXPECT_EQ(hulls_intersect(a, b), hulls_intersect(b, a));
        EXPECT_TRUE(hulls_intersect(a, a));
    }
}

TEST(HullsIntersect, SegmentsAgreeWithOrientationTest)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Point> p(4);
        for (auto& q : p)
            q = {oracle::random_rational(rng, 0, 10, 7), oracle::random_rational(rng, 0, 10, 7)};
        const bool proper = oracle::segments_cross_properly(p[0], p[1], p[2], p[3]);
        if (proper) {
            EXPECT_TRUE(hulls_intersect({p[0], p[1]}, {p[2], p[3]}));
        }
        if (oracle::orient(p[0], p[1], p[2]) * oracle::orient(p[0], p[1], p[3]) > 0) {
            EXPECT_FALSE(hulls_intersect({p[0], p[1]}, {p[2], p[3]}));
        }
    }
}

TEST(CrossingParity, SpecExamples)
{
    EXPECT_EQ(generic_crossing_parity({parabola(1), parabola(3)}, {parabola(2), parabola(4)}), 1);
    EXPECT_EQ(generic_crossing_parity({parabola(1), parabola(2)}, {parabola(3), parabola(4)}), 0);
    // Translate the second chord so it is parallel to the first and clear of it.
    const Point shift{0, 20};
    const Point a = parabola(1), b = parabola(3);
    EXPECT_EQ(generic_crossing_parity({a, b}, {{a[0] + 1, a[1] + shift[1]}, {b[0] + 1, b[1] + shift[1]}}), 0);
}

TEST(CrossingParity, IntersectionPoint)
{
    const auto s = crossing_solution({parabola(1), parabola(3)}, {parabola(2), parabola(4)});
    EXPECT_TRUE(s.crosses);
    // Chords y = 4x - 3 and y = 6x - 8 meet at (5/2, 7).
    EXPECT_EQ(s.point, (Point{R("5/2"), 7}));
}

TEST(CrossingParity, GenericityFailures)
{
    EXPECT_THROW(generic_crossing_parity({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}), GenericityError);
    EXPECT_THROW(generic_crossing_parity({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}), GenericityError);
    EXPECT_THROW(generic_crossing_parity({{0, 0}, {1, 1}}, {{0, 0}}), DimensionError);
    EXPECT_THROW(generic_crossing_parity({{0, 0, 0}, {1, 1, 1}}, {{0, 0, 1}, {1, 0, 0}}), DimensionError);
}

TEST(CrossingParity, SymmetricAndConsistentWithHulls)
{
    std::mt19937_64 rng(77);
    int ones = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 2;
        auto pts = [&] {
            std::vector<Point> out(d + 1);
            for (auto& p : out)
                for (std::size_t r = 0; r < 2 * d; ++r)
                    p.push_back(oracle::random_rational(rng, -4, 4, 5));
            return out;
        };
        const auto s = pts();
        const auto t = pts();
        int p1, p2;
        try {
            p1 = generic_crossing_parity(s, t);
            p2 = generic_crossing_parity(t, s);
        } catch (const GenericityError&) {
            continue;
        }
        EXPECT_EQ(p1, p2);
        EXPECT_EQ(p1 == 1, hulls_intersect(s, t)) << "trial " << trial;
        ones += p1;
    }
    EXPECT_GT(ones, 0);
}
