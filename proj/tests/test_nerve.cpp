#include <gtest/gtest.h>

#include <random>

#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace nerverep;
using namespace fixtures;

TEST(NerveExhaustive, SpecExamples)
{
    EXPECT_EQ(nerve_exhaustive(three_intervals()), complex_from_facets({{1, 2, 3}}));
    EXPECT_EQ(nerve_exhaustive(triangle_sides()), complex_from_facets({{1, 2}, {1, 3}, {2, 3}}));
    const ConvexFamily apart(2, {{1, HPolytope::box({0, 0}, {1, 1})}, {2, HPolytope::box({2, 2}, {3, 3})}});
    EXPECT_EQ(nerve_exhaustive(apart).f_vector(), (FVector{2}));
}

TEST(NerveExhaustive, EmptyBodyIsNotAVertex)
{
    const ConvexFamily f(1, {{1, interval(0, 1)}, {2, HPolytope(1, {{1}, {-1}}, {-1, -1})}});
    const auto n = nerve_exhaustive(f);
    EXPECT_EQ(n.vertices(), (std::set<VertexId>{1}));
}

TEST(NerveHelly, SpecExamples)
{
    std::vector<LabeledBody> five;
    for (VertexId v = 1; v <= 5; ++v)
        five.push_back({v, interval(-static_cast<long>(v), static_cast<long>(v))});
    EXPECT_EQ(nerve_helly(ConvexFamily(1, five)), complex_from_facets({{1, 2, 3, 4, 5}}));

    const ConvexFamily corner(2, {{1, HPolytope::box({0, 0}, {1, 1})},
                                  {2, HPolytope::box({1, 0}, {2, 1})},
                                  {3, HPolytope::box({0, 1}, {1, 2})},
                                  {4, HPolytope::box({1, 1}, {2, 2})}});
    EXPECT_EQ(nerve_helly(corner), complex_from_facets({{1, 2, 3, 4}}));
    EXPECT_EQ(nerve_helly(corner), nerve_exhaustive(corner));
    EXPECT_EQ(nerve_helly(triangle_sides()), nerve_exhaustive(triangle_sides()));
}

TEST(Nerve, CapExceeded)
{
    std::vector<LabeledBody> many;
    for (VertexId v = 1; v <= 21; ++v)
        many.push_back({v, interval(0, 1)});
    const ConvexFamily f(1, many);
    EXPECT_THROW(nerve_helly(f), FamilyError);
    EXPECT_THROW(nerve_exhaustive(f), FamilyError);
    EXPECT_THROW(nerve_exhaustive(three_intervals(), 2), FamilyError);
}

TEST(ConvexFamily, RejectsBadInput)
{
    EXPECT_THROW(ConvexFamily(1, {{1, interval(0, 1)}, {1, interval(2, 3)}}), FamilyError);
    EXPECT_THROW(ConvexFamily(2, {{1, interval(0, 1)}}), FamilyError);
    EXPECT_THROW(ConvexFamily(0, {}), FamilyError);
    EXPECT_THROW(three_intervals().body(9), FamilyError);
}

TEST(NerveMatches, SpecExamples)
{
    const auto eq = nerve_matches(three_intervals(), complex_from_facets({{1, 2, 3}}));
    EXPECT_TRUE(eq.equal());
    EXPECT_FALSE(eq.witness);

    const auto extra = nerve_matches(three_intervals(), complex_from_facets({{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(extra.verdict, NerveVerdict::extra_face);
    EXPECT_EQ(extra.witness, (Face{1, 2, 3}));

    const ConvexFamily apart(2, {{1, HPolytope::box({0, 0}, {1, 1})}, {2, HPolytope::box({2, 2}, {3, 3})}});
    const auto missing = nerve_matches(apart, complex_from_facets({{1, 2}}));
    EXPECT_EQ(missing.verdict, NerveVerdict::missing_face);
    EXPECT_EQ(missing.witness, (Face{1, 2}));
}

TEST(NerveMatches, WitnessIsLeastDifferingFace)
{
    // Nerve is the full triangle; the path 1-3-2 lacks {1,2} and {1,2,3}.
    const auto m = nerve_matches(three_strips(), complex_from_facets({{1, 3}, {2, 3}}));
    EXPECT_EQ(m.verdict, NerveVerdict::extra_face);
    EXPECT_EQ(m.witness, (Face{1, 2}));
}

TEST(NerveMatches, LabelMismatch)
{
    EXPECT_THROW(nerve_matches(three_intervals(), complex_from_facets({{1, 2}})), FamilyError);
}

TEST(Nerve, HellyEqualsExhaustiveOnRandomFamilies)
{
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t m = 1 + trial % 3;
        const std::size_t n = 3 + trial % 6;
        const auto f = oracle::random_family(rng, m, n, trial % 2 == 1, 5);
        const auto helly = nerve_helly(f);
        const auto exhaustive = nerve_exhaustive(f);
        ASSERT_EQ(helly, exhaustive) << "trial " << trial;
        EXPECT_TRUE(helly.is_downward_closed());
    }
}

TEST(Nerve, FacesMatchDirectEmptinessTest)
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = oracle::random_family(rng, 2, 5, true, 5);
        const auto n = nerve_exhaustive(f);
        const std::vector<VertexId> labels(f.labels().begin(), f.labels().end());
        for (unsigned mask = 1; mask < (1u << labels.size()); ++mask) {
            std::vector<VertexId> vs;
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (mask & (1u << i))
                    vs.push_back(labels[i]);
            const Face face(vs);
            EXPECT_EQ(n.contains(face), !oracle::fourier_motzkin_is_empty(f.intersection(face)));
        }
    }
}

TEST(Nerve, ShrinkingABodyNeverAddsFaces)
{
    std::mt19937_64 rng(102);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + trial % 3;
        const auto f = oracle::random_family(rng, m, 6, false, 5);
        std::vector<LabeledBody> bodies = f.bodies();
        std::vector<Rational> a(m);
        for (auto& v : a)
            v = coef(rng);
        bodies[trial % bodies.size()].body.add_row(a, oracle::random_rational(rng, 0, 10, 2));
        const auto before = nerve_helly(f);
        const auto after = nerve_helly(ConvexFamily(m, bodies));
        for (const Face& face : after.faces())
            EXPECT_TRUE(before.contains(face));
    }
}
