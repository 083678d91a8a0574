#include <gtest/gtest.h>

#include <random>

#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace nerverep;
using namespace fixtures;

namespace {

Rational R(const char* s)
{
    return parse_rational(s);
}

/// Witness table on `k` with seeded random points in R^m.
WitnessAssignment random_witness(const SimplicialComplex& k, std::size_t m, std::mt19937_64& rng)
{
    WitnessAssignment w;
    for (const Face& f : k.faces()) {
        Point p;
        for (std::size_t r = 0; r < m; ++r)
            p.push_back(oracle::random_rational(rng, 0, 20, 13));
        w.emplace(f, std::move(p));
    }
    return w;
}

} // namespace

TEST(WitnessPoints, TwoIntervals)
{
    const auto w = witness_points(two_intervals(), complex_from_facets({{1, 2}}));
    EXPECT_EQ(w.at(Face{1}), (Point{1}));
    EXPECT_EQ(w.at(Face{2}), (Point{2}));
    EXPECT_EQ(w.at(Face{1, 2}), (Point{R("3/2")}));
}

TEST(WitnessPoints, SingleBox)
{
    const ConvexFamily f(2, {{1, HPolytope::box({0, 0}, {2, 2})}});
    EXPECT_EQ(witness_points(f, complex_from_facets({{1}})).at(Face{1}), (Point{1, 1}));
}

TEST(WitnessPoints, TriangleSidesUseTheCorners)
{
    const auto f = triangle_sides();
    const auto w = witness_points(f, complex_from_facets({{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(w.at(Face{1, 2}), (Point{0, 0}));
    EXPECT_EQ(w.at(Face{1, 3}), (Point{4, 0}));
    EXPECT_EQ(w.at(Face{2, 3}), (Point{0, 4}));
    EXPECT_FALSE(check_witness_membership(f, w));
}

TEST(WitnessPoints, RefusesOnNerveMismatch)
{
    EXPECT_THROW(witness_points(three_intervals(), complex_from_facets({{1, 2}, {2, 3}, {1, 3}})),
                 NerveMismatchError);
}

TEST(WegnerMap, RejectsIncompleteWitness)
{
    WitnessAssignment w{{Face{1}, Point{0}}};
    EXPECT_THROW(WegnerMap(complex_from_facets({{1, 2}}), w, 1), ComplexError);
    w = {{Face{1}, Point{0, 0}}};
    EXPECT_THROW(WegnerMap(complex_from_facets({{1}}), w, 1), DimensionError);
}

TEST(ImageOfFace, TwoIntervalEdge)
{
    const auto g = WegnerMap::build(two_intervals(), complex_from_facets({{1, 2}}));
    const auto img = image_of_face(g, Face{1, 2});
    ASSERT_EQ(img.pieces.size(), 2u);
    EXPECT_EQ(img.pieces[0].points, (std::vector<Point>{{R("3/2")}, {1}}));
    EXPECT_EQ(img.pieces[1].points, (std::vector<Point>{{R("3/2")}, {2}}));
    EXPECT_EQ(image_of_face(g, Face{2}).pieces.size(), 1u);
    EXPECT_THROW(image_of_face(g, Face{1, 3}), ComplexError);
}

TEST(ImageOfFace, TriangleHasSixPieces)
{
    const auto g = WegnerMap::build(three_intervals(), complex_from_facets({{1, 2, 3}}));
    const auto img = image_of_face(g, Face{1, 2, 3});
    EXPECT_EQ(img.pieces.size(), 6u);
    for (const auto& piece : img.pieces)
        EXPECT_EQ(piece.points.size(), 3u);
}

TEST(RemoteDisjointness, HonestFamiliesPass)
{
    const auto g = WegnerMap::build(four_intervals(), complex_from_facets({{1, 2}, {3, 4}}));
    const auto r = verify_remote_disjointness(g);
    EXPECT_TRUE(r.ok());
    EXPECT_GT(r.remote_pairs, 0u);
}

TEST(RemoteDisjointness, FullSimplexIsVacuous)
{
    const auto g = WegnerMap::build(three_intervals(), complex_from_facets({{1, 2, 3}}));
    const auto r = verify_remote_disjointness(g);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.remote_pairs, 0u);
}

TEST(RemoteDisjointness, CorruptedWitnessIsCaught)
{
    const auto f = four_intervals();
    const auto g = WegnerMap::build(f, complex_from_facets({{1, 2}, {3, 4}}));
    const auto bad = g.with_injected_witness(Face{1}, Point{5});
    const auto r = verify_remote_disjointness(bad);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violation->alpha, (Face{1}));
    EXPECT_EQ(r.violation->beta, (Face{3}));
    EXPECT_EQ(r.violation->overlap.hit.point, (Point{5}));

    const auto c = verify_containment(bad, f);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->face, (Face{1}));
    EXPECT_EQ(c->body, 1u);
    EXPECT_EQ(c->chain.back(), (Face{1}));
    EXPECT_EQ(c->chain.front(), (Face{1, 2}));
}

TEST(Containment, TwoIntervalChain)
{
    const auto f = two_intervals();
    const auto g = WegnerMap::build(f, complex_from_facets({{1, 2}}));
    EXPECT_FALSE(verify_containment(g, f));
    EXPECT_TRUE(f.body(1).contains(g.image(Face{1, 2})));
    EXPECT_TRUE(f.body(1).contains(g.image(Face{1})));
}

TEST(Containment, ChecksEveryFlagMember)
{
    // Move the edge witness into body 2 only; the flag {1,2} > {1} must fail.
    const auto f = two_intervals();
    const auto g = WegnerMap::build(f, complex_from_facets({{1, 2}})).with_injected_witness(Face{1, 2}, Point{3});
    const auto c = verify_containment(g, f);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->face, (Face{1, 2}));
    EXPECT_EQ(c->body, 1u);
    EXPECT_EQ(c->chain, (std::vector<Face>{{1, 2}, {1}}));
}

TEST(Lemma, HoldsOnRandomFamilies)
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + trial % 3;
        const auto f = oracle::random_family(rng, m, 5 + trial % 2, trial % 2 == 0, 6);
        const auto k = nerve_helly(f);
        if (k.vertices() != f.labels())
            continue;
        const auto g = WegnerMap::build(f, k);
        EXPECT_FALSE(check_witness_membership(f, g.witness()));
        EXPECT_FALSE(verify_containment(g, f)) << "trial " << trial;
        EXPECT_TRUE(verify_remote_disjointness(g).ok()) << "trial " << trial;
        const auto again = WegnerMap::build(f, k);
        EXPECT_EQ(again.witness(), g.witness());
    }
}

TEST(ImageOfSourceSimplex, EdgeHasFourPieces)
{
    const auto l = complex_from_facets({{1, 2}});
    const SdComplex sd = barycentric_subdivision(l);
    const auto g = WegnerMap::build(sd_edge_strips(), sd.complex);
    const auto img = image_of_source_simplex(g, sd, Face{1, 2});
    EXPECT_EQ(img.pieces.size(), 4u);
    EXPECT_EQ(image_of_source_simplex(g, sd, Face{2}).pieces.size(), 1u);
    EXPECT_EQ(image_of_source_simplex(g, l, Face{1, 2}).pieces.size(), 4u);
}

TEST(ImageOfSourceSimplex, PieceCountsMatchChainEnumeration)
{
    std::mt19937_64 rng(8);
    const auto k5 = skeleton_complex(4, 1);
    const SdComplex sd = barycentric_subdivision(k5);
    const WegnerMap g(sd.complex, random_witness(sd.complex, 2, rng), 2);
    const SimplicialComplex edge_sd = barycentric_subdivision(complex_from_facets({{0, 1}})).complex;
    const std::size_t expected = oracle::brute_force_sd_fvector(edge_sd).back();
    EXPECT_EQ(expected, 4u);
    for (const Face& e : k5.faces_of_dimension(1))
        EXPECT_EQ(image_of_source_simplex(g, sd, e).pieces.size(), expected);

    const auto tri = complex_from_facets({{1, 2, 3}});
    const SdComplex sd_tri = barycentric_subdivision(tri);
    const WegnerMap h(sd_tri.complex, random_witness(sd_tri.complex, 2, rng), 2);
    // Six triangles of sd, each split into 3! triangles again.
    EXPECT_EQ(image_of_source_simplex(h, sd_tri, Face{1, 2, 3}).pieces.size(), 36u);
}

TEST(ImageOfSourceSimplex, RejectsUnlabelledNerve)
{
    const auto g = WegnerMap::build(three_intervals(), complex_from_facets({{1, 2, 3}}));
    EXPECT_THROW(image_of_source_simplex(g, complex_from_facets({{1, 2}}), Face{1, 2}), ComplexError);
}

TEST(PipelineCoherence, SourceOverlapImpliesRemoteViolation)
{
    // Any piecewise-linear map of sd K5 into the plane has a disjoint-edge
    // overlap; since those pieces come from remote pairs, the remote check
    // must fail as well.
    std::mt19937_64 rng(21);
    const auto k5 = skeleton_complex(4, 1);
    const SdComplex sd = barycentric_subdivision(k5);
    for (int trial = 0; trial < 5; ++trial) {
        const WegnerMap g(sd.complex, random_witness(sd.complex, 2, rng), 2);
        bool overlap = false;
        for (const FacePair& p : disjoint_simplex_pairs(k5, 1))
            if (find_image_overlap(image_of_source_simplex(g, sd, p.first),
                                   image_of_source_simplex(g, sd, p.second))) {
                overlap = true;
                break;
            }
        EXPECT_TRUE(overlap);
        EXPECT_FALSE(verify_remote_disjointness(g).ok());
    }
}

TEST(PipelineCoherence, CleanRemoteCheckMeansNoSourceOverlap)
{
    std::mt19937_64 rng(22);
    const auto l = complex_from_facets({{1, 2}, {3, 4}, {2, 3}});
    const SdComplex sd = barycentric_subdivision(l);
    int clean = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const WegnerMap g(sd.complex, random_witness(sd.complex, 2, rng), 2);
        bool overlap = false;
        for (const FacePair& p : disjoint_simplex_pairs(l, 1))
            overlap = overlap || find_image_overlap(image_of_source_simplex(g, sd, p.first),
                                                    image_of_source_simplex(g, sd, p.second));
        if (verify_remote_disjointness(g).ok()) {
            ++clean;
            EXPECT_FALSE(overlap);
        }
        if (overlap) {
            EXPECT_FALSE(verify_remote_disjointness(g).ok());
        }
    }
    EXPECT_GT(clean, 0);
}
