#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"

namespace nerverep {

/**
 * Replacement witness used to exercise the violation paths. Injected
 * before the membership check it surfaces as WITNESS_VIOLATION; injected
 * after it reaches the remote-disjointness check.
 */
struct WitnessInjection
{
    enum class Stage { before_membership_check, after_membership_check };

    Face face;
    Point point;
    Stage stage = Stage::after_membership_check;
};

struct PipelineOptions
{
    std::optional<WitnessInjection> injection;
    unsigned placement_attempts = 8;
};

/**
 * Checks a claimed representation of sd L in R^{2d} stage by stage:
 *
 *   1. subdivide L;
 *   2. compare nerve(F) with sd L under the given labels;
 *   3. compute and verify witness points (membership and flag containment);
 *   4. verify that images of remote pairs are disjoint;
 *   5. look for two disjoint d-faces of L whose images meet.
 *
 * A clean run ends with the obstruction of L. It can only vanish; a clean
 * run over a complex with nonvanishing obstruction is reported as a
 * consistency failure.
 */
inline Certificate run_certificate_pipeline(const ConvexFamily& family, const SimplicialComplex& l, int d,
                                            const PipelineOptions& options = {})
{
    if (d < 1)
        throw ComplexError("certificate: d must be at least 1");
    if (family.ambient() != 2 * static_cast<std::size_t>(d))
        throw DimensionError("certificate: family lives in R^" + std::to_string(family.ambient()) +
                             ", expected R^" + std::to_string(2 * d));
    if (l.dimension() != d)
        throw ComplexError("certificate: source complex has dimension " + std::to_string(l.dimension()) +
                           ", expected " + std::to_string(d));

    const SdComplex sd_l = barycentric_subdivision(l);
    const SimplicialComplex& k = sd_l.complex;

    NerveMatch match = nerve_matches(family, k);
    if (!match.equal())
        return NerveMismatchCertificate{family, k, std::move(match)};

    WitnessAssignment witness;
    for (const Face& f : k.faces())
        witness.emplace(f, canonical_point(family.intersection(f)));
    const auto& inj = options.injection;
    if (inj && inj->stage == WitnessInjection::Stage::before_membership_check) {
        if (!witness.count(inj->face))
            throw ComplexError("injection target " + inj->face.str() + " is not a face of sd L");
        witness[inj->face] = inj->point;
    }
    WegnerMap g(k, std::move(witness), family.ambient());
    if (auto bad = verify_containment(g, family)) {
        WitnessViolation v{bad->face, bad->point, bad->body, bad->row};
        return WitnessViolationCertificate{family, std::move(v), std::move(bad->chain)};
    }
    if (inj && inj->stage == WitnessInjection::Stage::after_membership_check)
        g = g.with_injected_witness(inj->face, inj->point);

    RemoteDisjointnessReport remote = verify_remote_disjointness(g);
    if (!remote.ok())
        return LemmaViolationCertificate{k, std::move(*remote.violation)};

    for (const FacePair& p : disjoint_simplex_pairs(l, d)) {
        auto hit = find_image_overlap(image_of_source_simplex(g, sd_l, p.first),
                                      image_of_source_simplex(g, sd_l, p.second));
        if (hit)
            return VkfCertificate{p.first, p.second, std::move(*hit), std::nullopt};
    }

    const Placement pl = find_generic_placement(l, d, options.placement_attempts);
    ObstructionCertificate oc = obstruction_vanishes(l, d, pl);
    if (!oc.vanishes)
        return ConsistencyFailure{"every check passed although the obstruction of L does not vanish"};
    return ObstructionReport{l, d, pl, std::move(oc)};
}

/// The mod-2 obstruction report for `k` under a given placement.
inline ObstructionReport obstruction_report(const SimplicialComplex& k, int d, const Placement& pl)
{
    return ObstructionReport{k, d, pl, obstruction_vanishes(k, d, pl)};
}

/**
 * Places the d-skeleton of the (2d+2)-simplex, on vertices 1..2d+3, on the
 * moment curve in R^{2d} and returns the first disjoint pair of d-faces
 * (canonical order) whose images cross, with the exact crossing point.
 */
inline Certificate vkf_demo(int d, std::optional<std::vector<Rational>> params = std::nullopt)
{
    if (d < 1)
        throw ComplexError("vkf-demo: d must be at least 1");
    const SimplicialComplex k = skeleton_complex(2 * d + 2, d, 1);
    const Placement pl = moment_curve_placement(k, d, params ? *params : default_params(k.vertices().size()));
    for (const FacePair& p : disjoint_simplex_pairs(k, d)) {
        const auto u = pl.points_of(p.first);
        const auto w = pl.points_of(p.second);
        CrossingSolution s;
        try {
            s = crossing_solution(u, w);
        } catch (const GenericityError& e) {
            throw GenericityError("pair " + p.first.str() + " / " + p.second.str() + ": " + e.what() +
                                  "; choose different parameters");
        }
        if (!s.crosses)
            continue;
        PieceOverlap o{{{}, u}, {{}, w}, HullIntersection{s.lambda, s.mu, s.point}};
        return VkfCertificate{p.first, p.second, std::move(o), pl};
    }
    return ConsistencyFailure{"no crossing pair found under a generic placement"};
}

} // namespace nerverep
