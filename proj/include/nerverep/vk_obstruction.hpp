#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "convex.hpp"
#include "gf2.hpp"
#include "simplicial_complex.hpp"

namespace nerverep {

/**
 * Straight-line map of a complex's vertices into R^{2d}. Moment-curve
 * placements also record their curve parameters.
 */
struct Placement
{
    std::size_t ambient = 0;
    std::map<VertexId, Point> points;
    std::vector<Rational> params;  ///< one per vertex in ascending vertex order; empty for arbitrary placements

    const Point& at(VertexId v) const
    {
        auto it = points.find(v);
        if (it == points.end())
            throw ComplexError("placement has no point for vertex " + std::to_string(v));
        return it->second;
    }

    std::vector<Point> points_of(const Face& f) const
    {
        std::vector<Point> out;
        out.reserve(f.size());
        for (VertexId v : f)
            out.push_back(at(v));
        return out;
    }

    friend bool operator==(const Placement&, const Placement&) = default;
};

inline Point moment_curve_point(const Rational& t, std::size_t ambient)
{
    Point p;
    p.reserve(ambient);
    Rational power = t;
    for (std::size_t k = 0; k < ambient; ++k) {
        p.push_back(power);
        power *= t;
    }
    return p;
}

/// Vertex v (in ascending order) goes to (t_v, t_v^2, ..., t_v^{2d}).
inline Placement moment_curve_placement(const SimplicialComplex& k, int d, const std::vector<Rational>& params)
{
    if (d < 1)
        throw ComplexError("moment_curve_placement: d must be at least 1");
    if (params.size() != k.vertices().size())
        throw DimensionError("moment_curve_placement: " + std::to_string(params.size()) + " parameters for " +
                             std::to_string(k.vertices().size()) + " vertices");
    std::set<Rational> seen(params.begin(), params.end());
    if (seen.size() != params.size())
        throw ComplexError("moment_curve_placement: parameters must be distinct");
    Placement pl;
    pl.ambient = 2 * static_cast<std::size_t>(d);
    pl.params = params;
    std::size_t i = 0;
    for (VertexId v : k.vertices())
        pl.points.emplace(v, moment_curve_point(params[i++], pl.ambient));
    return pl;
}

/// 1, 2, ..., n.
inline std::vector<Rational> default_params(std::size_t n)
{
    std::vector<Rational> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.emplace_back(static_cast<long>(i));
    return out;
}

/**
 * Deterministic alternative parameters for retry number `attempt`
 * (attempt 0 gives the defaults): i + r_i/997 with seeded r_i in [1, 996].
 */
inline std::vector<Rational> perturbed_params(std::size_t n, unsigned attempt)
{
    if (attempt == 0)
        return default_params(n);
    std::mt19937_64 rng(0x5eedULL + attempt);
    std::uniform_int_distribution<long> dist(1, 996);
    std::vector<Rational> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.emplace_back(Rational(static_cast<long>(i)) + Rational(dist(rng), 997));
    return out;
}

/// A mod-2 cochain on the unordered disjoint d-simplex pairs.
struct Cochain2
{
    std::vector<FacePair> index;
    BitVector bits;

    std::size_t weight() const { return bits.count(); }
    bool at(const FacePair& p) const
    {
        for (std::size_t i = 0; i < index.size(); ++i)
            if (index[i] == p)
                return bits[i];
        throw ComplexError("pair is not in the cochain index");
    }
};

/// Bit {σ, τ} is the crossing parity of the placed simplices.
inline Cochain2 intersection_cocycle(const SimplicialComplex& k, int d, const Placement& placement)
{
    if (placement.ambient != 2 * static_cast<std::size_t>(d))
        throw DimensionError("placement ambient dimension must be 2d");
    Cochain2 c;
    c.index = disjoint_simplex_pairs(k, d);
    c.bits.resize(c.index.size());
    for (std::size_t i = 0; i < c.index.size(); ++i) {
        const auto& [s, t] = c.index[i];
        try {
            c.bits[i] = generic_crossing_parity(placement.points_of(s), placement.points_of(t)) == 1;
        } catch (const GenericityError& e) {
            throw GenericityError("pair " + s.str() + " / " + t.str() + ": " + e.what() +
                                  "; choose different placement parameters");
        }
    }
    return c;
}

/// Row label (ρ, τ): dim ρ = d-1, dim τ = d, disjoint.
struct CoboundaryGenerator
{
    Face rho;
    Face tau;

    friend bool operator==(const CoboundaryGenerator&, const CoboundaryGenerator&) = default;
};

struct CoboundaryMatrix
{
    std::vector<CoboundaryGenerator> generators;
    std::vector<FacePair> index;
    GF2Matrix matrix;
};

/**
 * Coboundaries of the deleted-product cochain complex: row (ρ, τ) has a 1 in
 * column {σ, τ} for every d-face σ ⊃ ρ disjoint from τ. Adding a row to a
 * cocycle corresponds to a finger move of ρ across τ.
 */
inline CoboundaryMatrix coboundary_matrix(const SimplicialComplex& k, int d)
{
    if (d < 1)
        throw ComplexError("coboundary_matrix: d must be at least 1");
    CoboundaryMatrix out;
    out.index = disjoint_simplex_pairs(k, d);
    std::map<FacePair, std::size_t> column;
    for (std::size_t i = 0; i < out.index.size(); ++i)
        column.emplace(out.index[i], i);

    const auto low = k.faces_of_dimension(d - 1);
    const auto top = k.faces_of_dimension(d);
    std::vector<BitVector> rows;
    for (const Face& rho : low)
        for (const Face& tau : top) {
            if (rho.intersects(tau))
                continue;
            BitVector row(out.index.size());
            for (VertexId v : k.vertices()) {
                if (rho.contains(v) || tau.contains(v))
                    continue;
                std::vector<VertexId> vs = rho.vertices();
                vs.push_back(v);
                Face sigma(vs);
                if (!k.contains(sigma))
                    continue;
                FacePair p = sigma < tau ? FacePair{sigma, tau} : FacePair{tau, sigma};
                row[column.at(p)] = true;
            }
            out.generators.push_back({rho, tau});
            rows.push_back(std::move(row));
        }
    out.matrix = GF2Matrix(0, out.index.size());
    for (auto& r : rows)
        out.matrix.append_row(std::move(r));
    return out;
}

struct ObstructionCertificate
{
    bool vanishes = false;
    Cochain2 cocycle;
    CoboundaryMatrix coboundary;
    Gf2Solution solution;

    /// Generators whose coboundaries sum to the cocycle (vanishing case).
    std::vector<CoboundaryGenerator> cobounding_generators() const
    {
        std::vector<CoboundaryGenerator> out;
        if (!vanishes)
            return out;
        for (std::size_t r = solution.combination.find_first(); r != BitVector::npos;
             r = solution.combination.find_next(r))
            out.push_back(coboundary.generators[r]);
        return out;
    }

    /// Columns of the kernel witness (nonvanishing case).
    std::vector<FacePair> witness_pairs() const
    {
        std::vector<FacePair> out;
        if (vanishes)
            return out;
        for (std::size_t c = solution.witness.find_first(); c != BitVector::npos; c = solution.witness.find_next(c))
            out.push_back(coboundary.index[c]);
        return out;
    }
};

/// The mod-2 obstruction vanishes iff the crossing cocycle is a coboundary.
inline ObstructionCertificate obstruction_vanishes(const SimplicialComplex& k, int d, const Placement& placement)
{
    ObstructionCertificate cert;
    cert.cocycle = intersection_cocycle(k, d, placement);
    cert.coboundary = coboundary_matrix(k, d);
    cert.solution = gf2_solve(cert.coboundary.matrix, cert.cocycle.bits);
    cert.vanishes = cert.solution.solvable;
    return cert;
}

/**
 * Moment-curve placement that passes the genericity checks, trying
 * perturbed_params(n, 0), (n, 1), ... up to `attempts` times.
 */
inline Placement find_generic_placement(const SimplicialComplex& k, int d, unsigned attempts = 8)
{
    for (unsigned a = 0; a < attempts; ++a) {
        Placement pl = moment_curve_placement(k, d, perturbed_params(k.vertices().size(), a));
        try {
            intersection_cocycle(k, d, pl);
            return pl;
        } catch (const GenericityError&) {
        }
    }
    throw GenericityError("no generic moment-curve placement found");
}

} // namespace nerverep
