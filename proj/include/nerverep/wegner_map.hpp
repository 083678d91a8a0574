#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "convex.hpp"
#include "nerve.hpp"
#include "simplicial_complex.hpp"

namespace nerverep {

/// One witness point per nonempty face of the nerve.
using WitnessAssignment = std::map<Face, Point>;

class NerveMismatchError : public std::runtime_error
{
public:
    explicit NerveMismatchError(NerveMatch m)
        : std::runtime_error(std::string("nerve mismatch: ") + to_string(m.verdict) + " " +
                             (m.witness ? m.witness->str() : std::string())),
          match(std::move(m))
    {
    }
    NerveMatch match;
};

/// A witness point that violates a constraint row of one of its bodies.
struct WitnessViolation
{
    Face face;
    Point point;
    VertexId body;
    std::size_t row;
};

inline std::optional<WitnessViolation> check_witness_membership(const ConvexFamily& family,
                                                                 const WitnessAssignment& witness)
{
    for (const auto& [face, p] : witness)
        for (VertexId v : face)
            if (auto row = family.body(v).first_violated_row(p))
                return WitnessViolation{face, p, v, *row};
    return std::nullopt;
}

/**
 * Canonical point of every stacked intersection. Refuses to run unless the
 * nerve of the family is exactly K.
 */
inline WitnessAssignment witness_points(const ConvexFamily& family, const SimplicialComplex& k)
{
    NerveMatch match = nerve_matches(family, k);
    if (!match.equal())
        throw NerveMismatchError(std::move(match));
    WitnessAssignment out;
    for (const Face& f : k.faces())
        out.emplace(f, canonical_point(family.intersection(f)));
    if (auto bad = check_witness_membership(family, out))
        throw GeometryError("witness for " + bad->face.str() + " violates body " + std::to_string(bad->body));
    return out;
}

/// A linear simplex g(c_0, ..., c_k) for one chain of faces.
struct ImagePiece
{
    std::vector<Face> chain;
    std::vector<Point> points;
};

/// Union of linear simplices.
struct SimplexImage
{
    std::vector<ImagePiece> pieces;
};

/**
 * The piecewise-linear map g: |sd K| -> R^m determined by sending the
 * subdivision vertex of each face F' to its witness point.
 */
class WegnerMap
{
public:
    WegnerMap(SimplicialComplex nerve, WitnessAssignment witness, std::size_t ambient)
        : nerve_(std::move(nerve)), witness_(std::move(witness)), ambient_(ambient),
          sd_cache_(std::make_shared<SdCache>())
    {
        for (const Face& f : nerve_.faces()) {
            auto it = witness_.find(f);
            if (it == witness_.end())
                throw ComplexError("no witness point for face " + f.str());
            if (it->second.size() != ambient_)
                throw DimensionError("witness point for " + f.str() + " has wrong dimension");
        }
        if (witness_.size() != nerve_.faces().size())
            throw ComplexError("witness assignment names faces outside the nerve");
    }

    static WegnerMap build(const ConvexFamily& family, const SimplicialComplex& k)
    {
        return WegnerMap(k, witness_points(family, k), family.ambient());
    }

    const SimplicialComplex& nerve() const { return nerve_; }
    const WitnessAssignment& witness() const { return witness_; }
    std::size_t ambient() const { return ambient_; }

    /// Subdivision of the nerve, built on first use.
    const SdComplex& sd_nerve() const
    {
        std::call_once(sd_cache_->once, [&] { sd_cache_->sd = barycentric_subdivision(nerve_); });
        return *sd_cache_->sd;
    }

    const Point& image(const Face& face) const
    {
        auto it = witness_.find(face);
        if (it == witness_.end())
            throw ComplexError(face.str() + " is not a face of the nerve");
        return it->second;
    }

    Point image_of_sd_vertex(VertexId w) const { return image(sd_nerve().label_of(w)); }

    /// Test hook: a copy whose witness for `face` is replaced by `p`.
    WegnerMap with_injected_witness(const Face& face, Point p) const
    {
        WitnessAssignment w = witness_;
        auto it = w.find(face);
        if (it == w.end())
            throw ComplexError(face.str() + " is not a face of the nerve");
        if (p.size() != ambient_)
            throw DimensionError("injected point has wrong dimension");
        it->second = std::move(p);
        return WegnerMap(nerve_, std::move(w), ambient_);
    }

private:
    struct SdCache
    {
        std::once_flag once;
        std::optional<SdComplex> sd;
    };

    SimplicialComplex nerve_;
    WitnessAssignment witness_;
    std::size_t ambient_;
    std::shared_ptr<SdCache> sd_cache_;
};

inline ImagePiece map_chain(const WegnerMap& g, const std::vector<Face>& chain)
{
    ImagePiece piece{chain, {}};
    piece.points.reserve(chain.size());
    for (const Face& f : chain)
        piece.points.push_back(g.image(f));
    return piece;
}

/// g(|sd α|): one piece per complete flag below α.
inline SimplexImage image_of_face(const WegnerMap& g, const Face& alpha)
{
    if (!g.nerve().contains(alpha))
        throw ComplexError("image_of_face: " + alpha.str() + " is not a face of the nerve");
    SimplexImage img;
    for_each_full_flag(alpha, [&](const std::vector<Face>& chain) { img.pieces.push_back(map_chain(g, chain)); });
    return img;
}

/**
 * g(|γ|) for a face γ of L when the nerve is sd L: the pieces are the
 * complete flags of sd(sd γ), i.e. complete flags below each top face of sd γ.
 */
inline SimplexImage image_of_source_simplex(const WegnerMap& g, const SdComplex& sd_l, const Face& gamma)
{
    if (!(sd_l.complex == g.nerve()))
        throw ComplexError("image_of_source_simplex: nerve is not labelled as sd L");
    if (!sd_l.has_face_of_original(gamma))
        throw ComplexError("image_of_source_simplex: " + gamma.str() + " is not a face of L");
    SimplexImage img;
    for_each_full_flag(gamma, [&](const std::vector<Face>& source_flag) {
        const Face top = sd_l.face_of_chain(source_flag);
        for_each_full_flag(top, [&](const std::vector<Face>& chain) { img.pieces.push_back(map_chain(g, chain)); });
    });
    return img;
}

inline SimplexImage image_of_source_simplex(const WegnerMap& g, const SimplicialComplex& l, const Face& gamma)
{
    return image_of_source_simplex(g, barycentric_subdivision(l), gamma);
}

/// Two pieces whose hulls meet, with the exact common point.
struct PieceOverlap
{
    ImagePiece piece_a;
    ImagePiece piece_b;
    HullIntersection hit;
};

namespace detail {

inline std::vector<Point> all_points(const SimplexImage& img)
{
    std::vector<Point> out;
    for (const auto& piece : img.pieces)
        out.insert(out.end(), piece.points.begin(), piece.points.end());
    return out;
}

inline bool boxes_disjoint(const std::vector<Point>& a, const std::vector<Point>& b)
{
    const std::size_t m = a.front().size();
    for (std::size_t k = 0; k < m; ++k) {
        Rational alo = a.front()[k], ahi = alo, blo = b.front()[k], bhi = blo;
        for (const auto& p : a) {
            if (p[k] < alo)
                alo = p[k];
            if (p[k] > ahi)
                ahi = p[k];
        }
        for (const auto& p : b) {
            if (p[k] < blo)
                blo = p[k];
            if (p[k] > bhi)
                bhi = p[k];
        }
        if (ahi < blo || bhi < alo)
            return true;
    }
    return false;
}

} // namespace detail

/**
 * First pair of pieces (in piece order) whose hulls intersect. Bounding
 * boxes and the hulls of all points are tried first; both only ever
 * over-approximate the union of the pieces.
 */
inline std::optional<PieceOverlap> find_image_overlap(const SimplexImage& a, const SimplexImage& b)
{
    if (a.pieces.empty() || b.pieces.empty())
        return std::nullopt;
    const auto pa = detail::all_points(a);
    const auto pb = detail::all_points(b);
    if (detail::boxes_disjoint(pa, pb) || !hulls_intersect(pa, pb))
        return std::nullopt;
    for (const auto& x : a.pieces)
        for (const auto& y : b.pieces)
            if (auto hit = hull_intersection(x.points, y.points))
                return PieceOverlap{x, y, std::move(*hit)};
    return std::nullopt;
}

struct LemmaViolation
{
    Face alpha;
    Face beta;
    PieceOverlap overlap;
};

struct RemoteDisjointnessReport
{
    std::size_t remote_pairs = 0;
    std::optional<LemmaViolation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Tests g(|sd α|) ∩ g(|sd β|) = ∅ for every remote pair, stopping at the first hit.
inline RemoteDisjointnessReport verify_remote_disjointness(const WegnerMap& g)
{
    RemoteDisjointnessReport report;
    std::map<Face, SimplexImage> images;
    auto image = [&](const Face& f) -> const SimplexImage& {
        auto it = images.find(f);
        if (it == images.end())
            it = images.emplace(f, image_of_face(g, f)).first;
        return it->second;
    };
    const auto& faces = g.nerve().faces();
    for (auto i = faces.begin(); i != faces.end(); ++i) {
        for (auto j = std::next(i); j != faces.end(); ++j) {
            if (!is_remote(g.nerve(), *i, *j))
                continue;
            ++report.remote_pairs;
            if (auto hit = find_image_overlap(image(*i), image(*j))) {
                report.violation = LemmaViolation{*i, *j, std::move(*hit)};
                return report;
            }
        }
    }
    return report;
}

struct ContainmentViolation
{
    std::vector<Face> chain;  ///< a complete flag of the nerve
    Face face;                ///< chain member whose witness escapes
    Point point;
    VertexId body;            ///< the chain's minimal face is {body}
    std::size_t row;
};

namespace detail {

/// Complete flag through `alpha` ending at {v}: from the least facet above alpha down to alpha, then down to {v}.
inline std::vector<Face> flag_through(const SimplicialComplex& k, const Face& alpha, VertexId v)
{
    Face top = alpha;
    for (const Face& f : k.facets())
        if (alpha.is_subset_of(f)) {
            top = f;
            break;
        }
    std::vector<Face> chain{top};
    Face cur = top;
    for (auto it = top.vertices().rbegin(); it != top.vertices().rend(); ++it)
        if (!alpha.contains(*it)) {
            cur = cur.without(*it);
            chain.push_back(cur);
        }
    for (auto it = alpha.vertices().rbegin(); it != alpha.vertices().rend(); ++it)
        if (*it != v) {
            cur = cur.without(*it);
            chain.push_back(cur);
        }
    return chain;
}

} // namespace detail

/**
 * Every witness on a complete flag of sd K lies in the body of the flag's
 * bottom vertex. A face α and a vertex v ∈ α share some complete flag ending
 * at {v}, so checking p(α) ∈ body(v) for all such pairs covers every flag.
 */
inline std::optional<ContainmentViolation> verify_containment(const WegnerMap& g, const ConvexFamily& family)
{
    for (const Face& alpha : g.nerve().faces()) {
        const Point& p = g.image(alpha);
        for (VertexId v : alpha)
            if (auto row = family.body(v).first_violated_row(p))
                return ContainmentViolation{detail::flag_through(g.nerve(), alpha, v), alpha, p, v, *row};
    }
    return std::nullopt;
}

} // namespace nerverep
