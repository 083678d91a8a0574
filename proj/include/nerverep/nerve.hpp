#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "convex.hpp"
#include "simplicial_complex.hpp"

namespace nerverep {

class FamilyError : public std::invalid_argument
{
public:
    explicit FamilyError(const std::string& what) : std::invalid_argument(what) {}
};

struct LabeledBody
{
    VertexId label;
    HPolytope body;

    friend bool operator==(const LabeledBody&, const LabeledBody&) = default;
};

/// Finitely many convex bodies in R^m, each tagged with the vertex it represents.
class ConvexFamily
{
public:
    ConvexFamily() = default;

    ConvexFamily(std::size_t ambient, std::vector<LabeledBody> bodies) : ambient_(ambient), bodies_(std::move(bodies))
    {
        if (ambient_ == 0)
            throw FamilyError("ambient dimension must be positive");
        for (const auto& b : bodies_) {
            if (!labels_.insert(b.label).second)
                throw FamilyError("duplicate body label " + std::to_string(b.label));
            if (b.body.ambient() != ambient_)
                throw FamilyError("body " + std::to_string(b.label) + " lives in R^" +
                                  std::to_string(b.body.ambient()) + ", family ambient is R^" +
                                  std::to_string(ambient_));
            index_.emplace(b.label, &b - bodies_.data());
        }
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t size() const { return bodies_.size(); }
    const std::vector<LabeledBody>& bodies() const { return bodies_; }

    const std::set<VertexId>& labels() const { return labels_; }

    const HPolytope& body(VertexId label) const
    {
        auto it = index_.find(label);
        if (it == index_.end())
            throw FamilyError("no body labelled " + std::to_string(label));
        return bodies_[it->second].body;
    }

    /// Stacked constraints of the bodies named by `face`.
    HPolytope intersection(const Face& face) const
    {
        HPolytope out(ambient_, {}, {});
        for (VertexId v : face)
            out = out.intersect(body(v));
        return out;
    }

    friend bool operator==(const ConvexFamily& a, const ConvexFamily& b)
    {
        return a.ambient_ == b.ambient_ && a.bodies_ == b.bodies_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<LabeledBody> bodies_;
    std::set<VertexId> labels_;
    std::map<VertexId, std::size_t> index_;
};

inline constexpr std::size_t default_nerve_cap = 20;

namespace detail {

/**
 * Level-wise enumeration by cardinality then lexicographic order. A candidate
 * is generated only when all of its codimension-one faces are present, so
 * supersets of empty intersections are never tested. Candidates of size
 * <= lp_limit are decided by an exact feasibility test; larger ones are
 * accepted on the strength of their subfaces.
 */
inline SimplicialComplex build_nerve(const ConvexFamily& family, std::size_t cap, std::size_t lp_limit)
{
    if (family.size() > cap)
        throw FamilyError("family has " + std::to_string(family.size()) + " bodies, cap is " + std::to_string(cap));
    std::set<Face> faces;
    std::vector<Face> level;
    for (VertexId v : family.labels()) {
        Face f{v};
        if (!polytope_is_empty(family.body(v))) {
            faces.insert(f);
            level.push_back(f);
        }
    }
    const std::set<VertexId> labels = family.labels();
    while (!level.empty()) {
        std::vector<Face> next;
        for (const Face& f : level) {
            for (auto it = labels.upper_bound(f.vertices().back()); it != labels.end(); ++it) {
                std::vector<VertexId> vs = f.vertices();
                vs.push_back(*it);
                Face cand(vs);
                bool closed = true;
                for (VertexId v : cand)
                    if (!faces.count(cand.without(v))) {
                        closed = false;
                        break;
                    }
                if (!closed)
                    continue;
                if (cand.size() <= lp_limit && polytope_is_empty(family.intersection(cand)))
                    continue;
                next.push_back(cand);
            }
        }
        for (const Face& f : next)
            faces.insert(f);
        level = std::move(next);
    }
    return SimplicialComplex::from_closed_faces(std::move(faces));
}

} // namespace detail

/// Every candidate face is decided by an exact feasibility test.
inline SimplicialComplex nerve_exhaustive(const ConvexFamily& family, std::size_t cap = default_nerve_cap)
{
    return detail::build_nerve(family, cap, SIZE_MAX);
}

/**
 * Faces with at most m+1 bodies are decided by exact LP; larger faces follow
 * from Helly's theorem in R^m (present iff all codimension-one faces are).
 */
inline SimplicialComplex nerve_helly(const ConvexFamily& family, std::size_t cap = default_nerve_cap)
{
    return detail::build_nerve(family, cap, family.ambient() + 1);
}

enum class NerveVerdict { equal, missing_face, extra_face };

inline const char* to_string(NerveVerdict v)
{
    switch (v) {
    case NerveVerdict::equal:
        return "equal";
    case NerveVerdict::missing_face:
        return "missing_face";
    case NerveVerdict::extra_face:
        return "extra_face";
    }
    return "?";
}

/**
 * missing_face: the claimed complex has the face, the nerve lacks it.
 * extra_face: the nerve has the face, the claimed complex lacks it.
 */
struct NerveMatch
{
    NerveVerdict verdict = NerveVerdict::equal;
    std::optional<Face> witness;

    bool equal() const { return verdict == NerveVerdict::equal; }
};

/// Compares nerve(F) with K under the identity labelling; the witness is the least differing face.
inline NerveMatch nerve_matches(const ConvexFamily& family, const SimplicialComplex& k,
                                std::size_t cap = default_nerve_cap)
{
    if (family.labels() != k.vertices())
        throw FamilyError("family labels differ from the vertex set of the complex");
    const SimplicialComplex nerve = nerve_helly(family, cap);
    auto a = nerve.faces().begin();
    auto b = k.faces().begin();
    while (a != nerve.faces().end() || b != k.faces().end()) {
        if (b == k.faces().end() || (a != nerve.faces().end() && *a < *b))
            return {NerveVerdict::extra_face, *a};
        if (a == nerve.faces().end() || *b < *a)
            return {NerveVerdict::missing_face, *b};
        ++a;
        ++b;
    }
    return {};
}

} // namespace nerverep
