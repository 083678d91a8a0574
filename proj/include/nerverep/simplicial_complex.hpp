#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nerverep {

using VertexId = std::uint32_t;

class ComplexError : public std::invalid_argument
{
public:
    explicit ComplexError(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * A simplex given by its vertex set, stored strictly ascending.
 *
 * Faces order by cardinality first and lexicographically second; every
 * enumeration in the library follows this order, so outputs are
 * deterministic.
 */
class Face
{
public:
    Face() = default;
    Face(std::initializer_list<VertexId> vs) : Face(std::vector<VertexId>(vs)) {}

    explicit Face(std::vector<VertexId> vs) : vertices_(std::move(vs))
    {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw ComplexError("duplicate vertex in face");
    }

    std::size_t size() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

    bool is_subset_of(const Face& other) const
    {
        return std::includes(other.begin(), other.end(), begin(), end());
    }

    bool intersects(const Face& other) const
    {
        auto a = begin();
        auto b = other.begin();
        while (a != end() && b != other.end()) {
            if (*a == *b)
                return true;
            if (*a < *b)
                ++a;
            else
                ++b;
        }
        return false;
    }

    Face without(VertexId v) const
    {
        Face out;
        out.vertices_.reserve(size());
        for (VertexId w : vertices_)
            if (w != v)
                out.vertices_.push_back(w);
        return out;
    }

    std::string str() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(vertices_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Face&, const Face&) = default;

    friend std::strong_ordering operator<=>(const Face& a, const Face& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    std::vector<VertexId> vertices_;
};

/// Unordered pair of faces, stored with first < second.
struct FacePair
{
    Face first;
    Face second;

    friend bool operator==(const FacePair&, const FacePair&) = default;
    friend auto operator<=>(const FacePair&, const FacePair&) = default;
};

/// Entry i counts the i-dimensional faces.
using FVector = std::vector<std::size_t>;

/// Calls visit(subset) for every nonempty subset of `face`, including `face` itself.
template <typename Visit>
void for_each_nonempty_subface(const Face& face, Visit&& visit)
{
    const std::size_t n = face.size();
    if (n >= 63)
        throw ComplexError("face too large for subset enumeration");
    std::vector<VertexId> buf;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        buf.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                buf.push_back(face[i]);
        visit(Face(buf));
    }
}

/**
 * Abstract simplicial complex: a vertex set and a downward-closed family of
 * nonempty faces containing every singleton.
 */
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Downward closure of the given facets.
    static SimplicialComplex from_facets(const std::vector<Face>& facets)
    {
        SimplicialComplex k;
        std::vector<Face> work;
        for (const Face& f : facets) {
            if (f.empty())
                throw ComplexError("empty facet");
            work.push_back(f);
        }
        while (!work.empty()) {
            Face f = std::move(work.back());
            work.pop_back();
            if (!k.faces_.insert(f).second)
                continue;
            if (f.size() == 1) {
                k.vertices_.insert(f[0]);
                continue;
            }
            for (VertexId v : f)
                work.push_back(f.without(v));
        }
        return k;
    }

    static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets)
    {
        std::vector<Face> fs;
        fs.reserve(facets.size());
        for (const auto& f : facets)
            fs.emplace_back(f);
        return from_facets(fs);
    }

    /// Adopt a face set that must already be downward closed.
    static SimplicialComplex from_closed_faces(std::set<Face> faces)
    {
        SimplicialComplex k;
        k.faces_ = std::move(faces);
        for (const Face& f : k.faces_) {
            if (f.empty())
                throw ComplexError("empty face in face set");
            if (f.size() == 1)
                k.vertices_.insert(f[0]);
        }
        if (!k.is_downward_closed())
            throw ComplexError("face set is not downward closed");
        return k;
    }

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::set<Face>& faces() const { return faces_; }
    bool contains(const Face& f) const { return faces_.count(f) != 0; }
    bool has_edge(VertexId a, VertexId b) const { return a != b && contains(Face{a, b}); }

    /// -1 for the void complex.
    int dimension() const { return faces_.empty() ? -1 : faces_.rbegin()->dimension(); }

    FVector f_vector() const
    {
        FVector f(static_cast<std::size_t>(dimension() + 1), 0);
        for (const Face& face : faces_)
            ++f[face.size() - 1];
        return f;
    }

    std::vector<Face> faces_of_dimension(int k) const
    {
        std::vector<Face> out;
        for (const Face& f : faces_)
            if (f.dimension() == k)
                out.push_back(f);
        return out;
    }

    /// Maximal faces in canonical order.
    std::vector<Face> facets() const
    {
        std::vector<Face> out;
        for (const Face& f : faces_) {
            bool maximal = true;
            for (VertexId v : vertices_) {
                if (f.contains(v))
                    continue;
                std::vector<VertexId> bigger(f.begin(), f.end());
                bigger.push_back(v);
                if (contains(Face(bigger))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal)
                out.push_back(f);
        }
        return out;
    }

    bool is_downward_closed() const
    {
        for (const Face& f : faces_) {
            if (f.size() == 1) {
                if (!vertices_.count(f[0]))
                    return false;
                continue;
            }
            for (VertexId v : f)
                if (!contains(f.without(v)))
                    return false;
        }
        for (VertexId v : vertices_)
            if (!contains(Face{v}))
                return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::set<VertexId> vertices_;
    std::set<Face> faces_;
};

inline SimplicialComplex complex_from_facets(const std::vector<std::vector<VertexId>>& facets)
{
    return SimplicialComplex::from_facets(facets);
}

/// k-skeleton of the n-simplex on vertices first_id, ..., first_id + n.
inline SimplicialComplex skeleton_complex(int n, int k, VertexId first_id = 0)
{
    if (n < 0 || k < 0)
        throw ComplexError("skeleton_complex: arguments must be nonnegative");
    if (k > n)
        throw ComplexError("skeleton_complex: k must not exceed n");
    std::set<Face> faces;
    std::vector<VertexId> all;
    for (int i = 0; i <= n; ++i)
        all.push_back(first_id + static_cast<VertexId>(i));
    // Enumerate (k+1)-subsets via a selector mask; closure fills in the rest.
    std::vector<Face> top;
    std::vector<bool> pick(all.size(), false);
    std::fill(pick.begin(), pick.begin() + (k + 1), true);
    do {
        std::vector<VertexId> f;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (pick[i])
                f.push_back(all[i]);
        top.emplace_back(f);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return SimplicialComplex::from_facets(top);
}

/// Visits every strictly decreasing chain top = c_0 ⊋ c_1 ⊋ ... of nonempty faces.
template <typename Visit>
void for_each_chain_from(const Face& top, Visit&& visit)
{
    std::vector<Face> chain{top};
    std::function<void()> extend = [&] {
        visit(static_cast<const std::vector<Face>&>(chain));
        const Face last = chain.back();
        if (last.size() <= 1)
            return;
        for_each_nonempty_subface(last, [&](const Face& sub) {
            if (sub.size() == last.size())
                return;
            chain.push_back(sub);
            extend();
            chain.pop_back();
        });
    };
    extend();
}

/**
 * Visits every maximal chain top ⊋ ... ⊋ {v}, i.e. every complete flag
 * below `top`. Flags arrive in lexicographic order of their face sequences.
 */
template <typename Visit>
void for_each_full_flag(const Face& top, Visit&& visit)
{
    std::vector<Face> chain{top};
    std::function<void()> extend = [&] {
        const Face last = chain.back();
        if (last.size() <= 1) {
            visit(static_cast<const std::vector<Face>&>(chain));
            return;
        }
        for (auto it = last.vertices().rbegin(); it != last.vertices().rend(); ++it) {
            chain.push_back(last.without(*it));
            extend();
            chain.pop_back();
        }
    };
    extend();
}

/**
 * Barycentric subdivision with its labelling. Vertex ids of the subdivision
 * are assigned to the faces of the original complex in canonical order.
 */
class SdComplex
{
public:
    SimplicialComplex complex;

    const std::map<VertexId, Face>& labels() const { return label_; }
    const Face& label_of(VertexId w) const
    {
        auto it = label_.find(w);
        if (it == label_.end())
            throw ComplexError("vertex " + std::to_string(w) + " is not a vertex of the subdivision");
        return it->second;
    }
    bool has_face_of_original(const Face& f) const { return vertex_of_.count(f) != 0; }
    VertexId vertex_of(const Face& f) const
    {
        auto it = vertex_of_.find(f);
        if (it == vertex_of_.end())
            throw ComplexError("face " + f.str() + " is not a face of the subdivided complex");
        return it->second;
    }

    /// Subdivision face for a chain of original faces.
    Face face_of_chain(const std::vector<Face>& chain) const
    {
        std::vector<VertexId> ids;
        ids.reserve(chain.size());
        for (const Face& f : chain)
            ids.push_back(vertex_of(f));
        return Face(ids);
    }

    /// Original faces of a subdivision face, largest first.
    std::vector<Face> chain_of_face(const Face& f) const
    {
        std::vector<Face> chain;
        for (VertexId w : f)
            chain.push_back(label_of(w));
        std::sort(chain.begin(), chain.end(), [](const Face& a, const Face& b) { return b < a; });
        return chain;
    }

    /// Faces of the original complex in canonical order.
    std::vector<Face> original_faces() const
    {
        std::vector<Face> out;
        for (const auto& [f, w] : vertex_of_)
            out.push_back(f);
        return out;
    }

    friend SdComplex barycentric_subdivision(const SimplicialComplex& k, VertexId first_id);

private:
    std::map<VertexId, Face> label_;
    std::map<Face, VertexId> vertex_of_;
};

inline SdComplex barycentric_subdivision(const SimplicialComplex& k, VertexId first_id = 1)
{
    SdComplex sd;
    VertexId next = first_id;
    for (const Face& f : k.faces()) {
        sd.label_.emplace(next, f);
        sd.vertex_of_.emplace(f, next);
        ++next;
    }
    std::set<Face> faces;
    for (const Face& top : k.faces())
        for_each_chain_from(top, [&](const std::vector<Face>& chain) { faces.insert(sd.face_of_chain(chain)); });
    sd.complex = SimplicialComplex::from_closed_faces(std::move(faces));
    return sd;
}

/**
 * Remote faces: vertex-disjoint and joined by no edge of `k`. A shared
 * vertex makes a pair non-remote.
 */
inline bool is_remote(const SimplicialComplex& k, const Face& alpha, const Face& beta)
{
    if (!k.contains(alpha))
        throw ComplexError("is_remote: " + alpha.str() + " is not a face");
    if (!k.contains(beta))
        throw ComplexError("is_remote: " + beta.str() + " is not a face");
    if (alpha.intersects(beta))
        return false;
    for (VertexId a : alpha)
        for (VertexId b : beta)
            if (k.has_edge(a, b))
                return false;
    return true;
}

/// Unordered pairs of vertex-disjoint d-faces, in canonical order.
inline std::vector<FacePair> disjoint_simplex_pairs(const SimplicialComplex& k, int d)
{
    std::vector<FacePair> out;
    const auto faces = k.faces_of_dimension(d);
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j)
            if (!faces[i].intersects(faces[j]))
                out.push_back({faces[i], faces[j]});
    return out;
}

/// sd α as a subcomplex of sd K: faces whose labels all lie inside α.
inline std::set<Face> subdivided_subcomplex(const SdComplex& sd, const Face& alpha)
{
    if (!sd.has_face_of_original(alpha))
        throw ComplexError("subdivided_subcomplex: " + alpha.str() + " is not a face");
    std::set<Face> out;
    for_each_nonempty_subface(alpha, [&](const Face& top) {
        for_each_chain_from(top, [&](const std::vector<Face>& chain) { out.insert(sd.face_of_chain(chain)); });
    });
    return out;
}

struct RemotenessViolation
{
    FacePair source;  ///< disjoint d-faces γ, δ of L
    Face alpha;       ///< face of sd γ
    Face beta;        ///< face of sd δ
};

struct RemotenessReport
{
    std::size_t source_pairs = 0;
    std::size_t face_pairs = 0;
    std::vector<RemotenessViolation> violations;

    bool holds() const { return violations.empty(); }
};

/**
 * For K = sd L, checks that every face of sd γ is remote in K from every
 * face of sd δ, over all disjoint d-faces γ, δ of L.
 */
inline RemotenessReport remoteness_lemma_check(const SimplicialComplex& l, int d)
{
    RemotenessReport report;
    const SdComplex sd = barycentric_subdivision(l);
    std::map<Face, std::set<Face>> cache;
    auto sub = [&](const Face& f) -> const std::set<Face>& {
        auto it = cache.find(f);
        if (it == cache.end())
            it = cache.emplace(f, subdivided_subcomplex(sd, f)).first;
        return it->second;
    };
    for (const FacePair& p : disjoint_simplex_pairs(l, d)) {
        ++report.source_pairs;
        const auto& left = sub(p.first);
        const auto& right = sub(p.second);
        for (const Face& a : left)
            for (const Face& b : right) {
                ++report.face_pairs;
                if (!is_remote(sd.complex, a, b))
                    report.violations.push_back({p, a, b});
            }
    }
    return report;
}

} // namespace nerverep
