#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "nerve.hpp"
#include "serialization.hpp"
#include "vk_obstruction.hpp"
#include "wegner_map.hpp"

namespace nerverep {

/// Process exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 1;
inline constexpr int mismatch = 2;
inline constexpr int contradiction = 3;
inline constexpr int genericity = 4;
inline constexpr int consistency = 5;
} // namespace exit_code

/// nerve(family) and the claimed complex differ at `match.witness`.
struct NerveMismatchCertificate
{
    ConvexFamily family;
    SimplicialComplex claimed;
    NerveMatch match;
};

/// A witness point escapes one of the bodies it must lie in.
struct WitnessViolationCertificate
{
    ConvexFamily family;
    WitnessViolation violation;
    std::vector<Face> chain;  ///< complete flag through the face, when known
};

/// Images of a remote pair meet.
struct LemmaViolationCertificate
{
    SimplicialComplex nerve;
    LemmaViolation violation;
};

/// Images of two disjoint d-simplices meet.
struct VkfCertificate
{
    Face gamma;
    Face delta;
    PieceOverlap overlap;
    std::optional<Placement> placement;  ///< straight-line placement, when the pieces are placed simplices
};

struct ObstructionReport
{
    SimplicialComplex complex;
    int d = 1;
    Placement placement;
    ObstructionCertificate certificate;
};

/// A run that should be impossible on valid input; always a library fault.
struct ConsistencyFailure
{
    std::string detail;
};

using Certificate = std::variant<NerveMismatchCertificate, WitnessViolationCertificate, LemmaViolationCertificate,
                                 VkfCertificate, ObstructionReport, ConsistencyFailure>;

inline const char* kind_name(const Certificate& c)
{
    static constexpr const char* names[] = {"NERVE_MISMATCH", "WITNESS_VIOLATION",  "LEMMA_VIOLATION",
                                            "VKF_CERTIFICATE", "OBSTRUCTION_REPORT", "CONSISTENCY_FAILURE"};
    return names[c.index()];
}

inline int exit_code_for(const Certificate& c)
{
    switch (c.index()) {
    case 0:
    case 1:
    case 2:
        return exit_code::mismatch;
    case 3:
        return exit_code::contradiction;
    case 4:
        return std::get<ObstructionReport>(c).certificate.vanishes ? exit_code::ok : exit_code::contradiction;
    default:
        return exit_code::consistency;
    }
}

inline Json pair_to_json(const FacePair& p)
{
    return Json::array({face_to_json(p.first), face_to_json(p.second)});
}

inline FacePair pair_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected a pair of faces, got " + j.dump());
    return {face_from_json(j[0]), face_from_json(j[1])};
}

inline Json piece_to_json(const ImagePiece& piece)
{
    Json chain = Json::array();
    for (const Face& f : piece.chain)
        chain.push_back(face_to_json(f));
    Json pts = Json::array();
    for (const Point& p : piece.points)
        pts.push_back(point_to_json(p));
    return Json{{"chain", chain}, {"points", pts}};
}

inline ImagePiece piece_from_json(const Json& j)
{
    ImagePiece piece;
    for (const auto& f : j.at("chain"))
        piece.chain.push_back(face_from_json(f));
    for (const auto& p : j.at("points"))
        piece.points.push_back(point_from_json(p));
    if (!piece.chain.empty() && piece.chain.size() != piece.points.size())
        throw ParseError("piece chain and point list differ in length");
    return piece;
}

inline void overlap_to_json(Json& out, const PieceOverlap& o)
{
    out["piece_a"] = piece_to_json(o.piece_a);
    out["piece_b"] = piece_to_json(o.piece_b);
    out["lambda"] = point_to_json(o.hit.lambda);
    out["mu"] = point_to_json(o.hit.mu);
    out["point"] = point_to_json(o.hit.point);
}

inline PieceOverlap overlap_from_json(const Json& j)
{
    PieceOverlap o;
    o.piece_a = piece_from_json(j.at("piece_a"));
    o.piece_b = piece_from_json(j.at("piece_b"));
    o.hit.lambda = point_from_json(j.at("lambda"));
    o.hit.mu = point_from_json(j.at("mu"));
    o.hit.point = point_from_json(j.at("point"));
    return o;
}

inline Json placement_to_json(const Placement& pl)
{
    Json out{{"ambient", pl.ambient}};
    if (!pl.params.empty())
        out["params"] = point_to_json(pl.params);
    Json pts = Json::array();
    for (const auto& [v, p] : pl.points)
        pts.push_back(Json{{"vertex", v}, {"point", point_to_json(p)}});
    out["points"] = pts;
    return out;
}

inline Placement placement_from_json(const Json& j)
{
    Placement pl;
    pl.ambient = j.at("ambient").get<std::size_t>();
    if (j.contains("params"))
        pl.params = point_from_json(j.at("params"));
    for (const auto& e : j.at("points")) {
        Point p = point_from_json(e.at("point"));
        if (p.size() != pl.ambient)
            throw ParseError("placement point has wrong dimension");
        pl.points.emplace(vertex_from_json(e.at("vertex")), std::move(p));
    }
    return pl;
}

inline Json certificate_to_json(const Certificate& cert)
{
    Json out{{"kind", kind_name(cert)}};
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, NerveMismatchCertificate>) {
                out["direction"] = to_string(c.match.verdict);
                out["witness"] = face_to_json(*c.match.witness);
                out["family"] = family_to_json(c.family);
                out["complex"] = complex_to_json(c.claimed);
            } else if constexpr (std::is_same_v<T, WitnessViolationCertificate>) {
                out["face"] = face_to_json(c.violation.face);
                out["point"] = point_to_json(c.violation.point);
                out["body"] = c.violation.body;
                out["row"] = c.violation.row;
                Json chain = Json::array();
                for (const Face& f : c.chain)
                    chain.push_back(face_to_json(f));
                out["chain"] = chain;
                out["family"] = family_to_json(c.family);
            } else if constexpr (std::is_same_v<T, LemmaViolationCertificate>) {
                out["alpha"] = face_to_json(c.violation.alpha);
                out["beta"] = face_to_json(c.violation.beta);
                overlap_to_json(out, c.violation.overlap);
                out["nerve"] = complex_to_json(c.nerve);
            } else if constexpr (std::is_same_v<T, VkfCertificate>) {
                out["gamma"] = face_to_json(c.gamma);
                out["delta"] = face_to_json(c.delta);
                overlap_to_json(out, c.overlap);
                if (c.placement)
                    out["placement"] = placement_to_json(*c.placement);
            } else if constexpr (std::is_same_v<T, ObstructionReport>) {
                const auto& oc = c.certificate;
                out["verdict"] = oc.vanishes ? "vanishes" : "nonvanishing";
                out["d"] = c.d;
                out["complex"] = complex_to_json(c.complex);
                out["placement"] = placement_to_json(c.placement);
                out["pairs"] = oc.cocycle.index.size();
                out["generators"] = oc.coboundary.generators.size();
                out["rank"] = oc.solution.rank;
                Json crossing = Json::array();
                for (std::size_t i = 0; i < oc.cocycle.index.size(); ++i)
                    if (oc.cocycle.bits[i])
                        crossing.push_back(pair_to_json(oc.cocycle.index[i]));
                out["cocycle"] = crossing;
                if (oc.vanishes) {
                    Json gens = Json::array();
                    for (const auto& g : oc.cobounding_generators())
                        gens.push_back(Json::array({face_to_json(g.rho), face_to_json(g.tau)}));
                    out["cobounding_generators"] = gens;
                } else {
                    Json wit = Json::array();
                    for (const auto& p : oc.witness_pairs())
                        wit.push_back(pair_to_json(p));
                    out["kernel_witness"] = wit;
                }
            } else {
                out["detail"] = c.detail;
            }
        },
        cert);
    return out;
}

struct RecheckResult
{
    bool ok = false;
    std::string message;
};

namespace detail {

inline std::optional<std::string> check_convex_combination(const std::vector<Point>& pts,
                                                           const std::vector<Rational>& coeffs, const Point& target)
{
    if (pts.size() != coeffs.size())
        return "coefficient count differs from point count";
    Rational sum = 0;
    Point acc(target.size(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (coeffs[i].sign() < 0)
            return "negative convex coefficient";
        if (pts[i].size() != target.size())
            return "point dimension mismatch";
        sum += coeffs[i];
        for (std::size_t k = 0; k < target.size(); ++k)
            acc[k] += coeffs[i] * pts[i][k];
    }
    if (sum != 1)
        return "convex coefficients do not sum to 1";
    if (acc != target)
        return "convex combination does not reproduce the intersection point";
    return std::nullopt;
}

inline std::optional<std::string> check_chain_in(const SimplicialComplex& k, const std::vector<Face>& chain,
                                                 const Face& top)
{
    if (chain.empty())
        return "empty chain";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!k.contains(chain[i]))
            return chain[i].str() + " is not a face of the nerve";
        if (!chain[i].is_subset_of(top))
            return chain[i].str() + " is not inside " + top.str();
        if (i > 0 && !(chain[i].is_subset_of(chain[i - 1]) && chain[i].size() < chain[i - 1].size()))
            return "chain is not strictly decreasing";
    }
    return std::nullopt;
}

inline RecheckResult recheck_obstruction(const Json& j)
{
    const SimplicialComplex k = complex_from_json(j.at("complex"));
    const int d = j.at("d").get<int>();
    Placement pl = placement_from_json(j.at("placement"));
    if (!pl.params.empty()) {
        const Placement expect = moment_curve_placement(k, d, pl.params);
        if (!(expect.points == pl.points))
            return {false, "placement points are not the moment-curve points of the stated parameters"};
    }
    const Cochain2 cocycle = intersection_cocycle(k, d, pl);
    std::set<FacePair> stated;
    for (const auto& p : j.at("cocycle"))
        stated.insert(pair_from_json(p));
    std::set<FacePair> actual;
    for (std::size_t i = 0; i < cocycle.index.size(); ++i)
        if (cocycle.bits[i])
            actual.insert(cocycle.index[i]);
    if (stated != actual)
        return {false, "stated crossing cocycle differs from the recomputed one"};
    const CoboundaryMatrix cob = coboundary_matrix(k, d);
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "vanishes") {
        BitVector c(cob.matrix.rows());
        for (const auto& g : j.at("cobounding_generators")) {
            const CoboundaryGenerator gen{face_from_json(g.at(0)), face_from_json(g.at(1))};
            auto it = std::find(cob.generators.begin(), cob.generators.end(), gen);
            if (it == cob.generators.end())
                return {false, "listed generator is not a coboundary generator"};
            c.flip(static_cast<std::size_t>(it - cob.generators.begin()));
        }
        if (cob.matrix.left_multiply(c) != cocycle.bits)
            return {false, "generators do not cobound the cocycle"};
        return {true, "cocycle equals the sum of the listed coboundaries"};
    }
    if (verdict == "nonvanishing") {
        std::map<FacePair, std::size_t> column;
        for (std::size_t i = 0; i < cob.index.size(); ++i)
            column.emplace(cob.index[i], i);
        BitVector y(cob.index.size());
        for (const auto& p : j.at("kernel_witness")) {
            auto it = column.find(pair_from_json(p));
            if (it == column.end())
                return {false, "kernel witness names an unknown pair"};
            y.flip(it->second);
        }
        if (cob.matrix.right_multiply(y).any())
            return {false, "kernel witness is not orthogonal to every coboundary"};
        if (!gf2_dot(cocycle.bits, y))
            return {false, "kernel witness pairs to 0 with the cocycle"};
        return {true, "kernel witness separates the cocycle from all coboundaries"};
    }
    return {false, "unknown verdict '" + verdict + "'"};
}

inline RecheckResult recheck_overlap(const PieceOverlap& o)
{
    if (auto err = check_convex_combination(o.piece_a.points, o.hit.lambda, o.hit.point))
        return {false, "piece_a: " + *err};
    if (auto err = check_convex_combination(o.piece_b.points, o.hit.mu, o.hit.point))
        return {false, "piece_b: " + *err};
    if (!hulls_intersect(o.piece_a.points, o.piece_b.points))
        return {false, "hull test finds the pieces disjoint"};
    return {true, ""};
}

} // namespace detail

/// Re-runs the exact predicates behind a serialized certificate.
inline RecheckResult recheck(const Json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "NERVE_MISMATCH") {
            const ConvexFamily family = family_from_json(j.at("family"));
            const SimplicialComplex k = complex_from_json(j.at("complex"));
            const Face w = face_from_json(j.at("witness"));
            const std::string dir = j.at("direction").get<std::string>();
            for (VertexId v : w)
                if (!family.labels().count(v))
                    return {false, "witness names a vertex with no body"};
            const bool meets = !polytope_is_empty(family.intersection(w));
            const bool claimed = k.contains(w);
            if (dir == "extra_face" && meets && !claimed)
                return {true, "bodies " + w.str() + " meet but the complex lacks the face"};
            if (dir == "missing_face" && !meets && claimed)
                return {true, "complex has " + w.str() + " but the bodies do not meet"};
            return {false, "witness does not separate nerve and complex in the stated direction"};
        }
        if (kind == "WITNESS_VIOLATION") {
            const ConvexFamily family = family_from_json(j.at("family"));
            const Face f = face_from_json(j.at("face"));
            const Point p = point_from_json(j.at("point"));
            const VertexId body = vertex_from_json(j.at("body"));
            const std::size_t row = j.at("row").get<std::size_t>();
            if (!f.contains(body))
                return {false, "body is not a member of the face"};
            const HPolytope& poly = family.body(body);
            if (row >= poly.num_rows() || p.size() != poly.ambient())
                return {false, "row or point dimension out of range"};
            if (dot(poly.a()[row], p) <= poly.b()[row])
                return {false, "point satisfies the stated constraint row"};
            return {true, "witness for " + f.str() + " violates row " + std::to_string(row) + " of body " +
                              std::to_string(body)};
        }
        if (kind == "LEMMA_VIOLATION") {
            const SimplicialComplex k = complex_from_json(j.at("nerve"));
            const Face a = face_from_json(j.at("alpha"));
            const Face b = face_from_json(j.at("beta"));
            if (!k.contains(a) || !k.contains(b) || !is_remote(k, a, b))
                return {false, "alpha and beta are not a remote pair of the nerve"};
            const PieceOverlap o = overlap_from_json(j);
            if (auto err = detail::check_chain_in(k, o.piece_a.chain, a))
                return {false, "piece_a: " + *err};
            if (auto err = detail::check_chain_in(k, o.piece_b.chain, b))
                return {false, "piece_b: " + *err};
            auto r = detail::recheck_overlap(o);
            if (!r.ok)
                return r;
            return {true, "images of remote faces " + a.str() + " and " + b.str() + " meet at " +
                              format_point(o.hit.point)};
        }
        if (kind == "VKF_CERTIFICATE") {
            const Face g = face_from_json(j.at("gamma"));
            const Face d = face_from_json(j.at("delta"));
            if (g.intersects(d) || g.size() != d.size())
                return {false, "gamma and delta are not disjoint simplices of equal dimension"};
            const PieceOverlap o = overlap_from_json(j);
            if (j.contains("placement")) {
                const Placement pl = placement_from_json(j.at("placement"));
                if (o.piece_a.points != pl.points_of(g) || o.piece_b.points != pl.points_of(d))
                    return {false, "pieces are not the placed simplices"};
                if (generic_crossing_parity(o.piece_a.points, o.piece_b.points) != 1)
                    return {false, "placed simplices do not cross properly"};
            }
            auto r = detail::recheck_overlap(o);
            if (!r.ok)
                return r;
            return {true, "images of disjoint simplices " + g.str() + " and " + d.str() + " meet at " +
                              format_point(o.hit.point)};
        }
        if (kind == "OBSTRUCTION_REPORT")
            return detail::recheck_obstruction(j);
        if (kind == "CONSISTENCY_FAILURE")
            return {false, "consistency failures carry no checkable claim"};
        return {false, "unknown certificate kind '" + kind + "'"};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace nerverep
