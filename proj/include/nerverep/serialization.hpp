#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nerve.hpp"
#include "rational.hpp"
#include "simplicial_complex.hpp"

namespace nerverep {

// Keys keep insertion order so emitted documents are stable and readable.
using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& q)
{
    return format_rational(q);
}

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    throw ParseError("expected a rational (\"p/q\" or integer), got " + j.dump());
}

inline Json point_to_json(const Point& p)
{
    Json out = Json::array();
    for (const auto& q : p)
        out.push_back(rational_to_json(q));
    return out;
}

inline Point point_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected a coordinate array, got " + j.dump());
    Point p;
    for (const auto& v : j)
        p.push_back(rational_from_json(v));
    return p;
}

inline Json face_to_json(const Face& f)
{
    Json out = Json::array();
    for (VertexId v : f)
        out.push_back(v);
    return out;
}

inline VertexId vertex_from_json(const Json& j)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw ParseError("vertex ids are nonnegative integers, got " + j.dump());
    const auto v = j.get<std::uint64_t>();
    if (v > UINT32_MAX)
        throw ParseError("vertex id out of range: " + j.dump());
    return static_cast<VertexId>(v);
}

inline Face face_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("expected a vertex array, got " + j.dump());
    std::vector<VertexId> vs;
    for (const auto& v : j)
        vs.push_back(vertex_from_json(v));
    try {
        return Face(vs);
    } catch (const ComplexError& e) {
        throw ParseError(std::string(e.what()) + " in " + j.dump());
    }
}

/// A complex plus an optional label table (subdivision vertex -> original face).
struct ComplexFile
{
    SimplicialComplex complex;
    std::map<VertexId, Face> labels;

    friend bool operator==(const ComplexFile&, const ComplexFile&) = default;
};

inline Json complex_to_json(const SimplicialComplex& k)
{
    Json facets = Json::array();
    for (const Face& f : k.facets())
        facets.push_back(face_to_json(f));
    return Json{{"facets", facets}};
}

inline Json complex_file_to_json(const ComplexFile& file)
{
    Json out = complex_to_json(file.complex);
    if (!file.labels.empty()) {
        Json labels = Json::array();
        for (const auto& [w, f] : file.labels)
            labels.push_back(Json{{"vertex", w}, {"face", face_to_json(f)}});
        out["labels"] = labels;
    }
    return out;
}

inline ComplexFile complex_file_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("facets"))
        throw ParseError("complex document needs a \"facets\" array");
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
        Face face = face_from_json(f);
        if (face.empty())
            throw ParseError("empty facet");
        facets.push_back(std::move(face));
    }
    ComplexFile file;
    file.complex = SimplicialComplex::from_facets(facets);
    if (j.contains("labels")) {
        for (const auto& entry : j.at("labels")) {
            const VertexId w = vertex_from_json(entry.at("vertex"));
            if (!file.complex.vertices().count(w))
                throw ParseError("label for unknown vertex " + std::to_string(w));
            if (!file.labels.emplace(w, face_from_json(entry.at("face"))).second)
                throw ParseError("duplicate label for vertex " + std::to_string(w));
        }
    }
    return file;
}

inline SimplicialComplex complex_from_json(const Json& j)
{
    return complex_file_from_json(j).complex;
}

inline Json polytope_to_json(const HPolytope& p)
{
    Json a = Json::array();
    for (const auto& row : p.a())
        a.push_back(point_to_json(row));
    return Json{{"A", a}, {"b", point_to_json(p.b())}};
}

inline Json family_to_json(const ConvexFamily& family)
{
    Json bodies = Json::array();
    for (const auto& b : family.bodies())
        bodies.push_back(Json{{"label", b.label}, {"hpoly", polytope_to_json(b.body)}});
    return Json{{"ambient", family.ambient()}, {"bodies", bodies}};
}

/**
 * Bodies are {"label": v, "box": {"lo": [...], "hi": [...]}} or
 * {"label": v, "hpoly": {"A": [[...], ...], "b": [...]}}.
 */
inline ConvexFamily family_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("ambient") || !j.contains("bodies"))
        throw ParseError("family document needs \"ambient\" and \"bodies\"");
    if (!j.at("ambient").is_number_unsigned() || j.at("ambient").get<std::size_t>() == 0)
        throw ParseError("\"ambient\" must be a positive integer");
    const std::size_t m = j.at("ambient").get<std::size_t>();
    std::vector<LabeledBody> bodies;
    for (const auto& b : j.at("bodies")) {
        const VertexId label = vertex_from_json(b.at("label"));
        const std::string where = "body " + std::to_string(label) + ": ";
        if (b.contains("box")) {
            Point lo = point_from_json(b.at("box").at("lo"));
            Point hi = point_from_json(b.at("box").at("hi"));
            if (lo.size() != m || hi.size() != m)
                throw ParseError(where + "box corners must have " + std::to_string(m) + " coordinates");
            bodies.push_back({label, HPolytope::box(lo, hi)});
        } else if (b.contains("hpoly")) {
            std::vector<std::vector<Rational>> a;
            for (const auto& row : b.at("hpoly").at("A")) {
                a.push_back(point_from_json(row));
                if (a.back().size() != m)
                    throw ParseError(where + "constraint rows must have " + std::to_string(m) + " entries");
            }
            Point rhs = point_from_json(b.at("hpoly").at("b"));
            if (rhs.size() != a.size())
                throw ParseError(where + "A and b have different row counts");
            bodies.push_back({label, HPolytope(m, std::move(a), std::move(rhs))});
        } else {
            throw ParseError(where + "expected \"box\" or \"hpoly\"");
        }
    }
    try {
        return ConvexFamily(m, std::move(bodies));
    } catch (const FamilyError& e) {
        throw ParseError(e.what());
    }
}

inline Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

inline std::string dump_json(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace nerverep
