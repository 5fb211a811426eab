#pragma once

#include "illum/eps.hpp"
#include "illum/polygon.hpp"
#include "illum/quad.hpp"
#include "illum/regular.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace illum {

using nlohmann::json;

struct parse_error : invalid_input {
    using invalid_input::invalid_input;
};

inline Rat json_to_rat(const json& j, const char* where) {
    if (!j.is_string()) throw parse_error(std::string(where) + ": rational must be a string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const invalid_input&) {
        throw parse_error(std::string(where) + ": bad rational '" + j.get<std::string>() + "'");
    }
}

inline json rat_to_json(const Rat& r) { return to_string(r); }

// Quadratic values serialize as plain rational strings when rational,
// otherwise as the tagged object {a, b, d} meaning a + b*sqrt(d).
inline json quad_to_json(const Quad& q) {
    if (q.is_rational()) return rat_to_json(q.rational());
    return json{{"a", rat_to_json(q.a())}, {"b", rat_to_json(q.b())}, {"d", rat_to_json(q.d())}};
}

inline Quad json_to_quad(const json& j, const char* where) {
    if (j.is_string()) return Quad(json_to_rat(j, where));
    if (!j.is_object()) throw parse_error(std::string(where) + ": expected rational or {a,b,d}");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "a" && it.key() != "b" && it.key() != "d")
            throw parse_error(std::string(where) + ": unknown field '" + it.key() + "'");
    if (!j.contains("a") || !j.contains("b") || !j.contains("d"))
        throw parse_error(std::string(where) + ": algebraic value needs a, b, d");
    return Quad(json_to_rat(j["a"], where), json_to_rat(j["b"], where), json_to_rat(j["d"], where));
}

inline constexpr const char* kSchemaVersion = "1";

struct ShapeDoc {
    enum class Kind { Polygon, Disc, Box, DoubleCone, RegularNgon };

    Kind kind = Kind::Polygon;
    std::vector<V2<Rat>> vertices;  // polygon
    Rat radius;                     // disc (centered at the origin)
    std::size_t n = 0;              // box / doublecone / regular_ngon
    std::vector<Rat> half_widths;   // box
    Rat circumradius;               // regular_ngon
};

namespace detail {

inline void require_fields(const json& j, std::initializer_list<const char*> allowed,
                           std::initializer_list<const char*> required) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* f : allowed)
            if (it.key() == f) ok = true;
        if (!ok) throw parse_error("unknown field '" + it.key() + "'");
    }
    for (const char* f : required)
        if (!j.contains(f)) throw parse_error(std::string("missing field '") + f + "'");
}

inline std::size_t json_to_count(const json& j, const char* where) {
    if (!j.is_number_unsigned()) throw parse_error(std::string(where) + ": expected a positive integer");
    return j.get<std::size_t>();
}

}  // namespace detail

inline ShapeDoc parse_shape(const json& j) {
    if (!j.is_object()) throw parse_error("shape must be an object");
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        throw parse_error("unsupported schema_version");
    if (!j.contains("kind")) throw parse_error("missing field 'kind'");
    std::string kind = j["kind"].get<std::string>();
    ShapeDoc s;
    if (kind == "polygon") {
        detail::require_fields(j, {"schema_version", "kind", "vertices"}, {"vertices"});
        s.kind = ShapeDoc::Kind::Polygon;
        if (!j["vertices"].is_array() || j["vertices"].size() < 3)
            throw parse_error("polygon needs at least 3 vertices");
        for (const auto& v : j["vertices"]) {
            if (!v.is_array() || v.size() != 2) throw parse_error("vertex must be [x, y]");
            s.vertices.push_back({json_to_rat(v[0], "vertex"), json_to_rat(v[1], "vertex")});
        }
    } else if (kind == "disc") {
        detail::require_fields(j, {"schema_version", "kind", "radius"}, {"radius"});
        s.kind = ShapeDoc::Kind::Disc;
        s.radius = json_to_rat(j["radius"], "radius");
        if (s.radius <= 0) throw parse_error("radius must be positive");
    } else if (kind == "box") {
        detail::require_fields(j, {"schema_version", "kind", "n", "half_widths"},
                               {"n", "half_widths"});
        s.kind = ShapeDoc::Kind::Box;
        s.n = detail::json_to_count(j["n"], "n");
        for (const auto& w : j["half_widths"]) s.half_widths.push_back(json_to_rat(w, "half_widths"));
        if (s.n < 2 || s.half_widths.size() != s.n) throw parse_error("bad box dimensions");
    } else if (kind == "doublecone") {
        detail::require_fields(j, {"schema_version", "kind", "n"}, {"n"});
        s.kind = ShapeDoc::Kind::DoubleCone;
        s.n = detail::json_to_count(j["n"], "n");
        if (s.n < 2) throw parse_error("bad double cone dimension");
    } else if (kind == "regular_ngon") {
        detail::require_fields(j, {"schema_version", "kind", "n", "circumradius"},
                               {"n", "circumradius"});
        s.kind = ShapeDoc::Kind::RegularNgon;
        s.n = detail::json_to_count(j["n"], "n");
        if (s.n < 3) throw parse_error("regular polygon needs n >= 3");
        s.circumradius = json_to_rat(j["circumradius"], "circumradius");
        if (s.circumradius <= 0) throw parse_error("circumradius must be positive");
    } else {
        throw parse_error("unknown shape kind '" + kind + "'");
    }
    return s;
}

inline ShapeDoc parse_shape(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return parse_shape(j);
}

inline json serialize_shape(const ShapeDoc& s) {
    json j{{"schema_version", kSchemaVersion}};
    switch (s.kind) {
        case ShapeDoc::Kind::Polygon: {
            j["kind"] = "polygon";
            json vs = json::array();
            for (const auto& v : s.vertices) vs.push_back({rat_to_json(v.x), rat_to_json(v.y)});
            j["vertices"] = vs;
            break;
        }
        case ShapeDoc::Kind::Disc:
            j["kind"] = "disc";
            j["radius"] = rat_to_json(s.radius);
            break;
        case ShapeDoc::Kind::Box: {
            j["kind"] = "box";
            j["n"] = s.n;
            json ws = json::array();
            for (const auto& w : s.half_widths) ws.push_back(rat_to_json(w));
            j["half_widths"] = ws;
            break;
        }
        case ShapeDoc::Kind::DoubleCone:
            j["kind"] = "doublecone";
            j["n"] = s.n;
            break;
        case ShapeDoc::Kind::RegularNgon:
            j["kind"] = "regular_ngon";
            j["n"] = s.n;
            j["circumradius"] = rat_to_json(s.circumradius);
            break;
    }
    return j;
}

// Planar polygon realization of a shape, in whichever scalar type can hold
// it exactly. Shapes with no exact planar polygon form (disc, nD bodies,
// regular n-gons outside {3, 4, 6}) yield neither.
struct PolyBody {
    std::optional<ConvexPolygon<Rat>> rat;
    std::optional<ConvexPolygon<Quad>> quad;

    bool available() const { return rat || quad; }
};

inline PolyBody materialize_polygon(const ShapeDoc& s) {
    PolyBody out;
    switch (s.kind) {
        case ShapeDoc::Kind::Polygon:
            out.rat = make_polygon(s.vertices);
            break;
        case ShapeDoc::Kind::Box:
            if (s.n == 2) {
                const Rat &a = s.half_widths[0], &b = s.half_widths[1];
                out.rat = make_polygon<Rat>({{-a, -b}, {a, -b}, {a, b}, {-a, b}});
            }
            break;
        case ShapeDoc::Kind::DoubleCone:
            if (s.n == 2)
                out.rat = make_polygon<Rat>(
                    {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
            break;
        case ShapeDoc::Kind::RegularNgon:
            if (s.n == 4)
                out.rat = regular_square(s.circumradius);
            else if (s.n == 3)
                out.quad = regular_triangle(s.circumradius);
            else if (s.n == 6)
                out.quad = regular_hexagon(s.circumradius);
            break;
        case ShapeDoc::Kind::Disc:
            break;
    }
    return out;
}

struct CertificateDoc {
    ShapeDoc shape;
    EpsSpec eps = EpsSpec::exact(Rat(1));
    Mode mode = Mode::Closed;
    std::string verdict;                // "finite" or "infinite"
    std::vector<V2<Quad>> translations; // finite
    std::optional<V2<Rat>> witness;     // infinite
};

inline CertificateDoc parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("certificate must be an object");
    detail::require_fields(
        j, {"schema_version", "shape", "eps", "mode", "verdict", "translations", "witness"},
        {"shape", "eps", "mode", "verdict"});
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        throw parse_error("unsupported schema_version");
    CertificateDoc c;
    c.shape = parse_shape(j["shape"]);
    const json& e = j["eps"];
    detail::require_fields(e, {"kind", "value"}, {"kind", "value"});
    std::string ek = e["kind"].get<std::string>();
    Rat ev = json_to_rat(e["value"], "eps.value");
    if (ek == "exact")
        c.eps = EpsSpec::exact(ev);
    else if (ek == "radius_multiple")
        c.eps = EpsSpec::radius_multiple(ev);
    else
        throw parse_error("eps.kind must be 'exact' or 'radius_multiple'");
    std::string m = j["mode"].get<std::string>();
    if (m == "closed")
        c.mode = Mode::Closed;
    else if (m == "open")
        c.mode = Mode::Interior;
    else
        throw parse_error("mode must be 'closed' or 'open'");
    c.verdict = j["verdict"].get<std::string>();
    if (c.verdict == "finite") {
        if (!j.contains("translations")) throw parse_error("finite certificate needs translations");
        for (const auto& t : j["translations"]) {
            if (!t.is_array() || t.size() != 2) throw parse_error("translation must be [x, y]");
            c.translations.push_back(
                {json_to_quad(t[0], "translation"), json_to_quad(t[1], "translation")});
        }
        if (c.translations.empty()) throw parse_error("finite certificate needs translations");
    } else if (c.verdict == "infinite") {
        if (!j.contains("witness")) throw parse_error("infinite certificate needs a witness");
        const json& w = j["witness"];
        if (!w.is_array() || w.size() != 2) throw parse_error("witness must be [x, y]");
        c.witness = V2<Rat>{json_to_rat(w[0], "witness"), json_to_rat(w[1], "witness")};
    } else {
        throw parse_error("verdict must be 'finite' or 'infinite'");
    }
    return c;
}

inline json serialize_certificate(const CertificateDoc& c) {
    json j{{"schema_version", kSchemaVersion}};
    j["shape"] = serialize_shape(c.shape);
    j["eps"] = {{"kind", c.eps.kind == EpsSpec::Kind::ExactRational ? "exact" : "radius_multiple"},
                {"value", rat_to_json(c.eps.value)}};
    j["mode"] = c.mode == Mode::Closed ? "closed" : "open";
    j["verdict"] = c.verdict;
    if (c.verdict == "finite") {
        json ts = json::array();
        for (const auto& t : c.translations) ts.push_back({quad_to_json(t.x), quad_to_json(t.y)});
        j["translations"] = ts;
    } else if (c.witness) {
        j["witness"] = {rat_to_json(c.witness->x), rat_to_json(c.witness->y)};
    }
    return j;
}

}  // namespace illum
