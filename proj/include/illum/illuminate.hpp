#pragma once

#include "illum/tangent.hpp"

namespace illum {

// x + eps*l reaches int K for small eps: true for interior x, otherwise an
// open tangent-cone test at the boundary.
template <class S>
bool illuminates(const V2<S>& l, const V2<S>& x, const ConvexPolygon<S>& K) {
    if (l.is_zero()) throw invalid_input("zero illumination direction");
    if (!contains(K, x, Mode::Closed)) throw invalid_input("point outside the body");
    if (contains(K, x, Mode::Interior)) return true;
    return arc_contains(tangent_cone_arc(K, x, Mode::Interior), Dir(lift(l)));
}

// x + eps*l stays in K for small eps: closed tangent cone.
template <class S>
bool t_illuminates(const V2<S>& l, const V2<S>& x, const ConvexPolygon<S>& K) {
    if (l.is_zero()) throw invalid_input("zero illumination direction");
    if (!contains(K, x, Mode::Closed)) throw invalid_input("point outside the body");
    if (contains(K, x, Mode::Interior)) return true;
    return arc_contains(tangent_cone_arc(K, x, Mode::Closed), Dir(lift(l)));
}

template <class S>
bool c_illuminates(const V2<S>& y, const V2<S>& x, const ConvexPolygon<S>& K) {
    if (contains(K, y, Mode::Closed)) throw invalid_input("light point must be outside the body");
    return illuminates(x - y, x, K);
}

template <class S>
bool tc_illuminates(const V2<S>& y, const V2<S>& x, const ConvexPolygon<S>& K) {
    if (contains(K, y, Mode::Closed)) throw invalid_input("light point must be outside the body");
    return t_illuminates(x - y, x, K);
}

// One exact step: does x + t land in K resp. int K?
template <class S>
bool eps_illuminates(const V2<S>& t, const V2<S>& x, const ConvexPolygon<S>& K, Mode mode) {
    if (t.is_zero()) throw invalid_input("zero translation");
    if (!contains(K, x, Mode::Closed)) throw invalid_input("point outside the body");
    return contains(K, x + t, mode);
}

// Every point of K is illuminated by some direction. Reduces to the vertex
// cones: each edge's direction arc contains both adjacent vertex arcs, so
// directions piercing all vertex arcs pierce all boundary arcs.
template <class S>
bool system_illuminates_all(const std::vector<V2<S>>& dirs, const ConvexPolygon<S>& K,
                            Mode mode) {
    if (dirs.empty()) return false;
    std::vector<Dir> ds;
    for (const auto& l : dirs) {
        if (l.is_zero()) throw invalid_input("zero illumination direction");
        ds.emplace_back(lift(l));
    }
    for (std::size_t i = 0; i < K.size(); ++i) {
        ArcT<Dir> cone = tangent_cone_arc(K, K.vertex(i), mode);
        bool hit = false;
        for (const auto& d : ds)
            if (arc_contains(cone, d)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

enum class CoverKind { C, TC };

// Do the exterior points Y (c- resp. tc-) illuminate all of K? Per edge with
// inner normal n and offset c = <v, n>, the condition <y, n> < c (C) resp.
// <= c (TC) is constant over the edge's relative interior; a vertex needs a
// single y satisfying both adjacent edge conditions.
template <class S>
bool point_system_covers(const std::vector<V2<S>>& Y, const ConvexPolygon<S>& K, CoverKind kind) {
    if (Y.empty()) return false;
    for (const auto& y : Y)
        if (contains(K, y, Mode::Closed))
            throw invalid_input("light point must be outside the body");

    const std::size_t n = K.size();
    auto edge_ok = [&](const V2<S>& y, std::size_t e) {
        V2<S> nrm = perp(K.vertex(e + 1) - K.vertex(e));  // inner normal, CCW polygon
        S lhs = dot(y, nrm) - dot(K.vertex(e), nrm);
        return kind == CoverKind::C ? sgn(lhs) < 0 : sgn(lhs) <= 0;
    };
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = false;
        for (const auto& y : Y)
            if (edge_ok(y, e)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
        bool ok = false;
        for (const auto& y : Y)
            if (edge_ok(y, v) && edge_ok(y, (v + n - 1) % n)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

// Push tc-illuminating points outward through interior centers; the result
// c-illuminates whenever the input tc-illuminates.
template <class S>
std::vector<V2<S>> transform_tc_to_c(const std::vector<V2<S>>& Y, const std::vector<S>& lambdas,
                                     const std::vector<V2<S>>& centers,
                                     const ConvexPolygon<S>& K) {
    if (Y.size() != lambdas.size() || Y.size() != centers.size())
        throw invalid_input("mismatched transform arguments");
    std::vector<V2<S>> out;
    for (std::size_t i = 0; i < Y.size(); ++i) {
        if (sgn(lambdas[i] - S(1)) <= 0) throw invalid_input("scale factor must exceed 1");
        if (!contains(K, centers[i], Mode::Interior))
            throw invalid_input("transform center must be interior");
        out.push_back(centers[i] + lambdas[i] * (Y[i] - centers[i]));
    }
    return out;
}

}  // namespace illum
