#pragma once

#include "illum/mode.hpp"
#include "illum/vec.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace illum {

// Strictly convex polygon, counterclockwise, no three consecutive vertices
// collinear, canonical start at the lowest-then-leftmost vertex.
template <class S>
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<V2<S>> hull_ccw) : v_(std::move(hull_ccw)) {}

    const std::vector<V2<S>>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const V2<S>& vertex(std::size_t i) const { return v_[i % v_.size()]; }

    ConvexPolygon translated(const V2<S>& t) const {
        std::vector<V2<S>> w = v_;
        for (auto& p : w) p = p + t;
        return ConvexPolygon(std::move(w));
    }

    S doubled_area() const {
        S acc{};
        for (std::size_t i = 0; i + 1 < v_.size(); ++i)
            acc = acc + cross(v_[i] - v_[0], v_[i + 1] - v_[0]);
        return acc;
    }

    V2<S> centroid() const {
        // Area-weighted centroid of the fan triangulation.
        S cx{}, cy{}, area{};
        for (std::size_t i = 1; i + 1 < v_.size(); ++i) {
            S a = cross(v_[i] - v_[0], v_[i + 1] - v_[0]);
            cx = cx + a * (v_[0].x + v_[i].x + v_[i + 1].x);
            cy = cy + a * (v_[0].y + v_[i].y + v_[i + 1].y);
            area = area + a;
        }
        S three(3);
        return {cx / (three * area), cy / (three * area)};
    }

private:
    std::vector<V2<S>> v_;
};

namespace detail {

template <class S>
bool lex_less(const V2<S>& a, const V2<S>& b) {
    int c = sgn(a.x - b.x);
    if (c != 0) return c < 0;
    return sgn(a.y - b.y) < 0;
}

}  // namespace detail

// Convex hull of the input in canonical form; collinear boundary points are
// dropped. Throws degenerate_input when the hull has empty interior.
template <class S>
ConvexPolygon<S> make_polygon(std::vector<V2<S>> pts) {
    if (pts.size() < 3) throw degenerate_input("need at least 3 points");
    std::sort(pts.begin(), pts.end(), detail::lex_less<S>);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw degenerate_input("fewer than 3 distinct points");

    auto build = [](auto begin, auto end, std::vector<V2<S>>& out) {
        for (auto it = begin; it != end; ++it) {
            while (out.size() >= 2 &&
                   orientation(out[out.size() - 2], out.back(), *it) != Orient::CCW)
                out.pop_back();
            out.push_back(*it);
        }
    };
    std::vector<V2<S>> lower, upper;
    build(pts.begin(), pts.end(), lower);
    build(pts.rbegin(), pts.rend(), upper);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw degenerate_input("hull has empty interior");

    // Rotate to the lowest-then-leftmost vertex.
    std::size_t start = 0;
    for (std::size_t i = 1; i < lower.size(); ++i) {
        int c = sgn(lower[i].y - lower[start].y);
        if (c < 0 || (c == 0 && sgn(lower[i].x - lower[start].x) < 0)) start = i;
    }
    std::rotate(lower.begin(), lower.begin() + static_cast<std::ptrdiff_t>(start), lower.end());
    return ConvexPolygon<S>(std::move(lower));
}

// Exact point-in-polygon test, closed or interior.
template <class S>
bool contains(const ConvexPolygon<S>& K, const V2<S>& p, Mode mode) {
    const auto& v = K.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        int side = sgn(cross(v[(i + 1) % v.size()] - v[i], p - v[i]));
        if (side < 0) return false;
        if (side == 0 && mode == Mode::Interior) return false;
    }
    return true;
}

// Index of the boundary feature containing p: (edge_index, at_vertex).
// at_vertex means p == vertex(edge_index). Returns nullopt for points not
// on the boundary.
template <class S>
std::optional<std::pair<std::size_t, bool>> boundary_feature(const ConvexPolygon<S>& K,
                                                             const V2<S>& p) {
    const auto& v = K.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (p == v[i]) return {{i, true}};
        const V2<S>& a = v[i];
        const V2<S>& b = v[(i + 1) % v.size()];
        if (sgn(cross(b - a, p - a)) == 0 && sgn(dot(p - a, b - a)) > 0 &&
            sgn(dot(p - b, a - b)) > 0)
            return {{i, false}};
    }
    return std::nullopt;
}

}  // namespace illum
