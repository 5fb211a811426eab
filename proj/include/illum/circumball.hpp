#pragma once

#include "illum/polygon.hpp"

#include <optional>
#include <vector>

namespace illum {

// Circle stored with squared radius: the radius of a rational point set is
// generally irrational while its square is rational.
template <class S>
struct CircleSq {
    V2<S> center;
    S radius_sq;

    bool encloses(const V2<S>& p) const { return sgn(norm_sq(p - center) - radius_sq) <= 0; }
    bool on_boundary(const V2<S>& p) const { return sgn(norm_sq(p - center) - radius_sq) == 0; }
};

namespace detail {

template <class S>
CircleSq<S> diameter_circle(const V2<S>& a, const V2<S>& b) {
    S two(2), four(4);
    V2<S> c{(a.x + b.x) / two, (a.y + b.y) / two};
    return {c, norm_sq(a - b) / four};
}

template <class S>
std::optional<CircleSq<S>> circumscribed_circle(const V2<S>& a, const V2<S>& b, const V2<S>& c) {
    // Perpendicular bisector intersection, solved by Cramer's rule.
    S ax2 = norm_sq(a), bx2 = norm_sq(b), cx2 = norm_sq(c);
    S d = S(2) * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (sgn(d) == 0) return std::nullopt;
    S ux = (ax2 * (b.y - c.y) + bx2 * (c.y - a.y) + cx2 * (a.y - b.y)) / d;
    S uy = (ax2 * (c.x - b.x) + bx2 * (a.x - c.x) + cx2 * (b.x - a.x)) / d;
    V2<S> u{ux, uy};
    return CircleSq<S>{u, norm_sq(a - u)};
}

}  // namespace detail

// Minimal enclosing circle of a point set. The minimum is unique and is
// determined by two or three of the points, so exhaustive search over those
// supports is exact and permutation-invariant.
template <class S>
CircleSq<S> min_enclosing_circle(const std::vector<V2<S>>& pts) {
    if (pts.empty()) throw invalid_input("empty point set");
    std::optional<CircleSq<S>> best;
    auto consider = [&](const CircleSq<S>& c) {
        if (best && sgn(c.radius_sq - best->radius_sq) >= 0) return;
        for (const auto& p : pts)
            if (!c.encloses(p)) return;
        best = c;
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            consider(detail::diameter_circle(pts[i], pts[j]));
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (auto c = detail::circumscribed_circle(pts[i], pts[j], pts[k])) consider(*c);
        }
    if (!best) throw degenerate_input("no enclosing circle");
    return *best;
}

template <class S>
CircleSq<S> circumball(const ConvexPolygon<S>& K) {
    return min_enclosing_circle(K.vertices());
}

// Vertices of K on the boundary of its circumball, in CCW order. Nonempty
// for every polygon by minimality of the enclosing circle.
template <class S>
std::vector<V2<S>> contact_set(const ConvexPolygon<S>& K, const CircleSq<S>& B) {
    std::vector<V2<S>> out;
    for (const auto& v : K.vertices())
        if (B.on_boundary(v)) out.push_back(v);
    return out;
}

}  // namespace illum
