#pragma once

#include "illum/quad.hpp"
#include "illum/rat.hpp"

namespace illum {

template <class S>
struct V2 {
    S x{}, y{};

    friend V2 operator+(const V2& a, const V2& b) { return {a.x + b.x, a.y + b.y}; }
    friend V2 operator-(const V2& a, const V2& b) { return {a.x - b.x, a.y - b.y}; }
    friend V2 operator-(const V2& a) { return {-a.x, -a.y}; }
    friend V2 operator*(const S& k, const V2& a) { return {k * a.x, k * a.y}; }
    friend bool operator==(const V2& a, const V2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const V2& a, const V2& b) { return !(a == b); }

    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

template <class S>
S cross(const V2<S>& a, const V2<S>& b) {
    return a.x * b.y - a.y * b.x;
}

template <class S>
S dot(const V2<S>& a, const V2<S>& b) {
    return a.x * b.x + a.y * b.y;
}

template <class S>
S norm_sq(const V2<S>& a) {
    return dot(a, a);
}

// 90-degree counterclockwise rotation.
template <class S>
V2<S> perp(const V2<S>& a) {
    return {-a.y, a.x};
}

using Pt2 = V2<Rat>;
using Vec2 = V2<Rat>;

template <class S>
V2<Quad> lift(const V2<S>& a) {
    return {Quad(a.x), Quad(a.y)};
}

inline V2<Rat> lower(const V2<Quad>& a) {
    return {a.x.rational(), a.y.rational()};
}

inline bool is_rational(const V2<Quad>& a) {
    return a.x.is_rational() && a.y.is_rational();
}

enum class Orient { CW = -1, Collinear = 0, CCW = 1 };

template <class S>
Orient orientation(const V2<S>& a, const V2<S>& b, const V2<S>& c) {
    return static_cast<Orient>(sgn(cross(b - a, c - a)));
}

}  // namespace illum
